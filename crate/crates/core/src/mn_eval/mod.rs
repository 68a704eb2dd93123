//! Exact character values through the Murnaghan–Nakayama rule.

mod greedy;
mod tiling;

use std::collections::HashMap;
use std::fmt;
use std::ops::{Mul, Neg};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partitions::{Composition, Partition};

pub use greedy::{classify_tiling, greedy_arrangement, greedy_prefix, PartialTiling, TilingClass};
pub use tiling::{enumerate_bsts, is_border_strip, BorderStripTiling};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_parity(odd: bool) -> Sign {
        if odd {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn value(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        Sign::from_parity(self != rhs)
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        self * Sign::Minus
    }
}

/// An exact character value.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CharValue(pub BigInt);

impl CharValue {
    pub fn zero() -> Self {
        CharValue(BigInt::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_odd(&self) -> bool {
        self.0.is_odd()
    }

    pub fn abs(&self) -> CharValue {
        CharValue(self.0.abs())
    }

    /// `None` for zero.
    pub fn sign(&self) -> Option<Sign> {
        if self.0.is_zero() {
            None
        } else {
            Some(Sign::from_parity(self.0.is_negative()))
        }
    }

    pub fn as_bigint(&self) -> &BigInt {
        &self.0
    }
}

impl From<i64> for CharValue {
    fn from(v: i64) -> Self {
        CharValue(BigInt::from(v))
    }
}

impl From<BigInt> for CharValue {
    fn from(v: BigInt) -> Self {
        CharValue(v)
    }
}

impl From<BigUint> for CharValue {
    fn from(v: BigUint) -> Self {
        CharValue(BigInt::from(v))
    }
}

impl PartialEq<i64> for CharValue {
    fn eq(&self, other: &i64) -> bool {
        self.0 == BigInt::from(*other)
    }
}

impl Mul<Sign> for &CharValue {
    type Output = CharValue;

    fn mul(self, rhs: Sign) -> CharValue {
        match rhs {
            Sign::Plus => self.clone(),
            Sign::Minus => CharValue(-&self.0),
        }
    }
}

impl Mul<Sign> for CharValue {
    type Output = CharValue;

    fn mul(self, rhs: Sign) -> CharValue {
        &self * rhs
    }
}

impl Neg for CharValue {
    type Output = CharValue;

    fn neg(self) -> CharValue {
        CharValue(-self.0)
    }
}

impl fmt::Display for CharValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Serialized as a signed decimal string so no precision is lost.
impl Serialize for CharValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.0.to_string())
    }
}

/// One rim-hook removal: the residual row lengths, the strip height, and the
/// removed strip's boxes.
pub(crate) struct Removal {
    pub residual: Vec<usize>,
    pub height: usize,
    pub boxes: Vec<(usize, usize)>,
}

/// Every way to peel a border strip of `size` boxes off the rim of `rows`.
///
/// Strips of a given size correspond one-to-one with boxes of that hook
/// length; the strip runs along the rim from the end of the box's row to the
/// bottom of its column.
pub(crate) fn rim_removals(rows: &[usize], size: usize) -> Vec<Removal> {
    let mut out = Vec::new();
    if size == 0 || rows.is_empty() {
        return out;
    }
    let width = rows[0];
    let cols: Vec<usize> = (0..width)
        .map(|c| rows.iter().take_while(|&&p| p > c).count())
        .collect();
    for (i, &len) in rows.iter().enumerate() {
        // Hook lengths strictly decrease along a row, so at most one match.
        let Some(j) = (0..len).find(|&j| (len - j - 1) + (cols[j] - i - 1) + 1 == size) else {
            continue;
        };
        let bottom = cols[j] - 1;
        let mut residual = rows.to_vec();
        for r in i..bottom {
            residual[r] = rows[r + 1] - 1;
        }
        residual[bottom] = j;
        let boxes = (i..=bottom)
            .flat_map(|r| (residual[r]..rows[r]).map(move |c| (r, c)))
            .collect();
        while residual.last() == Some(&0) {
            residual.pop();
        }
        out.push(Removal {
            residual,
            height: bottom - i,
            boxes,
        });
    }
    out
}

/// All `(residual, height)` pairs for removing a border strip of `size` boxes.
pub fn removable_strips(p: &Partition, size: usize) -> Vec<(Partition, usize)> {
    rim_removals(p.parts(), size)
        .into_iter()
        .map(|r| (Partition::from_sorted_with_zeros(r.residual), r.height))
        .collect()
}

fn chi_rec(rows: &[usize], parts: &[usize], memo: &mut HashMap<(Vec<usize>, usize), BigInt>) -> BigInt {
    let Some((&first, rest)) = parts.split_first() else {
        return if rows.is_empty() { BigInt::one() } else { BigInt::zero() };
    };
    let key = (rows.to_vec(), rest.len());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let mut total = BigInt::zero();
    for removal in rim_removals(rows, first) {
        let sub = chi_rec(&removal.residual, rest, memo);
        if removal.height % 2 == 0 {
            total += sub;
        } else {
            total -= sub;
        }
    }
    memo.insert(key, total.clone());
    total
}

/// `χ_shape(cycle_type)`, parts of the cycle type consumed left to right.
pub fn chi(shape: &Partition, cycle_type: &Composition) -> Result<CharValue> {
    if shape.n() != cycle_type.n() {
        return Err(Error::SizeMismatch {
            expected: shape.n(),
            found: cycle_type.n(),
        });
    }
    let mut memo = HashMap::new();
    Ok(CharValue(chi_rec(shape.parts(), cycle_type.parts(), &mut memo)))
}

/// Sign of any permutation with this cycle type.
pub fn composition_sign(t: &Composition) -> Sign {
    Sign::from_parity((t.n() - t.len()) % 2 == 1)
}

/// `n!` over the product of all box hook lengths.
pub fn dimension_hook_length(p: &Partition) -> CharValue {
    let conj = p.conjugate();
    let mut numerator = BigUint::one();
    for k in 2..=p.n() {
        numerator *= k;
    }
    let denominator = p
        .cells()
        .fold(BigUint::one(), |acc, (r, c)| acc * p.box_hook(r, c, &conj));
    CharValue::from(numerator / denominator)
}

/// `C(n, k)`, zero for `k < 0` or `k > n`.
pub fn binomial(n: i64, k: i64) -> BigUint {
    if k < 0 || n < 0 || k > n {
        return BigUint::zero();
    }
    num_integer::binomial(BigUint::from(n as u64), BigUint::from(k as u64))
}
