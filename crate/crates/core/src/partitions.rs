//! Partitions, compositions and the principal-hook view of a Young diagram.
//!
//! Box coordinates are zero-based `(row, col)` throughout the crate. Hook
//! indices in [`HookProfile`] are zero-based as well; [`SecondImbalance`]
//! reports the conventional one-based hook number.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

fn parse_parts(text: &str) -> Result<Vec<usize>> {
    if text.trim().is_empty() {
        return Err(Error::EmptyInput);
    }
    text.split(',')
        .map(|raw| {
            let token = raw.trim();
            let value: i128 = token.parse().map_err(|_| Error::MalformedPart {
                token: token.to_owned(),
            })?;
            if value <= 0 {
                return Err(Error::NonPositivePart { value });
            }
            usize::try_from(value).map_err(|_| Error::MalformedPart {
                token: token.to_owned(),
            })
        })
        .collect()
}

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[usize]) -> fmt::Result {
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{p}")?;
    }
    Ok(())
}

/// A weakly decreasing sequence of positive parts. The empty partition (n = 0)
/// is allowed so that stripping every hook is a total operation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if let Some(&value) = parts.iter().find(|&&p| p == 0) {
            return Err(Error::NonPositivePart { value: value as i128 });
        }
        if let Some(position) = parts.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::NotDecreasing {
                position: position + 1,
            });
        }
        Ok(Self { parts })
    }

    /// Builds from parts that may carry trailing zeros; used where the caller
    /// already guarantees the order.
    pub(crate) fn from_sorted_with_zeros(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Self { parts }
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Row length, zero past the last row.
    pub fn row(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn contains(&self, row: usize, col: usize) -> bool {
        col < self.row(row)
    }

    /// Column lengths of the diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.row(0);
        let parts = (0..width)
            .map(|c| self.parts.iter().take_while(|&&p| p > c).count())
            .collect();
        Partition { parts }
    }

    pub fn is_self_conjugate(&self) -> bool {
        *self == self.conjugate()
    }

    /// Number of nonempty principal hooks (the Durfee square side).
    pub fn hook_count(&self) -> usize {
        self.parts
            .iter()
            .enumerate()
            .take_while(|&(i, &p)| p > i)
            .count()
    }

    /// Hook length of the box at `(row, col)`.
    pub fn box_hook(&self, row: usize, col: usize, conj: &Partition) -> usize {
        debug_assert!(self.contains(row, col));
        (self.row(row) - col - 1) + (conj.row(col) - row - 1) + 1
    }

    /// `(arm, leg)` of every principal hook, corner box excluded.
    pub fn arms_legs(&self) -> Vec<(usize, usize)> {
        let conj = self.conjugate();
        (0..self.hook_count())
            .map(|i| (self.row(i) - i - 1, conj.row(i) - i - 1))
            .collect()
    }

    pub fn hook_profile(&self) -> Result<HookProfile> {
        if self.is_empty() {
            return Err(Error::EmptyPartition);
        }
        let conj = self.conjugate();
        let count = self.hook_count();
        let hooks = (0..count)
            .map(|i| {
                let arm = self.row(i) - i - 1;
                let leg = conj.row(i) - i - 1;
                // The arm of hook i+1 starts one column right, so in the last
                // hook the whole arm and leg overhang.
                let (arm_overhang, leg_overhang) = if i + 1 < count {
                    (
                        self.row(i) - self.row(i + 1),
                        conj.row(i) - conj.row(i + 1),
                    )
                } else {
                    (arm, leg)
                };
                PrincipalHook {
                    length: arm + leg + 1,
                    arm,
                    leg,
                    arm_overhang,
                    leg_overhang,
                    short: arm_overhang.min(leg_overhang),
                    long: arm_overhang.max(leg_overhang),
                }
            })
            .collect();
        Ok(HookProfile { hooks })
    }

    /// Inverse of [`Partition::arms_legs`]: assemble a diagram from nested
    /// `(arm, leg)` pairs, outermost first.
    pub fn from_hooks(hooks: &[(usize, usize)]) -> Result<Partition> {
        for (index, w) in hooks.windows(2).enumerate() {
            let ((arm, leg), (inner_arm, inner_leg)) = (w[0], w[1]);
            if arm < inner_arm + 1 || leg < inner_leg + 1 {
                return Err(Error::NestingViolated { index: index + 1 });
            }
        }
        let count = hooks.len();
        let columns: Vec<usize> = hooks.iter().enumerate().map(|(i, &(_, leg))| leg + i + 1).collect();
        let mut parts: Vec<usize> = hooks.iter().enumerate().map(|(i, &(arm, _))| arm + i + 1).collect();
        let depth = columns.first().copied().unwrap_or(0);
        for row in count..depth {
            parts.push(columns.iter().filter(|&&c| c > row).count());
        }
        Ok(Partition::from_sorted_with_zeros(parts))
    }

    /// Same diagram with the first arm overhang and first leg overhang swapped.
    pub fn doppelganger(&self) -> Partition {
        let Ok(profile) = self.hook_profile() else {
            return self.clone();
        };
        let mut hooks = self.arms_legs();
        let first = &profile.hooks[0];
        let (arm, leg) = hooks[0];
        hooks[0] = (
            arm - first.arm_overhang + first.leg_overhang,
            leg - first.leg_overhang + first.arm_overhang,
        );
        Partition::from_hooks(&hooks).expect("overhang swap preserves nesting")
    }

    pub fn second_imbalance(&self) -> SecondImbalance {
        let Ok(profile) = self.hook_profile() else {
            return SecondImbalance::Infinity;
        };
        profile
            .hooks
            .iter()
            .enumerate()
            .skip(1)
            .find(|(_, h)| h.short != h.long)
            .map_or(SecondImbalance::Infinity, |(i, _)| SecondImbalance::Finite(i + 1))
    }

    /// Residual shape after deleting the first `j` principal hooks.
    pub fn strip_hooks(&self, j: usize) -> Result<Partition> {
        let available = self.hook_count();
        if j > available {
            return Err(Error::HookCountOutOfRange {
                requested: j,
                available,
            });
        }
        let parts = self.parts.iter().skip(j).map(|&p| p.saturating_sub(j)).collect();
        Ok(Partition::from_sorted_with_zeros(parts))
    }

    /// Boxes of the `i`th principal hook, from the bottom of the leg through
    /// the corner to the end of the arm.
    pub fn hook_cells(&self, i: usize) -> Vec<(usize, usize)> {
        let conj = self.conjugate();
        let mut cells: Vec<(usize, usize)> = (i + 1..conj.row(i)).rev().map(|r| (r, i)).collect();
        cells.extend((i..self.row(i)).map(|c| (i, c)));
        cells
    }

    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_parts(s)?)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

/// An ordered sequence of positive parts; a cycle type read in a chosen order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if let Some(&value) = parts.iter().find(|&&p| p == 0) {
            return Err(Error::NonPositivePart { value: value as i128 });
        }
        Ok(Self { parts })
    }

    pub fn ones(n: usize) -> Self {
        Self { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `prefix` followed by `self`.
    pub fn prepend(&self, prefix: &[usize]) -> Composition {
        let mut parts = prefix.to_vec();
        parts.extend_from_slice(&self.parts);
        Composition::new(parts).expect("prefix parts are positive")
    }

    /// The same parts sorted into a partition.
    pub fn sorted(&self) -> Partition {
        let mut parts = self.parts.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Uniform over the 2^(n-1) compositions of `n`.
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Composition {
        let mut parts = Vec::new();
        let mut run = 1;
        for _ in 1..n {
            if rng.gen_bool(0.5) {
                parts.push(run);
                run = 1;
            } else {
                run += 1;
            }
        }
        if n > 0 {
            parts.push(run);
        }
        Composition { parts }
    }
}

impl From<&Partition> for Composition {
    fn from(p: &Partition) -> Self {
        Composition {
            parts: p.parts.clone(),
        }
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Composition::new(parse_parts(s)?)
    }
}

impl TryFrom<Vec<usize>> for Composition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Composition::new(parts)
    }
}

impl From<Composition> for Vec<usize> {
    fn from(c: Composition) -> Self {
        c.parts
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PrincipalHook {
    pub length: usize,
    pub arm: usize,
    pub leg: usize,
    pub arm_overhang: usize,
    pub leg_overhang: usize,
    /// Shorter overhang cardinality.
    pub short: usize,
    /// Longer overhang cardinality.
    pub long: usize,
}

impl PrincipalHook {
    /// True when the arm overhang is strictly the longer one.
    pub fn long_is_arm(&self) -> bool {
        self.arm_overhang > self.leg_overhang
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HookProfile {
    pub hooks: Vec<PrincipalHook>,
}

impl HookProfile {
    pub fn len(&self) -> usize {
        self.hooks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hooks.is_empty()
    }

    pub fn lengths(&self) -> Vec<usize> {
        self.hooks.iter().map(|h| h.length).collect()
    }

    pub fn shorts(&self) -> Vec<usize> {
        self.hooks.iter().map(|h| h.short).collect()
    }

    pub fn longs(&self) -> Vec<usize> {
        self.hooks.iter().map(|h| h.long).collect()
    }
}

/// Smallest one-based hook index `i >= 2` whose overhangs differ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SecondImbalance {
    Finite(usize),
    Infinity,
}

/// All partitions of `n`, largest first in reverse lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(remaining: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: current.clone(),
            });
            return;
        }
        for p in (1..=remaining.min(max)).rev() {
            current.push(p);
            go(remaining - p, p, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All 2^(n-1) compositions of `n` (one empty composition for `n = 0`).
pub fn compositions_of(n: usize) -> Vec<Composition> {
    if n == 0 {
        return vec![Composition { parts: Vec::new() }];
    }
    (0u64..1 << (n - 1))
        .map(|mask| {
            let mut parts = Vec::new();
            let mut run = 1;
            for bit in 0..n - 1 {
                if mask >> bit & 1 == 1 {
                    parts.push(run);
                    run = 1;
                } else {
                    run += 1;
                }
            }
            parts.push(run);
            Composition { parts }
        })
        .collect()
}
