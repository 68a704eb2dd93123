use std::collections::BTreeMap;

use serde::Serialize;

use super::{rim_removals, Sign};
use crate::error::{Error, Result};
use crate::partitions::{Composition, Partition};

/// True iff `boxes` is a border strip: each row's boxes are contiguous and,
/// below the top row, each row's rightmost box sits directly under the
/// leftmost box of the row above.
pub fn is_border_strip(boxes: &[(usize, usize)]) -> bool {
    if boxes.is_empty() {
        return false;
    }
    let mut rows: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &(r, c) in boxes {
        rows.entry(r).or_default().push(c);
    }
    let mut spans = Vec::with_capacity(rows.len());
    for (&r, cols) in rows.iter_mut() {
        cols.sort_unstable();
        if cols.windows(2).any(|w| w[1] != w[0] + 1) {
            return false;
        }
        spans.push((r, cols[0], *cols.last().unwrap()));
    }
    spans
        .windows(2)
        .all(|w| w[1].0 == w[0].0 + 1 && w[1].2 == w[0].1)
}

/// A complete border-strip tableau. `labels[r][c]` is the one-based index of
/// the strip covering box `(r, c)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BorderStripTiling {
    pub shape: Partition,
    pub labels: Vec<Vec<usize>>,
    pub heights: Vec<usize>,
    pub sign: Sign,
}

impl BorderStripTiling {
    /// Builds from strip box sets listed in label order.
    pub fn from_strips(shape: &Partition, strips: &[Vec<(usize, usize)>]) -> Self {
        let mut labels: Vec<Vec<usize>> = shape.parts().iter().map(|&len| vec![0; len]).collect();
        let mut heights = Vec::with_capacity(strips.len());
        for (index, strip) in strips.iter().enumerate() {
            let mut rows: Vec<usize> = strip.iter().map(|b| b.0).collect();
            rows.sort_unstable();
            rows.dedup();
            heights.push(rows.len().saturating_sub(1));
            for &(r, c) in strip {
                labels[r][c] = index + 1;
            }
        }
        let sign = Sign::from_parity(heights.iter().sum::<usize>() % 2 == 1);
        Self {
            shape: shape.clone(),
            labels,
            heights,
            sign,
        }
    }

    pub fn strip_count(&self) -> usize {
        self.heights.len()
    }

    /// Boxes of each strip, in label order.
    pub fn strips(&self) -> Vec<Vec<(usize, usize)>> {
        let mut out = vec![Vec::new(); self.heights.len()];
        for (r, row) in self.labels.iter().enumerate() {
            for (c, &label) in row.iter().enumerate() {
                if label > 0 {
                    out[label - 1].push((r, c));
                }
            }
        }
        out
    }

    pub fn areas(&self) -> Vec<usize> {
        self.strips().iter().map(Vec::len).collect()
    }

    /// Checks every tableau condition directly against the definition.
    pub fn is_valid_for(&self, cycle_type: &Composition) -> bool {
        let strips = self.strips();
        let labelled = self.labels.iter().flatten().all(|&l| l > 0);
        let areas_ok = strips.iter().map(Vec::len).eq(cycle_type.parts().iter().copied());
        let strips_ok = strips.iter().all(|s| is_border_strip(s));
        let rows_ok = self.labels.iter().all(|row| row.windows(2).all(|w| w[0] <= w[1]));
        let cols_ok = (1..self.labels.len()).all(|r| {
            self.labels[r]
                .iter()
                .enumerate()
                .all(|(c, &l)| self.labels[r - 1][c] <= l)
        });
        let sign_ok = self.sign == Sign::from_parity(self.heights.iter().sum::<usize>() % 2 == 1);
        labelled && areas_ok && strips_ok && rows_ok && cols_ok && sign_ok
    }

    /// No strip holds two boxes of the principal diagonal.
    pub fn diagonal_ok(&self) -> bool {
        self.strips()
            .iter()
            .all(|s| s.iter().filter(|(r, c)| r == c).count() <= 1)
    }

    /// For every k, strips 1..=k lie inside principal hooks 1..=k.
    pub fn first_k_confined(&self) -> bool {
        self.strips()
            .iter()
            .enumerate()
            .all(|(index, s)| s.iter().all(|&(r, c)| r.min(c) <= index))
    }
}

fn enumerate_rec(rows: &[usize], parts: &[usize], out: &mut Vec<Vec<Vec<(usize, usize)>>>, suffix: &mut Vec<Vec<(usize, usize)>>) {
    let Some((&last, rest)) = parts.split_last() else {
        if rows.is_empty() {
            out.push(suffix.iter().rev().cloned().collect());
        }
        return;
    };
    for removal in rim_removals(rows, last) {
        suffix.push(removal.boxes);
        enumerate_rec(&removal.residual, rest, out, suffix);
        suffix.pop();
    }
}

/// Every border-strip tableau of the given shape and type, found by peeling
/// the strip of the last part off the rim first.
pub fn enumerate_bsts(shape: &Partition, cycle_type: &Composition) -> Result<Vec<BorderStripTiling>> {
    if shape.n() != cycle_type.n() {
        return Err(Error::SizeMismatch {
            expected: shape.n(),
            found: cycle_type.n(),
        });
    }
    let mut found = Vec::new();
    enumerate_rec(shape.parts(), cycle_type.parts(), &mut found, &mut Vec::new());
    Ok(found
        .iter()
        .map(|strips| BorderStripTiling::from_strips(shape, strips))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mn_eval::chi;
    use crate::partitions::{compositions_of, partitions_of};
    use num_bigint::BigInt;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn c(s: &str) -> Composition {
        s.parse().unwrap()
    }

    /// Independent count: walk chains of sub-diagrams µ⁰ ⊂ µ¹ ⊂ … growing
    /// by each part in order, keeping only steps whose skew difference is a
    /// border strip. Shares no code with the rim-removal enumerator.
    fn chain_count(shape: &Partition, parts: &[usize]) -> (usize, i64) {
        fn grow(shape: &Partition, current: Vec<usize>, parts: &[usize], acc: &mut (usize, i64), sign: i64) {
            let Some((&size, rest)) = parts.split_first() else {
                if current.as_slice() == shape.parts() {
                    acc.0 += 1;
                    acc.1 += sign;
                }
                return;
            };
            // Try every sub-diagram of `shape` containing `current` with `size` more boxes.
            let rows = shape.len();
            let mut next = vec![0usize; rows];
            fn pick(
                shape: &Partition,
                current: &[usize],
                next: &mut Vec<usize>,
                row: usize,
                left: usize,
                found: &mut Vec<Vec<usize>>,
            ) {
                if row == next.len() {
                    if left == 0 {
                        found.push(next.clone());
                    }
                    return;
                }
                let cap = if row == 0 { shape.row(0) } else { next[row - 1].min(shape.row(row)) };
                for len in current[row]..=cap {
                    let added = len - current[row];
                    if added > left {
                        break;
                    }
                    next[row] = len;
                    pick(shape, current, next, row + 1, left - added, found);
                }
            }
            let mut candidates = Vec::new();
            pick(shape, &current, &mut next, 0, size, &mut candidates);
            for cand in candidates {
                let boxes: Vec<(usize, usize)> = (0..rows)
                    .flat_map(|r| (current[r]..cand[r]).map(move |col| (r, col)))
                    .collect();
                if is_border_strip(&boxes) {
                    let height = boxes.iter().map(|b| b.0).collect::<std::collections::BTreeSet<_>>().len() - 1;
                    let s = if height % 2 == 0 { sign } else { -sign };
                    grow(shape, cand, rest, acc, s);
                }
            }
        }
        let mut acc = (0, 0);
        grow(shape, vec![0; shape.len()], parts, &mut acc, 1);
        acc
    }

    #[test]
    fn border_strip_definition() {
        assert!(is_border_strip(&[(0, 0)]));
        assert!(is_border_strip(&[(0, 2), (0, 3), (1, 0), (1, 1), (1, 2)]));
        assert!(!is_border_strip(&[(0, 0), (0, 1), (1, 0), (1, 1)]));
        assert!(!is_border_strip(&[(0, 0), (0, 2)]));
        assert!(!is_border_strip(&[(0, 3), (1, 0), (1, 1)]));
        assert!(!is_border_strip(&[(0, 0), (2, 0)]));
        assert!(!is_border_strip(&[]));
    }

    #[test]
    fn two_cancelling_tableaux() {
        let tilings = enumerate_bsts(&p("5,4,2"), &c("6,3,2")).unwrap();
        assert_eq!(tilings.len(), 2);
        let mut signs: Vec<i32> = tilings.iter().map(|t| t.sign.value()).collect();
        signs.sort();
        assert_eq!(signs, vec![-1, 1]);
        let expected_labels = [
            vec![vec![1, 1, 1, 1, 1], vec![1, 2, 2, 2], vec![3, 3]],
            vec![vec![1, 1, 1, 1, 1], vec![1, 2, 3, 3], vec![2, 2]],
        ];
        for labels in expected_labels {
            assert!(tilings.iter().any(|t| t.labels == labels));
        }
        assert!(enumerate_bsts(&p("5,4,2"), &c("6,2,3")).unwrap().is_empty());
    }

    #[test]
    fn contains_known_tableau() {
        let shape = p("5,4,4,1");
        let t = c("4,5,1,1,3");
        let tilings = enumerate_bsts(&shape, &t).unwrap();
        let known = vec![vec![1, 1, 2, 2, 2], vec![1, 2, 2, 5], vec![1, 4, 5, 5], vec![3]];
        assert!(tilings.iter().any(|x| x.labels == known));
        let (count, signed) = chain_count(&shape, t.parts());
        assert_eq!(tilings.len(), count);
        let total: i64 = tilings.iter().map(|x| x.sign.value() as i64).sum();
        assert_eq!(total, signed);
        assert_eq!(chi(&shape, &t).unwrap().0, BigInt::from(signed));
    }

    #[test]
    fn enumerator_agrees_with_chain_walk() {
        for n in 1..=7 {
            for shape in partitions_of(n) {
                for t in compositions_of(n) {
                    let tilings = enumerate_bsts(&shape, &t).unwrap();
                    let (count, signed) = chain_count(&shape, t.parts());
                    assert_eq!(tilings.len(), count, "{shape} {t}");
                    let total: i64 = tilings.iter().map(|x| x.sign.value() as i64).sum();
                    assert_eq!(total, signed);
                    for tiling in &tilings {
                        assert!(tiling.is_valid_for(&t));
                        assert!(tiling.diagonal_ok());
                        assert!(tiling.first_k_confined());
                    }
                }
            }
        }
    }

    #[test]
    fn size_mismatch_rejected() {
        assert!(matches!(enumerate_bsts(&p("2,1"), &c("2")), Err(Error::SizeMismatch { .. })));
    }
}
