use serde::Serialize;

use super::BorderStripTiling;
use crate::error::{Error, Result};
use crate::partitions::{HookProfile, Partition, SecondImbalance};

/// The first few strips of a tableau, placed but not completed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartialTiling {
    pub shape: Partition,
    /// Box sets of strips 1..=m, in label order.
    pub strips: Vec<Vec<(usize, usize)>>,
}

impl PartialTiling {
    pub fn strip_count(&self) -> usize {
        self.strips.len()
    }

    pub fn areas(&self) -> Vec<usize> {
        self.strips.iter().map(Vec::len).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TilingClass {
    Greedy,
    NonGreedy,
    Other,
}

/// Number of strips fixed by the greedy prefix: `min(I, k+1) - 1`.
fn greedy_depth(p: &Partition, profile: &HookProfile) -> usize {
    match p.second_imbalance() {
        SecondImbalance::Finite(i) => i - 1,
        SecondImbalance::Infinity => profile.len() - 1,
    }
}

fn prefix_from_profile(profile: &HookProfile, m: usize) -> Vec<usize> {
    let h = &profile.hooks;
    (0..m)
        .map(|i| {
            if i == 0 {
                h[0].length - h[0].short - 1
            } else {
                h[i].length - h[i].short + h[i - 1].short
            }
        })
        .collect()
}

/// Strip areas `α_1..α_m` shared by every doppelgänger query for `p`.
pub fn greedy_prefix(p: &Partition) -> Result<Vec<usize>> {
    let profile = p.hook_profile()?;
    if profile.len() < 2 {
        return Err(Error::Precondition("greedy prefix needs at least two principal hooks".into()));
    }
    Ok(prefix_from_profile(&profile, greedy_depth(p, &profile)))
}

/// Places the first `m` strips greedily. Strip 1 starts from the end of the
/// arm when `long_is_arm`, otherwise from the end of the leg; each later strip
/// mops up what the previous one left and starts from the same side of its own
/// hook, so the starting side alternates.
pub fn greedy_arrangement(p: &Partition, long_is_arm: bool) -> Result<PartialTiling> {
    let profile = p.hook_profile()?;
    if profile.len() < 2 {
        return Err(Error::Precondition("greedy arrangement needs at least two principal hooks".into()));
    }
    let first = &profile.hooks[0];
    if first.short != first.long && first.long_is_arm() != long_is_arm {
        return Err(Error::Precondition(format!(
            "the long first overhang of {p} is the {}",
            if first.long_is_arm() { "arm" } else { "leg" }
        )));
    }
    let m = greedy_depth(p, &profile);
    let areas = prefix_from_profile(&profile, m);

    let mut strips = Vec::with_capacity(m);
    let mut from_arm = long_is_arm;
    let mut leftover: Vec<(usize, usize)> = Vec::new();
    for (i, &area) in areas.iter().enumerate() {
        let cells = p.hook_cells(i);
        let take = area - leftover.len();
        debug_assert!(take < cells.len());
        let (covered, rest) = if from_arm {
            let split = cells.len() - take;
            (cells[split..].to_vec(), cells[..split].to_vec())
        } else {
            (cells[..take].to_vec(), cells[take..].to_vec())
        };
        let mut strip = std::mem::take(&mut leftover);
        strip.extend(covered);
        strip.sort_unstable();
        strips.push(strip);
        leftover = rest;
        from_arm = !from_arm;
    }
    Ok(PartialTiling {
        shape: p.clone(),
        strips,
    })
}

/// Greedy if the first `m` strips sit exactly where the greedy arrangement
/// puts them, non-greedy if only their areas agree, other otherwise. With a
/// tie in the first overhangs either orientation counts as greedy.
pub fn classify_tiling(t: &BorderStripTiling, p: &Partition) -> TilingClass {
    let Ok(profile) = p.hook_profile() else {
        return TilingClass::Other;
    };
    if profile.len() < 2 {
        return TilingClass::Other;
    }
    let m = greedy_depth(p, &profile);
    let expected = prefix_from_profile(&profile, m);
    let mut strips = t.strips();
    if strips.len() < m || strips.iter().take(m).map(Vec::len).ne(expected.iter().copied()) {
        return TilingClass::Other;
    }
    strips.truncate(m);
    for s in &mut strips {
        s.sort_unstable();
    }
    let first = &profile.hooks[0];
    let orientations: Vec<bool> = if first.short == first.long {
        vec![true, false]
    } else {
        vec![first.long_is_arm()]
    };
    let greedy = orientations.into_iter().any(|arm| {
        greedy_arrangement(p, arm).is_ok_and(|g| g.strips == strips)
    });
    if greedy {
        TilingClass::Greedy
    } else {
        TilingClass::NonGreedy
    }
}
