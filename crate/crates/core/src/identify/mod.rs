//! Recovering a hidden partition from character-oracle queries.
//!
//! The forward pass learns the principal hook lengths outermost first. The
//! backward pass then rebuilds the hooks innermost first: a query whose
//! leading parts equal the known outer hook lengths forces those strips to
//! fill their hooks, so it probes the residual shape alone, up to the sign
//! `∏ (-1)^leg` of the forced strips. The forward pass measures that sign
//! for every prefix at no extra cost.

mod doppel;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::mn_eval::{binomial, CharValue, Sign};
use crate::oracle::{counting_oracle, CharacterOracle, QueryTranscript};
use crate::partitions::{Composition, Partition};

pub use doppel::{build_doppel_queries, resolve_doppelganger, DoppelCase, DoppelQuery};

fn query_with_prefix(prefix: &[usize], tail: impl IntoIterator<Item = usize>) -> Composition {
    let mut parts = prefix.to_vec();
    parts.extend(tail);
    Composition::new(parts).expect("query parts are positive")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ForwardPass {
    pub hook_lengths: Vec<usize>,
    /// `prefix_signs[j]` is the sign picked up by strips that fill hooks
    /// `1..=j`; entry 0 is `Plus`.
    pub prefix_signs: Vec<Sign>,
}

/// Finds each principal hook length by probing the next strip size from the
/// largest feasible value downward until the oracle answers nonzero.
pub fn forward_pass<O: CharacterOracle + ?Sized>(o: &mut O, n: usize) -> Result<ForwardPass> {
    if n == 0 {
        return Err(Error::Precondition("forward pass needs n >= 1".into()));
    }
    let mut hooks: Vec<usize> = Vec::new();
    let mut signs = vec![Sign::Plus];
    let mut remaining = n;
    let mut ceiling = n;
    while remaining > 0 {
        let mut hit = None;
        for guess in (1..=ceiling).rev() {
            let q = query_with_prefix(&hooks, std::iter::once(guess).chain(std::iter::repeat_n(1, remaining - guess)));
            if let Some(sign) = o.query(&q)?.sign() {
                hit = Some((guess, sign));
                break;
            }
        }
        let (length, sign) = hit.ok_or_else(|| {
            Error::PromiseViolated(format!("no nonzero answer while probing hook {}", hooks.len() + 1))
        })?;
        hooks.push(length);
        signs.push(sign);
        remaining -= length;
        ceiling = length.saturating_sub(2).min(remaining);
    }
    Ok(ForwardPass {
        hook_lengths: hooks,
        prefix_signs: signs,
    })
}

/// Shape of a residual that is a single hook of length `h`, as `(arm, leg)`.
///
/// The all-ones query gives `±C(h-1, λ_1-1)`, which pins `λ_1` up to its
/// mirror; its sign is the prefix sign. A `(2, 1^(h-2))` query then breaks
/// the tie, predicting `C(h-2, λ_1-2) - C(h-2, λ_1-1)` for each option. A
/// hook of length 1 needs no query.
pub fn recover_base_hook<O: CharacterOracle + ?Sized>(o: &mut O, prefix: &[usize], h: usize) -> Result<(usize, usize)> {
    if h == 0 {
        return Err(Error::Precondition("hook length must be positive".into()));
    }
    if h == 1 {
        return Ok((0, 0));
    }
    let v = o.query(&query_with_prefix(prefix, std::iter::repeat_n(1, h)))?;
    let eps = v
        .sign()
        .ok_or_else(|| Error::PromiseViolated("dimension query answered zero".into()))?;
    let magnitude = v.abs();
    let h = h as i64;
    let r = (0..=(h - 1) / 2)
        .find(|&r| CharValue::from(binomial(h - 1, r)) == magnitude)
        .ok_or_else(|| Error::PromiseViolated(format!("{magnitude} is not C({}, r)", h - 1)))?;
    let (low, high) = (r + 1, h - r);
    let to_arm_leg = |row: i64| ((row - 1) as usize, (h - row) as usize);
    if low == high {
        return Ok(to_arm_leg(low));
    }
    let w = o.query(&query_with_prefix(prefix, std::iter::once(2).chain(std::iter::repeat_n(1, h as usize - 2))))?;
    let predict = |row: i64| {
        let diff = num_bigint::BigInt::from(binomial(h - 2, row - 2)) - num_bigint::BigInt::from(binomial(h - 2, row - 1));
        CharValue(diff) * eps
    };
    [low, high]
        .into_iter()
        .find(|&row| predict(row) == w)
        .map(to_arm_leg)
        .ok_or_else(|| Error::PromiseViolated(format!("sign query answered {w}, matching neither hook")))
}

/// Overhang lengths `(a_1, b_1)` of the first hook of the residual, given the
/// known shape `inner` inside it. Probes `(h_1 - i, h_2 + i, h_3, …)` for
/// `i = 1, 2, …`; the first nonzero answer sits at `i = a_1 + 1` and has
/// magnitude 1, or 2 when the overhangs tie.
pub fn recover_overhangs<O: CharacterOracle + ?Sized>(
    o: &mut O,
    prefix: &[usize],
    inner: &Partition,
    h1: usize,
) -> Result<(usize, usize)> {
    let lengths = inner.hook_profile()?.lengths();
    let h2 = lengths[0];
    if h1 < h2 + 2 {
        return Err(Error::PromiseViolated(format!("hook length {h1} cannot wrap a hook of length {h2}")));
    }
    let spread = h1 - h2 - 2;
    for i in 1..=spread / 2 + 1 {
        let q = query_with_prefix(prefix, [h1 - i, h2 + i].into_iter().chain(lengths[1..].iter().copied()));
        let v = o.query(&q)?;
        if v.is_zero() {
            continue;
        }
        let a = i - 1;
        let b = spread - a;
        let expected = if a < b { 1 } else { 2 };
        if v.abs() != expected {
            return Err(Error::PromiseViolated(format!(
                "overhang probe answered {v}, expected magnitude {expected}"
            )));
        }
        return Ok((a, b));
    }
    Err(Error::PromiseViolated("no overhang probe answered nonzero".into()))
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct PhaseCounts {
    pub forward: usize,
    pub base: usize,
    pub overhang: usize,
    pub doppelganger: usize,
}

impl PhaseCounts {
    pub fn total(&self) -> usize {
        self.forward + self.base + self.overhang + self.doppelganger
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct IdentifyResult {
    pub partition: Partition,
    pub transcript: QueryTranscript,
    pub phases: PhaseCounts,
}

/// Determines the hidden partition behind `o`.
pub fn identify<O: CharacterOracle + ?Sized>(o: &mut O, n: usize) -> Result<IdentifyResult> {
    if o.n() != n {
        return Err(Error::SizeMismatch {
            expected: o.n(),
            found: n,
        });
    }
    let mut counter = counting_oracle(o);
    let mut phases = PhaseCounts::default();

    let forward = forward_pass(&mut counter, n)?;
    phases.forward = counter.count();
    let h = &forward.hook_lengths;
    let last = h.len() - 1;

    let (arm, leg) = recover_base_hook(&mut counter, &h[..last], h[last])?;
    phases.base = counter.count() - phases.forward;
    let mut residual = Partition::from_hooks(&[(arm, leg)])?;

    for j in (0..last).rev() {
        let before = counter.count();
        let (short, long) = recover_overhangs(&mut counter, &h[..j], &residual, h[j])?;
        phases.overhang += counter.count() - before;

        let mut hooks = residual.arms_legs();
        let (inner_arm, inner_leg) = hooks[0];
        hooks.insert(0, (inner_arm + 1 + long, inner_leg + 1 + short));
        let candidate = Partition::from_hooks(&hooks)?;

        let before = counter.count();
        residual = resolve_doppelganger(&mut counter, &h[..j], forward.prefix_signs[j], &candidate)?;
        phases.doppelganger += counter.count() - before;
    }

    if residual.n() != n {
        return Err(Error::LemmaViolation(format!("assembled {residual}, which is not a partition of {n}")));
    }
    let (_, transcript) = counter.into_parts();
    Ok(IdentifyResult {
        partition: residual,
        transcript,
        phases,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mn_eval::chi;
    use crate::oracle::{exact_oracle, FnOracle};
    use crate::partitions::partitions_of;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn forward_pass_examples() {
        let mut o = counting_oracle(exact_oracle(p("2,1")));
        let fp = forward_pass(&mut o, 3).unwrap();
        assert_eq!(fp.hook_lengths, vec![3]);
        assert_eq!(o.count(), 1);
        assert_eq!(o.transcript().entries[0].answer, -1);

        let mut o = counting_oracle(exact_oracle(p("6")));
        assert_eq!(forward_pass(&mut o, 6).unwrap().hook_lengths, vec![6]);
        assert_eq!(o.count(), 1);

        let mut o = exact_oracle(p("7,7,5,4,1"));
        let fp = forward_pass(&mut o, 24).unwrap();
        assert_eq!(fp.hook_lengths, vec![11, 8, 4, 1]);
        // Legs 4, 2, 1, 0.
        assert_eq!(fp.prefix_signs, vec![Sign::Plus, Sign::Plus, Sign::Plus, Sign::Minus, Sign::Minus]);
    }

    #[test]
    fn forward_pass_matches_profile_everywhere() {
        for n in 1..=12 {
            for shape in partitions_of(n) {
                let fp = forward_pass(&mut exact_oracle(shape.clone()), n).unwrap();
                assert_eq!(fp.hook_lengths, shape.hook_profile().unwrap().lengths());
                let mut sign = Sign::Plus;
                for (j, &(_, leg)) in shape.arms_legs().iter().enumerate() {
                    sign = sign * Sign::from_parity(leg % 2 == 1);
                    assert_eq!(fp.prefix_signs[j + 1], sign, "{shape}");
                }
            }
        }
    }

    #[test]
    fn base_hook_examples() {
        // λ_1 = 2 in a hook of length 3: C(2, 1) = 2, one query.
        let mut o = counting_oracle(exact_oracle(p("2,1")));
        assert_eq!(recover_base_hook(&mut o, &[], 3).unwrap(), (1, 1));
        assert_eq!(o.count(), 1);

        let mut o = counting_oracle(exact_oracle(p("3")));
        assert_eq!(recover_base_hook(&mut o, &[], 3).unwrap(), (2, 0));
        assert_eq!(o.count(), 2);
        assert_eq!(o.transcript().entries[1].answer, 1);

        let mut o = counting_oracle(exact_oracle(p("1,1,1")));
        assert_eq!(recover_base_hook(&mut o, &[], 3).unwrap(), (0, 2));
        assert_eq!(o.transcript().entries[1].answer, -1);

        let mut o = counting_oracle(exact_oracle(p("1")));
        assert_eq!(recover_base_hook(&mut o, &[], 1).unwrap(), (0, 0));
        assert_eq!(o.count(), 0);
    }

    #[test]
    fn base_hook_behind_a_prefix() {
        // The innermost hook, probed behind every outer hook length; the
        // prefix sign ranges over both values here.
        for n in 4..=12 {
            for shape in partitions_of(n) {
                let lengths = shape.hook_profile().unwrap().lengths();
                let k = lengths.len();
                let mut o = exact_oracle(shape.clone());
                let got = recover_base_hook(&mut o, &lengths[..k - 1], lengths[k - 1]).unwrap();
                assert_eq!(got, shape.arms_legs()[k - 1], "{shape}");
            }
        }
    }

    #[test]
    fn overhang_examples() {
        let shape = p("5,4,2");
        let inner = shape.strip_hooks(1).unwrap();
        let mut o = counting_oracle(exact_oracle(shape.clone()));
        assert_eq!(recover_overhangs(&mut o, &[], &inner, 7).unwrap(), (0, 1));
        assert_eq!(o.count(), 1);
        assert_eq!(o.transcript().entries[0].query.parts(), &[6, 5]);
        assert_eq!(o.transcript().entries[0].answer.abs(), 1);

        let shape = p("7,7,5,4,1");
        let inner = shape.strip_hooks(1).unwrap();
        let mut o = exact_oracle(shape);
        assert_eq!(recover_overhangs(&mut o, &[], &inner, 11).unwrap(), (0, 1));

        // Tied overhangs: (4,3,2,1) has a_1 = b_1 = 1.
        let shape = p("4,3,2,1");
        let inner = shape.strip_hooks(1).unwrap();
        let mut o = counting_oracle(exact_oracle(shape));
        assert_eq!(recover_overhangs(&mut o, &[], &inner, 7).unwrap(), (1, 1));
        assert_eq!(o.transcript().entries.last().unwrap().answer.abs(), 2);
    }

    #[test]
    fn identify_examples() {
        let result = identify(&mut exact_oracle(p("2,1")), 3).unwrap();
        assert_eq!(result.partition, p("2,1"));
        assert_eq!(result.transcript.count(), 2);
        assert_eq!(result.phases.total(), 2);

        for n in 1..=8 {
            let row = Partition::new(vec![n]).unwrap();
            assert_eq!(identify(&mut exact_oracle(row.clone()), n).unwrap().partition, row);
        }

        let shape = p("7,7,5,4,1");
        let result = identify(&mut exact_oracle(shape.clone()), 24).unwrap();
        assert_eq!(result.partition, shape);
        assert_eq!(result.phases.total(), result.transcript.count());
    }

    #[test]
    fn identify_recovers_every_partition_of_ten() {
        for shape in partitions_of(10) {
            let result = identify(&mut exact_oracle(shape.clone()), 10).unwrap();
            assert_eq!(result.partition, shape);
        }
    }

    #[test]
    fn queries_keep_the_hook_prefix() {
        for n in 1..=10 {
            for shape in partitions_of(n) {
                let lengths = shape.hook_profile().unwrap().lengths();
                let result = identify(&mut exact_oracle(shape.clone()), n).unwrap();
                let phases = result.phases;
                let backward = &result.transcript.entries[phases.forward..];
                // Backward queries probe hooks innermost first; each must
                // start with the exact lengths of every hook outside the one
                // being recovered.
                let mut depth = lengths.len() - 1;
                for e in backward {
                    let q = e.query.parts();
                    while depth > 0 && q.get(..depth) != Some(&lengths[..depth]) {
                        depth -= 1;
                    }
                    assert_eq!(&q[..depth], &lengths[..depth]);
                }
                assert_eq!(depth, 0, "{shape}: outermost hook never probed");
            }
        }
    }

    #[test]
    fn promise_violations_surface() {
        let mut zero = FnOracle::new(4, |_q: &Composition| CharValue::zero());
        assert!(matches!(identify(&mut zero, 4), Err(Error::PromiseViolated(_))));

        // Answers 5 to the dimension query: no C(3, r) equals 5.
        let mut liar = FnOracle::new(4, |q: &Composition| {
            if q.parts() == [4] {
                CharValue::from(1)
            } else {
                CharValue::from(5)
            }
        });
        assert!(matches!(identify(&mut liar, 4), Err(Error::PromiseViolated(_))));

        let mut o = exact_oracle(p("3,1"));
        assert!(matches!(identify(&mut o, 5), Err(Error::SizeMismatch { .. })));
    }

    #[test]
    fn prefix_sign_is_needed() {
        // Some residual's doppelgänger answers exactly what the residual
        // would, once the outer prefix flips the sign. Ignoring the prefix
        // sign would pick the wrong shape there.
        let mut needed = false;
        for n in 4..=16 {
            for shape in partitions_of(n) {
                let fp = forward_pass(&mut exact_oracle(shape.clone()), n).unwrap();
                for j in 1..fp.hook_lengths.len().saturating_sub(1) {
                    let residual = shape.strip_hooks(j).unwrap();
                    if residual.doppelganger() == residual || fp.prefix_signs[j] == Sign::Plus {
                        continue;
                    }
                    let q = &build_doppel_queries(&residual).unwrap()[0].query;
                    let answer = chi(&shape, &q.prepend(&fp.hook_lengths[..j])).unwrap();
                    needed |= answer == chi(&residual.doppelganger(), q).unwrap();
                }
            }
        }
        assert!(needed);
    }
}
