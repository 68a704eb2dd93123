use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::mn_eval::{chi, composition_sign, greedy_prefix, Sign};
use crate::oracle::CharacterOracle;
use crate::partitions::{Composition, Partition, SecondImbalance};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum DoppelCase {
    /// `I ≤ k`: the distinguishing strip sits inside the shape.
    ImbalanceInside,
    /// `I = k + 1`: the last hook is imbalanced.
    ImbalanceLast,
    /// `I = ∞` and the one-long-strip tail has odd sign.
    BalancedSingle,
    /// `I = ∞`, tail split into two strips, no non-greedy survivors.
    BalancedSplit,
    /// `I = ∞` and `(a_k, a_{k+1})` is one of `(0,0)`, `(1,0)`, `(1,1)`.
    BalancedExceptional,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DoppelQuery {
    pub case: DoppelCase,
    pub query: Composition,
}

/// The query that separates `cand` from its doppelgänger.
///
/// Requires at least two principal hooks and unequal first overhangs.
pub fn build_doppel_queries(cand: &Partition) -> Result<Vec<DoppelQuery>> {
    let profile = cand.hook_profile()?;
    let hooks = &profile.hooks;
    if hooks.len() < 2 {
        return Err(Error::Precondition(format!("{cand} has fewer than two principal hooks")));
    }
    if hooks[0].short == hooks[0].long {
        return Err(Error::Precondition(format!("{cand} is its own doppelgänger")));
    }
    let k = hooks.len() - 1;
    // One-based accessors.
    let h = |i: usize| hooks[i - 1].length;
    let a = |i: usize| hooks[i - 1].short;
    let mut parts = greedy_prefix(cand)?;

    let case = match cand.second_imbalance() {
        SecondImbalance::Finite(i) if i <= k => {
            parts.push(h(i) - a(i) + a(i - 1));
            parts.push(h(i + 1) + a(i) + 1);
            parts.extend((i + 2..=k + 1).map(h));
            DoppelCase::ImbalanceInside
        }
        SecondImbalance::Finite(_) => {
            parts.push(h(k + 1) - a(k + 1) + a(k));
            parts.push(a(k + 1) + 1);
            DoppelCase::ImbalanceLast
        }
        SecondImbalance::Infinity => {
            let whole = h(k + 1) + a(k) + 1;
            let mut single = parts.clone();
            single.push(whole);
            if composition_sign(&Composition::new(single.clone())?) == Sign::Minus {
                parts = single;
                DoppelCase::BalancedSingle
            } else {
                let (ak, ak1) = (a(k), a(k + 1));
                if matches!((ak, ak1), (0, 0) | (1, 0) | (1, 1)) {
                    parts.push(h(k + 1));
                    parts.push(ak + 1);
                    DoppelCase::BalancedExceptional
                } else {
                    let last = if ak1 == 0 {
                        2
                    } else if ak != ak1 {
                        ak1 + 1
                    } else {
                        ak1 + 2
                    };
                    parts.push(whole - last);
                    parts.push(last);
                    DoppelCase::BalancedSplit
                }
            }
        }
    };
    let query = Composition::new(parts)?;
    debug_assert_eq!(query.n(), cand.n());
    Ok(vec![DoppelQuery { case, query }])
}

/// Picks between `cand` and its doppelgänger. Every query is sent behind
/// `prefix`, whose forced strips contribute `prefix_sign`.
pub fn resolve_doppelganger<O: CharacterOracle + ?Sized>(
    o: &mut O,
    prefix: &[usize],
    prefix_sign: Sign,
    cand: &Partition,
) -> Result<Partition> {
    let dop = cand.doppelganger();
    if &dop == cand {
        return Ok(dop);
    }
    let plan = build_doppel_queries(cand)?;
    let Some(DoppelQuery { case, query }) = plan.into_iter().next() else {
        return Err(Error::Precondition("empty doppelgänger plan".into()));
    };
    let pc = chi(cand, &query)?;
    let pd = chi(&dop, &query)?;
    if pc == pd {
        return Err(Error::LemmaViolation(format!("{query} does not separate {cand} from {dop}")));
    }
    let ok = match case {
        DoppelCase::ImbalanceInside | DoppelCase::ImbalanceLast => (&pc.0 - &pd.0).is_odd(),
        _ => !pc.is_zero() && pd == -pc.clone(),
    };
    if !ok {
        return Err(Error::LemmaViolation(format!(
            "{query} gives {pc} for {cand} and {pd} for {dop}, outside the expected pattern"
        )));
    }
    let answer = o.query(&query.prepend(prefix))?;
    if answer == pc.clone() * prefix_sign {
        Ok(cand.clone())
    } else if answer == pd.clone() * prefix_sign {
        Ok(dop)
    } else {
        Err(Error::PromiseViolated(format!(
            "answer {answer} to {query} matches neither {cand} nor {dop}"
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{counting_oracle, exact_oracle};
    use crate::partitions::partitions_of;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn imbalance_inside_query_shape() {
        let shape = p("14,11,9,9,8,5,4,4,2,2,1");
        let plan = build_doppel_queries(&shape).unwrap();
        assert_eq!(plan[0].case, DoppelCase::ImbalanceInside);
        assert_eq!(plan[0].query.n(), 69);
        assert_eq!(&plan[0].query.parts()[..3], &[22, 17, 14]);
    }

    #[test]
    fn exceptional_shapes() {
        for s in ["8,6,5,5,5,2", "8,6,5,4,3,2", "9,7,6,5,4,3,2"] {
            let shape = p(s);
            let plan = build_doppel_queries(&shape).unwrap();
            assert_eq!(plan[0].case, DoppelCase::BalancedExceptional, "{s}");
        }
    }

    #[test]
    fn every_case_separates() {
        let mut seen = std::collections::BTreeSet::new();
        for n in 3..=18 {
            for shape in partitions_of(n) {
                if shape.hook_count() < 2 || shape.doppelganger() == shape {
                    continue;
                }
                let plan = build_doppel_queries(&shape).unwrap();
                let q = &plan[0].query;
                assert_eq!(q.n(), n);
                let pc = chi(&shape, q).unwrap();
                let pd = chi(&shape.doppelganger(), q).unwrap();
                assert_ne!(pc, pd, "{shape} {q}");
                seen.insert(format!("{:?}", plan[0].case));
            }
        }
        assert_eq!(seen.len(), 5, "{seen:?}");
    }

    #[test]
    fn resolves_with_one_query() {
        for n in 3..=12 {
            for shape in partitions_of(n) {
                if shape.hook_count() < 2 {
                    continue;
                }
                for truth in [shape.clone(), shape.doppelganger()] {
                    let mut o = counting_oracle(exact_oracle(truth.clone()));
                    let got = resolve_doppelganger(&mut o, &[], Sign::Plus, &shape).unwrap();
                    assert_eq!(got, truth);
                    assert!(o.count() <= 1);
                }
            }
        }
    }
}
