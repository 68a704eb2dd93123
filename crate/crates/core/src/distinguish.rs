//! Certifying that two characters differ by exhibiting a separating cycle type.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::identify::identify;
use crate::mn_eval::{chi, CharValue};
use crate::oracle::{cycle_notation, exact_oracle, CharacterOracle, ExactOracle};
use crate::partitions::{Composition, Partition};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Separator {
    pub witness: Composition,
    pub value_lambda: CharValue,
    pub value_mu: CharValue,
    /// Cycle notation of a permutation of cycle type `witness`.
    pub permutation: String,
}

/// Answers as `χ_λ` and, until they first disagree, compares with `χ_μ`.
struct Shadow<'a> {
    lambda: ExactOracle,
    mu: &'a Partition,
    found: Option<(Composition, CharValue, CharValue)>,
}

impl CharacterOracle for Shadow<'_> {
    fn n(&self) -> usize {
        self.lambda.n()
    }

    fn query(&mut self, q: &Composition) -> Result<CharValue> {
        let answer = self.lambda.query(q)?;
        if self.found.is_none() {
            let other = chi(self.mu, q)?;
            if other != answer {
                self.found = Some((q.clone(), answer.clone(), other));
            }
        }
        Ok(answer)
    }
}

/// The first query of the identification of `lambda` on which `mu` would
/// have answered differently.
pub fn distinguish(lambda: &Partition, mu: &Partition) -> Result<Separator> {
    if lambda.n() != mu.n() {
        return Err(Error::SizeMismatch {
            expected: lambda.n(),
            found: mu.n(),
        });
    }
    if lambda == mu {
        return Err(Error::IdenticalPartitions);
    }
    let mut shadow = Shadow {
        lambda: exact_oracle(lambda.clone()),
        mu,
        found: None,
    };
    identify(&mut shadow, lambda.n())?;
    let (witness, value_lambda, value_mu) = shadow
        .found
        .ok_or_else(|| Error::LemmaViolation(format!("no query separated {lambda} from {mu}")))?;
    Ok(Separator {
        permutation: cycle_notation(&witness),
        witness,
        value_lambda,
        value_mu,
    })
}
