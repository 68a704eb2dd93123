//! Character oracles: answer composition queries, count them, keep transcripts.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::mn_eval::{chi, CharValue};
use crate::partitions::{Composition, Partition};

/// Something that answers `f(α)` for compositions `α` of a fixed `n`.
pub trait CharacterOracle {
    fn n(&self) -> usize;

    fn query(&mut self, q: &Composition) -> Result<CharValue>;
}

impl<O: CharacterOracle + ?Sized> CharacterOracle for &mut O {
    fn n(&self) -> usize {
        (**self).n()
    }

    fn query(&mut self, q: &Composition) -> Result<CharValue> {
        (**self).query(q)
    }
}

/// Answers with `χ_hidden`. The hidden shape is not reachable through the
/// oracle interface.
#[derive(Debug, Clone)]
pub struct ExactOracle {
    hidden: Partition,
}

pub fn exact_oracle(hidden: Partition) -> ExactOracle {
    ExactOracle { hidden }
}

impl CharacterOracle for ExactOracle {
    fn n(&self) -> usize {
        self.hidden.n()
    }

    fn query(&mut self, q: &Composition) -> Result<CharValue> {
        chi(&self.hidden, q)
    }
}

/// Wraps any answer function; handy for oracles that break the promise.
pub struct FnOracle<F> {
    n: usize,
    answer: F,
}

impl<F: FnMut(&Composition) -> CharValue> FnOracle<F> {
    pub fn new(n: usize, answer: F) -> Self {
        Self { n, answer }
    }
}

impl<F: FnMut(&Composition) -> CharValue> CharacterOracle for FnOracle<F> {
    fn n(&self) -> usize {
        self.n
    }

    fn query(&mut self, q: &Composition) -> Result<CharValue> {
        Ok((self.answer)(q))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TranscriptEntry {
    pub query: Composition,
    pub answer: CharValue,
}

impl fmt::Display for TranscriptEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "query={} answer={}", self.query, self.answer)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct QueryTranscript {
    pub entries: Vec<TranscriptEntry>,
}

impl QueryTranscript {
    pub fn count(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// One JSON object per line.
    pub fn to_json_lines(&self) -> String {
        self.entries
            .iter()
            .map(|e| serde_json::to_string(e).expect("transcript entries serialize"))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// Line-oriented `query=<parts> answer=<value>` records.
impl fmt::Display for QueryTranscript {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for entry in &self.entries {
            writeln!(f, "{entry}")?;
        }
        Ok(())
    }
}

/// Forwards queries and records each `(query, answer)` pair.
pub struct CountingOracle<O> {
    inner: O,
    transcript: QueryTranscript,
}

pub fn counting_oracle<O: CharacterOracle>(inner: O) -> CountingOracle<O> {
    CountingOracle {
        inner,
        transcript: QueryTranscript::default(),
    }
}

impl<O: CharacterOracle> CountingOracle<O> {
    pub fn count(&self) -> usize {
        self.transcript.count()
    }

    pub fn transcript(&self) -> &QueryTranscript {
        &self.transcript
    }

    pub fn into_parts(self) -> (O, QueryTranscript) {
        (self.inner, self.transcript)
    }
}

impl<O: CharacterOracle> CharacterOracle for CountingOracle<O> {
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn query(&mut self, q: &Composition) -> Result<CharValue> {
        let n = self.inner.n();
        if q.n() != n {
            return Err(Error::SizeMismatch {
                expected: n,
                found: q.n(),
            });
        }
        let answer = self.inner.query(q)?;
        self.transcript.entries.push(TranscriptEntry {
            query: q.clone(),
            answer: answer.clone(),
        });
        Ok(answer)
    }
}

/// One-line form of the canonical permutation with cycle type `t`: cycles
/// are laid out left to right over `1..=n` in the order of `t`. Entry `i`
/// is the image of `i + 1`.
pub fn canonical_permutation(t: &Composition) -> Vec<usize> {
    let mut images = Vec::with_capacity(t.n());
    let mut start = 1;
    for &len in t.parts() {
        images.extend((start + 1..start + len).chain(std::iter::once(start)));
        start += len;
    }
    images
}

/// Cycle notation of [`canonical_permutation`], e.g. `(1 2 3)(4 5)(6)`.
pub fn cycle_notation(t: &Composition) -> String {
    let mut out = String::new();
    let mut start = 1;
    for &len in t.parts() {
        let cycle: Vec<String> = (start..start + len).map(|i| i.to_string()).collect();
        out.push('(');
        out.push_str(&cycle.join(" "));
        out.push(')');
        start += len;
    }
    out
}

/// Cycle lengths of a one-line permutation, cycles ordered by smallest element.
pub fn cycle_type(images: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; images.len()];
    let mut lengths = Vec::new();
    for first in 0..images.len() {
        if seen[first] {
            continue;
        }
        let mut len = 0;
        let mut i = first;
        while !seen[i] {
            seen[i] = true;
            len += 1;
            i = images[i] - 1;
        }
        lengths.push(len);
    }
    lengths
}
