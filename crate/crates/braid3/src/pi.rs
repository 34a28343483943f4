//! The continued-fraction invariant of 3-braids.
//!
//! A word spelled in alternating syllables σ1^a1 σ2^b1 σ1^a2 … evaluates to
//! the extended rational [a1, −b1, a2, −b2, …] = a1 + 1/(−b1 + 1/(a2 + …)),
//! computed over Q ∪ {∞} with 1/0 = ∞, x + ∞ = ∞ and 1/∞ = 0. The value is
//! unchanged by braid-relation rewriting, so it is an invariant of the braid,
//! and it coincides with the linear fractional transformation of the
//! integral matrix.
//!
//! Syllables are maximal runs of one generator, with net exponent. A leading
//! run of σ2 is read as a1 = 0 and contributes a leading zero entry; a
//! trailing zero σ1-slot is dropped. Interior runs with net exponent zero
//! have no admissible syllable spelling and are rejected.
//!
//! Writing M for the integral matrix acting by z ↦ (az+b)/(cz+d), these
//! conventions give π = M(0) for words ending in a σ1-run and π = M(∞) for
//! words ending in a σ2-run. The value is therefore invariant under
//! rewriting that keeps the generator of the final run, and two spellings of
//! one braid ending in different generators may evaluate differently.

use std::fmt;

use num::{BigInt, BigRational, One, Zero};

use crate::error::Error;
use crate::word::{BraidWord, Gen};

/// A rational number in lowest terms, or the point at infinity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExtendedRational {
    Finite(BigRational),
    Infinity,
}

impl ExtendedRational {
    pub fn integer(n: i64) -> Self {
        ExtendedRational::Finite(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtendedRational::Infinity)
    }

    /// 1/x with 1/0 = ∞ and 1/∞ = 0.
    pub fn recip(&self) -> ExtendedRational {
        match self {
            ExtendedRational::Infinity => ExtendedRational::Finite(BigRational::zero()),
            ExtendedRational::Finite(q) if q.is_zero() => ExtendedRational::Infinity,
            ExtendedRational::Finite(q) => ExtendedRational::Finite(q.recip()),
        }
    }

    /// n + x with n + ∞ = ∞.
    pub fn add_integer(&self, n: &BigInt) -> ExtendedRational {
        match self {
            ExtendedRational::Infinity => ExtendedRational::Infinity,
            ExtendedRational::Finite(q) => {
                ExtendedRational::Finite(q + BigRational::from_integer(n.clone()))
            }
        }
    }
}

impl fmt::Display for ExtendedRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedRational::Infinity => write!(f, "inf"),
            ExtendedRational::Finite(q) if q.denom().is_one() => write!(f, "{}", q.numer()),
            ExtendedRational::Finite(q) => write!(f, "{}/{}", q.numer(), q.denom()),
        }
    }
}

/// Evaluates a continued fraction [c0, c1, …] from the right over the
/// extended rationals. The empty expansion is ∞, the identity tail.
pub fn continued_fraction(entries: &[BigInt]) -> ExtendedRational {
    let mut value = ExtendedRational::Infinity;
    for c in entries.iter().rev() {
        value = value.recip().add_integer(c);
    }
    value
}

/// The continued-fraction invariant of a braid word in syllable form.
///
/// Errors with `MalformedSyllables` when an interior maximal run has net
/// exponent zero; the position reported is the letter index ending the run.
pub fn pi_invariant(w: &BraidWord) -> Result<ExtendedRational, Error> {
    let runs = syllable_runs(w)?;
    let mut entries: Vec<BigInt> = Vec::with_capacity(runs.len() + 1);
    // The template alternates σ1, σ2, σ1, …; a word opening with σ2 gets a
    // leading zero σ1-syllable. The b-entries enter negated.
    let mut expect = Gen::Sigma1;
    for (gen, net) in &runs {
        if *gen != expect {
            entries.push(BigInt::zero());
            expect = other(expect);
        }
        match gen {
            Gen::Sigma1 => entries.push(BigInt::from(*net)),
            Gen::Sigma2 => entries.push(BigInt::from(-*net)),
        }
        expect = other(expect);
    }
    Ok(continued_fraction(&entries))
}

fn other(g: Gen) -> Gen {
    match g {
        Gen::Sigma1 => Gen::Sigma2,
        Gen::Sigma2 => Gen::Sigma1,
    }
}

/// Maximal same-generator runs with their net exponents. Interior zero-net
/// runs are rejected; a leading or trailing zero-net run is dropped here and
/// handled by the caller's template.
fn syllable_runs(w: &BraidWord) -> Result<Vec<(Gen, i64)>, Error> {
    let mut runs: Vec<(Gen, i64, usize)> = Vec::new();
    for (i, l) in w.letters().iter().enumerate() {
        match runs.last_mut() {
            Some((gen, net, end)) if *gen == l.gen => {
                *net += l.sign();
                *end = i;
            }
            _ => runs.push((l.gen, l.sign(), i)),
        }
    }
    let n = runs.len();
    for (idx, (_, net, end)) in runs.iter().enumerate() {
        if *net == 0 && idx > 0 && idx + 1 < n {
            return Err(Error::MalformedSyllables { position: *end });
        }
    }
    Ok(runs
        .into_iter()
        .filter(|(_, net, _)| *net != 0)
        .map(|(gen, net, _)| (gen, net))
        .collect())
}
