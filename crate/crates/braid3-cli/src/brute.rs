//! Brute-force conjugacy search, used as a one-sided oracle for the
//! linear-time solver: a witness found here proves conjugacy, while absence
//! within the bound proves nothing.

use std::collections::HashMap;

use braid3::conjugacy::word_problem_equal;
use braid3::modular::{braid_to_modular, ModularWord, Syllable};
use braid3::word::BraidWord;

use crate::enumerate::for_each_reduced_word;

/// Breadth-first search over freely reduced conjugators g with
/// |g| ≤ `max_conjugator_len`, returning the first g (shortest, then
/// lexicographic in a, A, b, B) with g·ψ·g⁻¹ = φ.
pub fn brute_force_conjugate(
    phi: &BraidWord,
    psi: &BraidWord,
    max_conjugator_len: usize,
) -> Option<BraidWord> {
    if phi.exponent_sum() != psi.exponent_sum() {
        // Conjugation preserves exponent sums; no conjugator can exist.
        return None;
    }
    let mut found = None;
    let phi_key = conjugacy_key(phi);
    for_each_reduced_word(max_conjugator_len, |g| {
        if found.is_none() && conjugacy_key(&g.conjugate(psi)) == phi_key {
            found = Some(g.clone());
        }
    });
    if let Some(g) = &found {
        debug_assert!(word_problem_equal(&g.conjugate(psi), phi));
    }
    found
}

/// The word-problem key of a braid: its image in the central quotient plus
/// its exponent sum. Two words are equal iff their keys are.
fn conjugacy_key(w: &BraidWord) -> (Vec<u8>, i64) {
    (encode(&braid_to_modular(w)), w.exponent_sum())
}

fn encode(m: &ModularWord) -> Vec<u8> {
    m.syllables()
        .iter()
        .map(|s| match s {
            Syllable::A => 0u8,
            Syllable::B(k) => *k,
        })
        .collect()
}

/// The set of elements conjugate to ψ by conjugators of length ≤ bound,
/// keyed for O(1) membership tests against other words. Values are the
/// first conjugator in breadth-first order, matching what
/// [`brute_force_conjugate`] would return.
pub struct ConjugateOrbit {
    exponent_sum: i64,
    by_class: HashMap<Vec<u8>, BraidWord>,
}

impl ConjugateOrbit {
    pub fn new(psi: &BraidWord, max_conjugator_len: usize) -> Self {
        let mut by_class: HashMap<Vec<u8>, BraidWord> = HashMap::new();
        for_each_reduced_word(max_conjugator_len, |g| {
            let key = encode(&braid_to_modular(&g.conjugate(psi)));
            by_class.entry(key).or_insert_with(|| g.clone());
        });
        ConjugateOrbit {
            exponent_sum: psi.exponent_sum(),
            by_class,
        }
    }

    /// The stored witness for φ, if the bounded search reaches it.
    pub fn witness_for(&self, phi: &BraidWord) -> Option<&BraidWord> {
        if phi.exponent_sum() != self.exponent_sum {
            return None;
        }
        self.by_class.get(&encode(&braid_to_modular(phi)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> BraidWord {
        s.parse().unwrap()
    }

    #[test]
    fn finds_short_witness_for_generators() {
        let g = brute_force_conjugate(&w("a"), &w("b"), 4).expect("σ1 ~ σ2");
        assert!(g.len() <= 3);
        assert!(word_problem_equal(&g.conjugate(&w("b")), &w("a")));
    }

    #[test]
    fn identity_conjugator_for_equal_words() {
        let g = brute_force_conjugate(&w("ab"), &w("ab"), 3).unwrap();
        assert!(g.is_empty());
    }

    #[test]
    fn no_witness_across_exponent_sums() {
        assert!(brute_force_conjugate(&w("a"), &w("A"), 8).is_none());
    }

    #[test]
    fn orbit_agrees_with_direct_search() {
        let psi = w("ab");
        let orbit = ConjugateOrbit::new(&psi, 4);
        for phi in ["ab", "ba", "aab", "aB"] {
            let phi = w(phi);
            let direct = brute_force_conjugate(&phi, &psi, 4);
            let via_orbit = orbit.witness_for(&phi).cloned();
            assert_eq!(direct, via_orbit, "word {phi}");
        }
    }
}
