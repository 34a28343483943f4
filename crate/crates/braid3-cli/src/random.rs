//! Seeded random braid words. Everything is deterministic in the seed; no
//! suite draws from ambient randomness.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::enumerate::LETTERS;
use braid3::word::{BraidWord, Letter};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A freely reduced word of exactly `length` letters, uniform over the
/// 4·3^(L−1) choices.
pub fn random_braid(length: usize, seed: u64) -> BraidWord {
    random_braid_with(&mut rng(seed), length)
}

pub fn random_braid_with(rng: &mut impl Rng, length: usize) -> BraidWord {
    let mut letters: Vec<Letter> = Vec::with_capacity(length);
    for _ in 0..length {
        let l = loop {
            let cand = LETTERS[rng.gen_range(0..4)];
            if !letters.last().is_some_and(|&t| t.cancels(cand)) {
                break cand;
            }
        };
        letters.push(l);
    }
    BraidWord::new(letters)
}

/// A freely reduced pure braid word of at least `length` letters: a random
/// word is drawn and then padded with up to three generator letters chosen
/// to trivialize the permutation, with signs picked to keep the word
/// reduced.
pub fn random_pure_braid(length: usize, seed: u64) -> BraidWord {
    random_pure_braid_with(&mut rng(seed), length)
}

pub fn random_pure_braid_with(rng: &mut impl Rng, length: usize) -> BraidWord {
    let base = random_braid_with(rng, length);
    let mut letters = base.letters().to_vec();
    let perm = base.permutation();
    let images = (perm.apply(1), perm.apply(2), perm.apply(3));
    // Adjacent transpositions completing the permutation to the identity;
    // each entry only fixes which strands cross, the signs stay free.
    let pad: &[usize] = match images {
        (1, 2, 3) => &[],
        (2, 1, 3) => &[1],
        (1, 3, 2) => &[2],
        (2, 3, 1) => &[1, 2],
        (3, 1, 2) => &[2, 1],
        (3, 2, 1) => &[1, 2, 1],
        _ => unreachable!(),
    };
    for &gen_index in pad {
        let positive = rng.gen_bool(0.5);
        let mut letter = match (gen_index, positive) {
            (1, true) => Letter::A,
            (1, false) => Letter::A_INV,
            (2, true) => Letter::B,
            (2, false) => Letter::B_INV,
            _ => unreachable!(),
        };
        if letters.last().is_some_and(|&t| t.cancels(letter)) {
            letter = letter.inv();
        }
        letters.push(letter);
    }
    BraidWord::new(letters)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_for_fixed_seed() {
        assert_eq!(random_braid(8, 42), random_braid(8, 42));
        assert_eq!(random_pure_braid(8, 42), random_pure_braid(8, 42));
        assert_ne!(random_braid(64, 1), random_braid(64, 2));
    }

    #[test]
    fn zero_length_is_identity() {
        assert!(random_braid(0, 7).is_empty());
    }

    #[test]
    fn words_are_reduced() {
        for seed in 0..50 {
            assert!(random_braid(32, seed).is_freely_reduced());
        }
    }

    #[test]
    fn pure_braids_have_trivial_permutation() {
        for seed in 0..100 {
            let w = random_pure_braid(9, seed);
            assert!(w.is_pure(), "seed {seed}: {w}");
            assert!(w.is_freely_reduced(), "seed {seed}: {w}");
            assert!(w.len() >= 9 && w.len() <= 12);
        }
    }
}
