//! Enumeration of freely reduced braid words.
//!
//! There are 4·3^(L−1) freely reduced words of length L; iterating them
//! instead of all 4^L words keeps the exhaustive desk-scale sweeps tractable.

use braid3::word::{BraidWord, Letter};

pub const LETTERS: [Letter; 4] = [Letter::A, Letter::A_INV, Letter::B, Letter::B_INV];

/// Iterator over all freely reduced words of exactly `len` letters, in a
/// fixed lexicographic order over the alphabet a, A, b, B.
pub struct ReducedWords {
    len: usize,
    choices: Vec<u8>,
    done: bool,
}

impl ReducedWords {
    pub fn of_length(len: usize) -> Self {
        ReducedWords {
            len,
            choices: Vec::new(),
            done: false,
        }
    }
}

impl Iterator for ReducedWords {
    type Item = BraidWord;

    fn next(&mut self) -> Option<BraidWord> {
        if self.done {
            return None;
        }
        if self.choices.is_empty() && self.len > 0 {
            self.choices = vec![0; self.len];
            for i in 1..self.len {
                // First non-cancelling letter after choice 0 ('a') is 'a'.
                self.choices[i] = first_allowed(self.choices[i - 1]);
            }
        } else if self.len == 0 {
            self.done = true;
            return Some(BraidWord::identity());
        } else {
            // Odometer step skipping cancelling adjacencies.
            let mut i = self.len - 1;
            loop {
                match next_allowed(self.choices[i], if i == 0 { None } else { Some(self.choices[i - 1]) }) {
                    Some(c) => {
                        self.choices[i] = c;
                        for j in i + 1..self.len {
                            self.choices[j] = first_allowed(self.choices[j - 1]);
                        }
                        break;
                    }
                    None => {
                        if i == 0 {
                            self.done = true;
                            return None;
                        }
                        i -= 1;
                    }
                }
            }
        }
        Some(BraidWord::new(
            self.choices.iter().map(|&c| LETTERS[c as usize]).collect(),
        ))
    }
}

fn cancels(a: u8, b: u8) -> bool {
    LETTERS[a as usize].cancels(LETTERS[b as usize])
}

fn first_allowed(prev: u8) -> u8 {
    (0..4).find(|&c| !cancels(prev, c)).unwrap()
}

fn next_allowed(current: u8, prev: Option<u8>) -> Option<u8> {
    (current + 1..4).find(|&c| prev.map_or(true, |p| !cancels(p, c)))
}

/// Calls `f` with every freely reduced word of length ≤ `max_len`,
/// shortest first.
pub fn for_each_reduced_word(max_len: usize, mut f: impl FnMut(&BraidWord)) {
    for len in 0..=max_len {
        for w in ReducedWords::of_length(len) {
            f(&w);
        }
    }
}

/// The number of freely reduced words of length ≤ `max_len`.
pub fn reduced_word_count(max_len: usize) -> usize {
    let mut total = 1usize;
    let mut at_len = 4usize;
    for _ in 1..=max_len {
        total += at_len;
        at_len *= 3;
    }
    if max_len == 0 {
        1
    } else {
        total
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_formula() {
        for len in 0..=6 {
            let n = ReducedWords::of_length(len).count();
            let expected = if len == 0 { 1 } else { 4 * 3usize.pow(len as u32 - 1) };
            assert_eq!(n, expected, "length {len}");
        }
        assert_eq!(reduced_word_count(3), 1 + 4 + 12 + 36);
    }

    #[test]
    fn words_are_reduced_and_distinct() {
        let all: Vec<String> = ReducedWords::of_length(4).map(|w| w.to_string()).collect();
        let mut dedup = all.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(all.len(), dedup.len());
        for w in ReducedWords::of_length(4) {
            assert!(w.is_freely_reduced(), "{w}");
        }
    }
}
