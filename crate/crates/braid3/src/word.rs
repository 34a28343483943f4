//! Braid words in the Artin generators of the 3-strand braid group.
//!
//! The two generators are written `a` = σ1 and `b` = σ2, with capitals for
//! inverses. Words are plain letter sequences: no relation is applied and no
//! free reduction happens implicitly, so callers keep control over literal
//! spellings (reversal, for instance, is spelling-sensitive).

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// One of the two Artin generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    Sigma1,
    Sigma2,
}

impl Gen {
    pub fn index(self) -> usize {
        match self {
            Gen::Sigma1 => 1,
            Gen::Sigma2 => 2,
        }
    }
}

/// A single signed generator letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub gen: Gen,
    pub inverse: bool,
}

impl Letter {
    pub const A: Letter = Letter { gen: Gen::Sigma1, inverse: false };
    pub const A_INV: Letter = Letter { gen: Gen::Sigma1, inverse: true };
    pub const B: Letter = Letter { gen: Gen::Sigma2, inverse: false };
    pub const B_INV: Letter = Letter { gen: Gen::Sigma2, inverse: true };

    pub fn inv(self) -> Letter {
        Letter { gen: self.gen, inverse: !self.inverse }
    }

    pub fn sign(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    /// True if the two letters cancel as free-group letters.
    pub fn cancels(self, other: Letter) -> bool {
        self.gen == other.gen && self.inverse != other.inverse
    }

    fn to_char(self) -> char {
        match (self.gen, self.inverse) {
            (Gen::Sigma1, false) => 'a',
            (Gen::Sigma1, true) => 'A',
            (Gen::Sigma2, false) => 'b',
            (Gen::Sigma2, true) => 'B',
        }
    }
}

/// A word in the generators σ1, σ2 of the 3-strand braid group.
///
/// The empty word is the identity braid. Equality is letter-for-letter
/// (spelling equality); use [`crate::conjugacy::word_problem_equal`] or
/// [`crate::artin::is_identity`] for equality as group elements.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BraidWord {
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        BraidWord { letters }
    }

    pub fn identity() -> Self {
        BraidWord::default()
    }

    /// The half twist Δ = σ1 σ2 σ1.
    pub fn half_twist() -> Self {
        BraidWord::new(vec![Letter::A, Letter::B, Letter::A])
    }

    /// The full twist Δ², generator of the center.
    pub fn full_twist() -> Self {
        BraidWord::half_twist().concat(&BraidWord::half_twist())
    }

    /// Δ^{2k} for any integer k (inverse letters for negative k).
    pub fn full_twist_pow(k: i64) -> Self {
        let block = if k >= 0 {
            BraidWord::full_twist()
        } else {
            BraidWord::full_twist().invert()
        };
        let mut letters = Vec::with_capacity(6 * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            letters.extend_from_slice(&block.letters);
        }
        BraidWord::new(letters)
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn push(&mut self, l: Letter) {
        self.letters.push(l);
    }

    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        BraidWord::new(letters)
    }

    /// The group inverse: letters reversed and signs flipped.
    pub fn invert(&self) -> BraidWord {
        BraidWord::new(self.letters.iter().rev().map(|l| l.inv()).collect())
    }

    /// The word read backwards, signs unchanged. An involution.
    pub fn reverse_bar(&self) -> BraidWord {
        BraidWord::new(self.letters.iter().rev().copied().collect())
    }

    /// Signed letter count; an invariant of the braid element.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.sign()).sum()
    }

    /// The conjugate of `inner` by `self`: self · inner · self⁻¹.
    pub fn conjugate(&self, inner: &BraidWord) -> BraidWord {
        self.concat(inner).concat(&self.invert())
    }

    /// Removes adjacent inverse pairs until none remain. Not applied
    /// implicitly anywhere.
    pub fn free_reduce(&self) -> BraidWord {
        let mut out: Vec<Letter> = Vec::with_capacity(self.len());
        for &l in &self.letters {
            if out.last().is_some_and(|&t| t.cancels(l)) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        BraidWord::new(out)
    }

    pub fn is_freely_reduced(&self) -> bool {
        self.letters.windows(2).all(|w| !w[0].cancels(w[1]))
    }

    /// The induced permutation of the punctures {1,2,3}, letters applied
    /// left to right, signs ignored.
    pub fn permutation(&self) -> Perm3 {
        let mut p = Perm3::identity();
        for l in &self.letters {
            p = p.then(Perm3::transposition(l.gen.index()));
        }
        p
    }

    pub fn is_pure(&self) -> bool {
        self.permutation().is_identity()
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            write!(f, "{}", l.to_char())?;
        }
        Ok(())
    }
}

impl FromStr for BraidWord {
    type Err = Error;

    /// Parses either the letter form (`aAbB`, whitespace ignored) or the
    /// numeric form (signed integers 1, -1, 2, -2 separated by commas or
    /// whitespace). Canonical output is the letter form.
    fn from_str(s: &str) -> Result<Self, Error> {
        let numeric = s
            .chars()
            .find(|c| !c.is_whitespace())
            .is_some_and(|c| c.is_ascii_digit() || c == '-' || c == '+');
        if numeric {
            parse_numeric(s)
        } else {
            parse_letters(s)
        }
    }
}

fn parse_letters(s: &str) -> Result<BraidWord, Error> {
    let mut letters = Vec::new();
    let mut offset = 0usize;
    for c in s.chars() {
        if c.is_whitespace() {
            continue;
        }
        let l = match c {
            'a' => Letter::A,
            'A' => Letter::A_INV,
            'b' => Letter::B,
            'B' => Letter::B_INV,
            _ => return Err(Error::MalformedWord { offset }),
        };
        letters.push(l);
        offset += 1;
    }
    Ok(BraidWord::new(letters))
}

fn parse_numeric(s: &str) -> Result<BraidWord, Error> {
    let mut letters = Vec::new();
    for (offset, tok) in s
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .enumerate()
    {
        let l = match tok.parse::<i64>() {
            Ok(1) => Letter::A,
            Ok(-1) => Letter::A_INV,
            Ok(2) => Letter::B,
            Ok(-2) => Letter::B_INV,
            _ => return Err(Error::MalformedWord { offset }),
        };
        letters.push(l);
    }
    Ok(BraidWord::new(letters))
}

/// A permutation of {1, 2, 3}, stored as images of 0-based indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Perm3([usize; 3]);

impl Perm3 {
    pub fn identity() -> Self {
        Perm3([0, 1, 2])
    }

    /// The transposition swapping punctures i and i+1, for i in {1, 2}.
    pub fn transposition(i: usize) -> Self {
        match i {
            1 => Perm3([1, 0, 2]),
            2 => Perm3([0, 2, 1]),
            _ => panic!("transposition index must be 1 or 2"),
        }
    }

    /// Image of the 1-based puncture index.
    pub fn apply(&self, x: usize) -> usize {
        self.0[x - 1] + 1
    }

    /// `self` followed by `next` (left-to-right composition).
    pub fn then(&self, next: Perm3) -> Perm3 {
        Perm3([next.0[self.0[0]], next.0[self.0[1]], next.0[self.0[2]]])
    }

    pub fn inverse(&self) -> Perm3 {
        let mut inv = [0usize; 3];
        for (i, &img) in self.0.iter().enumerate() {
            inv[img] = i;
        }
        Perm3(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0 == [0, 1, 2]
    }
}

impl fmt::Display for Perm3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[1→{}, 2→{}, 3→{}]", self.apply(1), self.apply(2), self.apply(3))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> BraidWord {
        s.parse().unwrap()
    }

    #[test]
    fn parse_letter_form() {
        let word = w("aB");
        assert_eq!(word.letters(), &[Letter::A, Letter::B_INV]);
        assert_eq!(w("").len(), 0);
        assert_eq!(w("a A\tb B").to_string(), "aAbB");
    }

    #[test]
    fn parse_rejects_illegal_token() {
        assert_eq!(
            "aAbB x".parse::<BraidWord>(),
            Err(Error::MalformedWord { offset: 4 })
        );
        assert_eq!(
            "1, -1, 3".parse::<BraidWord>(),
            Err(Error::MalformedWord { offset: 2 })
        );
    }

    #[test]
    fn parse_numeric_form() {
        assert_eq!(w("1,-1,2,-2").to_string(), "aAbB");
        assert_eq!(w("1 2 1").to_string(), "aba");
    }

    #[test]
    fn roundtrip_is_canonical() {
        for s in ["", "aB", "abAB", "a b A B"] {
            let canon = w(s).to_string();
            assert_eq!(w(&canon).to_string(), canon);
        }
    }

    #[test]
    fn invert_examples() {
        assert_eq!(w("ab").invert().to_string(), "BA");
        assert_eq!(w("").invert().to_string(), "");
        assert_eq!(w("aB").invert().to_string(), "bA");
    }

    #[test]
    fn reverse_bar_examples() {
        assert_eq!(w("aab").reverse_bar().to_string(), "baa");
        assert_eq!(w("aB").reverse_bar().to_string(), "Ba");
    }

    #[test]
    fn exponent_sum_examples() {
        assert_eq!(w("ab").exponent_sum(), 2);
        assert_eq!(w("aBA").exponent_sum(), -1);
        assert_eq!(BraidWord::full_twist().exponent_sum(), 6);
        assert_eq!(BraidWord::full_twist().to_string(), "abaaba");
    }

    #[test]
    fn permutation_examples() {
        assert_eq!(w("a").permutation(), Perm3::transposition(1));
        assert!(w("aa").permutation().is_identity());
        // Left-to-right convention: 1 → 3, 2 → 1, 3 → 2.
        let p = w("ab").permutation();
        assert_eq!((p.apply(1), p.apply(2), p.apply(3)), (3, 1, 2));
    }

    #[test]
    fn reverse_bar_permutation_is_inverse() {
        for s in ["ab", "aab", "abAB", "babA"] {
            let word = w(s);
            assert_eq!(
                word.reverse_bar().permutation(),
                word.permutation().inverse()
            );
            assert_eq!(word.reverse_bar().exponent_sum(), word.exponent_sum());
        }
    }

    #[test]
    fn free_reduce_removes_inverse_pairs() {
        assert_eq!(w("aAb").free_reduce().to_string(), "b");
        assert_eq!(w("abBA").free_reduce().to_string(), "");
        assert!(w("aba").is_freely_reduced());
        assert!(!w("aA").is_freely_reduced());
    }

    #[test]
    fn full_twist_pow_negative() {
        assert_eq!(BraidWord::full_twist_pow(-1).to_string(), "ABAABA");
        assert_eq!(BraidWord::full_twist_pow(2).len(), 12);
        assert_eq!(BraidWord::full_twist_pow(0).len(), 0);
    }
}
