//! The Artin action of braids on the free group π1 of the 3-punctured disc.
//!
//! The free group is generated by x1, x2, x3 (one loop per puncture). A braid
//! word acts left to right: the automorphism of `uv` applies `u` first. The
//! generator convention is
//!
//! ```text
//! σi:  xi ↦ xi x(i+1) xi⁻¹,   x(i+1) ↦ xi,   other fixed
//! ```
//!
//! which makes the induced Burau matrices match the generator matrices in
//! [`crate::burau`] (enforced there by the Fox-calculus cross-check).
//!
//! Since the action is faithful, fixing all three generators is a word-problem
//! oracle, independent of the matrix and PSL(2,Z) routes.

use std::fmt;

use crate::word::{BraidWord, Gen};

/// A letter x1, x2 or x3 of the free group, possibly inverted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FreeLetter {
    pub gen: u8,
    pub inverse: bool,
}

impl FreeLetter {
    pub fn new(gen: u8, inverse: bool) -> Self {
        debug_assert!((1..=3).contains(&gen));
        FreeLetter { gen, inverse }
    }

    pub fn inv(self) -> Self {
        FreeLetter { gen: self.gen, inverse: !self.inverse }
    }

    pub fn sign(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    fn cancels(self, other: FreeLetter) -> bool {
        self.gen == other.gen && self.inverse != other.inverse
    }
}

/// A freely reduced word in x1, x2, x3. Reduction is applied eagerly by every
/// constructor, so the stored form is the unique reduced representative.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct FreeWord {
    letters: Vec<FreeLetter>,
}

impl FreeWord {
    pub fn identity() -> Self {
        FreeWord::default()
    }

    pub fn generator(gen: u8) -> Self {
        FreeWord { letters: vec![FreeLetter::new(gen, false)] }
    }

    pub fn from_letters(letters: impl IntoIterator<Item = FreeLetter>) -> Self {
        let mut w = FreeWord::identity();
        for l in letters {
            w.push(l);
        }
        w
    }

    fn push(&mut self, l: FreeLetter) {
        if self.letters.last().is_some_and(|&t| t.cancels(l)) {
            self.letters.pop();
        } else {
            self.letters.push(l);
        }
    }

    pub fn letters(&self) -> &[FreeLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &FreeWord) -> FreeWord {
        let mut out = self.clone();
        for &l in &other.letters {
            out.push(l);
        }
        out
    }

    pub fn invert(&self) -> FreeWord {
        FreeWord { letters: self.letters.iter().rev().map(|l| l.inv()).collect() }
    }

    /// Total exponent sum over all generators.
    pub fn epsilon(&self) -> i64 {
        self.letters.iter().map(|l| l.sign()).sum()
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "1");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "x{}{}", l.gen, if l.inverse { "^-1" } else { "" })?;
        }
        Ok(())
    }
}

/// An automorphism of the free group, given by the images of x1, x2, x3.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeAutomorphism {
    pub images: [FreeWord; 3],
}

impl FreeAutomorphism {
    pub fn identity() -> Self {
        FreeAutomorphism {
            images: [FreeWord::generator(1), FreeWord::generator(2), FreeWord::generator(3)],
        }
    }

    pub fn image_of(&self, gen: u8) -> &FreeWord {
        &self.images[gen as usize - 1]
    }

    /// Substitutes the images into `w` and reduces.
    pub fn apply(&self, w: &FreeWord) -> FreeWord {
        let mut out = FreeWord::identity();
        for &l in w.letters() {
            let img = self.image_of(l.gen);
            if l.inverse {
                for il in img.letters().iter().rev() {
                    out.push(il.inv());
                }
            } else {
                for &il in img.letters() {
                    out.push(il);
                }
            }
        }
        out
    }

    /// The automorphism "apply `self` first, then `next`".
    pub fn then(&self, next: &FreeAutomorphism) -> FreeAutomorphism {
        FreeAutomorphism {
            images: [
                next.apply(&self.images[0]),
                next.apply(&self.images[1]),
                next.apply(&self.images[2]),
            ],
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == FreeAutomorphism::identity()
    }

    /// The elementary automorphism of a single braid letter.
    pub fn elementary(letter: crate::word::Letter) -> FreeAutomorphism {
        let i = match letter.gen {
            Gen::Sigma1 => 1u8,
            Gen::Sigma2 => 2u8,
        };
        let j = i + 1;
        let xi = FreeLetter::new(i, false);
        let xj = FreeLetter::new(j, false);
        let mut auto = FreeAutomorphism::identity();
        if letter.inverse {
            // σi⁻¹: xi ↦ x(i+1), x(i+1) ↦ x(i+1)⁻¹ xi x(i+1)
            auto.images[i as usize - 1] = FreeWord::from_letters([xj]);
            auto.images[j as usize - 1] = FreeWord::from_letters([xj.inv(), xi, xj]);
        } else {
            // σi: xi ↦ xi x(i+1) xi⁻¹, x(i+1) ↦ xi
            auto.images[i as usize - 1] = FreeWord::from_letters([xi, xj, xi.inv()]);
            auto.images[j as usize - 1] = FreeWord::from_letters([xi]);
        }
        auto
    }
}

/// The automorphism induced by a braid word (letters applied left to right).
pub fn artin_image(w: &BraidWord) -> FreeAutomorphism {
    let mut auto = FreeAutomorphism::identity();
    for &l in w.letters() {
        auto = auto.then(&FreeAutomorphism::elementary(l));
    }
    auto
}

/// Word-problem oracle: true iff the Artin action of `w` fixes x1, x2, x3.
pub fn is_identity(w: &BraidWord) -> bool {
    artin_image(w).is_identity()
}

/// For a word fixing puncture 3, the image of x3 reduces to u·x3·u⁻¹ with a
/// positive central letter; returns the conjugator u.
///
/// Panics if the image does not have that shape, which cannot happen for the
/// Artin image of a pure braid.
pub(crate) fn conjugator_of_x3(image_of_x3: &FreeWord) -> FreeWord {
    let letters = image_of_x3.letters();
    let n = letters.len();
    assert!(n % 2 == 1, "conjugate of x3 must have odd reduced length");
    let mid = n / 2;
    assert_eq!(
        letters[mid],
        FreeLetter::new(3, false),
        "central letter of a pure-braid x3 image must be x3"
    );
    let prefix = &letters[..mid];
    for (p, s) in prefix.iter().zip(letters[mid + 1..].iter().rev()) {
        assert!(p.cancels(*s), "x3 image is not a conjugate");
    }
    FreeWord::from_letters(prefix.iter().copied())
}
