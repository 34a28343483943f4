//! The reduced Burau representation of the 3-strand braid group.
//!
//! Generator images over Z[t, t⁻¹]:
//!
//! ```text
//! ρ(σ1) = [[-t, 1], [0, 1]]      ρ(σ2) = [[1, 0], [t, -t]]
//! ```
//!
//! Words map left to right onto left-to-right matrix products, so
//! det ρ(w) = (−t)^e(w) reads directly off the exponent sum, and evaluation
//! at t = −1 lands on the integral matrices S = [[1,1],[0,1]],
//! T = [[1,0],[−1,1]] that generate PSL(2, Z).
//!
//! [`fox_unreduced_burau`] rebuilds the representation along a second,
//! independent route: Fox free derivatives of the Artin action, abelianized
//! by sending every generator to t, give a 3×3 matrix; restricting to the
//! invariant rank-2 submodule recovers ρ exactly. The two routes share no
//! code, so their agreement pins the generator conventions.

use num::BigInt;

use crate::artin::FreeWord;
use crate::error::Error;
use crate::laurent::LaurentPoly;
use crate::matrix::{BurauMatrix, IntMatrix2, UnreducedBurauMatrix};
use crate::word::{BraidWord, Gen, Letter};

fn poly(terms: &[(i64, i64)]) -> LaurentPoly {
    LaurentPoly::from_terms(terms.iter().map(|&(e, c)| (e, BigInt::from(c))))
}

/// ρ(σ1) = [[−t, 1], [0, 1]].
pub fn sigma1_matrix() -> BurauMatrix {
    BurauMatrix::new([
        [poly(&[(1, -1)]), LaurentPoly::one()],
        [LaurentPoly::zero(), LaurentPoly::one()],
    ])
}

/// ρ(σ2) = [[1, 0], [t, −t]].
pub fn sigma2_matrix() -> BurauMatrix {
    BurauMatrix::new([
        [LaurentPoly::one(), LaurentPoly::zero()],
        [poly(&[(1, 1)]), poly(&[(1, -1)])],
    ])
}

fn letter_matrix(l: Letter) -> BurauMatrix {
    match (l.gen, l.inverse) {
        (Gen::Sigma1, false) => sigma1_matrix(),
        (Gen::Sigma2, false) => sigma2_matrix(),
        // Inverses computed once by hand from the adjugate over det = −t:
        // ρ(σ1)⁻¹ = [[−t⁻¹, t⁻¹], [0, 1]], ρ(σ2)⁻¹ = [[1, 0], [1, −t⁻¹]].
        (Gen::Sigma1, true) => BurauMatrix::new([
            [poly(&[(-1, -1)]), poly(&[(-1, 1)])],
            [LaurentPoly::zero(), LaurentPoly::one()],
        ]),
        (Gen::Sigma2, true) => BurauMatrix::new([
            [LaurentPoly::one(), LaurentPoly::zero()],
            [LaurentPoly::one(), poly(&[(-1, -1)])],
        ]),
    }
}

/// The reduced Burau matrix of a braid word.
pub fn burau(w: &BraidWord) -> BurauMatrix {
    let mut m = BurauMatrix::identity();
    for &l in w.letters() {
        m = m.mul(&letter_matrix(l));
    }
    m
}

/// The Burau matrix with coefficients reduced mod `modulus` (> 1, not
/// necessarily prime).
pub fn burau_mod_p(w: &BraidWord, modulus: i64) -> Result<BurauMatrix, Error> {
    burau(w).mod_p(modulus)
}

/// The integral Burau matrix: ρ(w) evaluated at t = −1.
pub fn integral_burau(w: &BraidWord) -> IntMatrix2 {
    burau(w).eval_neg_one()
}

/// Fox derivative row of a free word: entry j is ∂w/∂xj with every generator
/// abelianized to t, by the rules D(uv) = D(u) + t^ε(u)·D(v), D(xj) = δ,
/// D(xj⁻¹) = −t⁻¹·δ.
fn fox_row(w: &FreeWord) -> [LaurentPoly; 3] {
    let mut row = [LaurentPoly::zero(), LaurentPoly::zero(), LaurentPoly::zero()];
    let mut prefix: i64 = 0;
    for l in w.letters() {
        let j = l.gen as usize - 1;
        if l.inverse {
            row[j] = &row[j] - &LaurentPoly::t_pow(prefix - 1);
            prefix -= 1;
        } else {
            row[j] = &row[j] + &LaurentPoly::t_pow(prefix);
            prefix += 1;
        }
    }
    row
}

/// The direct Fox-derivative matrix of an automorphism's images.
fn fox_of_automorphism(auto: &crate::artin::FreeAutomorphism) -> UnreducedBurauMatrix {
    UnreducedBurauMatrix::new([
        fox_row(auto.image_of(1)),
        fox_row(auto.image_of(2)),
        fox_row(auto.image_of(3)),
    ])
}

/// The 3×3 unreduced Burau matrix of a braid word, built from the Artin
/// action by Fox calculus.
///
/// The Fox matrix is multiplicative over concatenation (the chain rule for
/// free derivatives, exercised by the tests below against the direct
/// derivative of the composite image), so the word is evaluated letter by
/// letter; free-group images grow exponentially with word length and would
/// be unusable beyond toy sizes.
pub fn fox_unreduced_burau(w: &BraidWord) -> UnreducedBurauMatrix {
    let mut m = UnreducedBurauMatrix::identity();
    for &l in w.letters() {
        let letter_matrix = fox_of_automorphism(&crate::artin::FreeAutomorphism::elementary(l));
        m = m.mul(&letter_matrix);
    }
    m
}

/// Basis of the invariant submodule {x : x1 + t·x2 + t²·x3 = 0} on which the
/// unreduced form restricts to the reduced representation:
/// f1 = t·e1 − e2 and f2 = e2 − t⁻¹·e3. The coordinates of a vector
/// x = a·f1 + b·f2 are a = t⁻¹·x1, b = −t·x3, with residual x2 + a − b = 0.
fn reduction_basis() -> [[LaurentPoly; 3]; 2] {
    [
        [poly(&[(1, 1)]), poly(&[(0, -1)]), LaurentPoly::zero()],
        [LaurentPoly::zero(), LaurentPoly::one(), poly(&[(-1, -1)])],
    ]
}

/// Restricts an unreduced matrix to the invariant rank-2 submodule,
/// producing the reduced Burau matrix. Fails with `ReductionMismatch` when an
/// image vector falls outside the submodule, which signals a convention bug
/// rather than bad input.
pub fn reduce_unreduced(m: &UnreducedBurauMatrix) -> Result<BurauMatrix, Error> {
    let basis = reduction_basis();
    let mut out = BurauMatrix::identity();
    for (j, f) in basis.iter().enumerate() {
        let img = m.apply_column(f);
        let a = img[0].mul_monomial(-1, &BigInt::from(1));
        let b = img[2].mul_monomial(1, &BigInt::from(-1));
        let residual = &(&img[1] + &a) - &b;
        if !residual.is_zero() {
            return Err(Error::ReductionMismatch);
        }
        out.entries[0][j] = a;
        out.entries[1][j] = b;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(s: &str) -> BraidWord {
        s.parse().unwrap()
    }

    #[test]
    fn generator_matrices() {
        assert_eq!(burau(&w("a")), sigma1_matrix());
        assert_eq!(
            burau(&w("ab")),
            BurauMatrix::new([
                [LaurentPoly::zero(), poly(&[(1, -1)])],
                [poly(&[(1, 1)]), poly(&[(1, -1)])],
            ])
        );
    }

    #[test]
    fn braid_relation() {
        assert_eq!(burau(&w("aba")), burau(&w("bab")));
    }

    #[test]
    fn full_twist_is_t_cubed_scalar() {
        let m = burau(&BraidWord::full_twist());
        let t3 = LaurentPoly::t_pow(3);
        assert_eq!(m.entries[0][0], t3);
        assert_eq!(m.entries[1][1], t3);
        assert!(m.entries[0][1].is_zero());
        assert!(m.entries[1][0].is_zero());
    }

    #[test]
    fn determinant_tracks_exponent_sum() {
        for s in ["a", "b", "AB", "abaaba", "aBaB"] {
            let word = w(s);
            let e = word.exponent_sum();
            let expected = if e >= 0 {
                let neg_t = poly(&[(1, -1)]);
                let mut acc = LaurentPoly::one();
                for _ in 0..e {
                    acc = &acc * &neg_t;
                }
                acc
            } else {
                let inv = poly(&[(-1, -1)]);
                let mut acc = LaurentPoly::one();
                for _ in 0..-e {
                    acc = &acc * &inv;
                }
                acc
            };
            assert_eq!(burau(&word).det(), expected, "word {s}");
        }
    }

    #[test]
    fn mod_two_generator() {
        let m = burau_mod_p(&w("a"), 2).unwrap();
        assert_eq!(
            m,
            BurauMatrix::new([
                [poly(&[(1, 1)]), LaurentPoly::one()],
                [LaurentPoly::zero(), LaurentPoly::one()],
            ])
        );
        assert!(burau_mod_p(&w(""), 5).unwrap().is_identity());
        assert_eq!(burau_mod_p(&w("a"), 1), Err(Error::BadModulus { modulus: 1 }));
    }

    #[test]
    fn integral_generators_are_s_and_t() {
        assert_eq!(integral_burau(&w("a")), IntMatrix2::from_i64([[1, 1], [0, 1]]));
        assert_eq!(integral_burau(&w("b")), IntMatrix2::from_i64([[1, 0], [-1, 1]]));
        assert_eq!(
            integral_burau(&BraidWord::full_twist()),
            IntMatrix2::from_i64([[-1, 0], [0, -1]])
        );
    }

    #[test]
    fn fox_matrix_of_sigma1() {
        let m = fox_unreduced_burau(&w("a"));
        let expected = UnreducedBurauMatrix::new([
            [poly(&[(0, 1), (1, -1)]), poly(&[(1, 1)]), LaurentPoly::zero()],
            [LaurentPoly::one(), LaurentPoly::zero(), LaurentPoly::zero()],
            [LaurentPoly::zero(), LaurentPoly::zero(), LaurentPoly::one()],
        ]);
        assert_eq!(m, expected);
        assert_eq!(fox_unreduced_burau(&w("")), UnreducedBurauMatrix::identity());
    }

    #[test]
    fn reduction_recovers_generators() {
        assert_eq!(reduce_unreduced(&fox_unreduced_burau(&w("a"))).unwrap(), sigma1_matrix());
        assert_eq!(reduce_unreduced(&fox_unreduced_burau(&w("b"))).unwrap(), sigma2_matrix());
    }

    fn arb_word(max_len: usize) -> impl Strategy<Value = BraidWord> {
        prop::collection::vec(0u8..4, 0..=max_len).prop_map(|v| {
            BraidWord::new(
                v.into_iter()
                    .map(|i| [Letter::A, Letter::A_INV, Letter::B, Letter::B_INV][i as usize])
                    .collect(),
            )
        })
    }

    proptest! {
        #[test]
        fn burau_is_multiplicative(u in arb_word(12), v in arb_word(12)) {
            prop_assert_eq!(burau(&u.concat(&v)), burau(&u).mul(&burau(&v)));
        }

        #[test]
        fn fox_is_multiplicative(u in arb_word(8), v in arb_word(8)) {
            prop_assert_eq!(
                fox_unreduced_burau(&u.concat(&v)),
                fox_unreduced_burau(&u).mul(&fox_unreduced_burau(&v))
            );
        }

        /// The letterwise product equals the Fox derivative of the fully
        /// composed automorphism, which is the defining description.
        #[test]
        fn fox_product_equals_direct_derivative(u in arb_word(10)) {
            prop_assert_eq!(
                fox_unreduced_burau(&u),
                fox_of_automorphism(&crate::artin::artin_image(&u))
            );
        }

        #[test]
        fn reduction_matches_direct_route(u in arb_word(16)) {
            prop_assert_eq!(reduce_unreduced(&fox_unreduced_burau(&u)).unwrap(), burau(&u));
        }

        #[test]
        fn inverse_word_gives_inverse_matrix(u in arb_word(12)) {
            let m = burau(&u);
            let inv = burau(&u.invert());
            prop_assert!(m.mul(&inv).is_identity());
            prop_assert_eq!(m.inverse().unwrap(), inv);
        }
    }
}
