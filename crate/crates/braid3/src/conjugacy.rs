//! Word and conjugacy problems for 3-braids, in linear time.
//!
//! The projection to PSL(2, Z) has central kernel generated by the full
//! twist, so two braid words are equal iff their projective images agree and
//! their exponent sums agree. Conjugacy follows the same pattern: two braids
//! are conjugate iff their Burau determinants agree — equivalently their
//! exponent sums, since det = (−t)^e — and their projective images are
//! conjugate in PSL(2, Z). Every Conjugate verdict carries an explicit
//! conjugator, lifted from the free-product rotation witness and then
//! verified with the word problem; the central ambiguity of the lift cancels
//! because conjugation by a central element is trivial.

use crate::error::Error;
use crate::modular::{braid_to_modular, modular_to_braid_lift, psl2_conjugate};
use crate::word::BraidWord;

/// The invariant that separated a NotConjugate pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeparatingInvariant {
    /// Exponent sums differ, hence so do Burau determinants.
    ExponentSum,
    /// Images in PSL(2, Z) lie in different conjugacy classes.
    Psl2Class,
}

/// Outcome of a conjugacy decision. A Conjugate verdict always carries a
/// verified witness χ with χ·ψ·χ⁻¹ = φ; a NotConjugate verdict names the
/// separating invariant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConjugacyVerdict {
    Conjugate { witness: BraidWord },
    NotConjugate { separating: SeparatingInvariant },
}

impl ConjugacyVerdict {
    pub fn is_conjugate(&self) -> bool {
        matches!(self, ConjugacyVerdict::Conjugate { .. })
    }

    pub fn witness(&self) -> Option<&BraidWord> {
        match self {
            ConjugacyVerdict::Conjugate { witness } => Some(witness),
            ConjugacyVerdict::NotConjugate { .. } => None,
        }
    }
}

/// True iff `u` and `v` spell the same element of the braid group: the
/// quotient image of u·v⁻¹ is trivial and its exponent sum is zero.
/// Linear time in the combined length.
pub fn word_problem_equal(u: &BraidWord, v: &BraidWord) -> bool {
    let quotient_trivial = braid_to_modular(u)
        .concat(&braid_to_modular(&v.invert()))
        .is_trivial();
    quotient_trivial && u.exponent_sum() == v.exponent_sum()
}

/// Decides whether φ and ψ are conjugate braids. Linear time in the combined
/// word length. On success the returned witness verifies exactly; a
/// verification failure is an internal bug and is surfaced as an error.
pub fn are_conjugate(phi: &BraidWord, psi: &BraidWord) -> Result<ConjugacyVerdict, Error> {
    if phi.exponent_sum() != psi.exponent_sum() {
        return Ok(ConjugacyVerdict::NotConjugate {
            separating: SeparatingInvariant::ExponentSum,
        });
    }
    let phi_mod = braid_to_modular(phi);
    let psi_mod = braid_to_modular(psi);
    match psl2_conjugate(&phi_mod, &psi_mod) {
        None => Ok(ConjugacyVerdict::NotConjugate {
            separating: SeparatingInvariant::Psl2Class,
        }),
        Some(conjugator) => {
            let witness = modular_to_braid_lift(&conjugator);
            let conjugated = witness.conjugate(psi);
            if !word_problem_equal(&conjugated, phi) {
                return Err(Error::WitnessVerificationFailed);
            }
            Ok(ConjugacyVerdict::Conjugate { witness })
        }
    }
}

/// Status of the reversal branch of the dichotomy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch2 {
    Holds,
    Fails,
    /// The exponent sum of ψ is not divisible by 3, so Δ^{2k} with
    /// e(ψ) = 3k does not exist.
    Inapplicable,
}

/// Report of the two-branch conjugacy dichotomy for a pair (φ, ψ):
/// either φ ~ ψ, or φ ~ Δ^{2k}·ψ̄⁻¹ where ψ̄ is ψ read backwards and
/// e(ψ) = 3k. When both branches fail, the Burau matrices of φ and ψ are
/// certified non-conjugate over GL(2, Z[t, t⁻¹]).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DichotomyReport {
    pub branch1: bool,
    pub branch2: Branch2,
    pub gl_conjugacy_refuted: bool,
    /// The comparison word Δ^{2k}·ψ̄⁻¹ when branch 2 applies.
    pub reversal_candidate: Option<BraidWord>,
}

/// Evaluates both branches of the dichotomy.
pub fn burau_dichotomy(phi: &BraidWord, psi: &BraidWord) -> Result<DichotomyReport, Error> {
    let branch1 = are_conjugate(phi, psi)?.is_conjugate();
    let e = psi.exponent_sum();
    let (branch2, candidate) = if e % 3 == 0 {
        let k = e / 3;
        let candidate = BraidWord::full_twist_pow(k).concat(&psi.reverse_bar().invert());
        let holds = are_conjugate(phi, &candidate)?.is_conjugate();
        (if holds { Branch2::Holds } else { Branch2::Fails }, Some(candidate))
    } else {
        (Branch2::Inapplicable, None)
    };
    Ok(DichotomyReport {
        branch1,
        branch2,
        gl_conjugacy_refuted: !branch1 && branch2 != Branch2::Holds,
        reversal_candidate: candidate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::Letter;
    use proptest::prelude::*;

    fn w(s: &str) -> BraidWord {
        s.parse().unwrap()
    }

    #[test]
    fn word_problem_examples() {
        assert!(word_problem_equal(&w("aba"), &w("bab")));
        assert!(!word_problem_equal(&w("a"), &w("b")));
        assert!(word_problem_equal(&w(""), &w("aA")));
        // Δ² is central.
        let delta2 = BraidWord::full_twist();
        for s in ["a", "Bab", "aabA"] {
            let word = w(s);
            assert!(word_problem_equal(
                &delta2.concat(&word),
                &word.concat(&delta2)
            ));
        }
    }

    #[test]
    fn generators_are_conjugate_with_verified_witness() {
        let verdict = are_conjugate(&w("a"), &w("b")).unwrap();
        let witness = verdict.witness().expect("σ1 ~ σ2");
        assert!(word_problem_equal(&witness.conjugate(&w("b")), &w("a")));
    }

    #[test]
    fn exponent_sum_separates() {
        assert_eq!(
            are_conjugate(&w("a"), &w("A")).unwrap(),
            ConjugacyVerdict::NotConjugate {
                separating: SeparatingInvariant::ExponentSum
            }
        );
    }

    #[test]
    fn psl2_class_separates() {
        // σ1² and σ1σ2 share exponent sum 2 but differ in PSL(2, Z):
        // σ1σ2 is periodic, σ1² is not.
        assert_eq!(
            are_conjugate(&w("aa"), &w("ab")).unwrap(),
            ConjugacyVerdict::NotConjugate {
                separating: SeparatingInvariant::Psl2Class
            }
        );
    }

    #[test]
    fn unknot_classes_pairwise_distinct() {
        for (x, y) in [("ab", "AB"), ("ab", "aB"), ("AB", "aB")] {
            assert!(!are_conjugate(&w(x), &w(y)).unwrap().is_conjugate());
        }
    }

    #[test]
    fn dichotomy_on_half_twist() {
        // φ = ψ = Δ: e = 3, k = 1, and Δ²·Δ̄⁻¹ = Δ, so both branches hold.
        let report = burau_dichotomy(&w("aba"), &w("aba")).unwrap();
        assert!(report.branch1);
        assert_eq!(report.branch2, Branch2::Holds);
        assert!(!report.gl_conjugacy_refuted);
    }

    #[test]
    fn dichotomy_inapplicable_branch() {
        let report = burau_dichotomy(&w("a"), &w("b")).unwrap();
        assert!(report.branch1);
        assert_eq!(report.branch2, Branch2::Inapplicable);
        assert!(!report.gl_conjugacy_refuted);
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
        fn conjugates_are_recognized(g in arb_word(10), phi in arb_word(10)) {
            let conj = g.conjugate(&phi);
            let verdict = are_conjugate(&conj, &phi).unwrap();
            prop_assert!(verdict.is_conjugate());
            let witness = verdict.witness().unwrap();
            prop_assert!(word_problem_equal(&witness.conjugate(&phi), &conj));
        }

        #[test]
        fn word_problem_matches_artin_oracle(u in arb_word(8)) {
            prop_assert_eq!(
                word_problem_equal(&u, &BraidWord::identity()),
                crate::artin::is_identity(&u)
            );
        }

        #[test]
        fn central_shift_preserves_dichotomy_branch2(psi in arb_word(6)) {
            let e = psi.exponent_sum();
            prop_assume!(e % 3 == 0);
            let k = e / 3;
            let phi = BraidWord::full_twist_pow(k).concat(&psi.reverse_bar().invert());
            let report = burau_dichotomy(&phi, &psi).unwrap();
            prop_assert_eq!(report.branch2, Branch2::Holds);
        }
    }
}
