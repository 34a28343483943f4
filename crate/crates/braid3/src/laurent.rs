//! Exact arithmetic in Z[t, t⁻¹].
//!
//! Polynomials are stored sparsely as exponent → coefficient maps with
//! arbitrary-precision coefficients; matrix entries grow exponentially in the
//! braid word length, so fixed-width integers are never acceptable. Zero
//! coefficients are purged by every operation and the canonical textual form
//! lists terms in increasing exponent.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::bigint::Sign;
use num::{BigInt, One, Signed, Zero};

use crate::error::Error;

/// A Laurent polynomial over the integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(0, BigInt::one())
    }

    /// The monomial c·t^k; the zero polynomial if c = 0.
    pub fn monomial(exp: i64, coef: impl Into<BigInt>) -> Self {
        let coef = coef.into();
        let mut terms = BTreeMap::new();
        if !coef.is_zero() {
            terms.insert(exp, coef);
        }
        LaurentPoly { terms }
    }

    /// t^k.
    pub fn t_pow(exp: i64) -> Self {
        LaurentPoly::monomial(exp, 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        LaurentPoly::monomial(0, c)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, BigInt)>) -> Self {
        let mut map: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (e, c) in terms {
            let entry = map.entry(e).or_insert_with(BigInt::zero);
            *entry += c;
            if entry.is_zero() {
                map.remove(&e);
            }
        }
        LaurentPoly { terms: map }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coefficient(0).is_one()
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn coefficient(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Multiplies by the monomial c·t^k.
    pub fn mul_monomial(&self, exp: i64, coef: &BigInt) -> LaurentPoly {
        if coef.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e + exp, c * coef)).collect(),
        }
    }

    /// Evaluation at t = −1.
    pub fn eval_neg_one(&self) -> BigInt {
        let mut acc = BigInt::zero();
        for (e, c) in &self.terms {
            if e.rem_euclid(2) == 0 {
                acc += c;
            } else {
                acc -= c;
            }
        }
        acc
    }

    /// Coefficientwise reduction into {0, .., modulus−1}; the modulus is any
    /// integer greater than 1, not necessarily prime.
    pub fn mod_p(&self, modulus: i64) -> Result<LaurentPoly, Error> {
        if modulus <= 1 {
            return Err(Error::BadModulus { modulus });
        }
        let m = BigInt::from(modulus);
        Ok(LaurentPoly::from_terms(
            self.terms.iter().map(|(&e, c)| (e, c.mod_floor(&m))),
        ))
    }

    /// True iff `other` = ±t^k · `self` for some integer k. The sign freedom
    /// keeps comparisons robust against orientation conventions.
    pub fn eq_up_to_unit(&self, other: &LaurentPoly) -> bool {
        match (self.min_exp(), other.min_exp()) {
            (None, None) => true,
            (None, _) | (_, None) => false,
            (Some(a), Some(b)) => {
                let shift = b - a;
                if self.terms.len() != other.terms.len() {
                    return false;
                }
                let direct = self
                    .terms
                    .iter()
                    .all(|(&e, c)| other.terms.get(&(e + shift)) == Some(c));
                if direct {
                    return true;
                }
                self.terms
                    .iter()
                    .all(|(&e, c)| other.terms.get(&(e + shift)).map(Neg::neg).as_ref() == Some(c))
            }
        }
    }

    /// If this polynomial is a unit ±t^k, returns its inverse ±t^(−k).
    pub fn unit_inverse(&self) -> Option<LaurentPoly> {
        if self.terms.len() != 1 {
            return None;
        }
        let (&e, c) = self.terms.iter().next().unwrap();
        if c.is_one() {
            Some(LaurentPoly::t_pow(-e))
        } else if (-c).is_one() {
            Some(LaurentPoly::monomial(-e, -1))
        } else {
            None
        }
    }

    /// True iff some coefficient is +1 or −1.
    pub fn has_unit_coefficient(&self) -> bool {
        self.terms.values().any(|c| c.is_one() || (-c).is_one())
    }
}

trait ModFloor {
    fn mod_floor(&self, m: &BigInt) -> BigInt;
}

impl ModFloor for BigInt {
    fn mod_floor(&self, m: &BigInt) -> BigInt {
        let r = self % m;
        if r.is_negative() {
            r + m
        } else {
            r
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut terms = self.terms.clone();
        for (&e, c) in &rhs.terms {
            let entry = terms.entry(e).or_insert_with(BigInt::zero);
            *entry += c;
            if entry.is_zero() {
                terms.remove(&e);
            }
        }
        LaurentPoly { terms }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut terms: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &rhs.terms {
                let e = e1 + e2;
                let entry = terms.entry(e).or_insert_with(BigInt::zero);
                *entry += c1 * c2;
                if entry.is_zero() {
                    terms.remove(&e);
                }
            }
        }
        LaurentPoly { terms }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (&e, c)) in self.terms.iter().enumerate() {
            let negative = c.sign() == Sign::Minus;
            let mag = c.magnitude();
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_coef = mag.is_one();
            match (e, unit_coef) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{mag}t")?,
                (_, true) => write!(f, "t^{e}")?,
                (_, false) => write!(f, "{mag}t^{e}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|&(e, c)| (e, BigInt::from(c))))
    }

    #[test]
    fn mul_examples() {
        // (1 + t)(1 − t) = 1 − t²
        assert_eq!(&p(&[(0, 1), (1, 1)]) * &p(&[(0, 1), (1, -1)]), p(&[(0, 1), (2, -1)]));
        // t⁻¹ · t = 1
        assert_eq!(&LaurentPoly::t_pow(-1) * &LaurentPoly::t_pow(1), LaurentPoly::one());
        // (−t)³ = −t³
        let neg_t = p(&[(1, -1)]);
        assert_eq!(&(&neg_t * &neg_t) * &neg_t, p(&[(3, -1)]));
    }

    #[test]
    fn eq_up_to_unit_examples() {
        assert!(p(&[(0, 1), (2, 1)]).eq_up_to_unit(&p(&[(3, 1), (5, 1)])));
        assert!(p(&[(0, 1), (1, 1)]).eq_up_to_unit(&p(&[(-2, -1), (-1, -1)])));
        assert!(!p(&[(0, 1), (1, 1)]).eq_up_to_unit(&p(&[(0, 1), (2, 1)])));
    }

    #[test]
    fn mod_p_examples() {
        assert_eq!(p(&[(0, 2), (1, 3)]).mod_p(2).unwrap(), p(&[(1, 1)]));
        assert_eq!(p(&[(-1, 4)]).mod_p(2).unwrap(), LaurentPoly::zero());
        assert_eq!(p(&[(0, 1), (2, 6)]).mod_p(6).unwrap(), LaurentPoly::one());
        assert_eq!(p(&[(0, -1)]).mod_p(5).unwrap(), p(&[(0, 4)]));
        assert_eq!(LaurentPoly::one().mod_p(1), Err(Error::BadModulus { modulus: 1 }));
    }

    #[test]
    fn unit_inverse_examples() {
        assert_eq!(p(&[(2, -1)]).unit_inverse(), Some(p(&[(-2, -1)])));
        assert_eq!(LaurentPoly::one().unit_inverse(), Some(LaurentPoly::one()));
        assert_eq!(p(&[(0, 2)]).unit_inverse(), None);
        assert_eq!(p(&[(0, 1), (1, 1)]).unit_inverse(), None);
    }

    #[test]
    fn display_orders_by_increasing_exponent() {
        assert_eq!(p(&[(2, -3), (-1, 1), (0, 2)]).to_string(), "t^-1 + 2 - 3t^2");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(p(&[(1, 1)]).to_string(), "t");
        assert_eq!(p(&[(0, -1), (1, -1)]).to_string(), "-1 - t");
    }

    #[test]
    fn eval_neg_one() {
        assert_eq!(p(&[(0, 1), (1, 1)]).eval_neg_one(), BigInt::from(0));
        assert_eq!(p(&[(3, 1)]).eval_neg_one(), BigInt::from(-1));
        assert_eq!(p(&[(-2, 5), (1, 2)]).eval_neg_one(), BigInt::from(3));
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec(((-6i64..7), (-9i64..10)), 0..6)
            .prop_map(|v| LaurentPoly::from_terms(v.into_iter().map(|(e, c)| (e, BigInt::from(c)))))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &LaurentPoly::one(), a.clone());
            prop_assert_eq!(&a - &a, LaurentPoly::zero());
        }

        #[test]
        fn unit_equivalence_is_equivalence(a in arb_poly(), b in arb_poly(), k in -5i64..6, s in prop::bool::ANY) {
            prop_assert!(a.eq_up_to_unit(&a));
            let unit = LaurentPoly::monomial(k, if s { 1 } else { -1 });
            let shifted = &a * &unit;
            prop_assert!(a.eq_up_to_unit(&shifted));
            prop_assert!(shifted.eq_up_to_unit(&a));
            if a.eq_up_to_unit(&b) {
                prop_assert!(shifted.eq_up_to_unit(&b));
            }
        }

        #[test]
        fn mod_p_is_coefficientwise(a in arb_poly(), m in 2i64..8) {
            let r = a.mod_p(m).unwrap();
            for (e, c) in a.terms() {
                let reduced = r.coefficient(e);
                prop_assert!(reduced >= BigInt::from(0) && reduced < BigInt::from(m));
                prop_assert_eq!((c - &reduced) % m, BigInt::from(0));
            }
        }
    }
}
