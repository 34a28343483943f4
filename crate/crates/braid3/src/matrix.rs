//! 2×2 matrices over Z[t, t⁻¹] and over Z, plus the 3×3 unreduced form.

use std::fmt;

use num::{BigInt, Signed};

use crate::error::Error;
use crate::laurent::LaurentPoly;

/// A 2×2 matrix over Z[t, t⁻¹]; the value type of the reduced Burau
/// representation. Determinants of representation images are units ±t^k.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BurauMatrix {
    pub entries: [[LaurentPoly; 2]; 2],
}

impl BurauMatrix {
    pub fn new(entries: [[LaurentPoly; 2]; 2]) -> Self {
        BurauMatrix { entries }
    }

    pub fn identity() -> Self {
        BurauMatrix::new([
            [LaurentPoly::one(), LaurentPoly::zero()],
            [LaurentPoly::zero(), LaurentPoly::one()],
        ])
    }

    pub fn is_identity(&self) -> bool {
        *self == BurauMatrix::identity()
    }

    pub fn mul(&self, other: &BurauMatrix) -> BurauMatrix {
        let mut out = BurauMatrix::default();
        for i in 0..2 {
            for j in 0..2 {
                out.entries[i][j] = &(&self.entries[i][0] * &other.entries[0][j])
                    + &(&self.entries[i][1] * &other.entries[1][j]);
            }
        }
        out
    }

    pub fn det(&self) -> LaurentPoly {
        &(&self.entries[0][0] * &self.entries[1][1])
            - &(&self.entries[0][1] * &self.entries[1][0])
    }

    /// Exact inverse via the adjugate divided by the unit determinant.
    /// Returns None when the determinant is not a unit of Z[t, t⁻¹].
    pub fn inverse(&self) -> Option<BurauMatrix> {
        let det_inv = self.det().unit_inverse()?;
        let adj = [
            [self.entries[1][1].clone(), -&self.entries[0][1]],
            [-&self.entries[1][0], self.entries[0][0].clone()],
        ];
        let mut out = BurauMatrix::default();
        for i in 0..2 {
            for j in 0..2 {
                out.entries[i][j] = &adj[i][j] * &det_inv;
            }
        }
        Some(out)
    }

    pub fn mod_p(&self, modulus: i64) -> Result<BurauMatrix, Error> {
        let mut out = BurauMatrix::default();
        for i in 0..2 {
            for j in 0..2 {
                out.entries[i][j] = self.entries[i][j].mod_p(modulus)?;
            }
        }
        Ok(out)
    }

    /// Entrywise evaluation at t = −1.
    pub fn eval_neg_one(&self) -> IntMatrix2 {
        let e = |i: usize, j: usize| self.entries[i][j].eval_neg_one();
        IntMatrix2::new([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }
}

impl fmt::Display for BurauMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            self.entries[0][0], self.entries[0][1], self.entries[1][0], self.entries[1][1]
        )
    }
}

/// A 2×2 integer matrix; the value type of the integral (t = −1) Burau
/// representation, whose images have determinant ±1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntMatrix2 {
    pub entries: [[BigInt; 2]; 2],
}

impl IntMatrix2 {
    pub fn new(entries: [[BigInt; 2]; 2]) -> Self {
        IntMatrix2 { entries }
    }

    pub fn from_i64(entries: [[i64; 2]; 2]) -> Self {
        IntMatrix2::new(entries.map(|row| row.map(BigInt::from)))
    }

    pub fn identity() -> Self {
        IntMatrix2::from_i64([[1, 0], [0, 1]])
    }

    pub fn mul(&self, other: &IntMatrix2) -> IntMatrix2 {
        let mut out = IntMatrix2::default();
        for i in 0..2 {
            for j in 0..2 {
                out.entries[i][j] = &self.entries[i][0] * &other.entries[0][j]
                    + &self.entries[i][1] * &other.entries[1][j];
            }
        }
        out
    }

    pub fn det(&self) -> BigInt {
        &self.entries[0][0] * &self.entries[1][1] - &self.entries[0][1] * &self.entries[1][0]
    }

    pub fn neg(&self) -> IntMatrix2 {
        IntMatrix2::new([
            [-&self.entries[0][0], -&self.entries[0][1]],
            [-&self.entries[1][0], -&self.entries[1][1]],
        ])
    }

    /// The projective representative with the first nonzero entry of
    /// (top-left, top-right, bottom-left) positive.
    pub fn projective_canonical(&self) -> IntMatrix2 {
        let probe = [&self.entries[0][0], &self.entries[0][1], &self.entries[1][0]];
        for e in probe {
            if e.is_positive() {
                return self.clone();
            }
            if e.is_negative() {
                return self.neg();
            }
        }
        self.clone()
    }

    /// Equality in PGL(2): equal up to a global sign.
    pub fn projectively_equal(&self, other: &IntMatrix2) -> bool {
        self.projective_canonical() == other.projective_canonical()
    }
}

impl fmt::Display for IntMatrix2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            self.entries[0][0], self.entries[0][1], self.entries[1][0], self.entries[1][1]
        )
    }
}

/// A 3×3 matrix over Z[t, t⁻¹]. Carrier of the unreduced (Magnus/Fox) form
/// of the representation, used as a cross-check oracle only.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct UnreducedBurauMatrix {
    pub entries: [[LaurentPoly; 3]; 3],
}

impl UnreducedBurauMatrix {
    pub fn new(entries: [[LaurentPoly; 3]; 3]) -> Self {
        UnreducedBurauMatrix { entries }
    }

    pub fn identity() -> Self {
        let mut out = UnreducedBurauMatrix::default();
        for (i, row) in out.entries.iter_mut().enumerate() {
            row[i] = LaurentPoly::one();
        }
        out
    }

    pub fn mul(&self, other: &UnreducedBurauMatrix) -> UnreducedBurauMatrix {
        let mut out = UnreducedBurauMatrix::default();
        for i in 0..3 {
            for j in 0..3 {
                let mut acc = LaurentPoly::zero();
                for (k, other_row) in other.entries.iter().enumerate() {
                    acc = &acc + &(&self.entries[i][k] * &other_row[j]);
                }
                out.entries[i][j] = acc;
            }
        }
        out
    }

    /// The image of the column vector with the given Laurent coordinates.
    pub fn apply_column(&self, v: &[LaurentPoly; 3]) -> [LaurentPoly; 3] {
        let mut out = [LaurentPoly::zero(), LaurentPoly::zero(), LaurentPoly::zero()];
        for (i, row) in self.entries.iter().enumerate() {
            let mut acc = LaurentPoly::zero();
            for (k, vk) in v.iter().enumerate() {
                acc = &acc + &(&row[k] * vk);
            }
            out[i] = acc;
        }
        out
    }
}

impl fmt::Display for UnreducedBurauMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[{}, {}, {}]", row[0], row[1], row[2])?;
        }
        write!(f, "]")
    }
}
