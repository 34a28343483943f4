//! PSL(2, Z) as the free product of cyclic groups of orders 2 and 3.
//!
//! Elements are alternating words in A (order 2) and B, B² (order 3), stored
//! in free-product normal form. The 3-strand braid group surjects onto
//! PSL(2, Z) with central kernel generated by the full twist, so word and
//! conjugacy problems for braids reduce to linear-time computations on these
//! syllable sequences; matrices are never used on that path because their
//! entries grow exponentially with word length.
//!
//! Concretely A = [[0, −1], [1, 0]] and B = [[0, −1], [1, 1]], which makes
//! S = AB and T = BA the projective images of σ1 and σ2.

use std::fmt;

use crate::matrix::IntMatrix2;
use crate::word::{BraidWord, Gen, Letter};

/// A syllable of the free product: the involution A or a power of the
/// order-3 generator B.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Syllable {
    A,
    /// B^k with k in {1, 2}.
    B(u8),
}

impl Syllable {
    fn same_factor(self, other: Syllable) -> bool {
        matches!(
            (self, other),
            (Syllable::A, Syllable::A) | (Syllable::B(_), Syllable::B(_))
        )
    }

    pub fn inverse(self) -> Syllable {
        match self {
            Syllable::A => Syllable::A,
            Syllable::B(k) => Syllable::B(3 - k),
        }
    }

    /// Merges two syllables of the same factor; None when they cancel.
    fn merge(self, other: Syllable) -> Option<Syllable> {
        match (self, other) {
            (Syllable::A, Syllable::A) => None,
            (Syllable::B(i), Syllable::B(j)) => match (i + j) % 3 {
                0 => None,
                k => Some(Syllable::B(k)),
            },
            _ => unreachable!("merge called across factors"),
        }
    }
}

/// A word of PSL(2, Z) in free-product normal form: alternating syllables,
/// none trivial. The normal form is unique, so equality of values is
/// equality in the group.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ModularWord {
    syllables: Vec<Syllable>,
}

impl ModularWord {
    pub fn identity() -> Self {
        ModularWord::default()
    }

    pub fn from_syllables(raw: impl IntoIterator<Item = Syllable>) -> Self {
        let mut w = ModularWord::identity();
        for s in raw {
            w.push(s);
        }
        w
    }

    /// Appends one syllable, merging within factors to keep normal form.
    pub fn push(&mut self, s: Syllable) {
        match self.syllables.last() {
            Some(&top) if top.same_factor(s) => {
                self.syllables.pop();
                if let Some(merged) = top.merge(s) {
                    self.syllables.push(merged);
                }
            }
            _ => self.syllables.push(s),
        }
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn len(&self) -> usize {
        self.syllables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.is_empty()
    }

    pub fn concat(&self, other: &ModularWord) -> ModularWord {
        let mut out = self.clone();
        for &s in &other.syllables {
            out.push(s);
        }
        out
    }

    pub fn invert(&self) -> ModularWord {
        // Reversing an alternating word keeps it alternating, so no merging
        // can occur; build directly.
        ModularWord {
            syllables: self.syllables.iter().rev().map(|s| s.inverse()).collect(),
        }
    }

    /// self · inner · self⁻¹.
    pub fn conjugate(&self, inner: &ModularWord) -> ModularWord {
        self.concat(inner).concat(&self.invert())
    }

    /// A word is cyclically reduced when its first and last syllables lie in
    /// different factors, or it has at most one syllable.
    pub fn is_cyclically_reduced(&self) -> bool {
        self.len() <= 1 || !self.syllables[0].same_factor(*self.syllables.last().unwrap())
    }
}

impl fmt::Display for ModularWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "1");
        }
        for (i, s) in self.syllables.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            match s {
                Syllable::A => write!(f, "A")?,
                Syllable::B(1) => write!(f, "B")?,
                Syllable::B(k) => write!(f, "B^{k}")?,
            }
        }
        Ok(())
    }
}

/// The projective image of a braid word, by letterwise substitution
/// σ1 ↦ AB, σ1⁻¹ ↦ B²A, σ2 ↦ BA, σ2⁻¹ ↦ AB², reduced on the fly.
/// Linear time in the word length.
pub fn braid_to_modular(w: &BraidWord) -> ModularWord {
    let mut out = ModularWord::identity();
    for &l in w.letters() {
        match (l.gen, l.inverse) {
            (Gen::Sigma1, false) => {
                out.push(Syllable::A);
                out.push(Syllable::B(1));
            }
            (Gen::Sigma1, true) => {
                out.push(Syllable::B(2));
                out.push(Syllable::A);
            }
            (Gen::Sigma2, false) => {
                out.push(Syllable::B(1));
                out.push(Syllable::A);
            }
            (Gen::Sigma2, true) => {
                out.push(Syllable::A);
                out.push(Syllable::B(2));
            }
        }
    }
    out
}

/// Splits `m` as prefix · core · prefix⁻¹ with the core cyclically reduced.
/// Linear time: every step removes at least one syllable and touches only
/// the ends of the word.
pub fn cyclic_reduce(m: &ModularWord) -> (ModularWord, ModularWord) {
    let mut deque: std::collections::VecDeque<Syllable> = m.syllables.iter().copied().collect();
    let mut prefix: Vec<Syllable> = Vec::new();
    // m = f · rest · l with f, l in the same factor:
    // m = f · (rest · (l·f)) · f⁻¹.
    while deque.len() >= 2 {
        let first = *deque.front().unwrap();
        let last = *deque.back().unwrap();
        if !first.same_factor(last) {
            break;
        }
        deque.pop_front();
        deque.pop_back();
        // Successive peeled fronts alternate factors, so the prefix is
        // already in normal form.
        prefix.push(first);
        if let Some(merged) = last.merge(first) {
            // The merged syllable cannot merge further: its new neighbour
            // came from the other factor.
            deque.push_back(merged);
        }
    }
    let core = ModularWord {
        syllables: deque.into_iter().collect(),
    };
    (core, ModularWord { syllables: prefix })
}

/// Decides conjugacy in PSL(2, Z). On success returns a conjugator g with
/// u = g · v · g⁻¹. Total time linear in the combined word length.
///
/// Cyclically reduced cores of length ≥ 2 are conjugate iff one is a cyclic
/// rotation of the other (found here by linear-time string matching on the
/// doubled syllable sequence); cores of length ≤ 1 are torsion or trivial
/// and are conjugate iff equal, both factors being abelian.
pub fn psl2_conjugate(u: &ModularWord, v: &ModularWord) -> Option<ModularWord> {
    let (core_u, prefix_u) = cyclic_reduce(u);
    let (core_v, prefix_v) = cyclic_reduce(v);
    if core_u.len() != core_v.len() {
        return None;
    }
    if core_u.len() <= 1 {
        if core_u != core_v {
            return None;
        }
        return Some(prefix_u.concat(&prefix_v.invert()));
    }
    let r = rotation_offset(core_v.syllables(), core_u.syllables())?;
    // core_u = y⁻¹ · core_v · y for y = first r syllables of core_v.
    let y = ModularWord {
        syllables: core_v.syllables()[..r].to_vec(),
    };
    Some(prefix_u.concat(&y.invert()).concat(&prefix_v.invert()))
}

/// Finds r such that rotating `base` left by r syllables yields `target`,
/// via Knuth-Morris-Pratt on base doubled. Linear time.
fn rotation_offset(base: &[Syllable], target: &[Syllable]) -> Option<usize> {
    let n = base.len();
    debug_assert_eq!(n, target.len());
    if n == 0 {
        return Some(0);
    }
    // Failure function of the pattern (target).
    let mut fail = vec![0usize; n];
    let mut k = 0;
    for i in 1..n {
        while k > 0 && target[i] != target[k] {
            k = fail[k - 1];
        }
        if target[i] == target[k] {
            k += 1;
        }
        fail[i] = k;
    }
    // Scan base · base (without the final duplicate position).
    let mut m = 0;
    for i in 0..(2 * n - 1) {
        let c = base[i % n];
        while m > 0 && c != target[m] {
            m = fail[m - 1];
        }
        if c == target[m] {
            m += 1;
        }
        if m == n {
            return Some((i + 1 - n) % n);
        }
    }
    None
}

/// The canonical integral matrix of a modular word (product of A and B
/// matrices, sign-normalized so the first nonzero of top-left, top-right,
/// bottom-left is positive).
pub fn modular_to_matrix(m: &ModularWord) -> IntMatrix2 {
    let a = IntMatrix2::from_i64([[0, -1], [1, 0]]);
    let b = IntMatrix2::from_i64([[0, -1], [1, 1]]);
    let b2 = b.mul(&b);
    let mut out = IntMatrix2::identity();
    for s in &m.syllables {
        let factor = match s {
            Syllable::A => &a,
            Syllable::B(1) => &b,
            Syllable::B(_) => &b2,
        };
        out = out.mul(factor);
    }
    out.projective_canonical()
}

/// A braid word mapping onto `m`: A lifts to σ1σ2σ1 (= Δ, projectively A)
/// and B to σ1σ2σ1σ1. The lift is one of many preimages, all differing by
/// central full twists.
pub fn modular_to_braid_lift(m: &ModularWord) -> BraidWord {
    let mut out = BraidWord::identity();
    let aba = [Letter::A, Letter::B, Letter::A];
    let abaa = [Letter::A, Letter::B, Letter::A, Letter::A];
    for s in &m.syllables {
        match s {
            Syllable::A => {
                for &l in &aba {
                    out.push(l);
                }
            }
            Syllable::B(k) => {
                for _ in 0..*k {
                    for &l in &abaa {
                        out.push(l);
                    }
                }
            }
        }
    }
    out
}
