//! Randomized and exhaustive property suites shared by the CLI `proptest`
//! command and the acceptance tests. Every suite takes an explicit seed and
//! reports failing cases with enough context to replay them.

use std::fmt::Write as _;

use braid3::artin::is_identity;
use braid3::burau::{burau, fox_unreduced_burau, integral_burau, reduce_unreduced, sigma1_matrix, sigma2_matrix};
use braid3::conjugacy::{are_conjugate, burau_dichotomy, word_problem_equal, Branch2};
use braid3::laurent::LaurentPoly;
use braid3::matrix::{BurauMatrix, IntMatrix2};
use braid3::moody::{has_unit_coefficient, moody, validate_turning_points};
use braid3::word::BraidWord;
use num::BigInt;

use crate::brute::ConjugateOrbit;
use crate::enumerate::for_each_reduced_word;
use crate::pl::pl_arc_oracle;
use crate::random;

/// Outcome of one suite run.
#[derive(Debug, Clone, Default)]
pub struct SuiteReport {
    pub cases: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn check(&mut self, cond: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !cond {
            self.failures.push(describe());
        }
    }

    pub fn merge(&mut self, other: SuiteReport) {
        self.cases += other.cases;
        self.failures.extend(other.failures);
    }

    pub fn summary(&self, name: &str) -> String {
        let mut s = String::new();
        let status = if self.ok() { "ok" } else { "FAILED" };
        let _ = write!(s, "{name}: {} cases, {status}", self.cases);
        for f in self.failures.iter().take(10) {
            let _ = write!(s, "\n  failure: {f}");
        }
        if self.failures.len() > 10 {
            let _ = write!(s, "\n  ... and {} more", self.failures.len() - 10);
        }
        s
    }
}

fn w(s: &str) -> BraidWord {
    s.parse().unwrap()
}

fn poly(terms: &[(i64, i64)]) -> LaurentPoly {
    LaurentPoly::from_terms(terms.iter().map(|&(e, c)| (e, BigInt::from(c))))
}

/// Exact generator matrices over Z[t, t⁻¹] and at t = −1.
pub fn generator_fidelity() -> SuiteReport {
    let mut rep = SuiteReport::default();
    let expected_s1 = BurauMatrix::new([
        [poly(&[(1, -1)]), poly(&[(0, 1)])],
        [LaurentPoly::zero(), poly(&[(0, 1)])],
    ]);
    let expected_s2 = BurauMatrix::new([
        [poly(&[(0, 1)]), LaurentPoly::zero()],
        [poly(&[(1, 1)]), poly(&[(1, -1)])],
    ]);
    rep.check(burau(&w("a")) == expected_s1 && sigma1_matrix() == expected_s1, || {
        format!("burau(a) = {}", burau(&w("a")))
    });
    rep.check(burau(&w("b")) == expected_s2 && sigma2_matrix() == expected_s2, || {
        format!("burau(b) = {}", burau(&w("b")))
    });
    rep.check(
        integral_burau(&w("a")) == IntMatrix2::from_i64([[1, 1], [0, 1]]),
        || format!("integral_burau(a) = {}", integral_burau(&w("a"))),
    );
    rep.check(
        integral_burau(&w("b")) == IntMatrix2::from_i64([[1, 0], [-1, 1]]),
        || format!("integral_burau(b) = {}", integral_burau(&w("b"))),
    );
    rep
}

/// Multiplicativity, the determinant law, the braid relation and the full
/// twist as a t³ scalar, over seeded random pairs.
pub fn representation_laws(pairs: usize, max_len: usize, seed: u64) -> SuiteReport {
    let mut rep = SuiteReport::default();
    rep.check(burau(&w("aba")) == burau(&w("bab")), || "braid relation".into());
    let twist = burau(&BraidWord::full_twist());
    let t3 = LaurentPoly::t_pow(3);
    rep.check(
        twist.entries[0][0] == t3
            && twist.entries[1][1] == t3
            && twist.entries[0][1].is_zero()
            && twist.entries[1][0].is_zero(),
        || format!("burau(Δ²) = {twist}"),
    );
    let mut rng = random::rng(seed);
    let neg_t = poly(&[(1, -1)]);
    let neg_t_inv = poly(&[(-1, -1)]);
    for i in 0..pairs {
        let len_u = (i * 7919) % (max_len + 1);
        let len_v = (i * 104729) % (max_len + 1);
        let u = random::random_braid_with(&mut rng, len_u);
        let v = random::random_braid_with(&mut rng, len_v);
        let mu = burau(&u);
        let mv = burau(&v);
        rep.check(burau(&u.concat(&v)) == mu.mul(&mv), || {
            format!("product rule at u={u} v={v}")
        });
        let e = u.exponent_sum();
        let mut expected = LaurentPoly::one();
        let f = if e >= 0 { &neg_t } else { &neg_t_inv };
        for _ in 0..e.unsigned_abs() {
            expected = &expected * f;
        }
        rep.check(mu.det() == expected, || format!("determinant law at u={u}"));
    }
    rep
}

/// The Fox-calculus route reproduces the direct matrices after reduction.
pub fn fox_oracle(words: usize, max_len: usize, seed: u64) -> SuiteReport {
    let mut rep = SuiteReport::default();
    let mut rng = random::rng(seed);
    for i in 0..words {
        let len = (i * 31 + 17) % (max_len + 1);
        let u = random::random_braid_with(&mut rng, len);
        match reduce_unreduced(&fox_unreduced_burau(&u)) {
            Ok(m) => rep.check(m == burau(&u), || format!("fox reduction differs at {u}")),
            Err(e) => rep.check(false, || format!("fox reduction failed at {u}: {e}")),
        }
    }
    rep
}

/// Desk-scale faithfulness: over every freely reduced word of length at
/// most `max_len`, the Burau matrix (and its mod-p reductions) is the
/// identity exactly for identity braids, and the linear-time word problem
/// agrees with the Artin oracle.
pub fn faithfulness_sweep(max_len: usize, moduli: &[i64]) -> SuiteReport {
    let mut rep = SuiteReport::default();
    let identity = BurauMatrix::identity();
    for_each_reduced_word(max_len, |word| {
        let trivial = is_identity(word);
        let wpe = word_problem_equal(word, &BraidWord::identity());
        rep.check(wpe == trivial, || format!("word problem disagrees at {word}"));
        let m = burau(word);
        if trivial {
            rep.check(m == identity, || format!("identity braid with nonidentity matrix: {word}"));
        } else {
            rep.check(m != identity, || format!("faithfulness fails at {word}"));
            for &p in moduli {
                let reduced = m.mod_p(p).expect("modulus > 1");
                rep.check(reduced != identity, || {
                    format!("mod-{p} faithfulness fails at {word}")
                });
            }
        }
    });
    rep
}

/// Structural sweep of the Moody data over all pure braids of length at
/// most `max_len`: nonzero polynomial with a ±1 coefficient whenever the
/// arcs cross, nonvanishing mod every listed modulus, and crossing-puncture
/// sequences passing the turning-point validator.
pub fn moody_sweep(max_len: usize, moduli: &[i64]) -> SuiteReport {
    let mut rep = SuiteReport::default();
    for_each_reduced_word(max_len, |word| {
        if !word.is_pure() {
            return;
        }
        let r = match moody(word) {
            Ok(r) => r,
            Err(e) => {
                rep.check(false, || format!("moody failed at {word}: {e}"));
                return;
            }
        };
        let turning = validate_turning_points(&r.cp_sequence);
        rep.check(turning.valid, || {
            format!("turning points invalid at {word}: {:?} {:?}", r.cp_sequence, turning.violations)
        });
        if r.crossings > 0 {
            rep.check(!r.polynomial.is_zero(), || format!("zero Moody polynomial at {word}"));
            rep.check(has_unit_coefficient(&r.polynomial), || {
                format!("no ±1 coefficient at {word}: {}", r.polynomial)
            });
            for &p in moduli {
                let reduced = r.polynomial.mod_p(p).expect("modulus > 1");
                rep.check(!reduced.is_zero(), || {
                    format!("Moody polynomial vanishes mod {p} at {word}")
                });
            }
        }
    });
    rep
}

/// Full-twist stability: prefixing Δ² shifts every crossing level uniformly,
/// so the polynomial only changes by a unit.
pub fn moody_twist_stability(samples: usize, seed: u64) -> SuiteReport {
    let mut rep = SuiteReport::default();
    let delta2 = BraidWord::full_twist();
    let mut rng = random::rng(seed);
    for i in 0..samples {
        let base = random::random_pure_braid_with(&mut rng, 2 + (i % 7));
        let plain = moody(&base).expect("pure braid");
        let shifted = moody(&delta2.concat(&base)).expect("still pure");
        rep.check(shifted.crossings == plain.crossings, || {
            format!("crossing count changed under Δ² at {base}")
        });
        rep.check(shifted.polynomial.eq_up_to_unit(&plain.polynomial), || {
            format!(
                "Δ²-stability fails at {base}: {} vs {}",
                shifted.polynomial, plain.polynomial
            )
        });
    }
    rep
}

/// Searches pure braids of length ≤ `max_len` for the polynomial 1 + t²,
/// up to a unit.
pub fn find_one_plus_t_squared(max_len: usize) -> Option<BraidWord> {
    let target = poly(&[(0, 1), (2, 1)]);
    let mut found: Option<BraidWord> = None;
    for_each_reduced_word(max_len, |word| {
        if found.is_some() || !word.is_pure() {
            return;
        }
        if let Ok(r) = moody(word) {
            if r.polynomial.eq_up_to_unit(&target) {
                found = Some(word.clone());
            }
        }
    });
    found
}

/// The geometric tracer agrees with the combinatorial crossing data on every
/// pure word of length ≤ `max_len`. Cases are pure and independent, so they
/// are sharded across threads; reports merge in case order.
pub fn pl_agreement_sweep(max_len: usize) -> SuiteReport {
    let mut words: Vec<BraidWord> = Vec::new();
    for_each_reduced_word(max_len, |word| {
        if word.is_pure() {
            words.push(word.clone());
        }
    });
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get()).min(16);
    let chunk = words.len().div_ceil(workers);
    let mut partials: Vec<(usize, SuiteReport)> = std::thread::scope(|scope| {
        let handles: Vec<_> = words
            .chunks(chunk.max(1))
            .enumerate()
            .map(|(idx, part)| scope.spawn(move || (idx, pl_agreement_chunk(part))))
            .collect();
        handles.into_iter().map(|h| h.join().expect("worker")).collect()
    });
    partials.sort_by_key(|(idx, _)| *idx);
    let mut rep = SuiteReport::default();
    for (_, part) in partials {
        rep.merge(part);
    }
    rep
}

fn pl_agreement_chunk(words: &[BraidWord]) -> SuiteReport {
    let mut rep = SuiteReport::default();
    for word in words {
        let alg = moody(word).expect("pure braid");
        match pl_arc_oracle(word) {
            Ok(trace) => {
                rep.check(trace.crossings == alg.crossings, || {
                    format!(
                        "crossing count differs at {word}: traced {} vs {}",
                        trace.crossings, alg.crossings
                    )
                });
                rep.check(trace.level_differences == alg.cp_sequence, || {
                    format!(
                        "level differences differ at {word}: traced {:?} vs {:?}",
                        trace.level_differences, alg.cp_sequence
                    )
                });
            }
            Err(e) => rep.check(false, || format!("tracer failed at {word}: {e}")),
        }
    }
    rep
}

/// Conjugacy agreement with brute force over all ordered pairs of words of
/// length ≤ `pair_len`, with brute-force conjugators bounded by
/// `conjugator_len`: a brute-force witness implies a Conjugate verdict, and
/// every Conjugate verdict carries a witness that verifies exactly.
pub fn conjugacy_vs_brute_force(pair_len: usize, conjugator_len: usize) -> SuiteReport {
    let mut rep = SuiteReport::default();
    let mut words: Vec<BraidWord> = Vec::new();
    for_each_reduced_word(pair_len, |word| words.push(word.clone()));
    for psi in &words {
        let orbit = ConjugateOrbit::new(psi, conjugator_len);
        for phi in &words {
            let verdict = are_conjugate(phi, psi).expect("decision");
            match orbit.witness_for(phi) {
                Some(g) => {
                    rep.check(word_problem_equal(&g.conjugate(psi), phi), || {
                        format!("brute witness fails verification: phi={phi} psi={psi} g={g}")
                    });
                    rep.check(verdict.is_conjugate(), || {
                        format!("solver misses brute-force conjugacy: phi={phi} psi={psi}")
                    });
                }
                None => {
                    // One-sided: absence of a bounded witness proves nothing.
                    rep.cases += 1;
                }
            }
            if let Some(witness) = verdict.witness() {
                rep.check(word_problem_equal(&witness.conjugate(psi), phi), || {
                    format!("solver witness fails verification: phi={phi} psi={psi}")
                });
            }
        }
    }
    rep
}

/// Named conjugacy-class fixtures: σ1 ~ σ2 with a verified witness, the
/// three unknot representatives pairwise split, and the (2,k) torus-link
/// pairs split for k = 2..6.
pub fn conjugacy_fixtures() -> SuiteReport {
    let mut rep = SuiteReport::default();
    let verdict = are_conjugate(&w("a"), &w("b")).expect("decision");
    match verdict.witness() {
        Some(witness) => rep.check(
            word_problem_equal(&witness.conjugate(&w("b")), &w("a")),
            || "σ1 ~ σ2 witness fails".into(),
        ),
        None => rep.check(false, || "σ1 ~ σ2 not recognized".into()),
    }
    for (x, y) in [("ab", "AB"), ("ab", "aB"), ("AB", "aB")] {
        let v = are_conjugate(&w(x), &w(y)).expect("decision");
        rep.check(!v.is_conjugate(), || format!("unknot classes merge: {x} vs {y}"));
    }
    for k in 2..=6usize {
        let torus = format!("{}b", "a".repeat(k));
        let mirror = format!("{}B", "a".repeat(k));
        let v = are_conjugate(&w(&torus), &w(&mirror)).expect("decision");
        rep.check(!v.is_conjugate(), || format!("torus classes merge at k={k}"));
    }
    rep
}

/// Conjugation invariance on seeded random pairs.
pub fn conjugacy_invariance(samples: usize, max_len: usize, seed: u64) -> SuiteReport {
    let mut rep = SuiteReport::default();
    let mut rng = random::rng(seed);
    for i in 0..samples {
        let phi = random::random_braid_with(&mut rng, i % (max_len + 1));
        let g = random::random_braid_with(&mut rng, (i * 3) % (max_len + 1));
        let conj = g.conjugate(&phi);
        match are_conjugate(&conj, &phi).expect("decision").witness() {
            Some(witness) => rep.check(
                word_problem_equal(&witness.conjugate(&phi), &conj),
                || format!("witness fails at phi={phi} g={g}"),
            ),
            None => rep.check(false, || format!("conjugate pair not recognized: phi={phi} g={g}")),
        }
    }
    rep
}

/// For seeded ψ with exponent sum divisible by 3, the pair
/// (Δ^{2k}·ψ̄⁻¹, ψ) always reports branch 2 of the dichotomy as holding.
pub fn dichotomy_reversal(samples: usize, seed: u64) -> SuiteReport {
    let mut rep = SuiteReport::default();
    let mut rng = random::rng(seed);
    let mut produced = 0usize;
    let mut len = 0usize;
    while produced < samples {
        let psi = random::random_braid_with(&mut rng, len % 24);
        len += 1;
        let e = psi.exponent_sum();
        if e % 3 != 0 {
            continue;
        }
        produced += 1;
        let k = e / 3;
        let phi = BraidWord::full_twist_pow(k).concat(&psi.reverse_bar().invert());
        let report = burau_dichotomy(&phi, &psi).expect("decision");
        rep.check(report.branch2 == Branch2::Holds, || {
            format!("branch2 fails at psi={psi}")
        });
    }
    rep
}

/// First pair (φ, ψ) with branch 2 holding and branch 1 failing, searching
/// ψ over freely reduced words of length ≤ `max_len` in enumeration order.
pub fn find_dichotomy_split(max_len: usize) -> Option<(BraidWord, BraidWord)> {
    let mut found: Option<(BraidWord, BraidWord)> = None;
    for_each_reduced_word(max_len, |psi| {
        if found.is_some() {
            return;
        }
        let e = psi.exponent_sum();
        if e % 3 != 0 {
            return;
        }
        let k = e / 3;
        let phi = BraidWord::full_twist_pow(k).concat(&psi.reverse_bar().invert());
        if !are_conjugate(&phi, psi).expect("decision").is_conjugate() {
            found = Some((phi, psi.clone()));
        }
    });
    found
}

/// Linear word problem against the Artin oracle plus centrality samples.
pub fn word_problem_suite(seed: u64) -> SuiteReport {
    let mut rep = SuiteReport::default();
    rep.check(word_problem_equal(&w("aba"), &w("bab")), || "braid relation".into());
    rep.check(!word_problem_equal(&w("a"), &w("b")), || "distinct generators".into());
    let delta2 = BraidWord::full_twist();
    let mut rng = random::rng(seed);
    for i in 0..50 {
        let word = random::random_braid_with(&mut rng, i % 16);
        rep.check(
            word_problem_equal(&delta2.concat(&word), &word.concat(&delta2)),
            || format!("centrality fails at {word}"),
        );
    }
    rep
}

/// The named suites reachable from the command line.
pub fn run_suite(name: &str, max_len: usize, seed: u64) -> Result<SuiteReport, String> {
    let mut rep = SuiteReport::default();
    match name {
        "burau" => {
            rep.merge(generator_fidelity());
            rep.merge(representation_laws(200, max_len.max(8), seed));
            rep.merge(fox_oracle(100, max_len.max(8), seed ^ 1));
            rep.merge(faithfulness_sweep(max_len.min(10), &[2, 3]));
        }
        "moody" => {
            rep.merge(moody_sweep(max_len.min(8), &[2, 3, 5]));
            rep.merge(moody_twist_stability(20, seed));
            rep.merge(pl_agreement_sweep(max_len.min(4)));
        }
        "conjugacy" => {
            rep.merge(conjugacy_fixtures());
            rep.merge(conjugacy_vs_brute_force(max_len.min(3), 6));
            rep.merge(conjugacy_invariance(100, max_len.max(8), seed));
            rep.merge(dichotomy_reversal(25, seed ^ 2));
            rep.merge(word_problem_suite(seed ^ 3));
        }
        "all" => {
            rep.merge(run_suite("burau", max_len, seed)?);
            rep.merge(run_suite("moody", max_len, seed)?);
            rep.merge(run_suite("conjugacy", max_len, seed)?);
        }
        other => return Err(format!("unknown suite: {other}")),
    }
    Ok(rep)
}
