//! Exhaustive and sampled verification sweeps over cyclic words.
//!
//! Every suite maps a fixed, deterministically ordered list of inputs through
//! pure checks (in parallel when configured) and folds the results into
//! [`Tally`] values, so a report does not depend on the worker count.

mod enumerate;
mod report;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::seq::IndexedRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{self, FormalSum};
use crate::error::{Error, Result};
use crate::exec::map_ordered;
use crate::ordering;
use crate::pairing::{self, PairClass};
use crate::topology;
use crate::words::{Alphabet, CyclicWord};

pub use enumerate::{enumerate_cyclic, enumerate_primitive, CyclicWords};
pub use report::{CheckReport, SweepReport, Tally};

pub const SCHEMA: &str = "goldman/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    Table1,
    Counting,
    Jacobi,
    Antisym,
    PowEquiv,
    SignClassConst,
    SpliceClassConst,
    AlphabetRotation,
}

impl Check {
    pub const ALL: [Check; 8] = [
        Check::Table1,
        Check::Counting,
        Check::Jacobi,
        Check::Antisym,
        Check::PowEquiv,
        Check::SignClassConst,
        Check::SpliceClassConst,
        Check::AlphabetRotation,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Table1 => "table1",
            Check::Counting => "counting",
            Check::Jacobi => "jacobi",
            Check::Antisym => "antisym",
            Check::PowEquiv => "pow_equiv",
            Check::SignClassConst => "sign_class_const",
            Check::SpliceClassConst => "splice_class_const",
            Check::AlphabetRotation => "alphabet_rotation",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Parse {
                token: s.to_owned(),
                reason: "unknown check",
            })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepConfig {
    pub alphabet: Alphabet,
    /// Word length bound for the `table1` and `counting` sweeps.
    pub max_len: usize,
    pub checks: BTreeSet<Check>,
    /// Exponent pairs `(p, q)` for the counting sweep.
    pub exponent_pairs: Vec<(i64, i64)>,
    /// `0` uses every core, `1` runs sequentially.
    pub workers: usize,
    /// Word length bound for antisymmetry and power-form equivalence.
    pub pair_len: usize,
    /// Word length bound for class-constancy and alphabet-rotation checks.
    pub class_len: usize,
    pub jacobi_len: usize,
    pub jacobi_samples: usize,
    pub rotation_samples: usize,
    /// Largest exponent in the power-form equivalence check.
    pub max_power: usize,
    pub seed: u64,
}

impl SweepConfig {
    pub fn new(alphabet: Alphabet, max_len: usize) -> Self {
        SweepConfig {
            alphabet,
            max_len,
            checks: Check::ALL.into_iter().collect(),
            exponent_pairs: vec![(1, 3), (2, 3), (3, 4)],
            workers: 0,
            pair_len: 6,
            class_len: 5,
            jacobi_len: 5,
            jacobi_samples: 1000,
            rotation_samples: 100,
            max_power: 3,
            seed: 0x601d_3a4e,
        }
    }

    pub fn with_checks(mut self, checks: impl IntoIterator<Item = Check>) -> Self {
        self.checks = checks.into_iter().collect();
        self
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_len == 0 {
            return Err(Error::Precondition("max_len must be at least 1".into()));
        }
        if self.checks.is_empty() {
            return Err(Error::Precondition("no checks selected".into()));
        }
        if self.checks.contains(&Check::Counting) {
            for &(p, q) in &self.exponent_pairs {
                if p < 1 || q < 1 || p == q || p.max(q) < 3 {
                    return Err(Error::Precondition(format!(
                        "exponent pair ({p}, {q}) needs distinct positive entries, one at least 3"
                    )));
                }
            }
        }
        Ok(())
    }
}

fn failed(e: Error) -> Tally {
    Tally::fail(format!("error: {e}"))
}

/// Runs `body`, turning an error into a single failed tally.
fn guard(body: impl FnOnce() -> Result<Tally>) -> Tally {
    body().unwrap_or_else(failed)
}

fn fold_columns<const N: usize>(rows: Vec<[Tally; N]>) -> [Tally; N] {
    rows.into_iter().fold(std::array::from_fn(|_| Tally::default()), |acc, row| {
        let mut acc = acc;
        for (slot, t) in acc.iter_mut().zip(row) {
            *slot = std::mem::take(slot).merge(t);
        }
        acc
    })
}

/// Runs every configured suite.
pub fn run(cfg: &SweepConfig) -> Result<SweepReport> {
    cfg.validate()?;
    let start = Instant::now();
    let mut checks = Vec::new();
    let mut words = 0;
    for check in &cfg.checks {
        let (mut reports, examined) = match check {
            Check::Table1 => table1_reports(cfg),
            Check::Counting => counting_reports(cfg),
            Check::Jacobi => jacobi_reports(cfg),
            Check::Antisym => antisym_reports(cfg),
            Check::PowEquiv => pow_equiv_reports(cfg),
            Check::SignClassConst => sign_class_reports(cfg),
            Check::SpliceClassConst => splice_class_reports(cfg),
            Check::AlphabetRotation => rotation_reports(cfg),
        };
        checks.append(&mut reports);
        words += examined;
    }
    Ok(SweepReport {
        schema: SCHEMA,
        checks,
        words_examined: words,
        wall_time: start.elapsed(),
    })
}

fn finish(reports: Vec<CheckReport>, examined: u64, start: Instant) -> SweepReport {
    SweepReport {
        schema: SCHEMA,
        checks: reports,
        words_examined: examined,
        wall_time: start.elapsed(),
    }
}

/// The empirical identities `M([V, V̄]) = 2s(V)`, `M([V, V²]) = 4s(V)` and
/// "δ(V²) has `2s(V)` terms" over every primitive word. Terms of `δ(V²)` are
/// counted up to `x ⊗ y = -y ⊗ x`; the ordered tensor norm, which is `8s(V)`,
/// is reported separately. Also checks that
/// `[V, V^k]` vanishes for some `k ∈ {-2, -1, 2}` exactly when `s(V) = 0`.
pub fn run_table1(cfg: &SweepConfig) -> SweepReport {
    let start = Instant::now();
    let (reports, examined) = table1_reports(cfg);
    finish(reports, examined, start)
}

fn table1_reports(cfg: &SweepConfig) -> (Vec<CheckReport>, u64) {
    let a = &cfg.alphabet;
    let words: Vec<CyclicWord> = enumerate_primitive(a, cfg.max_len).collect();
    let rows = map_ordered(&words, cfg.workers, |v| table1_row(a, v));
    let [inverse, square, cobracket, tensor_norm, vanishing] = fold_columns(rows);
    let reports = vec![
        CheckReport::new("table1.bracket_inverse", false, inverse),
        CheckReport::new("table1.bracket_square", false, square),
        CheckReport::new("table1.cobracket_square", false, cobracket),
        CheckReport::new("table1.cobracket_square_tensor_norm", false, tensor_norm),
        CheckReport::new("table1.simple_iff_small_power_bracket_vanishes", false, vanishing),
    ];
    (reports, words.len() as u64)
}

fn table1_row(a: &Alphabet, v: &CyclicWord) -> [Tally; 5] {
    let s = match topology::self_intersection(a, v) {
        Ok(s) => s as u128,
        Err(e) => return std::array::from_fn(|_| failed(e.clone())),
    };
    let inverse = guard(|| {
        let m = algebra::bracket(a, v, &v.inverse())?.manhattan();
        Ok(Tally::check(m == 2 * s, || format!("{v}: M([V,V̄]) = {m}, 2s = {}", 2 * s)))
    });
    let square = guard(|| {
        let m = algebra::bracket(a, v, &v.pow(2))?.manhattan();
        Ok(Tally::check(m == 4 * s, || format!("{v}: M([V,V²]) = {m}, 4s = {}", 4 * s)))
    });
    let delta = algebra::cobracket(a, &v.pow(2));
    let cobracket = match &delta {
        Ok(d) => {
            let t = algebra::wedge_term_count(d) as u128;
            Tally::check(t == 2 * s, || format!("{v}: δ(V²) has {t} terms up to swap, 2s = {}", 2 * s))
        }
        Err(e) => failed(e.clone()),
    };
    let tensor_norm = match &delta {
        Ok(d) => {
            let t = algebra::term_count(d);
            Tally::check(t == 8 * s, || format!("{v}: |δ(V²)| = {t}, 8s = {}", 8 * s))
        }
        Err(e) => failed(e.clone()),
    };
    let vanishing = guard(|| {
        let mut any_zero = false;
        for k in [-2, -1, 2] {
            any_zero |= algebra::bracket(a, v, &v.pow(k))?.is_zero();
        }
        Ok(Tally::check(any_zero == (s == 0), || {
            format!("{v}: s = {s} but small-power bracket vanishing is {any_zero}")
        }))
    });
    [inverse, square, cobracket, tensor_norm, vanishing]
}

/// `M([v^p, v^q]) = 2pq·s(v)` for every primitive word and exponent pair,
/// along with the per-term identity `M = pq·|LP(v, v)|`, absence of
/// cancellation between class contributions, and `s(v) = s(v̄)`.
pub fn run_counting(cfg: &SweepConfig) -> SweepReport {
    let start = Instant::now();
    let (reports, examined) = counting_reports(cfg);
    finish(reports, examined, start)
}

fn counting_reports(cfg: &SweepConfig) -> (Vec<CheckReport>, u64) {
    let a = &cfg.alphabet;
    let words: Vec<CyclicWord> = enumerate_primitive(a, cfg.max_len).collect();
    let rows = map_ordered(&words, cfg.workers, |v| counting_row(a, v, &cfg.exponent_pairs));
    let [theorem, per_class, distinct, inverse] = fold_columns(rows);
    let reports = vec![
        CheckReport::new("counting.manhattan", true, theorem),
        CheckReport::new("counting.linking_multiple", true, per_class),
        CheckReport::new("counting.no_cancellation", true, distinct),
        CheckReport::new("counting.inverse_invariance", false, inverse),
    ];
    (reports, words.len() as u64)
}

fn counting_row(a: &Alphabet, v: &CyclicWord, pairs: &[(i64, i64)]) -> [Tally; 4] {
    let mut row: [Tally; 4] = Default::default();
    let linking = match topology::linking_count(a, v) {
        Ok(n) => n as u128,
        Err(e) => return [failed(e.clone()), failed(e.clone()), failed(e.clone()), failed(e)],
    };
    for &(p, q) in pairs {
        let theorem = guard(|| {
            let r = topology::verify_counting(a, v, p, q)?;
            Ok(Tally::check(r.pass, || {
                format!("{v} (p={p}, q={q}): M = {}, 2pq·s = {}", r.manhattan, r.expected)
            }))
        });
        let bracket = algebra::bracket(a, &v.pow(p), &v.pow(q));
        let (per_class, distinct) = match bracket {
            Ok(sum) => {
                let expected = p as u128 * q as u128 * linking;
                (
                    Tally::check(sum.manhattan() == expected, || {
                        format!("{v} (p={p}, q={q}): M = {}, pq·|LP| = {expected}", sum.manhattan())
                    }),
                    Tally::check(sum.support_len() as u128 == linking, || {
                        format!("{v} (p={p}, q={q}): {} distinct terms from {linking} classes", sum.support_len())
                    }),
                )
            }
            Err(e) => (failed(e.clone()), failed(e)),
        };
        row[0] = std::mem::take(&mut row[0]).merge(theorem);
        row[1] = std::mem::take(&mut row[1]).merge(per_class);
        row[2] = std::mem::take(&mut row[2]).merge(distinct);
    }
    row[3] = guard(|| {
        let (s, t) = (topology::self_intersection(a, v)?, topology::self_intersection(a, &v.inverse())?);
        Ok(Tally::check(s == t, || format!("{v}: s(V) = {s}, s(V̄) = {t}")))
    });
    row
}

/// Antisymmetry, `[x, x] = 0`, Jacobi, power-form equivalence, class
/// constancy of sign and splice, extremal uniqueness and alphabet-rotation
/// invariance of signs.
pub fn run_properties(cfg: &SweepConfig) -> SweepReport {
    let start = Instant::now();
    let mut reports = Vec::new();
    let mut examined = 0;
    for suite in [
        jacobi_reports,
        antisym_reports,
        pow_equiv_reports,
        sign_class_reports,
        splice_class_reports,
        rotation_reports,
    ] {
        let (mut r, n) = suite(cfg);
        reports.append(&mut r);
        examined += n;
    }
    finish(reports, examined, start)
}

fn antisym_reports(cfg: &SweepConfig) -> (Vec<CheckReport>, u64) {
    let a = &cfg.alphabet;
    let words: Vec<CyclicWord> = enumerate_cyclic(a, cfg.pair_len).collect();
    let rows = map_ordered(&words, cfg.workers, |x| {
        let self_zero = guard(|| {
            let b = algebra::bracket(a, x, x)?;
            Ok(Tally::check(b.is_zero(), || format!("[{x}, {x}] = {b:?}")))
        });
        let cobracket = guard(|| {
            let d = algebra::cobracket(a, x)?;
            Ok(Tally::check(d.swapped() == d.neg()?, || format!("δ({x}) not co-antisymmetric")))
        });
        let antisym = words
            .iter()
            .filter(|y| *y > x)
            .map(|y| {
                guard(|| {
                    let xy = algebra::bracket(a, x, y)?;
                    let yx = algebra::bracket(a, y, x)?;
                    Ok(Tally::check(xy == yx.neg()?, || format!("[{x}, {y}] ≠ -[{y}, {x}]")))
                })
            })
            .sum();
        [antisym, self_zero, cobracket]
    });
    let [antisym, self_zero, cobracket] = fold_columns(rows);
    let reports = vec![
        CheckReport::new("antisym.bracket", true, antisym),
        CheckReport::new("antisym.self_bracket", true, self_zero),
        CheckReport::new("antisym.cobracket", true, cobracket),
    ];
    (reports, words.len() as u64)
}

/// Deterministic sample of `count` word triples of length `≤ max_len`.
pub fn sample_triples(cfg: &SweepConfig) -> Vec<[CyclicWord; 3]> {
    let pool: Vec<CyclicWord> = enumerate_cyclic(&cfg.alphabet, cfg.jacobi_len).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    (0..cfg.jacobi_samples)
        .map(|_| std::array::from_fn(|_| pool.choose(&mut rng).expect("nonempty pool").clone()))
        .collect()
}

/// `[x, [y, z]] + [y, [z, x]] + [z, [x, y]]`.
pub fn jacobiator(a: &Alphabet, x: &CyclicWord, y: &CyclicWord, z: &CyclicWord) -> Result<FormalSum> {
    let cycle = |x: &CyclicWord, y: &CyclicWord, z: &CyclicWord| -> Result<FormalSum> {
        let inner = algebra::bracket(a, y, z)?;
        algebra::bracket_sums(a, &FormalSum::term(x.clone(), 1), &inner)
    };
    cycle(x, y, z)?.add(&cycle(y, z, x)?)?.add(&cycle(z, x, y)?)
}

fn jacobi_reports(cfg: &SweepConfig) -> (Vec<CheckReport>, u64) {
    let a = &cfg.alphabet;
    let triples = sample_triples(cfg);
    let tally = map_ordered(&triples, cfg.workers, |[x, y, z]| {
        guard(|| {
            let j = jacobiator(a, x, y, z)?;
            Ok(Tally::check(j.is_zero(), || format!("Jacobi fails on ({x}, {y}, {z})")))
        })
    })
    .into_iter()
    .sum();
    (vec![CheckReport::new("jacobi", true, tally)], 3 * triples.len() as u64)
}

fn pow_equiv_reports(cfg: &SweepConfig) -> (Vec<CheckReport>, u64) {
    let a = &cfg.alphabet;
    let words: Vec<CyclicWord> = enumerate_primitive(a, cfg.pair_len).collect();
    let powers: Vec<i64> = (1..=cfg.max_power as i64).collect();
    let tally = map_ordered(&words, cfg.workers, |v| {
        let mut t = Tally::default();
        for w in &words {
            for &k in &powers {
                for &l in &powers {
                    t = t.merge(guard(|| {
                        let (x, y) = (v.pow(k), w.pow(l));
                        let via_roots = algebra::bracket(a, &x, &y)?;
                        let direct = algebra::bracket_direct(a, &x, &y)?;
                        Ok(Tally::check(via_roots == direct, || {
                            format!("[{v}^{k}, {w}^{l}]: power form and direct form differ")
                        }))
                    }));
                }
            }
        }
        t
    })
    .into_iter()
    .sum();
    (vec![CheckReport::new("pow_equiv", true, tally)], words.len() as u64)
}

/// Calls `f` on the classes of every ordered pair of words of length `≤ len`.
fn over_class_pairs<const N: usize>(
    cfg: &SweepConfig,
    len: usize,
    f: impl Fn(&CyclicWord, &CyclicWord, &[PairClass]) -> [Tally; N] + Sync + Send,
) -> ([Tally; N], u64) {
    let a = &cfg.alphabet;
    let words: Vec<CyclicWord> = enumerate_cyclic(a, len).collect();
    let rows = map_ordered(&words, cfg.workers, |v| {
        let rows: Vec<[Tally; N]> = words
            .iter()
            .map(|w| match pairing::classes(a, v.word(), w.word()) {
                Ok(classes) => f(v, w, &classes),
                Err(e) => std::array::from_fn(|_| failed(e.clone())),
            })
            .collect();
        fold_columns(rows)
    });
    (fold_columns(rows), words.len() as u64)
}

fn sign_class_reports(cfg: &SweepConfig) -> (Vec<CheckReport>, u64) {
    let a = cfg.alphabet;
    let ([constant, periodic, swapped], n) = over_class_pairs(cfg, cfg.class_len, |v, w, classes| {
        let (vw, ww) = (v.word(), w.word());
        let mut row: [Tally; 3] = Default::default();
        for class in classes {
            let constant = class
                .members
                .iter()
                .all(|&p| ordering::sign(&a, vw, ww, p) == class.sign);
            row[0] = std::mem::take(&mut row[0]).merge(Tally::check(constant, || {
                format!("sign varies on class of {:?} in R({v}, {w})", class.members[0])
            }));
            if !class.shape.is_chain() {
                row[1] = std::mem::take(&mut row[1]).merge(Tally::check(class.sign.is_zero(), || {
                    format!("periodic class of {:?} in R({v}, {w}) has nonzero sign", class.members[0])
                }));
            }
            for &(i, j) in &class.members {
                let ok = ordering::sign(&a, vw, ww, (i, j)) == -ordering::sign(&a, ww, vw, (j, i));
                row[2] = std::mem::take(&mut row[2]).merge(Tally::check(ok, || {
                    format!("s_{{{v},{w}}}({i},{j}) ≠ -s_{{{w},{v}}}({j},{i})")
                }));
            }
        }
        row
    });
    let reports = vec![
        CheckReport::new("sign_class_const.constant", true, constant),
        CheckReport::new("sign_class_const.periodic_zero", true, periodic),
        CheckReport::new("sign_class_const.antisymmetric", true, swapped),
    ];
    (reports, n)
}

fn splice_class_reports(cfg: &SweepConfig) -> (Vec<CheckReport>, u64) {
    let ([constant, extremal, length], n) = over_class_pairs(cfg, cfg.class_len, |v, w, classes| {
        let (vw, ww) = (v.word(), w.word());
        let mut row: [Tally; 3] = Default::default();
        for class in classes {
            let at = |p| pairing::splice(vw, ww, p);
            let first = at(class.members[0]);
            let constant = class.members.iter().all(|&p| at(p) == first);
            row[0] = std::mem::take(&mut row[0]).merge(Tally::check(constant, || {
                format!("splice varies on class of {:?} in R({v}, {w})", class.members[0])
            }));
            if !class.shape.is_chain() {
                continue;
            }
            let ends = class
                .members
                .iter()
                .filter(|&&p| pairing::is_extremal(vw, ww, p))
                .count();
            row[1] = std::mem::take(&mut row[1]).merge(Tally::check(ends == 1, || {
                format!("chain class of {:?} in R({v}, {w}) has {ends} extremal pairs", class.members[0])
            }));
            // once one word is used up, further cyclic cancellation is possible
            // unless the class is linking
            if class.negative_length >= vw.len().min(ww.len()) && !class.is_linking() {
                continue;
            }
            let expected = pairing::spliced_length(vw.len(), ww.len(), class.negative_length);
            let got = first.as_ref().map(|c| c.len()).unwrap_or(usize::MAX);
            row[2] = std::mem::take(&mut row[2]).merge(Tally::check(got == expected, || {
                format!(
                    "class of {:?} in R({v}, {w}): spliced length {got}, expected {expected}",
                    class.members[0]
                )
            }));
        }
        row
    });
    let reports = vec![
        CheckReport::new("splice_class_const.constant", true, constant),
        CheckReport::new("splice_class_const.unique_extremal", true, extremal),
        CheckReport::new("splice_class_const.length", true, length),
    ];
    (reports, n)
}

fn rotation_reports(cfg: &SweepConfig) -> (Vec<CheckReport>, u64) {
    let a = cfg.alphabet;
    let pool: Vec<CyclicWord> = enumerate_cyclic(&a, cfg.class_len).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x5eed);
    let pairs: Vec<[CyclicWord; 2]> = (0..cfg.rotation_samples)
        .map(|_| std::array::from_fn(|_| pool.choose(&mut rng).expect("nonempty pool").clone()))
        .collect();
    let tally = map_ordered(&pairs, cfg.workers, |[v, w]| {
        let (vw, ww) = (v.word(), w.word());
        let cells = (0..vw.len()).flat_map(|i| (0..ww.len()).map(move |j| (i, j)));
        let ok = cells.into_iter().all(|p| {
            let base = ordering::sign(&a, vw, ww, p);
            (1..a.size() as u16).all(|s| ordering::sign(&a.rotated(s), vw, ww, p) == base)
        });
        Tally::check(ok, || format!("signs of R({v}, {w}) change under alphabet rotation"))
    })
    .into_iter()
    .sum();
    (vec![CheckReport::new("alphabet_rotation", true, tally)], 2 * pairs.len() as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(checks: &[Check]) -> SweepConfig {
        let mut cfg = SweepConfig::new(Alphabet::new(2).unwrap(), 4).with_checks(checks.iter().copied());
        cfg.pair_len = 3;
        cfg.class_len = 3;
        cfg.jacobi_samples = 20;
        cfg.jacobi_len = 3;
        cfg.rotation_samples = 10;
        cfg
    }

    #[test]
    fn check_names_round_trip() {
        for c in Check::ALL {
            assert_eq!(c.name().parse::<Check>().unwrap(), c);
        }
        assert!("tabel1".parse::<Check>().is_err());
    }

    #[test]
    fn config_validation() {
        let mut cfg = small(&[Check::Counting]);
        assert!(cfg.validate().is_ok());
        cfg.exponent_pairs = vec![(1, 2)];
        assert!(cfg.validate().is_err());
        assert!(small(&[]).validate().is_err());
        let mut cfg = small(&[Check::Table1]);
        cfg.max_len = 0;
        assert!(cfg.validate().is_err());
    }

    #[test]
    fn tally_merge_keeps_first_counterexample() {
        let t: Tally = [Tally::pass(), Tally::fail("x"), Tally::fail("y")].into_iter().sum();
        assert_eq!(t.examined, 3);
        assert_eq!(t.failed, 2);
        assert_eq!(t.counterexample.as_deref(), Some("x"));
    }

    #[test]
    fn small_sweep_passes_and_is_worker_independent() {
        let cfg = small(&Check::ALL);
        let seq = run(&cfg.clone().with_workers(1)).unwrap();
        let par = run(&cfg.with_workers(3)).unwrap();
        assert_eq!(seq.to_json(), par.to_json());
        for c in &seq.checks {
            assert!(c.ok(), "{c:?}");
            assert!(c.examined > 0, "{c:?}");
        }
        assert!(!seq.gating_failed());
    }

    #[test]
    fn jacobi_on_a_b_ab() {
        let a = Alphabet::new(2).unwrap();
        let c = |s: &str| s.parse::<CyclicWord>().unwrap();
        assert!(jacobiator(&a, &c("a"), &c("b"), &c("ab")).unwrap().is_zero());
    }

    #[test]
    fn table1_on_aabb_and_a() {
        let a = Alphabet::new(2).unwrap();
        let v: CyclicWord = "aabb".parse().unwrap();
        assert_eq!(algebra::bracket(&a, &v, &v.pow(2)).unwrap().manhattan(), 4);
        let row = table1_row(&a, &v);
        assert!(row.iter().all(|t| t.failed == 0));
        let v: CyclicWord = "a".parse().unwrap();
        assert!(algebra::bracket(&a, &v, &v.inverse()).unwrap().is_zero());
        assert!(algebra::bracket(&a, &v, &v.pow(2)).unwrap().is_zero());
        assert!(algebra::cobracket(&a, &v.pow(2)).unwrap().is_zero());
    }
}
