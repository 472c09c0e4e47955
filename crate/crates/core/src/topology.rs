//! Self-intersection numbers and simplicity of free homotopy classes.

use serde::Serialize;

use crate::algebra::{self, linking_pairs};
use crate::error::{Error, Result};
use crate::words::{Alphabet, CyclicWord};

/// Number of linking classes of `R(V, V)`, i.e. twice the minimal number of
/// self-intersections.
pub fn linking_count(alphabet: &Alphabet, v: &CyclicWord) -> Result<u64> {
    Ok(linking_pairs(alphabet, v.word(), v.word())?.len() as u64)
}

/// Minimal self-intersection number of the class `v`.
pub fn self_intersection(alphabet: &Alphabet, v: &CyclicWord) -> Result<u64> {
    let count = linking_count(alphabet, v)?;
    if count % 2 != 0 {
        return Err(Error::Integrity(format!(
            "{v} has an odd number ({count}) of linking classes"
        )));
    }
    Ok(count / 2)
}

/// Whether `v` has an embedded representative: no self-intersections, checked
/// against the vanishing of `[v, v^3]`.
pub fn is_simple(alphabet: &Alphabet, v: &CyclicWord) -> Result<bool> {
    if v.is_empty() {
        return Err(Error::Precondition("simplicity of the empty word".into()));
    }
    let simple = self_intersection(alphabet, v)? == 0;
    let bracket_vanishes = algebra::bracket(alphabet, v, &v.pow(3))?.is_zero();
    if simple != bracket_vanishes {
        return Err(Error::Integrity(format!(
            "self-intersection count and [V, V^3] disagree on simplicity of {v}"
        )));
    }
    Ok(simple)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CountingReport {
    pub manhattan: u128,
    pub expected: u128,
    pub pass: bool,
}

/// Compares `M([v^p, v^q])` with `2·p·q·s(v)`.
///
/// Requires `v` primitive, `p ≠ q` positive and `max(p, q) ≥ 3`.
pub fn verify_counting(alphabet: &Alphabet, v: &CyclicWord, p: i64, q: i64) -> Result<CountingReport> {
    if v.is_empty() {
        return Err(Error::Precondition("word must be nonempty".into()));
    }
    if !v.is_primitive() {
        return Err(Error::Precondition(format!("{v} is not primitive")));
    }
    if p < 1 || q < 1 {
        return Err(Error::Precondition("exponents must be positive".into()));
    }
    if p == q {
        return Err(Error::Precondition("exponents must be distinct".into()));
    }
    if p.max(q) < 3 {
        return Err(Error::Precondition("one exponent must be at least 3".into()));
    }
    let manhattan = algebra::bracket(alphabet, &v.pow(p), &v.pow(q))?.manhattan();
    let expected = 2 * p as u128 * q as u128 * self_intersection(alphabet, v)? as u128;
    Ok(CountingReport {
        manhattan,
        expected,
        pass: manhattan == expected,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> CyclicWord {
        s.parse().unwrap()
    }

    fn a2() -> Alphabet {
        Alphabet::new(2).unwrap()
    }

    #[test]
    fn self_intersection_examples() {
        assert_eq!(self_intersection(&a2(), &c("aabb")).unwrap(), 1);
        assert_eq!(self_intersection(&a2(), &c("a")).unwrap(), 0);
        assert_eq!(self_intersection(&a2(), &c("ab")).unwrap(), 0);
    }

    #[test]
    fn simplicity_examples() {
        assert!(is_simple(&a2(), &c("ab")).unwrap());
        assert!(!is_simple(&a2(), &c("aabb")).unwrap());
        assert!(is_simple(&a2(), &c("a")).unwrap());
        assert!(is_simple(&a2(), &CyclicWord::empty()).is_err());
    }

    #[test]
    fn counting_examples() {
        let r = verify_counting(&a2(), &c("aabb"), 1, 3).unwrap();
        assert_eq!(r, CountingReport { manhattan: 6, expected: 6, pass: true });
        let r = verify_counting(&a2(), &c("ab"), 1, 3).unwrap();
        assert_eq!(r, CountingReport { manhattan: 0, expected: 0, pass: true });
        assert!(matches!(
            verify_counting(&a2(), &c("abab"), 1, 3),
            Err(Error::Precondition(m)) if m.contains("primitive")
        ));
        assert!(matches!(
            verify_counting(&a2(), &c("ab"), 3, 3),
            Err(Error::Precondition(m)) if m.contains("distinct")
        ));
        assert!(matches!(
            verify_counting(&a2(), &c("ab"), 1, 2),
            Err(Error::Precondition(m)) if m.contains("at least 3")
        ));
    }
}
