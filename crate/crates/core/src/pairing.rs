//! The relation `R(V, W)` on the index grid `I(V, W)`.
//!
//! `R(V, W)` is generated by `(j, k) ~ (j+1, k+1)` when `v_j = w_k` and
//! `(j+1, k) ~ (j, k+1)` when `v_j = w̄_k`, all indices cyclic. Every class is
//! either a finite chain along one of the two diagonals or a full periodic
//! orbit.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ordering::{self, Sign};
use crate::words::{Alphabet, CyclicWord, Word};

/// `(i, j)` with `0 ≤ i < |V|` and `0 ≤ j < |W|`.
pub type IndexPair = (usize, usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Shape {
    /// `{(i, j), (i+1, j+1), …, (i+c, j+c)}`
    DiagonalChain,
    /// `{(i, j), (i+1, j-1), …, (i+c, j-c)}` with `c > 0`
    AntidiagonalChain,
    /// `v_{i+s} = w_{j+s}` for every `s`
    PeriodicEqual,
    /// `v_{i+s} = w̄_{j-s}` for every `s`
    PeriodicInverse,
}

impl Shape {
    pub fn is_chain(self) -> bool {
        matches!(self, Shape::DiagonalChain | Shape::AntidiagonalChain)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairClass {
    /// Sorted row-major.
    pub members: Vec<IndexPair>,
    pub shape: Shape,
    pub negative_length: usize,
    /// The unique member with `v_i ≠ w_j` and `v_i ≠ w̄_{j-1}`; chains only.
    pub extremal: Option<IndexPair>,
    pub sign: Sign,
}

impl PairClass {
    pub fn contains(&self, pair: IndexPair) -> bool {
        self.members.binary_search(&pair).is_ok()
    }

    /// The extremal member if there is one, else the first member.
    pub fn representative(&self) -> IndexPair {
        self.extremal.unwrap_or(self.members[0])
    }

    pub fn is_linking(&self) -> bool {
        !self.sign.is_zero()
    }
}

struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        while self.parent[x] != root {
            let next = self.parent[x];
            self.parent[x] = root;
            x = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
    }
}

pub(crate) fn require_cyclically_reduced(word: &Word) -> Result<()> {
    if word.is_cyclically_reduced() {
        Ok(())
    } else {
        Err(Error::NotCyclicallyReduced(word.to_string()))
    }
}

/// `(i, j) ~ (i+1, j+1)` by the first generating rule.
fn steps_diagonally(v: &Word, w: &Word, (i, j): IndexPair) -> bool {
    v.at(i as isize) == w.at(j as isize)
}

/// `(i, j) ~ (i+1, j-1)` by the second generating rule.
fn steps_antidiagonally(v: &Word, w: &Word, (i, j): IndexPair) -> bool {
    v.at(i as isize) == w.at(j as isize - 1).bar()
}

pub fn is_extremal(v: &Word, w: &Word, pair: IndexPair) -> bool {
    !steps_diagonally(v, w, pair) && !steps_antidiagonally(v, w, pair)
}

/// Partitions `I(V, W)` into the classes of `R(V, W)`, each with its shape,
/// negative length, extremal pair and sign.
///
/// Classes are listed in order of their first member. Empty words give an
/// empty grid and no classes.
pub fn classes(alphabet: &Alphabet, v: &Word, w: &Word) -> Result<Vec<PairClass>> {
    require_cyclically_reduced(v)?;
    require_cyclically_reduced(w)?;
    alphabet.check(v)?;
    alphabet.check(w)?;
    let (n, m) = (v.len(), w.len());
    if n == 0 || m == 0 {
        return Ok(Vec::new());
    }

    let cell = |j: usize, k: usize| (j % n) * m + (k % m);
    let mut uf = UnionFind::new(n * m);
    for j in 0..n {
        for k in 0..m {
            let (vj, wk) = (v.letters()[j], w.letters()[k]);
            if vj == wk {
                uf.union(cell(j, k), cell(j + 1, k + 1));
            }
            if vj == wk.bar() {
                uf.union(cell(j + 1, k), cell(j, k + 1));
            }
        }
    }

    let mut slot = vec![usize::MAX; n * m];
    let mut groups: Vec<Vec<IndexPair>> = Vec::new();
    for j in 0..n {
        for k in 0..m {
            let root = uf.find(cell(j, k));
            if slot[root] == usize::MAX {
                slot[root] = groups.len();
                groups.push(Vec::new());
            }
            groups[slot[root]].push((j, k));
        }
    }

    groups
        .into_iter()
        .map(|members| classify(alphabet, v, w, members))
        .collect()
}

fn classify(alphabet: &Alphabet, v: &Word, w: &Word, members: Vec<IndexPair>) -> Result<PairClass> {
    let size = members.len();
    let diagonal = members.iter().filter(|&&p| steps_diagonally(v, w, p)).count();
    let antidiagonal = members.iter().filter(|&&p| steps_antidiagonally(v, w, p)).count();
    if diagonal > 0 && antidiagonal > 0 {
        return Err(Error::Integrity(format!(
            "class of {:?} in R({v}, {w}) mixes both generating rules",
            members[0]
        )));
    }

    let (shape, negative_length) = if diagonal == size {
        (Shape::PeriodicEqual, 0)
    } else if antidiagonal == size {
        (Shape::PeriodicInverse, 0)
    } else if antidiagonal > 0 {
        (Shape::AntidiagonalChain, antidiagonal)
    } else {
        (Shape::DiagonalChain, 0)
    };

    let extremal = if shape.is_chain() {
        let mut ends = members.iter().filter(|&&p| is_extremal(v, w, p));
        match (ends.next(), ends.next()) {
            (Some(&p), None) if diagonal + antidiagonal + 1 == size => Some(p),
            _ => {
                return Err(Error::Integrity(format!(
                    "chain class of {:?} in R({v}, {w}) lacks a unique extremal pair",
                    members[0]
                )))
            }
        }
    } else {
        None
    };

    let mut class = PairClass {
        members,
        shape,
        negative_length,
        extremal,
        sign: Sign::Zero,
    };
    class.sign = ordering::sign(alphabet, v, w, class.representative());
    Ok(class)
}

pub fn extremal_pair(class: &PairClass) -> Result<IndexPair> {
    class.extremal.ok_or(Error::NoExtremalPair)
}

/// The cyclic word of `V_i W_j`.
pub fn splice(v: &Word, w: &Word, pair: IndexPair) -> Result<CyclicWord> {
    splice_powers(v, w, pair, 1, 1)
}

/// The cyclic word of `V_i^k W_j^l`.
pub fn splice_powers(v: &Word, w: &Word, (i, j): IndexPair, k: usize, l: usize) -> Result<CyclicWord> {
    if i >= v.len() || j >= w.len() {
        return Err(Error::PairOutOfRange(i, j));
    }
    let left = v.rotate(i as isize)?.repeat(k);
    let right = w.rotate(j as isize)?.repeat(l);
    Ok(CyclicWord::from_word(&left.concat(&right)))
}

/// Expected length of a spliced class: `n + m - 2c`, where the cancellation
/// `c` cannot exceed the shorter word.
pub fn spliced_length(n: usize, m: usize, negative_length: usize) -> usize {
    n + m - 2 * negative_length.min(n).min(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn a2() -> Alphabet {
        Alphabet::new(2).unwrap()
    }

    fn find(classes: &[PairClass], pair: IndexPair) -> &PairClass {
        classes.iter().find(|c| c.contains(pair)).unwrap()
    }

    #[test]
    fn classes_of_ab_aab() {
        let cls = classes(&a2(), &w("ab"), &w("aab")).unwrap();
        assert_eq!(cls.len(), 3);
        let big = find(&cls, (0, 0));
        assert_eq!(big.members, vec![(0, 0), (0, 1), (1, 1), (1, 2)]);
        assert_eq!(big.shape, Shape::DiagonalChain);
        assert_eq!(big.extremal, Some((1, 1)));
        assert_eq!(big.sign, Sign::Negative);
        assert_eq!(find(&cls, (1, 0)).members, vec![(1, 0)]);
        assert_eq!(find(&cls, (1, 0)).extremal, Some((1, 0)));
        // (0, 2) meets the extremal definition even though it is not marked in print
        assert_eq!(find(&cls, (0, 2)).extremal, Some((0, 2)));
        assert!(cls.iter().filter(|c| !c.contains((0, 0))).all(|c| c.sign == Sign::Zero));
    }

    #[test]
    fn classes_of_aabb_aabb() {
        let v = w("aabb");
        let cls = classes(&a2(), &v, &v).unwrap();
        assert_eq!(cls.len(), 9);
        let diag = find(&cls, (0, 0));
        assert_eq!(diag.members, vec![(0, 0), (1, 1), (2, 2), (3, 3)]);
        assert_eq!(diag.shape, Shape::PeriodicEqual);
        assert_eq!(diag.extremal, None);
        assert_eq!(extremal_pair(diag), Err(Error::NoExtremalPair));
        for (pair, partner, ext) in [
            ((0, 1), (1, 2), (1, 2)),
            ((1, 0), (2, 1), (2, 1)),
            ((2, 3), (3, 0), (3, 0)),
            ((3, 2), (0, 3), (0, 3)),
        ] {
            let c = find(&cls, pair);
            assert!(c.contains(partner));
            assert_eq!(c.members.len(), 2);
            assert_eq!(c.extremal, Some(ext));
        }
        for single in [(0, 2), (2, 0), (1, 3), (3, 1)] {
            let c = find(&cls, single);
            assert_eq!(c.members, vec![single]);
            assert_eq!(c.extremal, Some(single));
            assert_eq!(c.shape, Shape::DiagonalChain);
        }
        assert_eq!(find(&cls, (1, 3)).sign, Sign::Positive);
        assert_eq!(find(&cls, (3, 1)).sign, Sign::Negative);
        assert_eq!(cls.iter().filter(|c| c.is_linking()).count(), 2);
    }

    #[test]
    fn classes_of_aab_inverse_a() {
        let cls = classes(&a2(), &w("aab"), &w("A")).unwrap();
        assert_eq!(cls.len(), 1);
        assert_eq!(cls[0].members, vec![(0, 0), (1, 0), (2, 0)]);
        assert_eq!(cls[0].shape, Shape::AntidiagonalChain);
        assert_eq!(cls[0].negative_length, 2);
        assert_eq!(cls[0].extremal, Some((2, 0)));
        assert_eq!(cls[0].sign, Sign::Positive);
    }

    #[test]
    fn periodic_inverse_shape() {
        let cls = classes(&a2(), &w("ab"), &w("BA")).unwrap();
        assert!(cls.iter().any(|c| c.shape == Shape::PeriodicInverse));
        let cls = classes(&a2(), &w("a"), &w("A")).unwrap();
        assert_eq!(cls[0].shape, Shape::PeriodicInverse);
        assert_eq!(cls[0].sign, Sign::Zero);
    }

    #[test]
    fn degenerate_inputs() {
        assert!(classes(&a2(), &Word::empty(), &w("ab")).unwrap().is_empty());
        assert_eq!(
            classes(&a2(), &w("abA"), &w("ab")),
            Err(Error::NotCyclicallyReduced("abA".into()))
        );
        assert!(classes(&a2(), &w("ac"), &w("ab")).is_err());
    }

    #[test]
    fn splice_examples() {
        let got = splice(&w("ab"), &w("aab"), (1, 1)).unwrap();
        assert_eq!(got.word(), &w("aabab"));
        assert!(got.word().is_conjugate(&w("abaab")));
        assert_eq!(splice(&w("aab"), &w("A"), (2, 0)).unwrap().word(), &w("ab"));
        assert!(splice(&w("a"), &w("A"), (0, 0)).unwrap().is_empty());
        assert_eq!(splice(&w("a"), &w("A"), (1, 0)), Err(Error::PairOutOfRange(1, 0)));
    }

    #[test]
    fn spliced_length_caps_cancellation() {
        assert_eq!(spliced_length(2, 3, 0), 5);
        assert_eq!(spliced_length(4, 4, 3), 2);
        assert_eq!(spliced_length(3, 1, 2), 2);
    }
}
