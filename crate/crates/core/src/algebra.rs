//! The free Z-module on cyclic words, the Goldman bracket and the Turaev
//! cobracket.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::pairing::{self, PairClass};
use crate::words::{Alphabet, CyclicWord, Word};

/// A finite integer combination of basis elements. Zero coefficients are never
/// stored, so the zero element is the empty map.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearCombination<B: Ord> {
    terms: BTreeMap<B, i64>,
}

pub type FormalSum = LinearCombination<CyclicWord>;
pub type TensorSum = LinearCombination<(CyclicWord, CyclicWord)>;

impl<B: Ord> Default for LinearCombination<B> {
    fn default() -> Self {
        LinearCombination {
            terms: BTreeMap::new(),
        }
    }
}

impl<B: Ord + Clone> LinearCombination<B> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(basis: B, coeff: i64) -> Self {
        let mut sum = Self::zero();
        sum.add_term(basis, coeff).expect("single term cannot overflow");
        sum
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of distinct basis elements with nonzero coefficient.
    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, basis: &B) -> i64 {
        self.terms.get(basis).copied().unwrap_or(0)
    }

    /// Terms in ascending basis order.
    pub fn iter(&self) -> impl Iterator<Item = (&B, i64)> {
        self.terms.iter().map(|(b, &c)| (b, c))
    }

    pub fn add_term(&mut self, basis: B, coeff: i64) -> Result<()> {
        if coeff == 0 {
            return Ok(());
        }
        let entry = self.terms.entry(basis).or_insert(0);
        *entry = entry.checked_add(coeff).ok_or(Error::Overflow)?;
        if *entry == 0 {
            self.terms.retain(|_, c| *c != 0);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        for (b, c) in other.iter() {
            out.add_term(b.clone(), c)?;
        }
        Ok(out)
    }

    pub fn scale(&self, factor: i64) -> Result<Self> {
        let mut terms = BTreeMap::new();
        if factor != 0 {
            for (b, &c) in &self.terms {
                terms.insert(b.clone(), c.checked_mul(factor).ok_or(Error::Overflow)?);
            }
        }
        Ok(LinearCombination { terms })
    }

    pub fn neg(&self) -> Result<Self> {
        self.scale(-1)
    }

    /// Sum of the absolute values of the coefficients.
    pub fn manhattan(&self) -> u128 {
        self.terms.values().map(|c| c.unsigned_abs() as u128).sum()
    }
}

impl<A: Ord + Clone> LinearCombination<(A, A)> {
    /// Exchanges the two tensor factors of every term.
    pub fn swapped(&self) -> Self {
        LinearCombination {
            terms: self
                .terms
                .iter()
                .map(|((l, r), &c)| ((r.clone(), l.clone()), c))
                .collect(),
        }
    }
}

/// Number of terms counted with multiplicity (after collecting like terms).
pub fn term_count(sum: &TensorSum) -> u128 {
    sum.manhattan()
}

/// Number of distinct terms once `x ⊗ y` is identified with `-y ⊗ x`, i.e.
/// the support of the image in the exterior square.
pub fn wedge_term_count(sum: &TensorSum) -> usize {
    let mut wedge: BTreeMap<(&CyclicWord, &CyclicWord), i128> = BTreeMap::new();
    for ((l, r), c) in sum.iter() {
        match l.cmp(r) {
            Ordering::Less => *wedge.entry((l, r)).or_default() += c as i128,
            Ordering::Greater => *wedge.entry((r, l)).or_default() -= c as i128,
            Ordering::Equal => {}
        }
    }
    wedge.values().filter(|&&c| c != 0).count()
}

pub fn manhattan(sum: &FormalSum) -> u128 {
    sum.manhattan()
}

/// Classes of `R(V, W)` with nonzero sign.
pub fn linking_pairs(alphabet: &Alphabet, v: &Word, w: &Word) -> Result<Vec<PairClass>> {
    let mut classes = pairing::classes(alphabet, v, w)?;
    classes.retain(PairClass::is_linking);
    Ok(classes)
}

fn extremal_of(class: &PairClass) -> Result<(usize, usize)> {
    class.extremal.ok_or_else(|| {
        Error::Integrity(format!(
            "linking class of {:?} has periodic shape",
            class.members[0]
        ))
    })
}

fn to_coeff(k: usize) -> Result<i64> {
    i64::try_from(k).map_err(|_| Error::Overflow)
}

/// The Goldman bracket `[X, Y]`.
///
/// With `X = V^k`, `Y = W^l` for primitive `V`, `W`, this is the sum over
/// linking classes of `R(V, W)` of `k·l·s·(V_i^k W_j^l)`, using the extremal
/// pair `(i, j)` of each class.
pub fn bracket(alphabet: &Alphabet, x: &CyclicWord, y: &CyclicWord) -> Result<FormalSum> {
    let mut sum = FormalSum::zero();
    if x.is_empty() || y.is_empty() {
        return Ok(sum);
    }
    let (v, k) = x.primitive_root()?;
    let (w, l) = y.primitive_root()?;
    let weight = to_coeff(k)?
        .checked_mul(to_coeff(l)?)
        .ok_or(Error::Overflow)?;
    for class in linking_pairs(alphabet, v.word(), w.word())? {
        let pair = extremal_of(&class)?;
        let coeff = weight
            .checked_mul(class.sign.value())
            .ok_or(Error::Overflow)?;
        sum.add_term(pairing::splice_powers(v.word(), w.word(), pair, k, l)?, coeff)?;
    }
    Ok(sum)
}

/// The bracket evaluated on `X` and `Y` directly, without extracting roots:
/// the sum over linking classes of `R(X, Y)` of `s·(X_i Y_j)`.
pub fn bracket_direct(alphabet: &Alphabet, x: &CyclicWord, y: &CyclicWord) -> Result<FormalSum> {
    let mut sum = FormalSum::zero();
    for class in linking_pairs(alphabet, x.word(), y.word())? {
        let pair = extremal_of(&class)?;
        sum.add_term(pairing::splice(x.word(), y.word(), pair)?, class.sign.value())?;
    }
    Ok(sum)
}

/// Bilinear extension of [`bracket`].
pub fn bracket_sums(alphabet: &Alphabet, x: &FormalSum, y: &FormalSum) -> Result<FormalSum> {
    let mut sum = FormalSum::zero();
    for (u, a) in x.iter() {
        for (v, b) in y.iter() {
            let coeff = a.checked_mul(b).ok_or(Error::Overflow)?;
            sum = sum.add(&bracket(alphabet, u, v)?.scale(coeff)?)?;
        }
    }
    Ok(sum)
}

/// The Turaev cobracket `δ(V)`: for each linking class of `R(V, V)` with
/// extremal pair `(i, j)` and sign `s`, the term `s·(v_i…v_{j-1}) ⊗ (v_j…v_{i-1})`.
pub fn cobracket(alphabet: &Alphabet, v: &CyclicWord) -> Result<TensorSum> {
    let mut sum = TensorSum::zero();
    let word = v.word();
    let n = word.len();
    if n <= 1 {
        return Ok(sum);
    }
    for class in linking_pairs(alphabet, word, word)? {
        let (i, j) = extremal_of(&class)?;
        let first = (j + n - i) % n;
        let left = CyclicWord::from_word(&word.arc(i, first));
        let right = CyclicWord::from_word(&word.arc(j, n - first));
        if left.is_empty() || right.is_empty() {
            return Err(Error::Integrity(format!(
                "cobracket arc of {v} at ({i}, {j}) reduces to the empty word"
            )));
        }
        sum.add_term((left, right), class.sign.value())?;
    }
    Ok(sum)
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
    fn module_operations() {
        let x = FormalSum::term(c("ab"), 3);
        assert!(x.add(&x.scale(-1).unwrap()).unwrap().is_zero());
        assert!(x.scale(0).unwrap().is_zero());
        assert_eq!(x.scale(2).unwrap(), FormalSum::term(c("ab"), 6));
        assert_eq!(FormalSum::zero().manhattan(), 0);
        assert_eq!(x.coefficient(&c("ba")), 3);
        let big = FormalSum::term(c("a"), i64::MAX);
        assert_eq!(big.add(&FormalSum::term(c("a"), 1)), Err(Error::Overflow));
        assert_eq!(big.scale(2), Err(Error::Overflow));
    }

    #[test]
    fn linking_pair_examples() {
        let w = |s: &str| s.parse::<Word>().unwrap();
        assert_eq!(linking_pairs(&a2(), &w("ab"), &w("aab")).unwrap().len(), 1);
        let lp = linking_pairs(&a2(), &w("aabb"), &w("aabb")).unwrap();
        assert_eq!(lp.len(), 2);
        assert!(lp[0].contains((1, 3)) || lp[1].contains((1, 3)));
        assert!(linking_pairs(&a2(), &w("ab"), &w("ab")).unwrap().is_empty());
    }

    #[test]
    fn bracket_examples() {
        assert_eq!(
            bracket(&a2(), &c("ab"), &c("aab")).unwrap(),
            FormalSum::term(c("abaab"), -1)
        );
        let expected = FormalSum::term(c("abbabaabbaabbaab"), 3)
            .add(&FormalSum::term(c("baababbaabbaabba"), -3))
            .unwrap();
        let got = bracket(&a2(), &c("aabb"), &c("aabb").pow(3)).unwrap();
        assert_eq!(got, expected);
        assert_eq!(got.manhattan(), 6);
        let got = bracket(&a2(), &c("aab"), &c("A")).unwrap();
        assert_eq!(got, FormalSum::term(c("ab"), 1));
        assert_eq!(got.manhattan(), 1);
        assert!(bracket(&a2(), &CyclicWord::empty(), &c("ab")).unwrap().is_zero());
    }

    #[test]
    fn cobracket_examples() {
        assert!(cobracket(&a2(), &c("aabb")).unwrap().is_zero());
        assert!(cobracket(&a2(), &c("a")).unwrap().is_zero());
        assert!(cobracket(&a2(), &c("ab")).unwrap().is_zero());
        assert!(cobracket(&a2(), &CyclicWord::empty()).unwrap().is_zero());
    }

    #[test]
    fn cobracket_swaps_to_negative() {
        for s in ["aabAB", "abAB", "aabbAB", "abaBAB"] {
            let d = cobracket(&a2(), &c(s)).unwrap();
            assert_eq!(d.swapped(), d.neg().unwrap(), "{s}");
        }
    }
}
