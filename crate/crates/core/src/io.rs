//! Stable JSON shapes for sums and pair classes.
//!
//! Field order is fixed by the structs below and terms come out in basis order,
//! so equal values always serialize to identical bytes.

use serde::Serialize;

use crate::algebra::{FormalSum, TensorSum};
use crate::pairing::{IndexPair, PairClass, Shape};

#[derive(Serialize)]
struct WordTerm {
    word: String,
    coeff: i64,
}

#[derive(Serialize)]
struct TensorTerm {
    left: String,
    right: String,
    coeff: i64,
}

#[derive(Serialize)]
struct Terms<T> {
    terms: Vec<T>,
}

#[derive(Serialize)]
struct ClassRecord {
    members: Vec<IndexPair>,
    shape: Shape,
    negative_length: usize,
    extremal: Option<IndexPair>,
    sign: i64,
}

#[derive(Serialize)]
struct Classes {
    classes: Vec<ClassRecord>,
}

fn to_string<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("plain structs serialize")
}

/// `{"terms":[{"word":…,"coeff":…}]}`
pub fn formal_sum_json(sum: &FormalSum) -> String {
    let terms = sum
        .iter()
        .map(|(w, coeff)| WordTerm {
            word: w.to_string(),
            coeff,
        })
        .collect();
    to_string(&Terms { terms })
}

/// `{"terms":[{"left":…,"right":…,"coeff":…}]}`
pub fn tensor_sum_json(sum: &TensorSum) -> String {
    let terms = sum
        .iter()
        .map(|((l, r), coeff)| TensorTerm {
            left: l.to_string(),
            right: r.to_string(),
            coeff,
        })
        .collect();
    to_string(&Terms { terms })
}

/// `{"classes":[{"members":[[i,j],…],"shape":…,"negative_length":…,"extremal":[i,j]|null,"sign":…}]}`
pub fn classes_json(classes: &[PairClass]) -> String {
    let classes = classes
        .iter()
        .map(|c| ClassRecord {
            members: c.members.clone(),
            shape: c.shape,
            negative_length: c.negative_length,
            extremal: c.extremal,
            sign: c.sign.value(),
        })
        .collect();
    to_string(&Classes { classes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{bracket, cobracket};
    use crate::pairing::classes;
    use crate::words::{Alphabet, CyclicWord, Word};

    fn c(s: &str) -> CyclicWord {
        s.parse().unwrap()
    }

    #[test]
    fn bracket_json() {
        let a = Alphabet::new(2).unwrap();
        let b = bracket(&a, &c("ab"), &c("aab")).unwrap();
        assert_eq!(formal_sum_json(&b), r#"{"terms":[{"word":"aabab","coeff":-1}]}"#);
        assert_eq!(formal_sum_json(&FormalSum::zero()), r#"{"terms":[]}"#);
    }

    #[test]
    fn tensor_json() {
        let a = Alphabet::new(2).unwrap();
        assert_eq!(tensor_sum_json(&cobracket(&a, &c("aabb")).unwrap()), r#"{"terms":[]}"#);
        let t = TensorSum::term((c("ab"), c("ab")), 1);
        assert_eq!(tensor_sum_json(&t), r#"{"terms":[{"left":"ab","right":"ab","coeff":1}]}"#);
    }

    #[test]
    fn classes_json_shape() {
        let a = Alphabet::new(2).unwrap();
        let (v, w): (Word, Word) = ("aab".parse().unwrap(), "A".parse().unwrap());
        assert_eq!(
            classes_json(&classes(&a, &v, &w).unwrap()),
            r#"{"classes":[{"members":[[0,0],[1,0],[2,0]],"shape":"AntidiagonalChain","negative_length":2,"extremal":[2,0],"sign":1}]}"#
        );
    }
}
