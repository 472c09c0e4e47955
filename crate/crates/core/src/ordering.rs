//! Order on half-infinite periodic words and the intersection sign.

use std::cmp::Ordering;

use crate::words::{Alphabet, Letter, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// `V^∞ = V V V …`
    Forward,
    /// `V^{-∞} = V̄ V̄ V̄ …`
    Backward,
}

/// The ray `V_i^{±∞}` of a nonempty cyclically reduced word, read lazily.
#[derive(Clone, Copy, Debug)]
pub struct PeriodicRay<'a> {
    word: &'a Word,
    start: usize,
    direction: Direction,
}

impl<'a> PeriodicRay<'a> {
    pub fn new(word: &'a Word, direction: Direction) -> Self {
        PeriodicRay::at(word, 0, direction)
    }

    /// The ray of the rotation `V_start`.
    pub fn at(word: &'a Word, start: usize, direction: Direction) -> Self {
        assert!(!word.is_empty(), "rays need a nonempty period");
        PeriodicRay {
            word,
            start,
            direction,
        }
    }

    pub fn period(&self) -> usize {
        self.word.len()
    }

    pub fn letter(&self, k: usize) -> Letter {
        let (start, k) = (self.start as isize, k as isize);
        match self.direction {
            Direction::Forward => self.word.at(start + k),
            Direction::Backward => self.word.at(start - 1 - k).bar(),
        }
    }
}

/// Compares two rays in the order induced by `alphabet`.
///
/// Rays with periods `n` and `m` that agree on their first `n + m` letters are
/// identical (Fine–Wilf), so only that prefix is scanned.
pub fn compare_rays(alphabet: &Alphabet, t: &PeriodicRay<'_>, u: &PeriodicRay<'_>) -> Ordering {
    let size = alphabet.size();
    for d in 0..t.period() + u.period() {
        let (a, b) = (t.letter(d), u.letter(d));
        if a == b {
            continue;
        }
        if d == 0 {
            return alphabet.rank(a).cmp(&alphabet.rank(b));
        }
        // rank in the alphabet rotated to start at the bar of the common predecessor
        let pivot = alphabet.rank(t.letter(d - 1).bar());
        let shifted = |x: Letter| (alphabet.rank(x) + size - pivot) % size;
        return shifted(a).cmp(&shifted(b));
    }
    Ordering::Equal
}

/// Counts `(ascents, descents)` between each ray and its cyclic successor, or
/// `None` if two neighbours coincide.
fn successor_steps(alphabet: &Alphabet, rays: &[PeriodicRay<'_>]) -> Option<(usize, usize)> {
    let k = rays.len();
    let mut steps = (0, 0);
    for t in 0..k {
        match compare_rays(alphabet, &rays[t], &rays[(t + 1) % k]) {
            Ordering::Less => steps.0 += 1,
            Ordering::Greater => steps.1 += 1,
            Ordering::Equal => return None,
        }
    }
    Some(steps)
}

/// True iff some cyclic permutation of `rays` is strictly increasing or
/// strictly decreasing.
pub fn cyclically_ordered(alphabet: &Alphabet, rays: &[PeriodicRay<'_>]) -> bool {
    // a cyclic permutation is monotone iff a single step breaks the trend
    rays.len() < 2
        || successor_steps(alphabet, rays).is_some_and(|(up, down)| up <= 1 || down <= 1)
}

/// True iff some cyclic permutation of `rays` is strictly increasing, i.e. the
/// rays occur in this cyclic order with orientation.
pub fn cyclically_increasing(alphabet: &Alphabet, rays: &[PeriodicRay<'_>]) -> bool {
    rays.len() < 2 || successor_steps(alphabet, rays).is_some_and(|(_, down)| down <= 1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }

    pub fn is_zero(self) -> bool {
        self == Sign::Zero
    }
}

impl std::ops::Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }
}

/// `s_{V,W}(i, j)`: `+1` if `V_i^∞, W_j^∞, V_i^{-∞}, W_j^{-∞}` appear in
/// increasing cyclic order, `-1` if `V_i^∞, W_j^{-∞}, V_i^{-∞}, W_j^∞` do, `0`
/// otherwise (the rays are unlinked or two of them coincide).
///
/// Both words must be nonempty and cyclically reduced.
pub fn sign(alphabet: &Alphabet, v: &Word, w: &Word, (i, j): (usize, usize)) -> Sign {
    let v_fwd = PeriodicRay::at(v, i, Direction::Forward);
    let v_bwd = PeriodicRay::at(v, i, Direction::Backward);
    let w_fwd = PeriodicRay::at(w, j, Direction::Forward);
    let w_bwd = PeriodicRay::at(w, j, Direction::Backward);
    if cyclically_increasing(alphabet, &[v_fwd, w_fwd, v_bwd, w_bwd]) {
        Sign::Positive
    } else if cyclically_increasing(alphabet, &[v_fwd, w_bwd, v_bwd, w_fwd]) {
        Sign::Negative
    } else {
        Sign::Zero
    }
}
