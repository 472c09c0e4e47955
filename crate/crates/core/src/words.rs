//! Letters, linear words and cyclic words over a symmetric alphabet.
//!
//! A [`Word`] is a plain letter sequence and may be unreduced. A
//! [`CyclicWord`] stores the lexicographically least rotation of a cyclically
//! reduced representative, so two cyclic words are equal exactly when their
//! canonical sequences are.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Compact notation (`aB`) covers this many generators.
pub const COMPACT_LIMIT: u16 = 26;

/// A generator `a_i` or its inverse `ā_i`.
///
/// The derived order puts every generator before every inverse and sorts by
/// index inside each half, i.e. `a < b < … < A < B < …`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    inverse: bool,
    generator: u16,
}

impl Letter {
    /// `generator` is 1-based.
    pub fn new(generator: u16, inverse: bool) -> Self {
        assert!(generator >= 1, "generator indices start at 1");
        Letter { inverse, generator }
    }

    pub fn generator(generator: u16) -> Self {
        Letter::new(generator, false)
    }

    pub fn index(self) -> u16 {
        self.generator
    }

    pub fn is_inverse(self) -> bool {
        self.inverse
    }

    pub fn bar(self) -> Self {
        Letter {
            inverse: !self.inverse,
            generator: self.generator,
        }
    }

    fn compact_char(self) -> Option<char> {
        if self.generator > COMPACT_LIMIT {
            return None;
        }
        let base = if self.inverse { b'A' } else { b'a' };
        Some((base + (self.generator - 1) as u8) as char)
    }

    fn indexed_token(self) -> String {
        format!("{}{}", if self.inverse { 'A' } else { 'a' }, self.generator)
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.compact_char() {
            Some(c) => write!(f, "{c}"),
            None => f.write_str(&self.indexed_token()),
        }
    }
}

/// The alphabet `A_q` with a linear order on its `2q` letters.
///
/// The standard order is `a_1 < … < a_q < ā_1 < … < ā_q`; `rotated` shifts it
/// cyclically, which leaves the induced cyclic order unchanged.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Alphabet {
    q: u16,
    shift: u16,
}

impl Alphabet {
    pub fn new(q: u16) -> Result<Self> {
        if q == 0 {
            return Err(Error::EmptyAlphabet);
        }
        Ok(Alphabet { q, shift: 0 })
    }

    /// Smallest alphabet containing every letter of `words` (at least one generator).
    pub fn covering<'a>(words: impl IntoIterator<Item = &'a Word>) -> Self {
        let q = words
            .into_iter()
            .flat_map(|w| w.letters().iter().map(|l| l.index()))
            .max()
            .unwrap_or(1);
        Alphabet { q, shift: 0 }
    }

    pub fn q(&self) -> u16 {
        self.q
    }

    pub fn size(&self) -> usize {
        2 * self.q as usize
    }

    /// The same letters with the order rotated so that the letter of standard
    /// rank `shift` comes first.
    pub fn rotated(&self, shift: u16) -> Self {
        Alphabet {
            q: self.q,
            shift: ((self.shift as usize + shift as usize) % self.size()) as u16,
        }
    }

    pub fn rank(&self, letter: Letter) -> usize {
        debug_assert!(self.contains(letter));
        let base = if letter.inverse { self.q as usize } else { 0 } + letter.generator as usize - 1;
        (base + self.size() - self.shift as usize) % self.size()
    }

    pub fn contains(&self, letter: Letter) -> bool {
        letter.generator <= self.q
    }

    pub fn check(&self, word: &Word) -> Result<()> {
        match word.letters().iter().find(|l| !self.contains(**l)) {
            Some(l) => Err(Error::LetterOutOfRange {
                index: l.index() as u32,
                q: self.q,
            }),
            None => Ok(()),
        }
    }

    /// Letters in the standard (unrotated) order.
    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (1..=self.q)
            .map(Letter::generator)
            .chain((1..=self.q).map(|g| Letter::new(g, true)))
    }

    /// Renders in compact notation when `q ≤ 26`, indexed notation otherwise.
    pub fn render(&self, word: &Word) -> String {
        if self.q <= COMPACT_LIMIT {
            word.to_string()
        } else {
            word.indexed()
        }
    }

    pub fn parse(&self, text: &str) -> Result<Word> {
        let word: Word = text.parse()?;
        self.check(&word)?;
        Ok(word)
    }
}

/// A finite letter sequence `v_0 … v_{n-1}`. Indices passed to [`Word::at`]
/// are taken modulo the length.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `v_i` with `i` read modulo the length. Panics on the empty word.
    pub fn at(&self, i: isize) -> Letter {
        self.0[i.rem_euclid(self.0.len() as isize) as usize]
    }

    pub fn is_reduced(&self) -> bool {
        self.0.windows(2).all(|p| p[0] != p[1].bar())
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        self.is_reduced()
            && match (self.0.first(), self.0.last()) {
                (Some(&first), Some(&last)) => self.0.len() == 1 || last != first.bar(),
                _ => true,
            }
    }

    pub fn free_reduce(&self) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(self.0.len());
        for &l in &self.0 {
            if out.last() == Some(&l.bar()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word(out)
    }

    /// Free reduction followed by stripping inverse first/last pairs.
    pub fn cyclic_reduce(&self) -> Word {
        let reduced = self.free_reduce();
        let letters = reduced.letters();
        let (mut lo, mut hi) = (0, letters.len());
        while hi - lo >= 2 && letters[hi - 1] == letters[lo].bar() {
            lo += 1;
            hi -= 1;
        }
        Word(letters[lo..hi].to_vec())
    }

    /// `v̄_{n-1} … v̄_0`.
    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.bar()).collect())
    }

    /// `V_i = v_i … v_{n-1} v_0 … v_{i-1}`.
    pub fn rotate(&self, i: isize) -> Result<Word> {
        if self.0.is_empty() {
            return Err(Error::EmptyRotation);
        }
        let mut letters = self.0.clone();
        letters.rotate_left(i.rem_euclid(self.0.len() as isize) as usize);
        Ok(Word(letters))
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// `V^k` as a linear word (plain repetition).
    pub fn repeat(&self, k: usize) -> Word {
        Word(self.0.repeat(k))
    }

    /// Whether both words define the same cyclic word.
    pub fn is_conjugate(&self, other: &Word) -> bool {
        CyclicWord::from_word(self) == CyclicWord::from_word(other)
    }

    /// The letters `v_i v_{i+1} … v_{i+len-1}`, indices cyclic.
    pub fn arc(&self, start: usize, len: usize) -> Word {
        let n = self.0.len();
        Word((0..len).map(|t| self.0[(start + t) % n]).collect())
    }

    /// Dot-separated indexed notation, e.g. `a1.a2.A1`.
    pub fn indexed(&self) -> String {
        if self.0.is_empty() {
            return "1".to_owned();
        }
        self.0
            .iter()
            .map(|l| l.indexed_token())
            .collect::<Vec<_>>()
            .join(".")
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        if self.0.iter().any(|l| l.index() > COMPACT_LIMIT) {
            return f.write_str(&self.indexed());
        }
        for l in &self.0 {
            write!(f, "{}", l.compact_char().unwrap())?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Accepts compact words (`aabB`), indexed words (`a1.a2.A1`), and `1` or
    /// the empty string for the identity.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "1" {
            return Ok(Word::empty());
        }
        if s.contains(|c: char| c.is_ascii_digit() || c == '.') {
            return s.split('.').map(parse_indexed_token).collect::<Result<_>>().map(Word);
        }
        s.chars()
            .map(|c| match c {
                'a'..='z' => Ok(Letter::new(c as u16 - 'a' as u16 + 1, false)),
                'A'..='Z' => Ok(Letter::new(c as u16 - 'A' as u16 + 1, true)),
                _ => Err(Error::Parse {
                    token: c.to_string(),
                    reason: "expected an ASCII letter",
                }),
            })
            .collect::<Result<_>>()
            .map(Word)
    }
}

fn parse_indexed_token(token: &str) -> Result<Letter> {
    let bad = |reason| Error::Parse {
        token: token.to_owned(),
        reason,
    };
    let mut chars = token.chars();
    let inverse = match chars.next() {
        Some('a') => false,
        Some('A') => true,
        _ => return Err(bad("indexed tokens look like aN or AN")),
    };
    let digits = chars.as_str();
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad("indexed tokens look like aN or AN"));
    }
    match digits.parse::<u16>() {
        Ok(g) if g >= 1 => Ok(Letter::new(g, inverse)),
        _ => Err(bad("generator index must be between 1 and 65535")),
    }
}

/// Start index of the lexicographically least rotation (two-pointer scan, O(n)).
pub fn least_rotation<T: Ord>(s: &[T]) -> usize {
    let n = s.len();
    let (mut i, mut j, mut k) = (0, 1, 0);
    while i < n && j < n && k < n {
        let a = &s[(i + k) % n];
        let b = &s[(j + k) % n];
        if a == b {
            k += 1;
            continue;
        }
        if a > b {
            i += k + 1;
        } else {
            j += k + 1;
        }
        if i == j {
            j += 1;
        }
        k = 0;
    }
    i.min(j)
}

/// A conjugacy class of the free group, stored as its canonical representative.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicWord {
    canonical: Word,
}

impl CyclicWord {
    pub fn empty() -> Self {
        CyclicWord::default()
    }

    pub fn from_word(word: &Word) -> Self {
        let mut letters = word.cyclic_reduce().into_letters();
        let start = least_rotation(&letters);
        letters.rotate_left(start);
        CyclicWord {
            canonical: Word(letters),
        }
    }

    /// The canonical linear representative.
    pub fn word(&self) -> &Word {
        &self.canonical
    }

    pub fn len(&self) -> usize {
        self.canonical.len()
    }

    pub fn is_empty(&self) -> bool {
        self.canonical.is_empty()
    }

    /// Primitive `W` and `k ≥ 1` with `self = W^k`.
    pub fn primitive_root(&self) -> Result<(CyclicWord, usize)> {
        let letters = self.canonical.letters();
        let n = letters.len();
        if n == 0 {
            return Err(Error::EmptyWord("primitive root"));
        }
        let period = (1..=n)
            .filter(|d| n % d == 0)
            .find(|&d| (d..n).all(|t| letters[t] == letters[t - d]))
            .unwrap_or(n);
        // a prefix of a least rotation that tiles it is itself a least rotation
        let root = CyclicWord {
            canonical: Word(letters[..period].to_vec()),
        };
        Ok((root, n / period))
    }

    pub fn is_primitive(&self) -> bool {
        matches!(self.primitive_root(), Ok((_, 1)))
    }

    /// `V^k`; negative `k` gives `V̄^{-k}` and zero gives the empty word.
    pub fn pow(&self, k: i64) -> CyclicWord {
        let base = if k < 0 {
            self.canonical.inverse()
        } else {
            self.canonical.clone()
        };
        CyclicWord::from_word(&base.repeat(k.unsigned_abs() as usize))
    }

    pub fn inverse(&self) -> CyclicWord {
        self.pow(-1)
    }
}

impl From<Word> for CyclicWord {
    fn from(word: Word) -> Self {
        CyclicWord::from_word(&word)
    }
}

impl FromStr for CyclicWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(CyclicWord::from_word(&s.parse()?))
    }
}

impl fmt::Display for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.canonical.fmt(f)
    }
}

impl fmt::Debug for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CyclicWord({self})")
    }
}
