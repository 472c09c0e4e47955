use crate::words::{least_rotation, Alphabet, CyclicWord, Letter, Word};

/// Depth-first enumeration of cyclic words of length `1..=max_len`.
///
/// Reduced linear words are generated in lexicographic order, one length at a
/// time; a word is emitted when it is cyclically reduced and is its own least
/// rotation, so each class appears exactly once. Memory is `O(max_len)`.
#[derive(Clone, Debug)]
pub struct CyclicWords {
    letters: Vec<Letter>,
    q: usize,
    max_len: usize,
    primitive_only: bool,
    len: usize,
    stack: Vec<usize>,
    fresh: bool,
}

impl CyclicWords {
    pub fn new(alphabet: &Alphabet, max_len: usize, primitive_only: bool) -> Self {
        CyclicWords {
            letters: alphabet.letters().collect(),
            q: alphabet.q() as usize,
            max_len,
            primitive_only,
            len: 1,
            stack: Vec::with_capacity(max_len),
            fresh: true,
        }
    }

    fn bar(&self, idx: usize) -> usize {
        (idx + self.q) % (2 * self.q)
    }

    /// Smallest letter index `≥ from` allowed at the end of the current prefix.
    fn next_letter(&self, from: usize) -> Option<usize> {
        let forbidden = self.stack.last().map(|&x| self.bar(x));
        (from..2 * self.q).find(|&x| Some(x) != forbidden)
    }

    fn fill(&mut self) {
        while self.stack.len() < self.len {
            let x = self.next_letter(0).expect("every prefix extends");
            self.stack.push(x);
        }
    }

    /// Moves to the next reduced word of the current length.
    fn advance(&mut self) -> bool {
        if self.fresh {
            self.fresh = false;
            self.fill();
            return true;
        }
        while let Some(last) = self.stack.pop() {
            if let Some(x) = self.next_letter(last + 1) {
                self.stack.push(x);
                self.fill();
                return true;
            }
        }
        false
    }

    fn accept(&self) -> Option<CyclicWord> {
        let n = self.stack.len();
        let (first, last) = (self.stack[0], self.stack[n - 1]);
        if n > 1 && last == self.bar(first) {
            return None;
        }
        let start = least_rotation(&self.stack);
        if (0..n).any(|t| self.stack[(start + t) % n] != self.stack[t]) {
            return None;
        }
        let word = CyclicWord::from_word(&Word::new(self.stack.iter().map(|&x| self.letters[x]).collect()));
        if self.primitive_only && !word.is_primitive() {
            return None;
        }
        Some(word)
    }
}

impl Iterator for CyclicWords {
    type Item = CyclicWord;

    fn next(&mut self) -> Option<CyclicWord> {
        while self.len <= self.max_len {
            if !self.advance() {
                self.len += 1;
                self.fresh = true;
                continue;
            }
            if let Some(word) = self.accept() {
                return Some(word);
            }
        }
        None
    }
}

/// Every primitive cyclic word of length `1..=max_len`, shortest first.
pub fn enumerate_primitive(alphabet: &Alphabet, max_len: usize) -> CyclicWords {
    CyclicWords::new(alphabet, max_len, true)
}

/// Every nonempty cyclic word of length `1..=max_len`, powers included.
pub fn enumerate_cyclic(alphabet: &Alphabet, max_len: usize) -> CyclicWords {
    CyclicWords::new(alphabet, max_len, false)
}
