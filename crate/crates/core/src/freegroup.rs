//! Reduced words in the free group `F = F(A_1, ..., A_g, B_1, ..., B_g)`.
//!
//! Every [`Word`] is freely reduced at all times. Words carry the genus of
//! the [`Surface`] they were built for, and mixing words from different
//! genera panics.
//!
//! Text syntax: whitespace-separated tokens, `A3` is `A_3`, `a3` is its
//! inverse, likewise `B3`/`b3`; the literal `1` is the empty word.

use std::fmt;
use std::ops::Mul;

use rand::Rng;

use crate::error::{Error, Result};

/// Ambient context: a closed oriented surface of genus `g >= 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Surface {
    genus: u32,
}

impl Surface {
    pub fn new(genus: u32) -> Result<Self> {
        if genus < 2 {
            return Err(Error::InvalidGenus(genus));
        }
        Ok(Surface { genus })
    }

    pub fn genus(self) -> u32 {
        self.genus
    }

    /// Rank of the free group, `2g`.
    pub fn rank(self) -> usize {
        2 * self.genus as usize
    }

    /// `2g - 2`, minus the Euler characteristic.
    pub fn euler_abs(self) -> i64 {
        2 * self.genus as i64 - 2
    }

    /// Generators in basis order `A_1, ..., A_g, B_1, ..., B_g`.
    pub fn generators(self) -> impl Iterator<Item = Generator> {
        let g = self.genus;
        (1..=g).map(Generator::a).chain((1..=g).map(Generator::b))
    }

    pub fn identity(self) -> Word {
        Word { surface: self, letters: Vec::new() }
    }

    pub fn word(self, text: &str) -> Result<Word> {
        Word::parse(self, text)
    }

    pub fn generator(self, gen: Generator) -> Word {
        self.check(gen);
        Word { surface: self, letters: vec![Letter::new(gen, false)] }
    }

    /// The surface word `[A_1,B_1]...[A_g,B_g]`.
    pub fn zeta(self) -> Word {
        let mut letters = Vec::with_capacity(4 * self.genus as usize);
        for k in 1..=self.genus {
            letters.push(Letter::new(Generator::a(k), false));
            letters.push(Letter::new(Generator::b(k), false));
            letters.push(Letter::new(Generator::a(k), true));
            letters.push(Letter::new(Generator::b(k), true));
        }
        Word { surface: self, letters }
    }

    /// Uniformly random reduced word of length `0..=max_len`.
    pub fn random_word<R: Rng + ?Sized>(self, rng: &mut R, max_len: usize) -> Word {
        let len = rng.gen_range(0..=max_len);
        let rank = self.rank();
        let mut letters: Vec<Letter> = Vec::with_capacity(len);
        while letters.len() < len {
            let gen = Generator::from_basis_index(self, rng.gen_range(0..rank));
            let letter = Letter::new(gen, rng.gen_bool(0.5));
            if letters.last().is_some_and(|l| l.cancels(letter)) {
                continue;
            }
            letters.push(letter);
        }
        Word { surface: self, letters }
    }

    fn check(self, gen: Generator) {
        assert!(gen.index >= 1 && gen.index <= self.genus, "generator {gen} outside genus {}", self.genus);
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    A,
    B,
}

/// `A_i` or `B_i`, with a 1-based index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generator {
    pub kind: Kind,
    pub index: u32,
}

impl Generator {
    pub fn a(index: u32) -> Self {
        Generator { kind: Kind::A, index }
    }

    pub fn b(index: u32) -> Self {
        Generator { kind: Kind::B, index }
    }

    /// Position in the basis `A_1, ..., A_g, B_1, ..., B_g` (0-based).
    pub fn basis_index(self, surface: Surface) -> usize {
        let offset = match self.kind {
            Kind::A => 0,
            Kind::B => surface.genus as usize,
        };
        offset + self.index as usize - 1
    }

    pub fn from_basis_index(surface: Surface, j: usize) -> Self {
        let g = surface.genus as usize;
        assert!(j < 2 * g, "basis index {j} out of range");
        if j < g {
            Generator::a(j as u32 + 1)
        } else {
            Generator::b((j - g) as u32 + 1)
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            Kind::A => write!(f, "A{}", self.index),
            Kind::B => write!(f, "B{}", self.index),
        }
    }
}

/// A generator or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub gen: Generator,
    pub inverted: bool,
}

impl Letter {
    pub fn new(gen: Generator, inverted: bool) -> Self {
        Letter { gen, inverted }
    }

    /// `+1` or `-1`.
    pub fn sign(self) -> i64 {
        if self.inverted {
            -1
        } else {
            1
        }
    }

    pub fn inverse(self) -> Self {
        Letter { gen: self.gen, inverted: !self.inverted }
    }

    pub fn cancels(self, other: Letter) -> bool {
        self.gen == other.gen && self.inverted != other.inverted
    }

    fn parse(surface: Surface, token: &str) -> Result<Self> {
        let bad = |reason: &str| Error::Token { token: token.to_string(), reason: reason.to_string() };
        let mut chars = token.chars();
        let (kind, inverted) = match chars.next() {
            Some('A') => (Kind::A, false),
            Some('a') => (Kind::A, true),
            Some('B') => (Kind::B, false),
            Some('b') => (Kind::B, true),
            _ => return Err(bad("expected A, a, B or b followed by an index")),
        };
        let digits = chars.as_str();
        if digits.is_empty() || !digits.bytes().all(|c| c.is_ascii_digit()) {
            return Err(bad("missing or malformed index"));
        }
        let index: u32 = digits.parse().map_err(|_| bad("index too large"))?;
        if index == 0 || index > surface.genus {
            return Err(bad(&format!("index outside 1..{}", surface.genus)));
        }
        Ok(Letter::new(Generator { kind, index }, inverted))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match (self.gen.kind, self.inverted) {
            (Kind::A, false) => 'A',
            (Kind::A, true) => 'a',
            (Kind::B, false) => 'B',
            (Kind::B, true) => 'b',
        };
        write!(f, "{c}{}", self.gen.index)
    }
}

/// A freely reduced word. The empty word is the identity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word {
    surface: Surface,
    letters: Vec<Letter>,
}

impl Word {
    /// Freely reduces an arbitrary letter sequence.
    pub fn reduce<I: IntoIterator<Item = Letter>>(surface: Surface, raw: I) -> Word {
        let mut letters: Vec<Letter> = Vec::new();
        for l in raw {
            surface.check(l.gen);
            if letters.last().is_some_and(|top| top.cancels(l)) {
                letters.pop();
            } else {
                letters.push(l);
            }
        }
        Word { surface, letters }
    }

    pub fn parse(surface: Surface, text: &str) -> Result<Word> {
        let mut raw = Vec::new();
        for token in text.split_whitespace() {
            if token == "1" {
                continue;
            }
            raw.push(Letter::parse(surface, token)?);
        }
        Ok(Word::reduce(surface, raw))
    }

    pub fn surface(&self) -> Surface {
        self.surface
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn multiply(&self, other: &Word) -> Word {
        self.same_surface(other);
        // Cancel at the seam only; both halves are already reduced.
        let mut cut = 0;
        while cut < self.len().min(other.len())
            && self.letters[self.len() - 1 - cut].cancels(other.letters[cut])
        {
            cut += 1;
        }
        let mut letters = Vec::with_capacity(self.len() + other.len() - 2 * cut);
        letters.extend_from_slice(&self.letters[..self.len() - cut]);
        letters.extend_from_slice(&other.letters[cut..]);
        Word { surface: self.surface, letters }
    }

    pub fn inverse(&self) -> Word {
        Word { surface: self.surface, letters: self.letters.iter().rev().map(|l| l.inverse()).collect() }
    }

    /// `x y x^-1 y^-1`.
    pub fn commutator(x: &Word, y: &Word) -> Word {
        x.multiply(y).multiply(&x.inverse()).multiply(&y.inverse())
    }

    /// `u self u^-1`.
    pub fn conjugate_by(&self, u: &Word) -> Word {
        u.multiply(self).multiply(&u.inverse())
    }

    pub fn pow(&self, n: i64) -> Word {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut out = self.surface.identity();
        for _ in 0..n.unsigned_abs() {
            out = out.multiply(&base);
        }
        out
    }

    /// Splits the word as `prefix * core * prefix^-1` with `core` cyclically
    /// reduced. Returns `(core, prefix)`.
    pub fn cyclic_reduce(&self) -> (Word, Word) {
        let n = self.len();
        let mut i = 0;
        while 2 * i + 1 < n && self.letters[i].cancels(self.letters[n - 1 - i]) {
            i += 1;
        }
        let core = Word { surface: self.surface, letters: self.letters[i..n - i].to_vec() };
        let prefix = Word { surface: self.surface, letters: self.letters[..i].to_vec() };
        (core, prefix)
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        match (self.letters.first(), self.letters.last()) {
            (Some(first), Some(last)) => self.len() == 1 || !first.cancels(*last),
            _ => true,
        }
    }

    /// Returns some `u` with `w1 = u w2 u^-1`, or `None` when the two words
    /// are not conjugate.
    pub fn conjugator(w1: &Word, w2: &Word) -> Option<Word> {
        w1.same_surface(w2);
        let (c1, p1) = w1.cyclic_reduce();
        let (c2, p2) = w2.cyclic_reduce();
        let n = c1.len();
        if n != c2.len() {
            return None;
        }
        // c2 = x y and c1 = y x give c1 = x^-1 c2 x.
        let shift = (0..n.max(1)).find(|&r| (0..n).all(|i| c1.letters[i] == c2.letters[(i + r) % n]))?;
        let x = Word { surface: w1.surface, letters: c2.letters[..shift.min(n)].to_vec() };
        Some(p1.multiply(&x.inverse()).multiply(&p2.inverse()))
    }

    fn same_surface(&self, other: &Word) {
        assert_eq!(
            self.surface.genus, other.surface.genus,
            "cannot mix words of genus {} and {}",
            self.surface.genus, other.surface.genus
        );
    }
}

impl Mul for &Word {
    type Output = Word;

    fn mul(self, rhs: &Word) -> Word {
        self.multiply(rhs)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}
