//! Free groups on an indexed alphabet.
//!
//! Words are stored run-length encoded as `(generator, exponent)` syllables
//! and are always freely reduced: adjacent syllables carry distinct
//! generators and every exponent is nonzero.

mod magnus;
mod parse;

use std::fmt;

use serde::Serialize;

use crate::error::{check_index, Error, Result};

pub use magnus::{gr_leading_term, lcs_degree, magnus_expand, NCPolynomial};

/// A letter of an alphabet, 1-based.
pub type Letter = u16;

/// A named, finite set of generators `symbol1 .. symbol{rank}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Alphabet {
    pub symbol: char,
    pub rank: usize,
}

impl Alphabet {
    pub const fn new(symbol: char, rank: usize) -> Self {
        Self { symbol, rank }
    }

    pub(crate) fn ensure_same(&self, other: &Alphabet) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch {
                left: self.to_string(),
                right: other.to_string(),
            })
        }
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F[{}1..{}{}]", self.symbol, self.symbol, self.rank)
    }
}

/// A freely reduced word.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FreeWord {
    alphabet: Alphabet,
    syllables: Vec<(Letter, i64)>,
}

impl FreeWord {
    pub fn identity(alphabet: Alphabet) -> Self {
        Self {
            alphabet,
            syllables: Vec::new(),
        }
    }

    pub fn generator(alphabet: Alphabet, index: usize) -> Result<Self> {
        Self::power_of(alphabet, index, 1)
    }

    pub fn power_of(alphabet: Alphabet, index: usize, exp: i64) -> Result<Self> {
        check_index(index, alphabet.rank)?;
        let mut w = Self::identity(alphabet);
        w.push(index as Letter, exp);
        Ok(w)
    }

    /// Freely reduces a raw sequence of `(generator, exponent)` pairs.
    pub fn reduce<I>(alphabet: Alphabet, letters: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, i64)>,
    {
        let mut w = Self::identity(alphabet);
        for (g, e) in letters {
            check_index(g, alphabet.rank)?;
            w.push(g as Letter, e);
        }
        Ok(w)
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn syllables(&self) -> &[(Letter, i64)] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Length counted with multiplicity.
    pub fn len(&self) -> usize {
        self.syllables
            .iter()
            .map(|&(_, e)| e.unsigned_abs() as usize)
            .sum()
    }

    pub fn is_empty(&self) -> bool {
        self.is_identity()
    }

    /// Expands the syllables into single letters `(g, ±1)`.
    pub fn letters(&self) -> impl Iterator<Item = (Letter, i64)> + '_ {
        self.syllables
            .iter()
            .flat_map(|&(g, e)| std::iter::repeat_n((g, e.signum()), e.unsigned_abs() as usize))
    }

    /// Stack-style append keeping the word reduced.
    pub(crate) fn push(&mut self, g: Letter, e: i64) {
        if e == 0 {
            return;
        }
        match self.syllables.last_mut() {
            Some(last) if last.0 == g => {
                last.1 += e;
                if last.1 == 0 {
                    self.syllables.pop();
                }
            }
            _ => self.syllables.push((g, e)),
        }
    }

    pub(crate) fn append(&mut self, other: &FreeWord) {
        let mut rest = other.syllables.iter();
        // Cancellation only happens at the junction.
        for &(g, e) in rest.by_ref() {
            let before = self.syllables.len();
            self.push(g, e);
            if self.syllables.len() >= before {
                break;
            }
        }
        self.syllables.extend(rest.copied());
    }

    pub(crate) fn append_inverse(&mut self, other: &FreeWord) {
        let mut rest = other.syllables.iter().rev();
        for &(g, e) in rest.by_ref() {
            let before = self.syllables.len();
            self.push(g, -e);
            if self.syllables.len() >= before {
                break;
            }
        }
        self.syllables.extend(rest.map(|&(g, e)| (g, -e)));
    }

    pub fn multiply(&self, other: &FreeWord) -> Result<FreeWord> {
        self.alphabet.ensure_same(&other.alphabet)?;
        let mut w = self.clone();
        w.append(other);
        Ok(w)
    }

    pub fn invert(&self) -> FreeWord {
        FreeWord {
            alphabet: self.alphabet,
            syllables: self.syllables.iter().rev().map(|&(g, e)| (g, -e)).collect(),
        }
    }

    /// `u v u^-1 v^-1`.
    pub fn commutator(&self, other: &FreeWord) -> Result<FreeWord> {
        self.alphabet.ensure_same(&other.alphabet)?;
        let mut w = self.clone();
        w.append(other);
        w.append_inverse(self);
        w.append_inverse(other);
        Ok(w)
    }

    pub fn pow(&self, k: i64) -> FreeWord {
        let base = if k < 0 { self.invert() } else { self.clone() };
        let mut w = FreeWord::identity(self.alphabet);
        for _ in 0..k.unsigned_abs() {
            w.append(&base);
        }
        w
    }

    /// Exponent sum of each generator, indexed from 0.
    pub fn exponent_sums(&self) -> Vec<i64> {
        let mut sums = vec![0; self.alphabet.rank];
        for &(g, e) in &self.syllables {
            sums[g as usize - 1] += e;
        }
        sums
    }

    pub fn parse(text: &str, alphabet: Alphabet) -> Result<FreeWord> {
        parse::parse_word(text, alphabet)
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syllables.is_empty() {
            return write!(f, "1");
        }
        for (k, &(g, e)) in self.syllables.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}{}", self.alphabet.symbol, g)?;
            if e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// A homomorphism of free groups given by the images of the source generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupHom {
    source: Alphabet,
    target: Alphabet,
    images: Vec<FreeWord>,
}

impl GroupHom {
    pub fn new(source: Alphabet, target: Alphabet, images: Vec<FreeWord>) -> Result<Self> {
        if images.len() != source.rank {
            return Err(Error::IndexOutOfRange {
                index: images.len() as i64,
                bound: source.rank,
            });
        }
        for w in &images {
            target.ensure_same(&w.alphabet)?;
        }
        Ok(Self {
            source,
            target,
            images,
        })
    }

    pub fn identity(alphabet: Alphabet) -> Self {
        let images = (1..=alphabet.rank)
            .map(|g| {
                let mut w = FreeWord::identity(alphabet);
                w.push(g as Letter, 1);
                w
            })
            .collect();
        Self {
            source: alphabet,
            target: alphabet,
            images,
        }
    }

    pub fn source(&self) -> Alphabet {
        self.source
    }

    pub fn target(&self) -> Alphabet {
        self.target
    }

    pub fn images(&self) -> &[FreeWord] {
        &self.images
    }

    pub fn image(&self, index: usize) -> Result<&FreeWord> {
        check_index(index, self.source.rank)?;
        Ok(&self.images[index - 1])
    }

    pub(crate) fn images_mut(&mut self) -> &mut [FreeWord] {
        &mut self.images
    }

    pub fn apply(&self, w: &FreeWord) -> Result<FreeWord> {
        self.source.ensure_same(&w.alphabet)?;
        let mut out = FreeWord::identity(self.target);
        for &(g, e) in &w.syllables {
            let image = &self.images[g as usize - 1];
            for _ in 0..e.unsigned_abs() {
                if e > 0 {
                    out.append(image);
                } else {
                    out.append_inverse(image);
                }
            }
        }
        Ok(out)
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &GroupHom) -> Result<GroupHom> {
        self.source.ensure_same(&inner.target)?;
        let images = inner
            .images
            .iter()
            .map(|w| self.apply(w))
            .collect::<Result<Vec<_>>>()?;
        Ok(GroupHom {
            source: inner.source,
            target: self.target,
            images,
        })
    }

    /// True when every generator is sent to itself.
    pub fn is_identity(&self) -> bool {
        self.source == self.target
            && self
                .images
                .iter()
                .enumerate()
                .all(|(k, w)| w.syllables.len() == 1 && w.syllables[0] == ((k + 1) as Letter, 1))
    }
}

/// Free function form of [`GroupHom::apply`].
pub fn apply_hom(h: &GroupHom, w: &FreeWord) -> Result<FreeWord> {
    h.apply(w)
}
