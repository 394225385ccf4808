//! Braid words on `n` strands, the Artin action on `F_n`, strand deletion
//! and doubling, linking numbers and Brunnian tests.

mod parse;
mod theta;

use std::fmt;

use crate::error::{check_index, Error, Result};
use crate::word::{Alphabet, FreeWord, GroupHom};

pub use theta::{theta, ThetaMap};

/// `σ_index^sign`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub index: usize,
    pub sign: i8,
}

impl Crossing {
    pub fn new(index: usize, sign: i8) -> Self {
        debug_assert!(sign == 1 || sign == -1);
        Self { index, sign }
    }

    pub fn inverse(self) -> Self {
        Self {
            index: self.index,
            sign: -self.sign,
        }
    }
}

/// A word in the crossings `σ_1..σ_{n-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SigmaBraid {
    strands: usize,
    word: Vec<Crossing>,
}

/// Alphabet of the free group the braid group acts on.
pub fn action_alphabet(strands: usize) -> Alphabet {
    Alphabet::new('x', strands)
}

impl SigmaBraid {
    pub fn new(strands: usize, word: Vec<Crossing>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::IndexOutOfRange { index: 0, bound: 1 });
        }
        for c in &word {
            check_index(c.index, strands - 1)?;
        }
        Ok(Self { strands, word })
    }

    pub fn identity(strands: usize) -> Self {
        Self {
            strands: strands.max(1),
            word: Vec::new(),
        }
    }

    /// `σ_i^sign` on `strands` strands.
    pub fn sigma(strands: usize, i: usize, sign: i8) -> Result<Self> {
        Self::new(strands, vec![Crossing::new(i, sign)])
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    fn same_strands(&self, other: &SigmaBraid) -> Result<()> {
        if self.strands == other.strands {
            Ok(())
        } else {
            Err(Error::LevelMismatch {
                expected: self.strands,
                found: other.strands,
            })
        }
    }

    /// Appends `c`, cancelling it against a trailing inverse.
    fn push(&mut self, c: Crossing) {
        if self.word.last() == Some(&c.inverse()) {
            self.word.pop();
        } else {
            self.word.push(c);
        }
    }

    /// Concatenation with adjacent `σσ^-1` pairs cancelled at the junction.
    pub fn multiply(&self, other: &SigmaBraid) -> Result<SigmaBraid> {
        self.same_strands(other)?;
        let mut out = self.clone();
        for &c in &other.word {
            out.push(c);
        }
        Ok(out)
    }

    pub fn inverse(&self) -> SigmaBraid {
        SigmaBraid {
            strands: self.strands,
            word: self.word.iter().rev().map(|c| c.inverse()).collect(),
        }
    }

    pub fn pow(&self, k: i64) -> SigmaBraid {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = SigmaBraid::identity(self.strands);
        for _ in 0..k.unsigned_abs() {
            for &c in &base.word {
                out.push(c);
            }
        }
        out
    }

    /// `a b a^-1 b^-1`.
    pub fn commutator(&self, other: &SigmaBraid) -> Result<SigmaBraid> {
        self.multiply(other)?
            .multiply(&self.inverse())?
            .multiply(&other.inverse())
    }

    /// Cancels every adjacent `σσ^-1` pair.
    pub fn free_reduce(&self) -> SigmaBraid {
        let mut out = SigmaBraid::identity(self.strands);
        for &c in &self.word {
            out.push(c);
        }
        out
    }

    /// `perm[k-1]` is the final position of the strand starting at `k`.
    pub fn permutation(&self) -> Vec<usize> {
        // at[p] = strand currently at position p
        let mut at: Vec<usize> = (1..=self.strands).collect();
        for c in &self.word {
            at.swap(c.index - 1, c.index);
        }
        let mut perm = vec![0; self.strands];
        for (p, &s) in at.iter().enumerate() {
            perm[s - 1] = p + 1;
        }
        perm
    }

    pub fn is_pure(&self) -> bool {
        self.permutation()
            .iter()
            .enumerate()
            .all(|(k, &p)| p == k + 1)
    }

    /// The action on `F_n = <x_1..x_n>`: `σ_i` sends `x_i -> x_i x_{i+1} x_i^-1`,
    /// `x_{i+1} -> x_i`. Letters compose left to right as automorphisms
    /// `φ_{c_1} ∘ φ_{c_2} ∘ ...`.
    pub fn artin_action(&self) -> GroupHom {
        let mut h = GroupHom::identity(action_alphabet(self.strands));
        let table = h.images_mut();
        for c in &self.word {
            let (i, j) = (c.index - 1, c.index);
            if c.sign > 0 {
                let mut xi = table[i].clone();
                xi.append(&table[j]);
                xi.append_inverse(&table[i]);
                table[j] = std::mem::replace(&mut table[i], xi);
            } else {
                let mut new_j = table[j].invert();
                new_j.append(&table[i]);
                new_j.append(&table[j]);
                table[i] = std::mem::replace(&mut table[j], new_j);
            }
        }
        h
    }

    /// Triviality via faithfulness of the Artin action.
    pub fn is_trivial(&self) -> bool {
        self.word.is_empty() || self.artin_action().is_identity()
    }

    /// Equality in the braid group.
    pub fn equals(&self, other: &SigmaBraid) -> Result<bool> {
        self.same_strands(other)?;
        Ok(self.artin_action() == other.artin_action())
    }

    /// Removes the strand starting at position `k`.
    pub fn delete_strand(&self, k: usize) -> Result<SigmaBraid> {
        check_index(k, self.strands)?;
        if self.strands == 1 {
            return Err(Error::IndexOutOfRange {
                index: k as i64,
                bound: 0,
            });
        }
        let mut p = k;
        let mut word = Vec::with_capacity(self.word.len());
        for c in &self.word {
            let i = c.index;
            if i == p {
                p = i + 1;
            } else if i + 1 == p {
                p = i;
            } else {
                let idx = if i > p { i - 1 } else { i };
                word.push(Crossing::new(idx, c.sign));
            }
        }
        Ok(SigmaBraid {
            strands: self.strands - 1,
            word,
        })
    }

    /// Replaces the strand starting at `k` by two parallel copies.
    pub fn double_strand(&self, k: usize) -> Result<SigmaBraid> {
        check_index(k, self.strands)?;
        let mut p = k;
        let mut word = Vec::with_capacity(2 * self.word.len());
        for c in &self.word {
            let (i, e) = (c.index, c.sign);
            if i + 1 < p {
                word.push(Crossing::new(i, e));
            } else if i > p {
                word.push(Crossing::new(i + 1, e));
            } else if i == p {
                word.push(Crossing::new(p + 1, e));
                word.push(Crossing::new(p, e));
                p += 1;
            } else {
                word.push(Crossing::new(p - 1, e));
                word.push(Crossing::new(p, e));
                p -= 1;
            }
        }
        Ok(SigmaBraid {
            strands: self.strands + 1,
            word,
        })
    }

    /// Text form with the strand count, e.g. `n=3: s1 s2^-1`.
    pub fn to_prefixed_string(&self) -> String {
        format!("n={}: {}", self.strands, self)
    }

    /// Parses crossing words; see [`parse`](self::parse) for the syntax. A
    /// leading `n=K:` fixes the strand count, otherwise `strands` must.
    pub fn parse(text: &str, strands: Option<usize>) -> Result<SigmaBraid> {
        parse::parse_braid(text, strands)
    }
}

impl fmt::Display for SigmaBraid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return write!(f, "1");
        }
        for (k, c) in self.word.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "s{}", c.index)?;
            if c.sign < 0 {
                write!(f, "^-1")?;
            }
        }
        Ok(())
    }
}

/// A braid whose permutation is the identity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PureBraid(SigmaBraid);

impl PureBraid {
    pub fn new(b: SigmaBraid) -> Result<Self> {
        if b.is_pure() {
            Ok(Self(b))
        } else {
            Err(Error::NotPure(b.permutation()))
        }
    }

    pub fn identity(strands: usize) -> Self {
        Self(SigmaBraid::identity(strands))
    }

    /// `A_{r,s} = (σ_{s-1}..σ_{r+1}) σ_r^2 (σ_{r+1}^-1..σ_{s-1}^-1)`.
    pub fn a_generator(r: usize, s: usize, strands: usize) -> Result<Self> {
        check_index(s, strands)?;
        if r == 0 || r >= s {
            return Err(Error::IndexOutOfRange {
                index: r as i64,
                bound: s.saturating_sub(1),
            });
        }
        let mut word: Vec<Crossing> = (r + 1..s).rev().map(|i| Crossing::new(i, 1)).collect();
        word.push(Crossing::new(r, 1));
        word.push(Crossing::new(r, 1));
        word.extend((r + 1..s).map(|i| Crossing::new(i, -1)));
        Ok(Self(SigmaBraid { strands, word }))
    }

    pub fn strands(&self) -> usize {
        self.0.strands
    }

    pub fn braid(&self) -> &SigmaBraid {
        &self.0
    }

    pub fn into_braid(self) -> SigmaBraid {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn multiply(&self, other: &PureBraid) -> Result<PureBraid> {
        Ok(Self(self.0.multiply(&other.0)?))
    }

    pub fn inverse(&self) -> PureBraid {
        Self(self.0.inverse())
    }

    pub fn pow(&self, k: i64) -> PureBraid {
        Self(self.0.pow(k))
    }

    pub fn commutator(&self, other: &PureBraid) -> Result<PureBraid> {
        Ok(Self(self.0.commutator(&other.0)?))
    }

    pub fn is_trivial(&self) -> bool {
        self.0.is_trivial()
    }

    pub fn equals(&self, other: &PureBraid) -> Result<bool> {
        self.0.equals(&other.0)
    }

    pub fn delete_strand(&self, k: usize) -> Result<PureBraid> {
        Ok(Self(self.0.delete_strand(k)?))
    }

    pub fn double_strand(&self, k: usize) -> Result<PureBraid> {
        Ok(Self(self.0.double_strand(k)?))
    }

    /// Symmetric matrix of linking numbers, 0-indexed.
    pub fn linking_matrix(&self) -> Result<Vec<Vec<i64>>> {
        let n = self.strands();
        let mut count = vec![vec![0i64; n]; n];
        let mut at: Vec<usize> = (0..n).collect();
        for c in &self.0.word {
            let (a, b) = (at[c.index - 1], at[c.index]);
            count[a][b] += c.sign as i64;
            count[b][a] += c.sign as i64;
            at.swap(c.index - 1, c.index);
        }
        for (a, row) in count.iter_mut().enumerate() {
            for (b, v) in row.iter_mut().enumerate() {
                if *v % 2 != 0 {
                    return Err(Error::Internal(format!(
                        "odd crossing count between strands {} and {}",
                        a + 1,
                        b + 1
                    )));
                }
                *v /= 2;
            }
        }
        Ok(count)
    }

    /// Trivial after deleting any single strand.
    pub fn is_brunnian(&self) -> bool {
        self.deletions_trivial(1)
    }

    /// Trivial after deleting any strand other than the first.
    pub fn is_qbrunnian(&self) -> bool {
        self.deletions_trivial(2)
    }

    fn deletions_trivial(&self, from: usize) -> bool {
        if self.strands() == 1 {
            return true;
        }
        (from..=self.strands()).all(|k| {
            self.0
                .delete_strand(k)
                .map(|b| b.is_trivial())
                .unwrap_or(false)
        })
    }

    pub fn parse(text: &str, strands: Option<usize>) -> Result<PureBraid> {
        PureBraid::new(SigmaBraid::parse(text, strands)?)
    }
}

impl fmt::Display for PureBraid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Free-function forms of the main operations.
pub fn permutation(b: &SigmaBraid) -> Vec<usize> {
    b.permutation()
}

pub fn a_generator(r: usize, s: usize, strands: usize) -> Result<PureBraid> {
    PureBraid::a_generator(r, s, strands)
}

pub fn artin_action(b: &SigmaBraid) -> GroupHom {
    b.artin_action()
}

pub fn braid_is_trivial(b: &SigmaBraid) -> bool {
    b.is_trivial()
}

pub fn delete_strand(b: &SigmaBraid, k: usize) -> Result<SigmaBraid> {
    b.delete_strand(k)
}

pub fn double_strand(b: &PureBraid, k: usize) -> Result<PureBraid> {
    b.double_strand(k)
}

pub fn linking_matrix(b: &PureBraid) -> Result<Vec<Vec<i64>>> {
    b.linking_matrix()
}

pub fn is_brunnian(b: &PureBraid) -> bool {
    b.is_brunnian()
}

pub fn is_qbrunnian(b: &PureBraid) -> bool {
    b.is_qbrunnian()
}

/// Image of a free-group generator under the action, as a helper for
/// inspecting `artin_action` tables.
pub fn action_image(b: &SigmaBraid, x: usize) -> Result<FreeWord> {
    Ok(b.artin_action().image(x)?.clone())
}
