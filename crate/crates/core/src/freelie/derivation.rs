use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::One;

use super::element::{add_scaled, bracket_terms, LyndonWord, Terms};
use super::LieElement;
use crate::error::{check_index, Error, Result};
use crate::word::Alphabet;

/// A derivation of a free Lie algebra, determined by the images of the
/// generators and extended by the Leibniz rule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationTable {
    alphabet: Alphabet,
    images: Vec<LieElement>,
}

impl DerivationTable {
    pub fn new(alphabet: Alphabet, images: Vec<LieElement>) -> Result<Self> {
        if images.len() != alphabet.rank {
            return Err(Error::IndexOutOfRange {
                index: images.len() as i64,
                bound: alphabet.rank,
            });
        }
        for img in &images {
            alphabet.ensure_same(&img.alphabet())?;
        }
        Ok(Self { alphabet, images })
    }

    pub fn zero(alphabet: Alphabet) -> Self {
        Self {
            alphabet,
            images: vec![LieElement::zero(alphabet); alphabet.rank],
        }
    }

    /// The inner derivation `x -> [a, x]`.
    pub fn inner(a: &LieElement) -> Self {
        let alphabet = a.alphabet();
        let images = (1..=alphabet.rank)
            .map(|g| {
                a.bracket(&LieElement::generator(alphabet, g).unwrap())
                    .unwrap()
            })
            .collect();
        Self { alphabet, images }
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn images(&self) -> &[LieElement] {
        &self.images
    }

    pub fn image(&self, index: usize) -> Result<&LieElement> {
        check_index(index, self.alphabet.rank)?;
        Ok(&self.images[index - 1])
    }

    pub fn is_zero(&self) -> bool {
        self.images.iter().all(LieElement::is_zero)
    }

    pub fn apply(&self, e: &LieElement) -> Result<LieElement> {
        self.alphabet.ensure_same(&e.alphabet())?;
        let mut memo = HashMap::new();
        let mut out = LieElement::zero(self.alphabet);
        for (w, c) in e.terms() {
            let img = self.apply_basis(w, &mut memo);
            out.add_assign_scaled(&LieElement::from_terms(self.alphabet, img), c);
        }
        Ok(out)
    }

    fn apply_basis(&self, w: &LyndonWord, memo: &mut HashMap<LyndonWord, Terms>) -> Terms {
        if let Some(t) = memo.get(w) {
            return t.clone();
        }
        let t = match w.split() {
            None => self.images[w.letters()[0] as usize - 1].terms_map().clone(),
            Some((u, v)) => {
                // D[u,v] = [Du, v] + [u, Dv]
                let single = |w: &LyndonWord| Terms::from([(w.clone(), BigInt::one())]);
                let du = self.apply_basis(&u, memo);
                let dv = self.apply_basis(&v, memo);
                let mut t = bracket_terms(&du, &single(&v));
                add_scaled(&mut t, &bracket_terms(&single(&u), &dv), &BigInt::one());
                t
            }
        };
        memo.insert(w.clone(), t.clone());
        t
    }

    /// `[D, E] = D∘E - E∘D`, itself a derivation.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.alphabet.ensure_same(&other.alphabet)?;
        let images = self
            .images
            .iter()
            .zip(&other.images)
            .map(|(d_x, e_x)| Ok(&self.apply(e_x)? - &other.apply(d_x)?))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            alphabet: self.alphabet,
            images,
        })
    }

    pub fn add_scaled(&mut self, other: &Self, c: &BigInt) -> Result<()> {
        self.alphabet.ensure_same(&other.alphabet)?;
        for (a, b) in self.images.iter_mut().zip(&other.images) {
            a.add_assign_scaled(b, c);
        }
        Ok(())
    }
}

/// Free-function form of [`DerivationTable::apply`].
pub fn apply_derivation(d: &DerivationTable, e: &LieElement) -> Result<LieElement> {
    d.apply(e)
}

impl super::expr::LieOps for DerivationTable {
    fn zero_like(&self) -> Self {
        DerivationTable::zero(self.alphabet)
    }
    fn add_scaled(&mut self, other: &Self, c: &BigInt) -> Result<()> {
        DerivationTable::add_scaled(self, other, c)
    }
    fn lie(&self, other: &Self) -> Result<Self> {
        self.commutator(other)
    }
}
