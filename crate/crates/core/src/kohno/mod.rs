//! The graded Lie algebra of the pure braid group `P_n`.
//!
//! Elements are stored in the normal form `⊕_{k=2..n} L[B_{1,k}, .., B_{k-1,k}]`:
//! component `k` is free on the generators ending at strand `k`, and a lower
//! component `j < k` acts on component `k` by derivations. On generators,
//! `B_{i,j}` sends `B_{i,k} -> [B_{i,k}, B_{j,k}]`, `B_{j,k} -> [B_{j,k}, B_{i,k}]`
//! and kills the rest.

mod derivation;
mod oracle;
mod relations;
mod theta;

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::rc::Rc;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{check_index, Error, Result};
use crate::freelie::{
    lyndon::bracketing, lyndon_words, witt_rank, write_coefficient, DerivationTable, LieElement,
    LieOps, LyndonWord,
};
use crate::word::{Alphabet, Letter};

pub use derivation::{derivation_rep, free_alphabet, AdRankReport, DerivationRep};
pub use oracle::{presentation_oracle, OracleReport, PresentationOracle};
pub use relations::{relation_instances, relations_check, RelationInstance, RelationWitness};
pub use theta::{
    delta_example_check, gr_theta, gr_theta_matrix, theta_generator_image, DeltaReport, ThetaMatrix,
};

/// Alphabet of component `k`: letter `i` stands for `B_{i,k}`.
pub fn component_alphabet(k: usize) -> Alphabet {
    Alphabet::new('B', k - 1)
}

/// An element of `gr(P_n)` in component normal form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KohnoElement {
    strands: usize,
    /// `components[k-2]` lives in component `k`.
    components: Vec<LieElement>,
}

impl KohnoElement {
    pub fn zero(strands: usize) -> Self {
        let components = (2..=strands)
            .map(|k| LieElement::zero(component_alphabet(k)))
            .collect();
        Self {
            strands,
            components,
        }
    }

    /// `B_{i,j}`, which lives in component `j`.
    pub fn generator(i: usize, j: usize, strands: usize) -> Result<Self> {
        check_index(j, strands)?;
        if i == 0 || i >= j {
            return Err(Error::IndexOutOfRange {
                index: i as i64,
                bound: j.saturating_sub(1),
            });
        }
        let mut e = Self::zero(strands);
        e.components[j - 2] = LieElement::generator(component_alphabet(j), i)?;
        Ok(e)
    }

    /// `B_{a,b}` with the pair read as unordered.
    pub fn generator_sym(a: usize, b: usize, strands: usize) -> Result<Self> {
        Self::generator(a.min(b), a.max(b), strands)
    }

    /// Wraps a single component.
    pub fn from_component(strands: usize, k: usize, e: LieElement) -> Result<Self> {
        check_index(k, strands)?;
        if k < 2 {
            return Err(Error::IndexOutOfRange {
                index: k as i64,
                bound: strands,
            });
        }
        component_alphabet(k).ensure_same(&e.alphabet())?;
        let mut out = Self::zero(strands);
        out.components[k - 2] = e;
        Ok(out)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    /// The component on generators `B_{*,k}`.
    pub fn component(&self, k: usize) -> &LieElement {
        &self.components[k - 2]
    }

    pub fn components(&self) -> impl Iterator<Item = (usize, &LieElement)> {
        self.components.iter().enumerate().map(|(x, e)| (x + 2, e))
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(LieElement::is_zero)
    }

    pub fn max_degree(&self) -> usize {
        self.components
            .iter()
            .map(LieElement::max_degree)
            .max()
            .unwrap_or(0)
    }

    pub fn homogeneous_part(&self, m: usize) -> Self {
        Self {
            strands: self.strands,
            components: self
                .components
                .iter()
                .map(|e| e.homogeneous_part(m))
                .collect(),
        }
    }

    fn same_strands(&self, other: &Self) -> Result<()> {
        if self.strands == other.strands {
            Ok(())
        } else {
            Err(Error::LevelMismatch {
                expected: self.strands,
                found: other.strands,
            })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_strands(other)?;
        let mut out = self.clone();
        out.add_assign_scaled(other, &BigInt::one());
        Ok(out)
    }

    pub(crate) fn add_assign_scaled(&mut self, other: &Self, c: &BigInt) {
        for (a, b) in self.components.iter_mut().zip(&other.components) {
            a.add_assign_scaled(b, c);
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self {
            strands: self.strands,
            components: self.components.iter().map(|e| e.scale(c)).collect(),
        }
    }

    /// The Lie bracket of `gr(P_n)`.
    pub fn bracket(&self, other: &Self) -> Result<Self> {
        self.same_strands(other)?;
        let mut out = Self::zero(self.strands);
        for (j, a) in self.components() {
            if a.is_zero() {
                continue;
            }
            for (t, b) in other.components() {
                if b.is_zero() {
                    continue;
                }
                let one = BigInt::one();
                if j == t {
                    let r = a.bracket(b)?;
                    out.components[j - 2].add_assign_scaled(&r, &one);
                } else if j < t {
                    let r = act(j, a, t, b)?;
                    out.components[t - 2].add_assign_scaled(&r, &one);
                } else {
                    let r = act(t, b, j, a)?;
                    out.components[j - 2].add_assign_scaled(&r, &-one);
                }
            }
        }
        Ok(out)
    }

    /// Coordinates in degree `m` against [`basis_words`].
    pub fn coordinates(&self, m: usize) -> Vec<BigInt> {
        let mut out = Vec::new();
        for (k, e) in self.components() {
            out.extend(e.coordinates(&lyndon_words(k - 1, m)));
        }
        out
    }

    /// Parses sums of brackets of generators `B(i,j)`.
    pub fn parse(text: &str, strands: usize) -> Result<Self> {
        let leaf = |cur: &mut crate::text::Cursor<'_>| -> Result<Option<(usize, usize)>> {
            if cur.peek() != Some('B') {
                return Ok(None);
            }
            cur.bump();
            cur.expect('(')?;
            cur.skip_ws();
            let i = cur.digits()? as usize;
            cur.expect(',')?;
            cur.skip_ws();
            let j = cur.digits()? as usize;
            cur.expect(')')?;
            Ok(Some((i, j)))
        };
        let expr = crate::freelie::parse_expr(text, &leaf)?;
        expr.eval(
            &|&(i, j)| KohnoElement::generator(i, j, strands),
            &KohnoElement::zero(strands),
        )
    }
}

/// Concatenated Lyndon bases of the components in degree `m`, as
/// `(component, word)` pairs.
pub fn basis_words(strands: usize, m: usize) -> Vec<(usize, Vec<Letter>)> {
    (2..=strands)
        .flat_map(|k| lyndon_words(k - 1, m).into_iter().map(move |w| (k, w)))
        .collect()
}

/// Printed labels for [`basis_words`].
pub fn basis_labels(strands: usize, m: usize) -> Vec<String> {
    basis_words(strands, m)
        .into_iter()
        .map(|(k, w)| bracketing(&w, &|l| format!("B({l},{k})")))
        .collect()
}

/// Rank of the degree-`m` part of `gr(P_n)`: `Σ_{k=2..n} witt_rank(k-1, m)`.
pub fn kohno_rank(n: usize, m: usize) -> u64 {
    (2..=n).map(|k| witt_rank(k - 1, m)).sum()
}

pub fn kohno_generator(i: usize, j: usize, n: usize) -> Result<KohnoElement> {
    KohnoElement::generator(i, j, n)
}

pub fn kohno_bracket(a: &KohnoElement, b: &KohnoElement) -> Result<KohnoElement> {
    a.bracket(b)
}

type ActionCache = HashMap<(usize, usize, Vec<Letter>), Rc<DerivationTable>>;

thread_local! {
    static ACTIONS: RefCell<ActionCache> =
        RefCell::new(HashMap::new());
}

/// The derivation of component `t` given by the basis word `w` of component `j < t`.
fn action_table(j: usize, t: usize, w: &LyndonWord) -> Rc<DerivationTable> {
    let key = (j, t, w.letters().to_vec());
    if let Some(hit) = ACTIONS.with(|c| c.borrow().get(&key).cloned()) {
        return hit;
    }
    let alphabet = component_alphabet(t);
    let table = match w.split() {
        None => {
            let i = w.letters()[0] as usize;
            let gen = |s: usize| LieElement::generator(alphabet, s).unwrap();
            let images = (1..t)
                .map(|s| {
                    if s == i {
                        gen(i).bracket(&gen(j)).unwrap()
                    } else if s == j {
                        gen(j).bracket(&gen(i)).unwrap()
                    } else {
                        LieElement::zero(alphabet)
                    }
                })
                .collect();
            DerivationTable::new(alphabet, images).unwrap()
        }
        Some((u, v)) => action_table(j, t, &u)
            .commutator(&action_table(j, t, &v))
            .unwrap(),
    };
    let table = Rc::new(table);
    ACTIONS.with(|c| c.borrow_mut().insert(key, table.clone()));
    table
}

/// `x ∈ L_j` acting on `y ∈ L_t`, `j < t`.
fn act(j: usize, x: &LieElement, t: usize, y: &LieElement) -> Result<LieElement> {
    let mut out = LieElement::zero(component_alphabet(t));
    for (w, c) in x.terms() {
        let d = action_table(j, t, w);
        out.add_assign_scaled(&d.apply(y)?, c);
    }
    Ok(out)
}

impl LieOps for KohnoElement {
    fn zero_like(&self) -> Self {
        KohnoElement::zero(self.strands)
    }
    fn add_scaled(&mut self, other: &Self, c: &BigInt) -> Result<()> {
        self.same_strands(other)?;
        self.add_assign_scaled(other, c);
        Ok(())
    }
    fn lie(&self, other: &Self) -> Result<Self> {
        self.bracket(other)
    }
}

impl fmt::Display for KohnoElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        for (k, e) in self.components() {
            for (w, c) in e.terms() {
                let first = s.is_empty();
                write_coefficient(&mut s, c, first);
                s.push_str(&bracketing(w.letters(), &|l| format!("B({l},{k})")));
            }
        }
        if s.is_empty() {
            s.push('0');
        }
        f.write_str(&s)
    }
}

impl Add for &KohnoElement {
    type Output = KohnoElement;
    fn add(self, rhs: &KohnoElement) -> KohnoElement {
        self.try_add(rhs).expect("strand mismatch in addition")
    }
}

impl Sub for &KohnoElement {
    type Output = KohnoElement;
    fn sub(self, rhs: &KohnoElement) -> KohnoElement {
        self.try_add(&-rhs).expect("strand mismatch in subtraction")
    }
}

impl Neg for &KohnoElement {
    type Output = KohnoElement;
    fn neg(self) -> KohnoElement {
        self.scale(&-BigInt::one())
    }
}

#[cfg(test)]
mod tests;
