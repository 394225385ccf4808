//! `gr(P_n)` straight from its presentation: the free Lie algebra on all
//! `B_{i,j}` modulo the ideal of the infinitesimal braid relations, degree
//! by degree. Independent of the component normal form, which it checks.

use std::collections::HashMap;

use num_bigint::BigInt;
use serde::Serialize;

use super::{basis_words, kohno_rank, relation_instances, KohnoElement};
use crate::error::{Error, Result};
use crate::freelie::{lyndon_words, witt_rank, LieElement, LyndonWord};
use crate::homology::{Echelon, SparseRow};
use crate::word::{Alphabet, Letter};
use crate::Budget;

/// Letter of `B_{i,k}` in the alphabet of all generators, ordered by `k`
/// and then `i`, so each component's letters form an increasing block.
fn big_letter(i: usize, k: usize) -> Letter {
    ((k - 1) * (k - 2) / 2 + i) as Letter
}

pub struct PresentationOracle {
    strands: usize,
    max_degree: usize,
    alphabet: Alphabet,
    /// Degree-`m` part of the relation ideal, at index `m - 1`.
    ideal: Vec<Echelon>,
    index: Vec<HashMap<Vec<Letter>, usize>>,
    bases: Vec<Vec<Vec<Letter>>>,
}

impl PresentationOracle {
    pub fn new(n: usize, max_degree: usize, budget: &Budget) -> Result<Self> {
        budget.check_level(n)?;
        budget.check_degree(max_degree)?;
        if n < 2 {
            return Err(Error::IndexOutOfRange {
                index: n as i64,
                bound: 2,
            });
        }
        let rank = n * (n - 1) / 2;
        let alphabet = Alphabet::new('b', rank);
        let bases: Vec<Vec<Vec<Letter>>> =
            (1..=max_degree).map(|m| lyndon_words(rank, m)).collect();
        let index = bases
            .iter()
            .map(|b| b.iter().enumerate().map(|(k, w)| (w.clone(), k)).collect())
            .collect();
        let mut oracle = Self {
            strands: n,
            max_degree,
            alphabet,
            ideal: Vec::new(),
            index,
            bases,
        };
        oracle.ideal.push(Echelon::new(oracle.bases[0].len()));
        for m in 2..=max_degree {
            let mut e = Echelon::new(oracle.bases[m - 1].len());
            if m == 2 {
                for r in relation_instances(n) {
                    let left = oracle.generator(r.left)?;
                    let mut right = LieElement::zero(alphabet);
                    for &p in &r.right {
                        right = right.try_add(&oracle.generator(p)?)?;
                    }
                    e.insert(oracle.sparse(&left.bracket(&right)?, 2));
                }
            } else {
                // I_m = [L_1, I_{m-1}]
                let prev: Vec<LieElement> = oracle.ideal[m - 2]
                    .rows()
                    .iter()
                    .map(|r| oracle.element(r, m - 1))
                    .collect();
                for r in &prev {
                    for g in 1..=rank {
                        let x = LieElement::generator(alphabet, g)?.bracket(r)?;
                        e.insert(oracle.sparse(&x, m));
                    }
                }
            }
            oracle.ideal.push(e);
        }
        Ok(oracle)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    fn generator(&self, (i, k): (usize, usize)) -> Result<LieElement> {
        LieElement::generator(self.alphabet, big_letter(i, k) as usize)
    }

    fn sparse(&self, e: &LieElement, m: usize) -> SparseRow {
        e.terms()
            .filter(|(w, _)| w.degree() == m)
            .map(|(w, c)| (self.index[m - 1][w.letters()], c.clone()))
            .collect()
    }

    fn element(&self, row: &SparseRow, m: usize) -> LieElement {
        let mut out = LieElement::zero(self.alphabet);
        for (&k, c) in row {
            let w = LyndonWord::new_unchecked(self.bases[m - 1][k].clone());
            out.add_assign_scaled(&LieElement::basis(self.alphabet, w), c);
        }
        out
    }

    pub fn relation_rank(&self, m: usize) -> usize {
        self.ideal[m - 1].rank()
    }

    /// Rank of the degree-`m` quotient.
    pub fn rank(&self, m: usize) -> u64 {
        witt_rank(self.alphabet.rank, m) - self.relation_rank(m) as u64
    }

    /// Image of a normal-form element in the free Lie algebra on all
    /// generators. Relabelling within a component preserves letter order,
    /// so basis words map to basis words.
    pub fn lift(&self, x: &KohnoElement) -> LieElement {
        let mut out = LieElement::zero(self.alphabet);
        for (k, e) in x.components() {
            for (w, c) in e.terms() {
                let letters = w
                    .letters()
                    .iter()
                    .map(|&i| big_letter(i as usize, k))
                    .collect();
                out.add_assign_scaled(
                    &LieElement::basis(self.alphabet, LyndonWord::new_unchecked(letters)),
                    c,
                );
            }
        }
        out
    }

    /// Whether `x - y` lies in the relation ideal.
    pub fn congruent(&self, x: &LieElement, y: &LieElement) -> Result<bool> {
        let d = x - y;
        if d.max_degree() > self.max_degree {
            return Err(Error::DegreeOverflow {
                degree: d.max_degree(),
                bound: self.max_degree,
            });
        }
        Ok((1..=d.max_degree()).all(|m| self.ideal[m - 1].contains(self.sparse(&d, m))))
    }

    /// Checks `lift([a, b]) ≡ [lift(a), lift(b)]`.
    pub fn check_bracket(&self, a: &KohnoElement, b: &KohnoElement) -> Result<bool> {
        let free = self.lift(a).bracket(&self.lift(b))?;
        self.congruent(&free, &self.lift(&a.bracket(b)?))
    }

    /// The normal-form basis maps to a basis of the quotient: together with
    /// the ideal it spans everything, and the counts add up.
    pub fn normal_form_matches(&self, m: usize) -> bool {
        let total = witt_rank(self.alphabet.rank, m) as usize;
        let mut e = self.ideal[m - 1].clone();
        for (k, w) in basis_words(self.strands, m) {
            let letters = w
                .iter()
                .map(|&i| big_letter(i as usize, k))
                .collect::<Vec<_>>();
            let mut row = SparseRow::new();
            row.insert(self.index[m - 1][&letters], BigInt::from(1));
            e.insert(row);
        }
        e.rank() == total && self.relation_rank(m) + kohno_rank(self.strands, m) as usize == total
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub strands: usize,
    pub degree: usize,
    pub free_rank: u64,
    pub relation_rank: usize,
    pub oracle_rank: u64,
    pub kohno_rank: u64,
    pub normal_form_matches: bool,
}

impl OracleReport {
    pub fn agrees(&self) -> bool {
        self.oracle_rank == self.kohno_rank && self.normal_form_matches
    }
}

/// Rank of `gr_m(P_n)` computed from the raw presentation.
pub fn presentation_oracle(n: usize, m: usize, budget: &Budget) -> Result<OracleReport> {
    let o = PresentationOracle::new(n, m, budget)?;
    Ok(OracleReport {
        strands: n,
        degree: m,
        free_rank: witt_rank(o.alphabet.rank, m),
        relation_rank: o.relation_rank(m),
        oracle_rank: o.rank(m),
        kohno_rank: kohno_rank(n, m),
        normal_form_matches: o.normal_form_matches(m),
    })
}
