//! Representations `gr(P_{n+1}) -> Der(L[x_1..x_n])` given by a table of
//! derivations for the generators `B_{i,j}`.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use super::{relation_instances, theta::gr_theta, KohnoElement};
use crate::error::{Error, Result};
use crate::freelie::{lyndon_words, witt_rank, DerivationTable, LieElement, LyndonWord};
use crate::homology::Echelon;
use crate::word::{Alphabet, Letter};

pub fn free_alphabet(n: usize) -> Alphabet {
    Alphabet::new('x', n)
}

/// A validated assignment `B_{i,j} -> D_{i,j}` for `1 <= i < j <= n+1`.
#[derive(Debug)]
pub struct DerivationRep {
    n: usize,
    table: BTreeMap<(usize, usize), DerivationTable>,
    memo: RefCell<HashMap<(usize, Vec<Letter>), DerivationTable>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AdRankReport {
    pub n: usize,
    pub m: usize,
    pub rank: usize,
    pub witt_rank: u64,
}

impl AdRankReport {
    pub fn full_rank(&self) -> bool {
        self.rank as u64 == self.witt_rank
    }
}

impl DerivationRep {
    /// `D_{i,j}` for `j <= n`: `x_i -> [x_i,x_j]`, `x_j -> [x_j,x_i]`, others
    /// to zero. `D_{i,n+1} = ad(x_i)`, reading `x_i` as `B_{i,n+1}`.
    pub fn default_assignment(n: usize) -> BTreeMap<(usize, usize), DerivationTable> {
        let a = free_alphabet(n);
        let gen = |k: usize| LieElement::generator(a, k).unwrap();
        let mut out = BTreeMap::new();
        for j in 2..=n + 1 {
            for i in 1..j {
                let d = if j == n + 1 {
                    DerivationTable::inner(&gen(i))
                } else {
                    let images = (1..=n)
                        .map(|s| {
                            if s == i {
                                gen(i).bracket(&gen(j)).unwrap()
                            } else if s == j {
                                gen(j).bracket(&gen(i)).unwrap()
                            } else {
                                LieElement::zero(a)
                            }
                        })
                        .collect();
                    DerivationTable::new(a, images).unwrap()
                };
                out.insert((i, j), d);
            }
        }
        out
    }

    pub fn zero_assignment(n: usize) -> BTreeMap<(usize, usize), DerivationTable> {
        (2..=n + 1)
            .flat_map(|j| (1..j).map(move |i| ((i, j), DerivationTable::zero(free_alphabet(n)))))
            .collect()
    }

    /// Checks every relation instance on `n+1` strands as a commutator of
    /// derivations; the first violation is reported.
    pub fn new(n: usize, table: BTreeMap<(usize, usize), DerivationTable>) -> Result<Self> {
        for j in 2..=n + 1 {
            for i in 1..j {
                let d = table.get(&(i, j)).ok_or(Error::IndexOutOfRange {
                    index: i as i64,
                    bound: j - 1,
                })?;
                free_alphabet(n).ensure_same(&d.alphabet())?;
            }
        }
        for r in relation_instances(n + 1) {
            let left = &table[&r.left];
            let mut right = DerivationTable::zero(free_alphabet(n));
            for p in &r.right {
                right.add_scaled(&table[p], &1.into())?;
            }
            if !left.commutator(&right)?.is_zero() {
                return Err(Error::RelationViolated(r.describe()));
            }
        }
        Ok(Self {
            n,
            table,
            memo: RefCell::new(HashMap::new()),
        })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn generator(&self, i: usize, j: usize) -> Option<&DerivationTable> {
        self.table.get(&(i, j))
    }

    fn basis_image(&self, k: usize, w: &LyndonWord) -> Result<DerivationTable> {
        let key = (k, w.letters().to_vec());
        if let Some(hit) = self.memo.borrow().get(&key) {
            return Ok(hit.clone());
        }
        let d = match w.split() {
            None => self.table[&(w.letters()[0] as usize, k)].clone(),
            Some((u, v)) => self
                .basis_image(k, &u)?
                .commutator(&self.basis_image(k, &v)?)?,
        };
        self.memo.borrow_mut().insert(key, d.clone());
        Ok(d)
    }

    /// The derivation assigned to an element of `gr(P_{n+1})`.
    pub fn evaluate(&self, x: &KohnoElement) -> Result<DerivationTable> {
        if x.strands() != self.n + 1 {
            return Err(Error::LevelMismatch {
                expected: self.n + 1,
                found: x.strands(),
            });
        }
        let mut out = DerivationTable::zero(free_alphabet(self.n));
        for (k, e) in x.components() {
            for (w, c) in e.terms() {
                out.add_scaled(&self.basis_image(k, w)?, c)?;
            }
        }
        Ok(out)
    }

    /// `Ad ∘ gr(theta_n)` on a Lie element over `y_1..y_n`.
    pub fn ad_theta(&self, e: &LieElement) -> Result<DerivationTable> {
        self.evaluate(&gr_theta(self.n, e)?)
    }

    /// Rank of `Ad ∘ gr(theta_n)` on the degree-`m` Lyndon basis; each
    /// derivation is recorded by its generator images in degree `m+1`.
    pub fn injectivity(&self, m: usize) -> Result<AdRankReport> {
        let n = self.n;
        let y = Alphabet::new('y', n);
        let target = lyndon_words(n, m + 1);
        let width = n * target.len();
        let mut ech = Echelon::new(width);
        for w in lyndon_words(n, m) {
            let d = self.ad_theta(&LieElement::from_lyndon(y, &w)?)?;
            let row: Vec<_> = d
                .images()
                .iter()
                .flat_map(|img| img.coordinates(&target))
                .collect();
            ech.insert_dense(&row);
        }
        Ok(AdRankReport {
            n,
            m,
            rank: ech.rank(),
            witt_rank: witt_rank(n, m),
        })
    }
}

/// Validates `assignment` (or the default one) at rank `n`.
pub fn derivation_rep(
    n: usize,
    assignment: Option<BTreeMap<(usize, usize), DerivationTable>>,
) -> Result<DerivationRep> {
    DerivationRep::new(
        n,
        assignment.unwrap_or_else(|| DerivationRep::default_assignment(n)),
    )
}
