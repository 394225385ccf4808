//! The chain complexes `gr_m F[S^1]`: in simplicial degree `t` the
//! degree-`m` part of the free Lie algebra on `y_1..y_t`, with faces acting
//! by substitution.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use super::linalg::{invariant_factors, smith_normal_form, IntMatrix};
use crate::error::{Error, Result};
use crate::freelie::{lyndon::bracketing, lyndon_words, LieElement};
use crate::simplicial::{face_fs1, fs1_alphabet};
use crate::word::Letter;
use crate::Budget;

/// Finitely generated abelian group `Z^free_rank ⊕ ⊕ Z/d_k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AbelianInvariants {
    pub free_rank: usize,
    /// Each greater than one and dividing the next.
    #[serde(serialize_with = "crate::serialize_bigints")]
    pub torsion: Vec<BigInt>,
}

impl AbelianInvariants {
    pub fn trivial() -> Self {
        Self {
            free_rank: 0,
            torsion: Vec::new(),
        }
    }

    pub fn free(rank: usize) -> Self {
        Self {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

impl std::fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join("+"))
        }
    }
}

/// `C_t` for `t = 0..=max_level` with the face maps and `∂_t = Σ (-1)^i d_i`.
#[derive(Clone, Debug)]
pub struct IntegerChainComplex {
    lie_degree: usize,
    max_level: usize,
    /// Lyndon words spanning `C_t`.
    bases: Vec<Vec<Vec<Letter>>>,
    /// `faces[t][i]` is `d_i: C_t -> C_{t-1}` as a `dim C_{t-1} x dim C_t` matrix; empty at `t = 0`.
    faces: Vec<Vec<IntMatrix>>,
    boundaries: Vec<IntMatrix>,
}

/// Column of `(d_i)_*` applied to each basis word of degree `m` at level `t`.
fn face_matrix(
    t: usize,
    i: usize,
    m: usize,
    source: &[Vec<Letter>],
    target: &[Vec<Letter>],
) -> Result<IntMatrix> {
    let (src, dst) = (fs1_alphabet(t), fs1_alphabet(t - 1));
    let images: Vec<LieElement> = face_fs1(t, i)?
        .images()
        .iter()
        .map(|w| match w.syllables() {
            [] => Ok(LieElement::zero(dst)),
            [(g, 1)] => LieElement::generator(dst, *g as usize),
            _ => Err(Error::Internal(format!(
                "face image {w} is not a generator"
            ))),
        })
        .collect::<Result<_>>()?;
    let mut out = IntMatrix::zeros(target.len(), source.len());
    for (col, w) in source.iter().enumerate() {
        let img = LieElement::from_lyndon(src, w)?.map_generators(dst, &images)?;
        debug_assert!(img.is_zero() || img.min_degree() == m);
        for (row, c) in img
            .coordinates(target)
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
        {
            out.set(row, col, c);
        }
    }
    Ok(out)
}

fn add_scaled(a: &mut IntMatrix, b: &IntMatrix, sign: i64) {
    for r in 0..a.rows() {
        for c in 0..a.cols() {
            let v = a.get(r, c) + b.get(r, c) * BigInt::from(sign);
            a.set(r, c, v);
        }
    }
}

/// The complex in Lie degree `m` up to simplicial degree `max_level`.
pub fn lie_degree_complex(
    m: usize,
    max_level: usize,
    budget: &Budget,
) -> Result<IntegerChainComplex> {
    if m == 0 || max_level == 0 {
        return Err(Error::BudgetExceeded(
            "degree and level must be positive".into(),
        ));
    }
    budget.check_degree(m)?;
    budget.check_level(max_level)?;
    let bases: Vec<Vec<Vec<Letter>>> = (0..=max_level).map(|t| lyndon_words(t, m)).collect();
    let mut faces = vec![Vec::new()];
    let mut boundaries = vec![IntMatrix::zeros(0, bases[0].len())];
    for t in 1..=max_level {
        let fs = (0..=t)
            .map(|i| face_matrix(t, i, m, &bases[t], &bases[t - 1]))
            .collect::<Result<Vec<_>>>()?;
        let mut d = IntMatrix::zeros(bases[t - 1].len(), bases[t].len());
        for (i, f) in fs.iter().enumerate() {
            add_scaled(&mut d, f, if i % 2 == 0 { 1 } else { -1 });
        }
        faces.push(fs);
        boundaries.push(d);
    }
    Ok(IntegerChainComplex {
        lie_degree: m,
        max_level,
        bases,
        faces,
        boundaries,
    })
}

impl IntegerChainComplex {
    pub fn lie_degree(&self) -> usize {
        self.lie_degree
    }

    pub fn max_level(&self) -> usize {
        self.max_level
    }

    pub fn rank(&self, t: usize) -> usize {
        self.bases[t].len()
    }

    /// Bracketed labels of the basis of `C_t`.
    pub fn labels(&self, t: usize) -> Vec<String> {
        self.bases[t]
            .iter()
            .map(|w| bracketing(w, &|l| format!("y{l}")))
            .collect()
    }

    /// `∂_t: C_t -> C_{t-1}`; `∂_0` is the zero map to the zero group.
    pub fn boundary(&self, t: usize) -> Result<&IntMatrix> {
        self.boundaries.get(t).ok_or(Error::MissingBoundary(t))
    }

    pub fn face(&self, t: usize, i: usize) -> Result<&IntMatrix> {
        self.faces
            .get(t)
            .and_then(|f| f.get(i))
            .ok_or(Error::MissingBoundary(t))
    }

    /// `∂_t` of the basis element with Lyndon word `letters`, as a Lie element.
    pub fn boundary_of(&self, t: usize, letters: &[Letter]) -> Result<LieElement> {
        let col = self.bases[t]
            .iter()
            .position(|w| w == letters)
            .ok_or_else(|| Error::Internal(format!("{letters:?} is not a basis word")))?;
        let d = self.boundary(t)?;
        let mut out = LieElement::zero(fs1_alphabet(t.saturating_sub(1)));
        for (row, w) in self.bases[t - 1].iter().enumerate() {
            let c = d.get(row, col);
            if !c.is_zero() {
                out = out.try_add(&LieElement::from_lyndon(out.alphabet(), w)?.scale(c))?;
            }
        }
        Ok(out)
    }

    /// `∂_{t-1} ∂_t = 0` at every stored level.
    pub fn is_complex(&self) -> bool {
        (2..=self.max_level).all(|t| self.boundaries[t - 1].mul(&self.boundaries[t]).is_zero())
    }
}

/// `ker ∂_t / im ∂_{t+1}`.
pub fn homology(c: &IntegerChainComplex, t: usize) -> Result<AbelianInvariants> {
    let d = c.boundary(t)?;
    let up = c.boundary(t + 1)?;
    let low = invariant_factors(d);
    let high = invariant_factors(up);
    Ok(AbelianInvariants {
        free_rank: c.rank(t) - low.rank - high.rank,
        torsion: high.torsion(),
    })
}

fn stack(ms: &[&IntMatrix], cols: usize) -> IntMatrix {
    let rows: Vec<Vec<BigInt>> = ms
        .iter()
        .flat_map(|m| m.row_vectors().iter().cloned())
        .collect();
    IntMatrix::from_rows(cols, rows)
}

/// Homology of the Moore complex `N_t = ⋂_{i>=1} ker d_i` with differential
/// `d_0`: cycles are `⋂_{i>=0} ker d_i` and boundaries are `d_0(N_{t+1})`.
pub fn normalized_homology(c: &IntegerChainComplex, t: usize) -> Result<AbelianInvariants> {
    if t + 1 > c.max_level {
        return Err(Error::MissingBoundary(t + 1));
    }
    let cycles_rank = if t == 0 {
        c.rank(0)
    } else {
        let all: Vec<&IntMatrix> = c.faces[t].iter().collect();
        c.rank(t) - invariant_factors(&stack(&all, c.rank(t))).rank
    };
    let positive: Vec<&IntMatrix> = c.faces[t + 1][1..].iter().collect();
    let snf = smith_normal_form(&stack(&positive, c.rank(t + 1)));
    let moore = snf.kernel_basis().unwrap_or_default();
    let d0 = &c.faces[t + 1][0];
    let images: Vec<Vec<BigInt>> = moore.iter().map(|v| d0.apply(v)).collect();
    let b = invariant_factors(&IntMatrix::from_rows(c.rank(t), images));
    Ok(AbelianInvariants {
        free_rank: cycles_rank - b.rank,
        torsion: b.torsion(),
    })
}

/// One `(m, t)` cell of the E¹ table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct E1Cell {
    pub lie_degree: usize,
    pub simplicial_degree: usize,
    pub free_rank: usize,
    #[serde(serialize_with = "crate::serialize_bigints")]
    pub invariant_factors: Vec<BigInt>,
    pub basis_size: usize,
    pub boundary_rank: usize,
}

impl E1Cell {
    pub fn group(&self) -> AbelianInvariants {
        AbelianInvariants {
            free_rank: self.free_rank,
            torsion: self.invariant_factors.clone(),
        }
    }
}

/// Rank of `gr(theta_n)` in degree `m` next to the Witt rank.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThetaRankCell {
    pub n: usize,
    pub m: usize,
    pub rank: usize,
    pub witt_rank: u64,
    pub kohno_rank: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct E1Report {
    pub max_lie_degree: usize,
    pub max_level: usize,
    pub cells: Vec<E1Cell>,
    /// Injectivity data for `gr(theta_n)` with `n <= min(max_level, 4)`.
    pub theta_ranks: Vec<ThetaRankCell>,
}

impl E1Report {
    pub fn cell(&self, m: usize, t: usize) -> Option<&E1Cell> {
        self.cells
            .iter()
            .find(|c| c.lie_degree == m && c.simplicial_degree == t)
    }
}

/// Homology for `1 <= m <= m_max`, `1 <= t <= max_level`, built from
/// complexes one level higher so every cell has both boundary maps.
pub fn e1_report(m_max: usize, max_level: usize, budget: &Budget) -> Result<E1Report> {
    if m_max == 0 || max_level == 0 {
        return Err(Error::BudgetExceeded(
            "degree and level must be positive".into(),
        ));
    }
    budget.check_degree(m_max)?;
    budget.check_level(max_level + 1)?;
    let mut cells = Vec::new();
    let mut theta_ranks = Vec::new();
    for m in 1..=m_max {
        let c = lie_degree_complex(m, max_level + 1, budget)?;
        for t in 1..=max_level {
            let h = homology(&c, t)?;
            cells.push(E1Cell {
                lie_degree: m,
                simplicial_degree: t,
                free_rank: h.free_rank,
                invariant_factors: h.torsion,
                basis_size: c.rank(t),
                boundary_rank: invariant_factors(c.boundary(t)?).rank,
            });
        }
        for n in 1..=max_level.min(4) {
            let g = crate::kohno::gr_theta_matrix(n, m, budget)?;
            theta_ranks.push(ThetaRankCell {
                n,
                m,
                rank: g.rank,
                witt_rank: g.witt_rank,
                kohno_rank: crate::kohno::kohno_rank(n + 1, m),
            });
        }
    }
    Ok(E1Report {
        max_lie_degree: m_max,
        max_level,
        cells,
        theta_ranks,
    })
}
