//! The map `gr(theta_n): L[y_1..y_n] -> gr(P_{n+1})`.

use std::cell::RefCell;
use std::collections::HashMap;

use num_bigint::BigInt;
use serde::Serialize;

use super::{basis_labels, KohnoElement};
use crate::error::{Error, Result};
use crate::freelie::{lyndon::bracketing, lyndon_words, witt_rank, LieElement, LyndonWord};
use crate::homology::{invariant_factors, Echelon, IntMatrix};
use crate::word::{Alphabet, Letter};
use crate::Budget;

/// `y_q -> Σ B_{i,j}` over `1 <= i <= n-q+1 < j <= n+1`.
pub fn theta_generator_image(n: usize, q: usize) -> Result<KohnoElement> {
    crate::error::check_index(q, n)?;
    let mut out = KohnoElement::zero(n + 1);
    for j in n - q + 2..=n + 1 {
        for i in 1..=n - q + 1 {
            out = out.try_add(&KohnoElement::generator(i, j, n + 1)?)?;
        }
    }
    Ok(out)
}

thread_local! {
    static IMAGES: RefCell<HashMap<(usize, Vec<Letter>), KohnoElement>> = RefCell::new(HashMap::new());
}

fn basis_image(n: usize, w: &LyndonWord) -> Result<KohnoElement> {
    let key = (n, w.letters().to_vec());
    if let Some(hit) = IMAGES.with(|c| c.borrow().get(&key).cloned()) {
        return Ok(hit);
    }
    let img = match w.split() {
        None => theta_generator_image(n, w.letters()[0] as usize)?,
        Some((u, v)) => basis_image(n, &u)?.bracket(&basis_image(n, &v)?)?,
    };
    IMAGES.with(|c| c.borrow_mut().insert(key, img.clone()));
    Ok(img)
}

/// Image of a Lie element over `y_1..y_n`, extended as a Lie homomorphism.
pub fn gr_theta(n: usize, e: &LieElement) -> Result<KohnoElement> {
    let a = e.alphabet();
    if a.rank != n {
        return Err(Error::AlphabetMismatch {
            left: Alphabet::new(a.symbol, n).to_string(),
            right: a.to_string(),
        });
    }
    let mut out = KohnoElement::zero(n + 1);
    for (w, c) in e.terms() {
        out.add_assign_scaled(&basis_image(n, w)?, c);
    }
    Ok(out)
}

/// Matrix of `gr(theta_n)` in degree `m` with its rank certificate.
#[derive(Clone, Debug, Serialize)]
pub struct ThetaMatrix {
    pub n: usize,
    pub m: usize,
    pub row_labels: Vec<String>,
    pub column_labels: Vec<String>,
    #[serde(skip)]
    pub matrix: IntMatrix,
    pub rank: usize,
    pub witt_rank: u64,
    #[serde(serialize_with = "crate::serialize_bigints")]
    pub elementary_divisors: Vec<BigInt>,
}

impl ThetaMatrix {
    /// Injective exactly when the rank is the full source rank.
    pub fn injective(&self) -> bool {
        self.rank as u64 == self.witt_rank
    }
}

/// Rows: Lyndon basis of degree `m` over `y_1..y_n`. Columns: the component
/// bases of `gr_m(P_{n+1})`, concatenated.
pub fn gr_theta_matrix(n: usize, m: usize, budget: &Budget) -> Result<ThetaMatrix> {
    budget.check_level(n)?;
    budget.check_degree(m)?;
    if n == 0 || m == 0 {
        return Err(Error::IndexOutOfRange { index: 0, bound: 1 });
    }
    let a = Alphabet::new('y', n);
    let words = lyndon_words(n, m);
    let column_labels = basis_labels(n + 1, m);
    let rows = words
        .iter()
        .map(|w| Ok(gr_theta(n, &LieElement::from_lyndon(a, w)?)?.coordinates(m)))
        .collect::<Result<Vec<_>>>()?;
    let matrix = IntMatrix::from_rows(column_labels.len(), rows);
    let snf = invariant_factors(&matrix);
    let name = |l: Letter| format!("y{l}");
    Ok(ThetaMatrix {
        n,
        m,
        row_labels: words.iter().map(|w| bracketing(w, &name)).collect(),
        column_labels,
        matrix,
        rank: snf.rank,
        witt_rank: witt_rank(n, m),
        elementary_divisors: snf.invariant_factors,
    })
}

/// Outcome of the degree-4 example at `n = 3`.
#[derive(Clone, Debug, Serialize)]
pub struct DeltaReport {
    /// `gr(theta_3)([[[y1,y2],y3],y2])` in normal form.
    pub image: String,
    pub t1: String,
    pub t2: String,
    pub delta: String,
    /// Coefficients of `T1` and `T2` in `E = c1*T1 + c2*T2 + delta`.
    pub coefficients: (i64, i64),
    pub delta_nonzero: bool,
    /// Rank of `{T1, T2, delta}` over the rationals.
    pub independence_rank: usize,
    /// Invariant factors of the 3-row coordinate matrix; all ones means the
    /// three vectors span a saturated sublattice.
    #[serde(serialize_with = "crate::serialize_bigints")]
    pub saturation: Vec<BigInt>,
}

impl DeltaReport {
    pub fn passed(&self) -> bool {
        self.delta_nonzero && self.independence_rank == 3
    }

    pub fn summary(&self) -> String {
        format!(
            "{} (coefficients {}, {}; independence rank {})",
            if self.passed() { "PASS" } else { "FAIL" },
            self.coefficients.0,
            self.coefficients.1,
            self.independence_rank
        )
    }
}

/// Decomposes `E = gr(theta_3)([[[y1,y2],y3],y2])` as `-T1 + 2*T2 + delta` with
/// `T1 = [[[g1,g2],g3],g2]`, `T2 = [[[g1,g3],g2],g2]`, where
/// `g1 = B(1,4)+B(2,4)+B(3,4)`, `g2 = B(3,4)`, `g3 = B(2,4)+B(3,4)`, and checks that
/// `delta` is independent of `T1` and `T2`.
pub fn delta_example_check() -> Result<DeltaReport> {
    let (c1, c2) = (-1i64, 2i64);
    let y = Alphabet::new('y', 3);
    let e = gr_theta(3, &LieElement::parse("[[[y1,y2],y3],y2]", y)?)?;
    let g1 = KohnoElement::parse("B(1,4)+B(2,4)+B(3,4)", 4)?;
    let g2 = KohnoElement::parse("B(3,4)", 4)?;
    let g3 = KohnoElement::parse("B(2,4)+B(3,4)", 4)?;
    let t1 = g1.bracket(&g2)?.bracket(&g3)?.bracket(&g2)?;
    let t2 = g1.bracket(&g3)?.bracket(&g2)?.bracket(&g2)?;
    let mut delta = e.clone();
    delta.add_assign_scaled(&t1, &BigInt::from(-c1));
    delta.add_assign_scaled(&t2, &BigInt::from(-c2));
    let rows: Vec<Vec<BigInt>> = [&t1, &t2, &delta]
        .iter()
        .map(|x| x.coordinates(4))
        .collect();
    let width = rows[0].len();
    let mut ech = Echelon::new(width);
    for r in &rows {
        ech.insert_dense(r);
    }
    let saturation = invariant_factors(&IntMatrix::from_rows(width, rows)).invariant_factors;
    Ok(DeltaReport {
        image: e.to_string(),
        t1: t1.to_string(),
        t2: t2.to_string(),
        delta: delta.to_string(),
        coefficients: (c1, c2),
        delta_nonzero: !delta.is_zero(),
        independence_rank: ech.rank(),
        saturation,
    })
}
