//! Exact integer linear algebra: dense matrices, Smith normal form and a
//! fraction-free row echelon structure for rank and membership questions.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A dense integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<BigInt>>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![vec![BigInt::zero(); cols]; rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i][i] = BigInt::one();
        }
        m
    }

    /// Builds from rows; all rows must have length `cols`.
    pub fn from_rows(cols: usize, data: Vec<Vec<BigInt>>) -> Self {
        assert!(data.iter().all(|r| r.len() == cols), "ragged matrix");
        Self {
            rows: data.len(),
            cols,
            data,
        }
    }

    pub fn from_i64(data: &[Vec<i64>]) -> Self {
        let cols = data.first().map_or(0, Vec::len);
        Self::from_rows(
            cols,
            data.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i][j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i]
    }

    pub fn row_vectors(&self) -> &[Vec<BigInt>] {
        &self.data
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        self.data.iter().map(|r| r[j].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.iter().all(Zero::is_zero))
    }

    pub fn transpose(&self) -> IntMatrix {
        let data = (0..self.cols).map(|j| self.column(j)).collect();
        IntMatrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for (k, a) in self.data[i].iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other.data[k][j];
                    if !b.is_zero() {
                        out.data[i][j] += a * b;
                    }
                }
            }
        }
        out
    }

    /// `self * v` for a column vector `v`.
    pub fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        self.data
            .iter()
            .map(|r| r.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        let mut e = Echelon::new(self.cols);
        for r in &self.data {
            e.insert_dense(r);
        }
        e.rank()
    }

    /// One row per line, entries separated by spaces.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for r in &self.data {
            let line: Vec<String> = r.iter().map(ToString::to_string).collect();
            s.push_str(&line.join(" "));
            s.push('\n');
        }
        s
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        self.data.swap(a, b);
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        for r in &mut self.data {
            r.swap(a, b);
        }
    }

    /// `row[dst] -= q * row[src]`, touching columns from `from` on.
    fn sub_row(&mut self, dst: usize, src: usize, q: &BigInt, from: usize) {
        let (d, s) = if dst < src {
            let (lo, hi) = self.data.split_at_mut(src);
            (&mut lo[dst], &hi[0])
        } else {
            let (lo, hi) = self.data.split_at_mut(dst);
            (&mut hi[0], &lo[src])
        };
        for k in from..self.cols {
            if !s[k].is_zero() {
                d[k] -= q * &s[k];
            }
        }
    }

    /// `col[dst] -= q * col[src]`, touching rows from `from` on.
    fn sub_col(&mut self, dst: usize, src: usize, q: &BigInt, from: usize) {
        for r in &mut self.data[from..] {
            if !r[src].is_zero() {
                let t = q * &r[src];
                r[dst] -= t;
            }
        }
    }

    fn negate_row(&mut self, i: usize) {
        for x in &mut self.data[i] {
            *x = -&*x;
        }
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Result of a Smith normal form computation.
#[derive(Clone, Debug)]
pub struct SmithForm {
    /// Nonzero diagonal entries, positive, each dividing the next.
    pub invariant_factors: Vec<BigInt>,
    pub rank: usize,
    /// `u * m * v = d` when transforms were requested.
    pub transforms: Option<SmithTransforms>,
}

#[derive(Clone, Debug)]
pub struct SmithTransforms {
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub d: IntMatrix,
}

impl SmithForm {
    /// Invariant factors greater than one.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.invariant_factors
            .iter()
            .filter(|d| !d.is_one())
            .cloned()
            .collect()
    }

    /// Checks `u * m * v = d` and that `d` is in Smith form.
    pub fn verify(&self, m: &IntMatrix) -> bool {
        let Some(t) = &self.transforms else {
            return false;
        };
        if t.u.mul(m).mul(&t.v) != t.d {
            return false;
        }
        for i in 0..t.d.rows() {
            for j in 0..t.d.cols() {
                let x = t.d.get(i, j);
                let expect_zero = i != j || i >= self.rank;
                if expect_zero != x.is_zero() {
                    return false;
                }
            }
        }
        self.invariant_factors
            .iter()
            .zip(self.invariant_factors.iter().skip(1))
            .all(|(a, b)| (b % a).is_zero())
    }

    /// Basis of the kernel of `m` (columns of `v` past the rank), as vectors.
    pub fn kernel_basis(&self) -> Option<Vec<Vec<BigInt>>> {
        let t = self.transforms.as_ref()?;
        Some((self.rank..t.v.cols()).map(|j| t.v.column(j)).collect())
    }
}

/// Smith normal form with the unimodular transforms.
pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    smith(m, true)
}

/// Invariant factors only; cheaper than [`smith_normal_form`].
pub fn invariant_factors(m: &IntMatrix) -> SmithForm {
    smith(m, false)
}

fn smith(m: &IntMatrix, track: bool) -> SmithForm {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut u = track.then(|| IntMatrix::identity(rows));
    let mut v = track.then(|| IntMatrix::identity(cols));
    let mut t = 0;
    while t < rows.min(cols) {
        // Pivot: smallest entry of the first nonzero column of the submatrix.
        let Some(c) = (t..cols).find(|&j| (t..rows).any(|i| !a.data[i][j].is_zero())) else {
            break;
        };
        let r = (t..rows)
            .filter(|&i| !a.data[i][c].is_zero())
            .min_by(|&x, &y| a.data[x][c].magnitude().cmp(a.data[y][c].magnitude()))
            .unwrap();
        a.swap_rows(t, r);
        a.swap_cols(t, c);
        if let Some(u) = &mut u {
            u.swap_rows(t, r);
        }
        if let Some(v) = &mut v {
            v.swap_cols(t, c);
        }
        loop {
            let p = a.data[t][t].clone();
            for i in t + 1..rows {
                if !a.data[i][t].is_zero() {
                    let q = a.data[i][t].div_floor(&p);
                    a.sub_row(i, t, &q, t);
                    if let Some(u) = &mut u {
                        u.sub_row(i, t, &q, 0);
                    }
                }
            }
            for j in t + 1..cols {
                if !a.data[t][j].is_zero() {
                    let q = a.data[t][j].div_floor(&p);
                    a.sub_col(j, t, &q, t);
                    if let Some(v) = &mut v {
                        v.sub_col(j, t, &q, 0);
                    }
                }
            }
            // Bring the smallest remaining entry of row/column t to the pivot.
            let mut best: Option<(bool, usize)> = None;
            let mut best_mag = p.magnitude().clone();
            for i in t + 1..rows {
                let x = a.data[i][t].magnitude();
                if !x.is_zero() && *x < best_mag {
                    best_mag = x.clone();
                    best = Some((true, i));
                }
            }
            for j in t + 1..cols {
                let x = a.data[t][j].magnitude();
                if !x.is_zero() && *x < best_mag {
                    best_mag = x.clone();
                    best = Some((false, j));
                }
            }
            match best {
                None => break,
                Some((true, i)) => {
                    a.swap_rows(t, i);
                    if let Some(u) = &mut u {
                        u.swap_rows(t, i);
                    }
                }
                Some((false, j)) => {
                    a.swap_cols(t, j);
                    if let Some(v) = &mut v {
                        v.swap_cols(t, j);
                    }
                }
            }
        }
        if a.data[t][t].is_negative() {
            a.negate_row(t);
            if let Some(u) = &mut u {
                u.negate_row(t);
            }
        }
        t += 1;
    }
    let rank = t;
    // Enforce the divisibility chain with 2x2 gcd/lcm moves on the diagonal.
    for i in 0..rank {
        for j in i + 1..rank {
            let (x, y) = (a.data[i][i].clone(), a.data[j][j].clone());
            if (&y % &x).is_zero() {
                continue;
            }
            let e = x.extended_gcd(&y);
            let g = e.gcd;
            let (xg, yg) = (&x / &g, &y / &g);
            a.data[i][i] = g.clone();
            a.data[j][j] = &x * &yg;
            if let Some(u) = &mut u {
                // rows (i, j) <- [[s, t], [-y/g, x/g]] (rows i, j)
                let ri = u.data[i].clone();
                let rj = u.data[j].clone();
                for k in 0..rows {
                    u.data[i][k] = &e.x * &ri[k] + &e.y * &rj[k];
                    u.data[j][k] = &xg * &rj[k] - &yg * &ri[k];
                }
            }
            if let Some(v) = &mut v {
                // cols (i, j) <- (cols i, j) * [[1, -t*y/g], [1, s*x/g]]
                let ty = &e.y * &yg;
                let sx = &e.x * &xg;
                for r in &mut v.data {
                    let (ci, cj) = (r[i].clone(), r[j].clone());
                    r[i] = &ci + &cj;
                    r[j] = &cj * &sx - &ci * &ty;
                }
            }
        }
    }
    let invariant_factors = (0..rank).map(|i| a.data[i][i].clone()).collect();
    let transforms = match (u, v) {
        (Some(u), Some(v)) => Some(SmithTransforms { u, v, d: a }),
        _ => None,
    };
    SmithForm {
        invariant_factors,
        rank,
        transforms,
    }
}

/// Row space over the rationals, kept as fraction-free sparse integer rows
/// with distinct leading columns.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    width: usize,
    rows: Vec<BTreeMap<usize, BigInt>>,
    pivot_of: HashMap<usize, usize>,
}

pub type SparseRow = BTreeMap<usize, BigInt>;

impl Echelon {
    pub fn new(width: usize) -> Self {
        Self {
            width,
            rows: Vec::new(),
            pivot_of: HashMap::new(),
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseRow] {
        &self.rows
    }

    /// Eliminates every pivot column from `v`.
    pub fn reduce(&self, mut v: SparseRow) -> SparseRow {
        v.retain(|_, c| !c.is_zero());
        let mut cursor = 0;
        loop {
            let next = v
                .range(cursor..)
                .map(|(k, _)| *k)
                .find(|k| self.pivot_of.contains_key(k));
            let Some(k) = next else { break };
            let p = &self.rows[self.pivot_of[&k]];
            let pk = &p[&k];
            let vk = v[&k].clone();
            let g = pk.gcd(&vk);
            let (sv, sp) = (pk / &g, &vk / &g);
            if !sv.is_one() {
                for c in v.values_mut() {
                    *c *= &sv;
                }
            }
            for (col, pc) in p {
                let entry = v.entry(*col).or_insert_with(BigInt::zero);
                *entry -= &sp * pc;
                if entry.is_zero() {
                    v.remove(col);
                }
            }
            normalize(&mut v);
            cursor = k + 1;
        }
        v
    }

    pub fn contains(&self, v: SparseRow) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v` to the span; true when it was independent.
    pub fn insert(&mut self, v: SparseRow) -> bool {
        let mut r = self.reduce(v);
        if r.is_empty() {
            return false;
        }
        normalize(&mut r);
        let lead = *r.keys().next().unwrap();
        self.pivot_of.insert(lead, self.rows.len());
        self.rows.push(r);
        true
    }

    pub fn insert_dense(&mut self, v: &[BigInt]) -> bool {
        self.insert(to_sparse(v))
    }
}

pub fn to_sparse(v: &[BigInt]) -> SparseRow {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (k, c.clone()))
        .collect()
}

/// Divides by the content and makes the leading entry positive.
fn normalize(v: &mut SparseRow) {
    let Some(first) = v.values().next() else {
        return;
    };
    let mut g = first.abs();
    for c in v.values() {
        if g.is_one() {
            break;
        }
        g = g.gcd(c);
    }
    if first.is_negative() {
        g = -g;
    }
    if !g.is_one() {
        for c in v.values_mut() {
            *c /= &g;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn factors(m: &IntMatrix) -> Vec<i64> {
        let s = smith_normal_form(m);
        assert!(s.verify(m), "certificate failed for\n{m}");
        assert_eq!(invariant_factors(m).invariant_factors, s.invariant_factors);
        s.invariant_factors
            .iter()
            .map(|x| x.try_into().unwrap())
            .collect()
    }

    #[test]
    fn smith_examples() {
        assert_eq!(
            factors(&IntMatrix::from_i64(&[vec![2, 0], vec![0, 3]])),
            vec![1, 6]
        );
        assert_eq!(factors(&IntMatrix::zeros(2, 3)), Vec::<i64>::new());
        assert_eq!(factors(&IntMatrix::identity(3)), vec![1, 1, 1]);
        assert_eq!(
            factors(&IntMatrix::from_i64(&[
                vec![2, 4, 4],
                vec![-6, 6, 12],
                vec![10, -4, -16]
            ])),
            vec![2, 6, 12]
        );
        assert_eq!(
            factors(&IntMatrix::from_i64(&[vec![4, 0], vec![0, 6], vec![0, 0]])),
            vec![2, 12]
        );
        assert_eq!(factors(&IntMatrix::zeros(0, 3)), Vec::<i64>::new());
    }

    #[test]
    fn kernel_basis_spans_kernel() {
        let m = IntMatrix::from_i64(&[vec![1, 2, 3], vec![2, 4, 6]]);
        let s = smith_normal_form(&m);
        let k = s.kernel_basis().unwrap();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(m.apply(v).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn echelon_rank_and_membership() {
        let mut e = Echelon::new(3);
        assert!(e.insert_dense(&[2, 4, 6].map(BigInt::from)));
        assert!(!e.insert_dense(&[1, 2, 3].map(BigInt::from)));
        assert!(e.insert_dense(&[0, 1, 1].map(BigInt::from)));
        assert_eq!(e.rank(), 2);
        assert!(e.contains(to_sparse(&[1, 3, 4].map(BigInt::from))));
        assert!(!e.contains(to_sparse(&[0, 0, 1].map(BigInt::from))));
    }

    /// Determinant by cofactor expansion, as an oracle for small square matrices.
    fn det(m: &[Vec<i64>]) -> i128 {
        let n = m.len();
        if n == 0 {
            return 1;
        }
        (0..n)
            .map(|j| {
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|r| {
                        r.iter()
                            .enumerate()
                            .filter(|&(k, _)| k != j)
                            .map(|(_, &x)| x)
                            .collect()
                    })
                    .collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * m[0][j] as i128 * det(&minor)
            })
            .sum()
    }

    proptest! {
        #[test]
        fn smith_certificates_verify(rows in 0usize..5, cols in 0usize..5, seed in prop::collection::vec(-6i64..=6, 25)) {
            let data: Vec<Vec<i64>> = (0..rows).map(|i| (0..cols).map(|j| seed[i * 5 + j]).collect()).collect();
            let m = IntMatrix::from_rows(cols, data.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect());
            let s = smith_normal_form(&m);
            prop_assert!(s.verify(&m));
            prop_assert_eq!(s.rank, m.rank());
            if rows == cols {
                let prod: BigInt = s.invariant_factors.iter().product();
                let d = det(&data);
                if s.rank == rows {
                    prop_assert_eq!(prod, BigInt::from(d.abs()));
                } else {
                    prop_assert_eq!(d, 0);
                }
            }
        }
    }
}
