//! Sweeps over the simplicial identities, naturality of `theta`, and the
//! face projections onto `P_2`.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use rand::Rng;
use serde::Serialize;

use super::{instance_ap, instance_fs1, SimplicialGroupSpec};
use crate::braid::{theta, PureBraid, ThetaMap};
use crate::error::Result;
use crate::word::FreeWord;

/// One instance of a simplicial identity, applied to an element at the
/// source level `t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Identity {
    /// `d_i d_j = d_{j-1} d_i`, `i < j`.
    FaceFace { i: usize, j: usize },
    /// `s_i s_j = s_{j+1} s_i`, `i <= j`.
    DegenDegen { i: usize, j: usize },
    /// `d_i s_j` against `s_{j-1} d_i`, the identity, or `s_j d_{i-1}`.
    FaceDegen { i: usize, j: usize },
}

impl Identity {
    /// Every instance with source level `t`.
    pub fn instances(t: usize) -> Vec<Identity> {
        let mut out = Vec::new();
        if t >= 2 {
            for j in 1..=t {
                for i in 0..j {
                    out.push(Identity::FaceFace { i, j });
                }
            }
        }
        for j in 0..=t {
            for i in 0..=j {
                out.push(Identity::DegenDegen { i, j });
            }
        }
        for j in 0..=t {
            for i in 0..=t + 1 {
                out.push(Identity::FaceDegen { i, j });
            }
        }
        out
    }

    pub fn family(&self) -> &'static str {
        match *self {
            Identity::FaceFace { .. } => "d_i d_j = d_(j-1) d_i",
            Identity::DegenDegen { .. } => "s_i s_j = s_(j+1) s_i",
            Identity::FaceDegen { i, j } if i < j => "d_i s_j = s_(j-1) d_i",
            Identity::FaceDegen { i, j } if i == j || i == j + 1 => "d_i s_j = id",
            Identity::FaceDegen { .. } => "d_i s_j = s_j d_(i-1)",
        }
    }

    /// Evaluates both sides on `x` at level `t` and compares them.
    pub fn holds<S: SimplicialGroupSpec>(
        &self,
        spec: &S,
        t: usize,
        x: &S::Element,
    ) -> Result<bool> {
        let (lhs, rhs) = match *self {
            Identity::FaceFace { i, j } => (
                spec.face(t - 1, i, &spec.face(t, j, x)?)?,
                spec.face(t - 1, j - 1, &spec.face(t, i, x)?)?,
            ),
            Identity::DegenDegen { i, j } => (
                spec.degeneracy(t + 1, i, &spec.degeneracy(t, j, x)?)?,
                spec.degeneracy(t + 1, j + 1, &spec.degeneracy(t, i, x)?)?,
            ),
            Identity::FaceDegen { i, j } => {
                let lhs = spec.face(t + 1, i, &spec.degeneracy(t, j, x)?)?;
                let rhs = if i < j {
                    spec.degeneracy(t - 1, j - 1, &spec.face(t, i, x)?)?
                } else if i <= j + 1 {
                    x.clone()
                } else {
                    spec.degeneracy(t - 1, j, &spec.face(t, i - 1, x)?)?
                };
                (lhs, rhs)
            }
        };
        spec.equals(&lhs, &rhs)
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Identity::FaceFace { i, j } => write!(f, "d{i} d{j} = d{} d{i}", j - 1),
            Identity::DegenDegen { i, j } => write!(f, "s{i} s{j} = s{} s{i}", j + 1),
            Identity::FaceDegen { i, j } if i < j => write!(f, "d{i} s{j} = s{} d{i}", j - 1),
            Identity::FaceDegen { i, j } if i <= j + 1 => write!(f, "d{i} s{j} = id"),
            Identity::FaceDegen { i, j } => write!(f, "d{i} s{j} = s{j} d{}", i - 1),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct IdentityCount {
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityFailure {
    pub level: usize,
    pub identity: String,
    pub input: String,
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub instance: String,
    pub max_level: usize,
    pub samples_per_level: usize,
    /// Keyed by identity family.
    pub counts: BTreeMap<String, IdentityCount>,
    pub failures: Vec<IdentityFailure>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn checked(&self) -> usize {
        self.counts.values().map(|c| c.passed + c.failed).sum()
    }

    fn record<S: SimplicialGroupSpec>(&mut self, spec: &S, t: usize, id: Identity, x: &S::Element) {
        let result = id.holds(spec, t, x);
        let count = self.counts.entry(id.family().to_string()).or_default();
        if matches!(result, Ok(true)) {
            count.passed += 1;
        } else {
            count.failed += 1;
            self.failures.push(IdentityFailure {
                level: t,
                identity: id.to_string(),
                input: x.to_string(),
                error: result.err().map(|e| e.to_string()),
            });
        }
    }
}

/// Every identity instance on every generator at source levels `0..=max_level`,
/// then `samples` random (instance, element) pairs per level with words of
/// length up to 6.
pub fn verify_simplicial_identities<S: SimplicialGroupSpec, R: Rng + ?Sized>(
    spec: &S,
    max_level: usize,
    samples: usize,
    rng: &mut R,
) -> IdentityReport {
    let mut report = IdentityReport {
        instance: spec.name().to_string(),
        max_level,
        samples_per_level: samples,
        counts: BTreeMap::new(),
        failures: Vec::new(),
    };
    for t in 0..=max_level {
        let ids = Identity::instances(t);
        let mut inputs = spec.generators(t);
        inputs.push(spec.identity(t));
        for x in &inputs {
            for &id in &ids {
                report.record(spec, t, id, x);
            }
        }
        for _ in 0..samples {
            let id = ids[rng.gen_range(0..ids.len())];
            let len = rng.gen_range(1..=6);
            let x = spec.random_element(t, len, rng);
            report.record(spec, t, id, &x);
        }
    }
    report
}

/// `theta` at level `t`, with `theta_0` the map onto the trivial group `P_1`.
pub fn theta_at(t: usize, w: &FreeWord) -> Result<PureBraid> {
    if t == 0 {
        Ok(PureBraid::identity(1))
    } else {
        theta(t, w)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThetaSimplicialReport {
    pub max_level: usize,
    /// `theta_1(y_1) = A_{1,2}`.
    pub base_case: bool,
    pub squares_checked: usize,
    pub failures: Vec<String>,
}

impl ThetaSimplicialReport {
    pub fn passed(&self) -> bool {
        self.base_case && self.failures.is_empty()
    }
}

/// Checks `theta d_i = d_i theta` and `theta s_j = s_j theta` on every
/// generator `y_q` at levels `1..=max_level`. A simplicial map out of
/// `F[S^1]` is fixed by the image of `y_1`, since each `y_q` is an iterated
/// degeneracy of it; the base case pins that image.
pub fn theta_simplicial_check(max_level: usize) -> Result<ThetaSimplicialReport> {
    let (fs1, ap) = (instance_fs1(), instance_ap());
    let base = ThetaMap::new(1)?
        .generator_image(1)?
        .equals(&PureBraid::a_generator(1, 2, 2)?)?;
    let mut report = ThetaSimplicialReport {
        max_level,
        base_case: base,
        squares_checked: 0,
        failures: Vec::new(),
    };
    for t in 1..=max_level {
        for y in fs1.generators(t) {
            let img = theta(t, &y)?;
            for i in 0..=t {
                let ok = theta_at(t - 1, &fs1.face(t, i, &y)?)?.equals(&ap.face(t, i, &img)?)?;
                report.squares_checked += 1;
                if !ok {
                    report
                        .failures
                        .push(format!("level {t}: theta d{i}({y}) != d{i} theta({y})"));
                }
            }
            for j in 0..=t {
                let ok = theta(t + 1, &fs1.degeneracy(t, j, &y)?)?
                    .equals(&ap.degeneracy(t, j, &img)?)?;
                report.squares_checked += 1;
                if !ok {
                    report
                        .failures
                        .push(format!("level {t}: theta s{j}({y}) != s{j} theta({y})"));
                }
            }
        }
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProjectionReport {
    pub n: usize,
    /// Face sequences `d_{i_1} .. d_{i_{n-1}}` from `P_{n+1}` to `P_2`.
    pub composites: usize,
    /// Composites whose images of `theta(n, y_q)` have linking gcd other than 1.
    pub failures: Vec<(Vec<usize>, i64)>,
}

impl ProjectionReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// For every sequence of faces from `AP_n = P_{n+1}` down to `AP_1 = P_2`,
/// the linking numbers of the projected `theta(n, y_q)` have gcd 1, so the
/// composite restricted to the image of `theta` is onto `P_2 = Z`.
pub fn projection_check(n: usize) -> Result<ProjectionReport> {
    let ap = instance_ap();
    let images: Vec<PureBraid> = instance_fs1()
        .generators(n)
        .iter()
        .map(|y| theta(n, y))
        .collect::<Result<_>>()?;
    let mut report = ProjectionReport {
        n,
        composites: 0,
        failures: Vec::new(),
    };
    // seq[k] is the face applied at level n - k
    let mut seq: Vec<usize> = vec![0; n.saturating_sub(1)];
    loop {
        let mut g = 0i64;
        for b in &images {
            let mut b = b.clone();
            for (k, &i) in seq.iter().enumerate() {
                b = ap.face(n - k, i, &b)?;
            }
            g = g.gcd(&b.linking_matrix()?[0][1]);
        }
        report.composites += 1;
        if g != 1 {
            report.failures.push((seq.clone(), g));
        }
        // odometer over i_k in 0..=n-k
        let mut k = seq.len();
        loop {
            if k == 0 {
                return Ok(report);
            }
            k -= 1;
            if seq[k] < n - k {
                seq[k] += 1;
                break;
            }
            seq[k] = 0;
        }
    }
}
