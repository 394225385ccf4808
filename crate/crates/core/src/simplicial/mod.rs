//! Finite-level simplicial groups: face and degeneracy maps, Moore cycles and
//! boundaries, and checks of the simplicial identities.

mod instances;
mod verify;

use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};

pub use instances::{
    degeneracy_fs1, face_fs1, fs1_alphabet, instance_ap, instance_fs1, ArtinPure, FreeCircle,
};
pub use verify::{
    projection_check, theta_at, theta_simplicial_check, verify_simplicial_identities, Identity,
    IdentityCount, IdentityFailure, IdentityReport, ProjectionReport, ThetaSimplicialReport,
};

/// A simplicial group realized level by level. Level `t` has faces
/// `d_0..d_t` (for `t >= 1`) and degeneracies `s_0..s_t`.
pub trait SimplicialGroupSpec {
    type Element: Clone + fmt::Debug + fmt::Display;

    fn name(&self) -> &'static str;
    /// Rank of the free group, or strand count of the braid group, at level `t`.
    fn group_rank(&self, t: usize) -> usize;
    fn level_of(&self, e: &Self::Element) -> usize;
    fn identity(&self, t: usize) -> Self::Element;
    fn generators(&self, t: usize) -> Vec<Self::Element>;
    fn face(&self, t: usize, i: usize, e: &Self::Element) -> Result<Self::Element>;
    fn degeneracy(&self, t: usize, j: usize, e: &Self::Element) -> Result<Self::Element>;
    fn multiply(&self, a: &Self::Element, b: &Self::Element) -> Result<Self::Element>;
    fn inverse(&self, a: &Self::Element) -> Self::Element;
    fn is_trivial(&self, e: &Self::Element) -> bool;
    /// Elements whose normal closure is the kernel of `d_i` at level `t`.
    fn face_kernel_generators(&self, t: usize, i: usize) -> Vec<Self::Element>;
    fn random_element<R: Rng + ?Sized>(&self, t: usize, len: usize, rng: &mut R) -> Self::Element;

    fn equals(&self, a: &Self::Element, b: &Self::Element) -> Result<bool> {
        Ok(self.is_trivial(&self.multiply(a, &self.inverse(b))?))
    }
}

/// An element tagged with its level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MooreElement<E> {
    level: usize,
    element: E,
}

impl<E: Clone + fmt::Debug + fmt::Display> MooreElement<E> {
    pub fn new<S: SimplicialGroupSpec<Element = E>>(
        spec: &S,
        level: usize,
        element: E,
    ) -> Result<Self> {
        let found = spec.level_of(&element);
        if found != level {
            return Err(Error::LevelMismatch {
                expected: level,
                found,
            });
        }
        Ok(Self { level, element })
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn element(&self) -> &E {
        &self.element
    }
}

impl<E: fmt::Display> fmt::Display for MooreElement<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} @ {}", self.element, self.level)
    }
}

fn faces_trivial<S: SimplicialGroupSpec>(
    spec: &S,
    t: usize,
    e: &S::Element,
    from: usize,
) -> Result<bool> {
    if t == 0 {
        return Ok(true);
    }
    for i in from..=t {
        if !spec.is_trivial(&spec.face(t, i, e)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Every face is trivial. For `AP` this is the Brunnian condition.
pub fn is_moore_cycle<S: SimplicialGroupSpec>(spec: &S, e: &MooreElement<S::Element>) -> bool {
    faces_trivial(spec, e.level, &e.element, 0).unwrap_or(false)
}

/// True when `z` at level `t+1` has `d_i(z) = 1` for `i >= 1` and
/// `d_0(z) = w`, certifying that `w` is a Moore boundary.
pub fn check_boundary_certificate<S: SimplicialGroupSpec>(
    spec: &S,
    t: usize,
    z: &S::Element,
    w: &S::Element,
) -> Result<bool> {
    for (expected, e) in [(t + 1, z), (t, w)] {
        let found = spec.level_of(e);
        if found != expected {
            return Err(Error::LevelMismatch { expected, found });
        }
    }
    Ok(faces_trivial(spec, t + 1, z, 1)? && spec.equals(&spec.face(t + 1, 0, z)?, w)?)
}

/// Projects `x` at level `t` onto `⋂_{i>=1} ker d_i` by
/// `x <- x (s_{i-1} d_i x)^{-1}` for `i = t, .., 1`.
pub fn moore_normalize<S: SimplicialGroupSpec>(
    spec: &S,
    t: usize,
    x: &S::Element,
) -> Result<S::Element> {
    let mut x = x.clone();
    for i in (1..=t).rev() {
        let back = spec.degeneracy(t - 1, i - 1, &spec.face(t, i, &x)?)?;
        x = spec.multiply(&x, &spec.inverse(&back))?;
    }
    Ok(x)
}

/// A boundary certificate `(z, d_0 z)` built from any `x` at level `t+1`.
pub fn boundary_from<S: SimplicialGroupSpec>(
    spec: &S,
    t: usize,
    x: &S::Element,
) -> Result<(S::Element, S::Element)> {
    let z = moore_normalize(spec, t + 1, x)?;
    let w = spec.face(t + 1, 0, &z)?;
    Ok((z, w))
}

fn commutator<S: SimplicialGroupSpec>(
    spec: &S,
    a: &S::Element,
    b: &S::Element,
) -> Result<S::Element> {
    spec.multiply(&spec.multiply(a, b)?, &spec.inverse(&spec.multiply(b, a)?))
}

pub const MAX_SEEDS: usize = 16;

/// Nontrivial Moore cycles at level `t >= 1`: left-normed commutators
/// `[[g_0, g_1], .., g_t]` with `g_i` from the kernel of `d_i`, with the faces
/// in ascending and in descending order and every choice of kernel
/// generators, stopping at [`MAX_SEEDS`]. Each face kills one entry and hence
/// the commutator. Generators that are cycles themselves, as at level 1, are
/// included too.
pub fn seed_cycles<S: SimplicialGroupSpec>(spec: &S, t: usize) -> Result<Vec<S::Element>> {
    if t == 0 {
        return Ok(Vec::new());
    }
    let kernels: Vec<Vec<S::Element>> =
        (0..=t).map(|i| spec.face_kernel_generators(t, i)).collect();
    let orders: [Vec<usize>; 2] = [(0..=t).collect(), (0..=t).rev().collect()];
    let mut out: Vec<S::Element> = Vec::new();
    for g in spec.generators(t) {
        if faces_trivial(spec, t, &g, 0)? {
            out.push(g);
        }
    }
    for order in orders {
        let mut partial = vec![spec.identity(t)];
        for (k, &i) in order.iter().enumerate() {
            let mut next = Vec::new();
            for p in &partial {
                for g in &kernels[i] {
                    next.push(if k == 0 {
                        g.clone()
                    } else {
                        commutator(spec, p, g)?
                    });
                }
            }
            partial = next;
        }
        for e in partial {
            if spec.is_trivial(&e) || !faces_trivial(spec, t, &e, 0)? {
                continue;
            }
            let text = e.to_string();
            let fresh = !out.iter().any(|f| f.to_string() == text);
            if fresh {
                out.push(e);
                if out.len() == MAX_SEEDS {
                    return Ok(out);
                }
            }
        }
    }
    Ok(out)
}

/// `count` random cycles at level `t`: products of one to three conjugates
/// of seed cycles (or their inverses) by random words of length `len`.
pub fn random_moore_cycles<S: SimplicialGroupSpec, R: Rng + ?Sized>(
    spec: &S,
    t: usize,
    count: usize,
    len: usize,
    rng: &mut R,
) -> Result<Vec<MooreElement<S::Element>>> {
    let seeds = seed_cycles(spec, t)?;
    if seeds.is_empty() {
        return Err(Error::Internal(format!("no seed cycles at level {t}")));
    }
    let mut out = Vec::with_capacity(count);
    let mut attempts = 0;
    while out.len() < count {
        attempts += 1;
        if attempts > 100 * count.max(1) {
            return Err(Error::Internal(format!(
                "random cycle generation stalled at level {t}"
            )));
        }
        let mut e = spec.identity(t);
        for _ in 0..rng.gen_range(1..=3) {
            let mut c = seeds[rng.gen_range(0..seeds.len())].clone();
            if rng.gen_bool(0.5) {
                c = spec.inverse(&c);
            }
            let g = spec.random_element(t, len, rng);
            let conj = spec.multiply(&spec.multiply(&g, &c)?, &spec.inverse(&g))?;
            e = spec.multiply(&e, &conj)?;
        }
        let m = MooreElement::new(spec, t, e)?;
        if !spec.is_trivial(&m.element) && is_moore_cycle(spec, &m) {
            out.push(m);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests;
