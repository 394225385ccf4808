//! `F[S^1]` (free groups on the simplices `y_q = <0^{t+1-q}, 1^q>`) and `AP`
//! (pure braid groups `P_{t+1}`).

use rand::Rng;

use super::SimplicialGroupSpec;
use crate::braid::PureBraid;
use crate::error::{check_index, Error, Result};
use crate::word::{Alphabet, FreeWord, GroupHom};

/// Generators `y_1..y_t` of level `t` of `F[S^1]`.
pub fn fs1_alphabet(t: usize) -> Alphabet {
    Alphabet::new('y', t)
}

fn y(t: usize, q: usize) -> FreeWord {
    if q == 0 || q > t {
        FreeWord::identity(fs1_alphabet(t))
    } else {
        FreeWord::generator(fs1_alphabet(t), q).unwrap()
    }
}

/// `d_i: F_n -> F_{n-1}`, deleting coordinate `i` of `<0^{n+1-q}, 1^q>`.
/// Simplices that become constant are the basepoint, hence trivial.
pub fn face_fs1(n: usize, i: usize) -> Result<GroupHom> {
    if n == 0 || i > n {
        return Err(Error::IndexOutOfRange {
            index: i as i64,
            bound: n.saturating_sub(1),
        });
    }
    let images = (1..=n)
        .map(|q| {
            if i >= n + 1 - q {
                y(n - 1, q - 1)
            } else {
                y(n - 1, q)
            }
        })
        .collect();
    GroupHom::new(fs1_alphabet(n), fs1_alphabet(n - 1), images)
}

/// `s_j: F_n -> F_{n+1}`, duplicating coordinate `j`.
pub fn degeneracy_fs1(n: usize, j: usize) -> Result<GroupHom> {
    if j > n {
        return Err(Error::IndexOutOfRange {
            index: j as i64,
            bound: n,
        });
    }
    let images = (1..=n)
        .map(|q| {
            if j + q <= n {
                y(n + 1, q)
            } else {
                y(n + 1, q + 1)
            }
        })
        .collect();
    GroupHom::new(fs1_alphabet(n), fs1_alphabet(n + 1), images)
}

fn check_face(t: usize, i: usize) -> Result<()> {
    if t == 0 || i > t {
        return Err(Error::IndexOutOfRange {
            index: i as i64,
            bound: t.saturating_sub(1),
        });
    }
    Ok(())
}

fn check_level(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::LevelMismatch { expected, found })
    }
}

/// Milnor's `F[S^1]`.
#[derive(Clone, Copy, Debug, Default)]
pub struct FreeCircle;

/// The pure braid groups with strand deletion and doubling.
#[derive(Clone, Copy, Debug, Default)]
pub struct ArtinPure;

pub fn instance_fs1() -> FreeCircle {
    FreeCircle
}

pub fn instance_ap() -> ArtinPure {
    ArtinPure
}

impl SimplicialGroupSpec for FreeCircle {
    type Element = FreeWord;

    fn name(&self) -> &'static str {
        "fs1"
    }

    fn group_rank(&self, t: usize) -> usize {
        t
    }

    fn level_of(&self, e: &FreeWord) -> usize {
        e.alphabet().rank
    }

    fn identity(&self, t: usize) -> FreeWord {
        FreeWord::identity(fs1_alphabet(t))
    }

    fn generators(&self, t: usize) -> Vec<FreeWord> {
        (1..=t).map(|q| y(t, q)).collect()
    }

    fn face(&self, t: usize, i: usize, e: &FreeWord) -> Result<FreeWord> {
        check_level(t, self.level_of(e))?;
        face_fs1(t, i)?.apply(e)
    }

    fn degeneracy(&self, t: usize, j: usize, e: &FreeWord) -> Result<FreeWord> {
        check_level(t, self.level_of(e))?;
        degeneracy_fs1(t, j)?.apply(e)
    }

    fn multiply(&self, a: &FreeWord, b: &FreeWord) -> Result<FreeWord> {
        a.multiply(b)
    }

    fn inverse(&self, a: &FreeWord) -> FreeWord {
        a.invert()
    }

    fn is_trivial(&self, e: &FreeWord) -> bool {
        e.is_identity()
    }

    /// `ker d_0` is generated by `y_t` and `ker d_i` by `y_{t-i} y_{t+1-i}^{-1}`.
    fn face_kernel_generators(&self, t: usize, i: usize) -> Vec<FreeWord> {
        if t == 0 || i > t {
            return Vec::new();
        }
        if i == 0 {
            return vec![y(t, t)];
        }
        vec![y(t, t - i).multiply(&y(t, t + 1 - i).invert()).unwrap()]
    }

    fn random_element<R: Rng + ?Sized>(&self, t: usize, len: usize, rng: &mut R) -> FreeWord {
        if t == 0 {
            return self.identity(0);
        }
        let letters: Vec<_> = (0..len)
            .map(|_| (rng.gen_range(1..=t), if rng.gen_bool(0.5) { 1 } else { -1 }))
            .collect();
        FreeWord::reduce(fs1_alphabet(t), letters).unwrap()
    }
}

impl SimplicialGroupSpec for ArtinPure {
    type Element = PureBraid;

    fn name(&self) -> &'static str {
        "ap"
    }

    /// Strand count of `P_{t+1}`.
    fn group_rank(&self, t: usize) -> usize {
        t + 1
    }

    fn level_of(&self, e: &PureBraid) -> usize {
        e.strands() - 1
    }

    fn identity(&self, t: usize) -> PureBraid {
        PureBraid::identity(t + 1)
    }

    fn generators(&self, t: usize) -> Vec<PureBraid> {
        let n = t + 1;
        (2..=n)
            .flat_map(|s| (1..s).map(move |r| PureBraid::a_generator(r, s, n).unwrap()))
            .collect()
    }

    fn face(&self, t: usize, i: usize, e: &PureBraid) -> Result<PureBraid> {
        check_level(t, self.level_of(e))?;
        check_face(t, i)?;
        e.delete_strand(i + 1)
    }

    fn degeneracy(&self, t: usize, j: usize, e: &PureBraid) -> Result<PureBraid> {
        check_level(t, self.level_of(e))?;
        check_index(j + 1, t + 1)?;
        e.double_strand(j + 1)
    }

    fn multiply(&self, a: &PureBraid, b: &PureBraid) -> Result<PureBraid> {
        a.multiply(b)
    }

    fn inverse(&self, a: &PureBraid) -> PureBraid {
        a.inverse()
    }

    fn is_trivial(&self, e: &PureBraid) -> bool {
        e.is_trivial()
    }

    /// The generators `A_{r,s}` with `i+1` in `{r, s}`.
    fn face_kernel_generators(&self, t: usize, i: usize) -> Vec<PureBraid> {
        let (n, k) = (t + 1, i + 1);
        if t == 0 || k > n {
            return Vec::new();
        }
        (1..=n)
            .filter(|&r| r != k)
            .map(|r| PureBraid::a_generator(r.min(k), r.max(k), n).unwrap())
            .collect()
    }

    fn random_element<R: Rng + ?Sized>(&self, t: usize, len: usize, rng: &mut R) -> PureBraid {
        let gens = self.generators(t);
        let mut out = self.identity(t);
        if gens.is_empty() {
            return out;
        }
        for _ in 0..len {
            let g = &gens[rng.gen_range(0..gens.len())];
            let g = if rng.gen_bool(0.5) {
                g.clone()
            } else {
                g.inverse()
            };
            out = out.multiply(&g).unwrap();
        }
        out
    }
}
