//! The cabling map `theta: F_n -> P_{n+1}`.

use super::PureBraid;
use crate::error::{Error, Result};
use crate::word::{Alphabet, FreeWord};

/// Generator images of `theta` at rank `n`, computed once.
#[derive(Clone, Debug)]
pub struct ThetaMap {
    n: usize,
    images: Vec<PureBraid>,
}

impl ThetaMap {
    /// `y_q -> s_0^{n-q} s_{q-1} .. s_1 (A_{1,2})`, where `s_j` doubles
    /// strand `j+1`.
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::IndexOutOfRange { index: 0, bound: 1 });
        }
        let images = (1..=n)
            .map(|q| {
                let mut b = PureBraid::a_generator(1, 2, 2)?;
                for j in 1..q {
                    b = b.double_strand(j + 1)?;
                }
                for _ in 0..n - q {
                    b = b.double_strand(1)?;
                }
                Ok(b)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { n, images })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn generator_image(&self, q: usize) -> Result<&PureBraid> {
        crate::error::check_index(q, self.n)?;
        Ok(&self.images[q - 1])
    }

    pub fn apply(&self, w: &FreeWord) -> Result<PureBraid> {
        let a = w.alphabet();
        if a.rank != self.n {
            return Err(Error::AlphabetMismatch {
                left: Alphabet::new(a.symbol, self.n).to_string(),
                right: a.to_string(),
            });
        }
        let mut out = PureBraid::identity(self.n + 1);
        for &(g, e) in w.syllables() {
            let img = self.images[g as usize - 1].pow(e);
            out = out.multiply(&img)?;
        }
        Ok(out)
    }
}

/// `theta(n, w)`, the pure braid on `n+1` strands cabled from `w`.
pub fn theta(n: usize, w: &FreeWord) -> Result<PureBraid> {
    ThetaMap::new(n)?.apply(w)
}
