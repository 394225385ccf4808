//! Truncated noncommutative polynomials and the Magnus embedding.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{FreeWord, Letter};
use crate::error::{Error, Result};
use crate::freelie::LieElement;

/// An integer polynomial in noncommuting `a1..a{rank}`, truncated above
/// degree `bound`. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NCPolynomial {
    rank: usize,
    bound: usize,
    terms: BTreeMap<Vec<Letter>, BigInt>,
}

impl NCPolynomial {
    pub fn zero(rank: usize, bound: usize) -> Self {
        Self {
            rank,
            bound,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(rank: usize, bound: usize) -> Self {
        Self::monomial(rank, bound, Vec::new(), BigInt::one())
    }

    pub fn monomial(rank: usize, bound: usize, word: Vec<Letter>, c: BigInt) -> Self {
        let mut p = Self::zero(rank, bound);
        p.add_monomial(word, c);
        p
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Letter>, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, word: &[Letter]) -> BigInt {
        self.terms.get(word).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Adds `c * word`; monomials above the bound are dropped.
    pub fn add_monomial(&mut self, word: Vec<Letter>, c: BigInt) {
        if c.is_zero() || word.len() > self.bound {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(word) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &NCPolynomial, c: &BigInt) {
        for (w, v) in &other.terms {
            self.add_monomial(w.clone(), v * c);
        }
    }

    /// Product truncated at the smaller of the two bounds.
    pub fn mul(&self, other: &NCPolynomial) -> NCPolynomial {
        let bound = self.bound.min(other.bound);
        let mut out = NCPolynomial::zero(self.rank.max(other.rank), bound);
        for (u, cu) in &self.terms {
            for (v, cv) in &other.terms {
                if u.len() + v.len() > bound {
                    continue;
                }
                let mut w = u.clone();
                w.extend_from_slice(v);
                out.add_monomial(w, cu * cv);
            }
        }
        out
    }

    /// `xy - yx`.
    pub fn commutator(&self, other: &NCPolynomial) -> NCPolynomial {
        let mut out = self.mul(other);
        out.add_scaled(&other.mul(self), &-BigInt::one());
        out
    }

    pub fn homogeneous_part(&self, m: usize) -> NCPolynomial {
        let terms = self
            .terms
            .iter()
            .filter(|(w, _)| w.len() == m)
            .map(|(w, c)| (w.clone(), c.clone()))
            .collect();
        NCPolynomial {
            rank: self.rank,
            bound: self.bound,
            terms,
        }
    }

    /// Smallest degree carrying a nonzero coefficient, ignoring the constant.
    pub fn lowest_positive_degree(&self) -> Option<usize> {
        self.terms.keys().map(Vec::len).filter(|&d| d > 0).min()
    }

    /// Right multiplication by `(1 + a_g)^e`, expanded with generalized
    /// binomial coefficients.
    fn mul_generator_power(&self, g: Letter, e: i64) -> NCPolynomial {
        let coeffs = binomial_series(e, self.bound);
        let mut out = NCPolynomial::zero(self.rank, self.bound);
        for (w, c) in &self.terms {
            let mut word = w.clone();
            for ck in coeffs.iter().take(self.bound - w.len() + 1) {
                out.add_monomial(word.clone(), c * ck);
                word.push(g);
            }
        }
        out
    }
}

/// Coefficients of `(1 + a)^e` up to `a^bound`.
fn binomial_series(e: i64, bound: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::one()];
    let e = BigInt::from(e);
    for k in 1..=bound {
        let prev = out[k - 1].clone();
        out.push(prev * (&e - BigInt::from(k - 1)) / BigInt::from(k));
    }
    out
}

impl Mul for &NCPolynomial {
    type Output = NCPolynomial;
    fn mul(self, rhs: &NCPolynomial) -> NCPolynomial {
        NCPolynomial::mul(self, rhs)
    }
}

impl fmt::Display for NCPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<_> = self.terms.iter().collect();
        keys.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.0.cmp(b.0)));
        for (k, (w, c)) in keys.into_iter().enumerate() {
            if c.is_negative() {
                write!(f, "-")?;
            } else if k > 0 {
                write!(f, "+")?;
            }
            let mag = c.abs();
            if w.is_empty() {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            let names: Vec<String> = w.iter().map(|l| format!("a{l}")).collect();
            write!(f, "{}", names.join("*"))?;
        }
        Ok(())
    }
}

/// Substitutes `g_i -> 1 + a_i` and truncates above degree `bound`.
pub fn magnus_expand(w: &FreeWord, bound: usize) -> NCPolynomial {
    let rank = w.alphabet().rank;
    let mut p = NCPolynomial::one(rank, bound);
    for &(g, e) in w.syllables() {
        p = p.mul_generator_power(g, e);
    }
    p
}

/// Position of `w` in the lower central series: the lowest degree at which
/// its Magnus expansion differs from 1. `None` for the identity.
pub fn lcs_degree(w: &FreeWord) -> Option<usize> {
    if w.is_identity() {
        return None;
    }
    let mut bound = 2;
    loop {
        if let Some(m) = magnus_expand(w, bound).lowest_positive_degree() {
            return Some(m);
        }
        bound *= 2;
    }
}

/// Image of `w` in the degree-`m` quotient of the lower central series,
/// where `m = lcs_degree(w)`, through the Dynkin map.
pub fn gr_leading_term(w: &FreeWord) -> Result<LieElement> {
    let m = lcs_degree(w).ok_or(Error::IdentityInput)?;
    let alphabet = w.alphabet();
    let top = magnus_expand(w, m).homogeneous_part(m);
    let mut prefixes: HashMap<Vec<Letter>, LieElement> = HashMap::new();
    let mut sum = LieElement::zero(alphabet);
    for (word, c) in top.terms() {
        let b = left_normed(word, alphabet, &mut prefixes)?;
        sum.add_assign_scaled(&b, c);
    }
    sum.div_exact(&BigInt::from(m))
        .ok_or_else(|| Error::Internal(format!("Dynkin image of {w} is not divisible by {m}")))
}

fn left_normed(
    word: &[Letter],
    alphabet: super::Alphabet,
    memo: &mut HashMap<Vec<Letter>, LieElement>,
) -> Result<LieElement> {
    if let Some(hit) = memo.get(word) {
        return Ok(hit.clone());
    }
    let (&last, init) = word.split_last().expect("nonempty monomial");
    let gen = LieElement::generator(alphabet, last as usize)?;
    let e = if init.is_empty() {
        gen
    } else {
        left_normed(init, alphabet, memo)?.bracket(&gen)?
    };
    memo.insert(word.to_vec(), e.clone());
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::Alphabet;
    use proptest::prelude::*;

    const G: Alphabet = Alphabet::new('g', 3);

    fn w(text: &str) -> FreeWord {
        FreeWord::parse(text, G).unwrap()
    }

    fn poly(bound: usize, terms: &[(&[Letter], i64)]) -> NCPolynomial {
        let mut p = NCPolynomial::zero(3, bound);
        for (word, c) in terms {
            p.add_monomial(word.to_vec(), BigInt::from(*c));
        }
        p
    }

    /// Expands letter by letter, using the explicit alternating series for
    /// inverses.
    fn naive_expand(word: &FreeWord, bound: usize) -> NCPolynomial {
        let mut p = NCPolynomial::one(3, bound);
        for (g, s) in word.letters() {
            let mut factor = NCPolynomial::one(3, bound);
            if s > 0 {
                factor.add_monomial(vec![g], BigInt::one());
            } else {
                for k in 1..=bound {
                    let sign = if k % 2 == 1 { -1 } else { 1 };
                    factor.add_monomial(vec![g; k], BigInt::from(sign));
                }
            }
            p = p.mul(&factor);
        }
        p
    }

    #[test]
    fn expand_examples() {
        assert_eq!(
            magnus_expand(&FreeWord::identity(G), 3),
            NCPolynomial::one(3, 3)
        );
        assert_eq!(magnus_expand(&w("g1"), 2), poly(2, &[(&[], 1), (&[1], 1)]));
        assert_eq!(
            magnus_expand(&w("[g1,g2]"), 2),
            poly(2, &[(&[], 1), (&[1, 2], 1), (&[2, 1], -1)])
        );
        assert_eq!(magnus_expand(&w("[g1,g2]"), 2).to_string(), "1+a1*a2-a2*a1");
    }

    #[test]
    fn lcs_examples() {
        assert_eq!(lcs_degree(&FreeWord::identity(G)), None);
        assert_eq!(lcs_degree(&w("g1")), Some(1));
        assert_eq!(lcs_degree(&w("[g1,g2]")), Some(2));
        assert_eq!(lcs_degree(&w("[[g1,g2],g1]")), Some(3));
        assert_eq!(lcs_degree(&w("[[[g1,g2],g1],[g1,g2]]")), Some(5));
        assert_eq!(lcs_degree(&w("g1^2 g2^-2")), Some(1));
    }

    #[test]
    fn leading_term_examples() {
        let y = Alphabet::new('g', 3);
        let lie = |t: &str| LieElement::parse(t, y).unwrap();
        assert_eq!(gr_leading_term(&w("g1")).unwrap(), lie("g1"));
        assert_eq!(gr_leading_term(&w("[g1,g2]")).unwrap(), lie("[g1,g2]"));
        assert_eq!(gr_leading_term(&w("[g2,g1]")).unwrap(), lie("-[g1,g2]"));
        assert_eq!(gr_leading_term(&w("g1^3 g2^-1")).unwrap(), lie("3*g1-g2"));
        assert_eq!(
            gr_leading_term(&w("[[g1,g2],g3]")).unwrap(),
            lie("[[g1,g2],g3]")
        );
        assert_eq!(gr_leading_term(&w("[g1^2,g2]")).unwrap(), lie("2*[g1,g2]"));
        assert!(matches!(
            gr_leading_term(&FreeWord::identity(G)),
            Err(Error::IdentityInput)
        ));
    }

    fn arb_word(max_len: usize) -> impl Strategy<Value = FreeWord> {
        prop::collection::vec(
            (1usize..=3, prop::sample::select(vec![-2i64, -1, 1, 2])),
            0..max_len,
        )
        .prop_map(|raw| FreeWord::reduce(G, raw).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn word_group_laws(u in arb_word(8), v in arb_word(8)) {
            prop_assert_eq!(u.multiply(&v).unwrap().multiply(&v.invert()).unwrap(), u.clone());
            prop_assert!(u.multiply(&u.invert()).unwrap().is_identity());
            let again = FreeWord::reduce(G, u.syllables().iter().map(|&(g, e)| (g as usize, e))).unwrap();
            prop_assert_eq!(&again, &u);
            prop_assert!(u.commutator(&u).unwrap().is_identity());
        }

        #[test]
        fn expansion_is_multiplicative(u in arb_word(6), v in arb_word(6)) {
            let d = 4;
            let uv = u.multiply(&v).unwrap();
            prop_assert_eq!(magnus_expand(&uv, d), magnus_expand(&u, d).mul(&magnus_expand(&v, d)));
            prop_assert_eq!(magnus_expand(&u, d), naive_expand(&u, d));
        }

        #[test]
        fn commutators_go_deeper(u in arb_word(6), g in 1usize..=3) {
            prop_assume!(!u.is_identity());
            let m = lcs_degree(&u).unwrap();
            let gen = FreeWord::generator(G, g).unwrap();
            let c = u.commutator(&gen).unwrap();
            let lead = gr_leading_term(&u).unwrap()
                .bracket(&gr_leading_term(&gen).unwrap()).unwrap();
            if !lead.is_zero() {
                prop_assert_eq!(lcs_degree(&c), Some(m + 1));
                prop_assert_eq!(gr_leading_term(&c).unwrap(), lead);
            } else if let Some(k) = lcs_degree(&c) {
                prop_assert!(k > m);
            }
        }

        #[test]
        fn leading_terms_respect_brackets(u in arb_word(5), v in arb_word(5)) {
            prop_assume!(!u.is_identity() && !v.is_identity());
            let rhs = gr_leading_term(&u).unwrap().bracket(&gr_leading_term(&v).unwrap()).unwrap();
            if !rhs.is_zero() {
                let c = u.commutator(&v).unwrap();
                prop_assert_eq!(gr_leading_term(&c).unwrap(), rhs);
            }
        }
    }
}
