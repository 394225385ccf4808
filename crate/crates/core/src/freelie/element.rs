use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::rc::Rc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::lyndon::{bracketing, is_lyndon, standard_split};
use crate::error::{check_index, Error, Result};
use crate::word::{Alphabet, Letter, NCPolynomial};

/// A Lyndon word used as a basis key. Ordered by length first, then
/// lexicographically, so iteration runs degree by degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LyndonWord(Vec<Letter>);

impl LyndonWord {
    pub fn new(letters: Vec<Letter>) -> Option<Self> {
        is_lyndon(&letters).then_some(Self(letters))
    }

    pub(crate) fn new_unchecked(letters: Vec<Letter>) -> Self {
        debug_assert!(is_lyndon(&letters));
        Self(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// Standard factorization into two Lyndon words, `None` for a letter.
    pub fn split(&self) -> Option<(LyndonWord, LyndonWord)> {
        standard_split(&self.0).map(|k| (Self(self.0[..k].to_vec()), Self(self.0[k..].to_vec())))
    }
}

impl PartialOrd for LyndonWord {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for LyndonWord {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

pub(crate) type Terms = BTreeMap<LyndonWord, BigInt>;

pub(crate) fn add_term(terms: &mut Terms, key: LyndonWord, c: BigInt) {
    if c.is_zero() {
        return;
    }
    match terms.entry(key) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

pub(crate) fn add_scaled(terms: &mut Terms, other: &Terms, scale: &BigInt) {
    for (k, c) in other {
        add_term(terms, k.clone(), c * scale);
    }
}

type BracketCache = HashMap<(Vec<Letter>, Vec<Letter>), Rc<Terms>>;

thread_local! {
    static BRACKETS: RefCell<BracketCache> =
        RefCell::new(HashMap::new());
}

/// Bracket of two Lyndon basis elements, rewritten into the Lyndon basis.
///
/// For `u < v` with standard factorization `u = (u1, u2)`: if `u` is a letter
/// or `u2 >= v`, then `uv` is Lyndon with factorization `(u, v)`. Otherwise
/// `[[u1,u2],v] = [u1,[u2,v]] + [[u1,v],u2]`.
pub(crate) fn bracket_basis(u: &[Letter], v: &[Letter]) -> Rc<Terms> {
    let key = (u.to_vec(), v.to_vec());
    if let Some(hit) = BRACKETS.with(|c| c.borrow().get(&key).cloned()) {
        return hit;
    }
    let result = Rc::new(bracket_basis_uncached(u, v));
    BRACKETS.with(|c| c.borrow_mut().insert(key, result.clone()));
    result
}

fn bracket_basis_uncached(u: &[Letter], v: &[Letter]) -> Terms {
    let mut out = Terms::new();
    if u == v {
        return out;
    }
    if u > v {
        for (k, c) in bracket_basis(v, u).iter() {
            out.insert(k.clone(), -c);
        }
        return out;
    }
    match standard_split(u) {
        Some(k) if u[k..] < *v => {
            let (u1, u2) = (&u[..k], &u[k..]);
            let inner = bracket_basis(u2, v);
            for (w, c) in inner.iter() {
                add_scaled(&mut out, &bracket_basis(u1, w.letters()), c);
            }
            let left = bracket_basis(u1, v);
            for (w, c) in left.iter() {
                add_scaled(&mut out, &bracket_basis(w.letters(), u2), c);
            }
        }
        _ => {
            let mut w = u.to_vec();
            w.extend_from_slice(v);
            out.insert(LyndonWord::new_unchecked(w), BigInt::one());
        }
    }
    out
}

pub(crate) fn bracket_terms(a: &Terms, b: &Terms) -> Terms {
    let mut out = Terms::new();
    for (x, cx) in a {
        for (y, cy) in b {
            add_scaled(
                &mut out,
                &bracket_basis(x.letters(), y.letters()),
                &(cx * cy),
            );
        }
    }
    out
}

/// An element of the free Lie algebra over the integers, in the Lyndon basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LieElement {
    alphabet: Alphabet,
    terms: Terms,
}

impl LieElement {
    pub fn zero(alphabet: Alphabet) -> Self {
        Self {
            alphabet,
            terms: Terms::new(),
        }
    }

    pub fn generator(alphabet: Alphabet, index: usize) -> Result<Self> {
        check_index(index, alphabet.rank)?;
        Ok(Self::basis(alphabet, LyndonWord(vec![index as Letter])))
    }

    /// A single basis element; fails if `letters` is not Lyndon or uses
    /// letters outside the alphabet.
    pub fn from_lyndon(alphabet: Alphabet, letters: &[Letter]) -> Result<Self> {
        for &l in letters {
            check_index(l as usize, alphabet.rank)?;
        }
        let w = LyndonWord::new(letters.to_vec())
            .ok_or_else(|| Error::Internal(format!("{letters:?} is not a Lyndon word")))?;
        Ok(Self::basis(alphabet, w))
    }

    pub(crate) fn basis(alphabet: Alphabet, w: LyndonWord) -> Self {
        let mut terms = Terms::new();
        terms.insert(w, BigInt::one());
        Self { alphabet, terms }
    }

    pub(crate) fn from_terms(alphabet: Alphabet, terms: Terms) -> Self {
        Self { alphabet, terms }
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&LyndonWord, &BigInt)> {
        self.terms.iter()
    }

    pub(crate) fn terms_map(&self) -> &Terms {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, letters: &[Letter]) -> BigInt {
        self.terms
            .get(&LyndonWord(letters.to_vec()))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// Largest bracket degree present, 0 for the zero element.
    pub fn max_degree(&self) -> usize {
        self.terms.keys().map(LyndonWord::degree).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.terms.keys().map(LyndonWord::degree).min().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.max_degree() == self.min_degree()
    }

    pub fn homogeneous_part(&self, m: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(k, _)| k.degree() == m)
            .map(|(k, c)| (k.clone(), c.clone()))
            .collect();
        Self {
            alphabet: self.alphabet,
            terms,
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.alphabet);
        }
        let terms = self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect();
        Self {
            alphabet: self.alphabet,
            terms,
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.alphabet.ensure_same(&other.alphabet)?;
        let mut terms = self.terms.clone();
        add_scaled(&mut terms, &other.terms, &BigInt::one());
        Ok(Self {
            alphabet: self.alphabet,
            terms,
        })
    }

    pub(crate) fn add_assign_scaled(&mut self, other: &Self, c: &BigInt) {
        debug_assert_eq!(self.alphabet, other.alphabet);
        add_scaled(&mut self.terms, &other.terms, c);
    }

    /// Bilinear extension of the basis bracket; grades add.
    pub fn bracket(&self, other: &Self) -> Result<Self> {
        self.alphabet.ensure_same(&other.alphabet)?;
        Ok(Self {
            alphabet: self.alphabet,
            terms: bracket_terms(&self.terms, &other.terms),
        })
    }

    /// Exact division of every coefficient; `None` if some coefficient is
    /// not divisible.
    pub fn div_exact(&self, d: &BigInt) -> Option<Self> {
        let mut terms = Terms::new();
        for (k, c) in &self.terms {
            if !(c % d).is_zero() {
                return None;
            }
            terms.insert(k.clone(), c / d);
        }
        Some(Self {
            alphabet: self.alphabet,
            terms,
        })
    }

    /// Coordinates against an ordered list of basis words.
    pub fn coordinates(&self, basis: &[Vec<Letter>]) -> Vec<BigInt> {
        basis.iter().map(|w| self.coefficient(w)).collect()
    }

    /// The Lie homomorphism to `target` determined by generator images.
    pub fn map_generators(&self, target: Alphabet, images: &[LieElement]) -> Result<LieElement> {
        if images.len() != self.alphabet.rank {
            return Err(Error::IndexOutOfRange {
                index: images.len() as i64,
                bound: self.alphabet.rank,
            });
        }
        for img in images {
            target.ensure_same(&img.alphabet)?;
        }
        let mut memo: HashMap<LyndonWord, Terms> = HashMap::new();
        let mut out = Terms::new();
        for (w, c) in &self.terms {
            let img = map_basis(w, images, &mut memo);
            add_scaled(&mut out, &img, c);
        }
        Ok(LieElement {
            alphabet: target,
            terms: out,
        })
    }

    /// Expands each bracket as `xy - yx` into the truncated associative
    /// algebra of degree `bound`.
    pub fn to_associative(&self, bound: usize) -> Result<NCPolynomial> {
        let deg = self.max_degree();
        if deg > bound {
            return Err(Error::DegreeOverflow { degree: deg, bound });
        }
        let mut out = NCPolynomial::zero(self.alphabet.rank, bound);
        for (w, c) in &self.terms {
            out.add_scaled(&expand_basis(w.letters(), self.alphabet.rank, bound), c);
        }
        Ok(out)
    }

    /// Renders terms with `name` naming letters, e.g. `3*[y1,y2]-[y1,y3]`.
    pub fn format_with(&self, name: &dyn Fn(Letter) -> String) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, (w, c)) in self.terms.iter().enumerate() {
            write_coefficient(&mut s, c, k == 0);
            s.push_str(&bracketing(w.letters(), name));
        }
        s
    }
}

pub(crate) fn write_coefficient(s: &mut String, c: &BigInt, first: bool) {
    if c.is_negative() {
        s.push('-');
    } else if !first {
        s.push('+');
    }
    let mag = c.abs();
    if !mag.is_one() {
        s.push_str(&mag.to_string());
        s.push('*');
    }
}

fn map_basis(
    w: &LyndonWord,
    images: &[LieElement],
    memo: &mut HashMap<LyndonWord, Terms>,
) -> Terms {
    if let Some(t) = memo.get(w) {
        return t.clone();
    }
    let t = match w.split() {
        None => images[w.letters()[0] as usize - 1].terms.clone(),
        Some((u, v)) => {
            let a = map_basis(&u, images, memo);
            if a.is_empty() {
                Terms::new()
            } else {
                let b = map_basis(&v, images, memo);
                bracket_terms(&a, &b)
            }
        }
    };
    memo.insert(w.clone(), t.clone());
    t
}

fn expand_basis(w: &[Letter], rank: usize, bound: usize) -> NCPolynomial {
    match standard_split(w) {
        None => NCPolynomial::monomial(rank, bound, w.to_vec(), BigInt::one()),
        Some(k) => {
            let a = expand_basis(&w[..k], rank, bound);
            let b = expand_basis(&w[k..], rank, bound);
            a.commutator(&b)
        }
    }
}

impl fmt::Display for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sym = self.alphabet.symbol;
        f.write_str(&self.format_with(&|l| format!("{sym}{l}")))
    }
}

impl Add for &LieElement {
    type Output = LieElement;
    fn add(self, rhs: &LieElement) -> LieElement {
        self.try_add(rhs).expect("alphabet mismatch in addition")
    }
}

impl Sub for &LieElement {
    type Output = LieElement;
    fn sub(self, rhs: &LieElement) -> LieElement {
        self.try_add(&-rhs)
            .expect("alphabet mismatch in subtraction")
    }
}

impl Neg for &LieElement {
    type Output = LieElement;
    fn neg(self) -> LieElement {
        let terms = self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect();
        LieElement {
            alphabet: self.alphabet,
            terms,
        }
    }
}

/// Free-function form of [`LieElement::bracket`].
pub fn lie_bracket(a: &LieElement, b: &LieElement) -> Result<LieElement> {
    a.bracket(b)
}

/// Free-function form of [`LieElement::to_associative`].
pub fn lie_to_associative(e: &LieElement, bound: usize) -> Result<NCPolynomial> {
    e.to_associative(bound)
}
