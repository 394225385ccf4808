//! Bracket expressions and their text syntax.
//!
//! ```text
//! expr   := sign? term (('+'|'-') term)*
//! term   := (int '*')? factor
//! factor := leaf | '[' expr sep expr (sep expr)* ']' | '(' expr ')'
//! sep    := ',' | (nothing)
//! ```
//!
//! `[a,b,c]` is left-normed: `[[a,b],c]`. The separator may be omitted after
//! a closing bracket, so `[[[y1,y2]y3]y2]` parses as well.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::LieElement;
use crate::error::Result;
use crate::text::Cursor;
use crate::word::Alphabet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LieExpr<G> {
    Leaf(G),
    Bracket(Box<LieExpr<G>>, Box<LieExpr<G>>),
    Sum(Vec<(BigInt, LieExpr<G>)>),
}

/// The operations needed to evaluate a [`LieExpr`].
pub trait LieOps: Sized + Clone {
    fn zero_like(&self) -> Self;
    fn add_scaled(&mut self, other: &Self, c: &BigInt) -> Result<()>;
    fn lie(&self, other: &Self) -> Result<Self>;
}

impl LieOps for LieElement {
    fn zero_like(&self) -> Self {
        LieElement::zero(self.alphabet())
    }
    fn add_scaled(&mut self, other: &Self, c: &BigInt) -> Result<()> {
        self.alphabet().ensure_same(&other.alphabet())?;
        self.add_assign_scaled(other, c);
        Ok(())
    }
    fn lie(&self, other: &Self) -> Result<Self> {
        self.bracket(other)
    }
}

impl<G> LieExpr<G> {
    pub fn leaf(g: G) -> Self {
        LieExpr::Leaf(g)
    }

    pub fn bracket(a: LieExpr<G>, b: LieExpr<G>) -> Self {
        LieExpr::Bracket(Box::new(a), Box::new(b))
    }

    /// Left-normed bracket `[[..[g1,g2],..],gk]`.
    pub fn left_normed(items: Vec<LieExpr<G>>) -> Self {
        let mut it = items.into_iter();
        let first = it.next().expect("left_normed needs at least one item");
        it.fold(first, LieExpr::bracket)
    }

    /// Evaluates bottom-up. `zero` is returned for an empty sum.
    pub fn eval<T: LieOps>(&self, leaf: &dyn Fn(&G) -> Result<T>, zero: &T) -> Result<T> {
        match self {
            LieExpr::Leaf(g) => leaf(g),
            LieExpr::Bracket(a, b) => a.eval(leaf, zero)?.lie(&b.eval(leaf, zero)?),
            LieExpr::Sum(items) => {
                let mut acc = zero.zero_like();
                for (c, e) in items {
                    acc.add_scaled(&e.eval(leaf, zero)?, c)?;
                }
                Ok(acc)
            }
        }
    }
}

/// Parses an expression, delegating leaves to `leaf`, which returns
/// `Ok(None)` when the input at the cursor is not a leaf.
pub(crate) fn parse_expr<G>(
    text: &str,
    leaf: &dyn Fn(&mut Cursor<'_>) -> Result<Option<G>>,
) -> Result<LieExpr<G>> {
    let mut cur = Cursor::new(text);
    let e = expr(&mut cur, leaf)?;
    if !cur.at_end() {
        return Err(cur.error(format!("unexpected input '{}'", cur.rest().trim())));
    }
    Ok(e)
}

fn expr<G>(
    cur: &mut Cursor<'_>,
    leaf: &dyn Fn(&mut Cursor<'_>) -> Result<Option<G>>,
) -> Result<LieExpr<G>> {
    let mut items = Vec::new();
    let mut sign = BigInt::one();
    if cur.eat('-') {
        sign = -sign;
    } else {
        cur.eat('+');
    }
    loop {
        let (c, f) = term(cur, leaf)?;
        items.push((sign * c, f));
        if cur.eat('+') {
            sign = BigInt::one();
        } else if cur.eat('-') {
            sign = -BigInt::one();
        } else {
            break;
        }
    }
    if items.len() == 1 && items[0].0.is_one() {
        return Ok(items.pop().unwrap().1);
    }
    Ok(LieExpr::Sum(items))
}

fn term<G>(
    cur: &mut Cursor<'_>,
    leaf: &dyn Fn(&mut Cursor<'_>) -> Result<Option<G>>,
) -> Result<(BigInt, LieExpr<G>)> {
    let mut c = BigInt::one();
    if cur.peek_digit() {
        cur.skip_ws();
        let k = cur.digits()?;
        c = BigInt::from(k);
        if !cur.eat('*') {
            // A bare integer is only meaningful as 0.
            if c.is_zero() {
                return Ok((BigInt::zero(), LieExpr::Sum(Vec::new())));
            }
            return Err(cur.error("expected '*' after coefficient"));
        }
    }
    Ok((c, factor(cur, leaf)?))
}

fn factor<G>(
    cur: &mut Cursor<'_>,
    leaf: &dyn Fn(&mut Cursor<'_>) -> Result<Option<G>>,
) -> Result<LieExpr<G>> {
    if cur.eat('[') {
        let mut items = vec![expr(cur, leaf)?];
        loop {
            if cur.eat(']') {
                break;
            }
            cur.eat(',');
            items.push(expr(cur, leaf)?);
        }
        if items.len() < 2 {
            return Err(cur.error("bracket needs at least two entries"));
        }
        return Ok(LieExpr::left_normed(items));
    }
    if cur.eat('(') {
        let e = expr(cur, leaf)?;
        cur.expect(')')?;
        return Ok(e);
    }
    cur.skip_ws();
    match leaf(cur)? {
        Some(g) => Ok(LieExpr::Leaf(g)),
        None => Err(match cur.peek() {
            Some(c) => cur.error(format!("unexpected '{c}'")),
            None => cur.error("unexpected end of input"),
        }),
    }
}

/// Leaf parser for generators written `{symbol}{index}`.
pub(crate) fn symbol_leaf(symbol: char) -> impl Fn(&mut Cursor<'_>) -> Result<Option<usize>> {
    move |cur| {
        if cur.peek() == Some(symbol) {
            cur.bump();
            Ok(Some(cur.digits()? as usize))
        } else {
            Ok(None)
        }
    }
}

/// Parses a bracket expression over the generators of `alphabet`.
pub fn parse_lie_expr(text: &str, alphabet: Alphabet) -> Result<LieExpr<usize>> {
    parse_expr(text, &symbol_leaf(alphabet.symbol))
}

/// Rewrites an expression tree into the Lyndon basis. Out-of-range
/// generators make the tree malformed.
pub fn lie_normal_form(expr: &LieExpr<usize>, alphabet: Alphabet) -> Result<LieElement> {
    expr.eval(
        &|&g| LieElement::generator(alphabet, g),
        &LieElement::zero(alphabet),
    )
}

impl LieElement {
    pub fn parse(text: &str, alphabet: Alphabet) -> Result<LieElement> {
        lie_normal_form(&parse_lie_expr(text, alphabet)?, alphabet)
    }
}
