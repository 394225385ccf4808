//! Text syntax for braid words.
//!
//! ```text
//! braid := ('n' '=' int ':')? seq
//! seq   := item*
//! item  := atom ('^' int)?
//! atom  := 's' digits | 'A' '(' int ',' int ')' | '[' seq ',' seq ']' | '(' seq ')' | '1'
//! ```
//!
//! Words are kept literally; nothing is cancelled, so printing a parsed
//! crossing word gives back the same text.

use super::{Crossing, PureBraid, SigmaBraid};
use crate::error::{Error, Result};
use crate::text::Cursor;

pub(super) fn parse_braid(text: &str, strands: Option<usize>) -> Result<SigmaBraid> {
    let mut cur = Cursor::new(text);
    let mut declared = None;
    if cur.peek() == Some('n') {
        cur.bump();
        cur.expect('=')?;
        cur.skip_ws();
        declared = Some(cur.digits()? as usize);
        cur.expect(':')?;
    }
    let word = seq(&mut cur)?;
    if !cur.at_end() {
        return Err(cur.error(format!("unexpected input '{}'", cur.rest().trim())));
    }
    let n = match (declared, strands) {
        (Some(a), Some(b)) if a != b => {
            return Err(Error::Parse {
                pos: 0,
                msg: format!("prefix declares {a} strands, expected {b}"),
            })
        }
        (Some(a), _) | (None, Some(a)) => a,
        (None, None) => word.iter().map(|c| c.index + 1).max().unwrap_or(1),
    };
    SigmaBraid::new(n, word)
}

fn seq(cur: &mut Cursor<'_>) -> Result<Vec<Crossing>> {
    let mut out = Vec::new();
    while let Some(c) = cur.peek() {
        if matches!(c, ',' | ']' | ')') {
            break;
        }
        let a = atom(cur)?;
        let e = cur.exponent()?;
        let base: Vec<Crossing> = if e < 0 {
            a.iter().rev().map(|c| c.inverse()).collect()
        } else {
            a
        };
        for _ in 0..e.unsigned_abs() {
            out.extend_from_slice(&base);
        }
    }
    Ok(out)
}

fn inverse(w: &[Crossing]) -> impl Iterator<Item = Crossing> + '_ {
    w.iter().rev().map(|c| c.inverse())
}

fn atom(cur: &mut Cursor<'_>) -> Result<Vec<Crossing>> {
    match cur.peek() {
        Some('s') => {
            cur.bump();
            let i = cur.digits()? as usize;
            if i == 0 {
                return Err(Error::IndexOutOfRange { index: 0, bound: 0 });
            }
            Ok(vec![Crossing::new(i, 1)])
        }
        Some('A') => {
            cur.bump();
            cur.expect('(')?;
            cur.skip_ws();
            let r = cur.digits()? as usize;
            cur.expect(',')?;
            cur.skip_ws();
            let s = cur.digits()? as usize;
            cur.expect(')')?;
            Ok(PureBraid::a_generator(r, s, s)?.into_braid().word)
        }
        Some('[') => {
            cur.bump();
            let u = seq(cur)?;
            cur.expect(',')?;
            let v = seq(cur)?;
            cur.expect(']')?;
            let mut w = u.clone();
            w.extend_from_slice(&v);
            w.extend(inverse(&u));
            w.extend(inverse(&v));
            Ok(w)
        }
        Some('(') => {
            cur.bump();
            let u = seq(cur)?;
            cur.expect(')')?;
            Ok(u)
        }
        Some('1') => {
            cur.bump();
            Ok(Vec::new())
        }
        Some(c) => Err(cur.error(format!("unexpected '{c}'"))),
        None => Err(cur.error("unexpected end of input")),
    }
}
