//! Text syntax for free-group words.
//!
//! ```text
//! word  := item*
//! item  := atom ('^' int)?
//! atom  := SYMBOL digits | '1' | '[' word ',' word ']' | '(' word ')'
//! ```
//!
//! `[u,v]` expands to `u v u^-1 v^-1`.

use super::{Alphabet, FreeWord};
use crate::error::Result;
use crate::text::Cursor;

pub(super) fn parse_word(text: &str, alphabet: Alphabet) -> Result<FreeWord> {
    let mut cur = Cursor::new(text);
    let w = word(&mut cur, alphabet)?;
    if !cur.at_end() {
        return Err(cur.error(format!("unexpected input '{}'", cur.rest().trim())));
    }
    Ok(w)
}

fn word(cur: &mut Cursor<'_>, alphabet: Alphabet) -> Result<FreeWord> {
    let mut w = FreeWord::identity(alphabet);
    while let Some(c) = cur.peek() {
        if matches!(c, ',' | ']' | ')') {
            break;
        }
        let a = atom(cur, alphabet)?;
        let e = cur.exponent()?;
        w.append(&a.pow(e));
    }
    Ok(w)
}

fn atom(cur: &mut Cursor<'_>, alphabet: Alphabet) -> Result<FreeWord> {
    match cur.peek() {
        Some('[') => {
            cur.bump();
            let u = word(cur, alphabet)?;
            cur.expect(',')?;
            let v = word(cur, alphabet)?;
            cur.expect(']')?;
            u.commutator(&v)
        }
        Some('(') => {
            cur.bump();
            let u = word(cur, alphabet)?;
            cur.expect(')')?;
            Ok(u)
        }
        Some('1') => {
            cur.bump();
            Ok(FreeWord::identity(alphabet))
        }
        Some(c) if c == alphabet.symbol => {
            cur.bump();
            let g = cur.digits()? as usize;
            FreeWord::generator(alphabet, g)
        }
        Some(c) => Err(cur.error(format!("unexpected '{c}'"))),
        None => Err(cur.error("unexpected end of input")),
    }
}
