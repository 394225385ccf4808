//! Minimal cursor shared by the word, braid and Lie-expression parsers.

use crate::error::{Error, Result};

pub(crate) struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub(crate) fn new(src: &'a str) -> Self {
        Self { src, pos: 0 }
    }

    pub(crate) fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    pub(crate) fn skip_ws(&mut self) {
        while let Some(c) = self.peek_raw() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek_raw(&self) -> Option<char> {
        self.rest().chars().next()
    }

    /// Next non-whitespace character, not consumed.
    pub(crate) fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.peek_raw()
    }

    pub(crate) fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    pub(crate) fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    pub(crate) fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{c}'")))
        }
    }

    pub(crate) fn error(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    /// Unsigned decimal integer directly at the cursor (no leading whitespace skip
    /// beyond the current position).
    pub(crate) fn digits(&mut self) -> Result<u64> {
        let rest = self.rest();
        let len = rest.bytes().take_while(u8::is_ascii_digit).count();
        if len == 0 {
            return Err(self.error("expected digits"));
        }
        let value = rest[..len]
            .parse::<u64>()
            .map_err(|e| self.error(e.to_string()))?;
        self.pos += len;
        Ok(value)
    }

    /// Optionally signed integer, whitespace allowed before it.
    pub(crate) fn integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let negative = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        self.skip_ws();
        let magnitude = self.digits()? as i64;
        Ok(if negative { -magnitude } else { magnitude })
    }

    /// Optional `^k` suffix; returns 1 when absent.
    pub(crate) fn exponent(&mut self) -> Result<i64> {
        if self.eat('^') {
            self.integer()
        } else {
            Ok(1)
        }
    }

    pub(crate) fn peek_digit(&mut self) -> bool {
        matches!(self.peek(), Some(c) if c.is_ascii_digit())
    }

    /// Consume a single char without skipping whitespace first.
    pub(crate) fn bump(&mut self) -> Option<char> {
        let c = self.peek_raw()?;
        self.pos += c.len_utf8();
        Some(c)
    }
}
