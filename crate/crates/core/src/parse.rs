//! Text form of multisegments.
//!
//! ```text
//! multisegment := "{" [ segment ("," segment)* ] "}"
//! segment      := "[" value [ "," value ] "]"
//! value        := ["-"] digits [ "/2" | ".5" ]
//! ```
//!
//! Whitespace is allowed between any two tokens.

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::multisegment::Multisegment;
use crate::segment::Segment;
use crate::value::Value;

pub fn parse_multisegment(text: &str) -> Result<Multisegment> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let ms = p.multisegment()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("trailing input after '}'"));
    }
    Ok(ms)
}

pub fn parse_value(text: &str) -> Result<Value> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let v = p.value()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("trailing input after value"));
    }
    Ok(v)
}

pub fn format_multisegment(ms: &Multisegment) -> String {
    ms.to_string()
}

impl FromStr for Multisegment {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_multisegment(s)
    }
}

impl FromStr for Value {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_value(s)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Syntax { pos: self.pos, msg: msg.into() }
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected '{}'", c as char)))
        }
    }

    fn multisegment(&mut self) -> Result<Multisegment> {
        self.expect(b'{')?;
        let mut segments = Vec::new();
        if self.peek() == Some(b'}') {
            self.pos += 1;
            return Ok(Multisegment::empty());
        }
        loop {
            let seg = self.segment()?;
            if let Some(first) = segments.first().map(Segment::base) {
                if !first.same_coset(seg.base()) {
                    return Err(Error::MixedCoset(first, seg.base()));
                }
            }
            segments.push(seg);
            match self.peek() {
                Some(b',') => self.pos += 1,
                Some(b'}') => {
                    self.pos += 1;
                    break;
                }
                _ => return Err(self.error("expected ',' or '}'")),
            }
        }
        Multisegment::new(segments)
    }

    fn segment(&mut self) -> Result<Segment> {
        self.expect(b'[')?;
        let b = self.value()?;
        let e = if self.peek() == Some(b',') {
            self.pos += 1;
            self.value()?
        } else {
            b
        };
        self.expect(b']')?;
        Segment::new(b, e)
    }

    fn value(&mut self) -> Result<Value> {
        let negative = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        let n: i64 = digits.parse().map_err(|_| Error::Syntax {
            pos: start,
            msg: "number out of range".into(),
        })?;
        let twice = match self.src.get(self.pos) {
            Some(b'/') => {
                if self.src.get(self.pos + 1) != Some(&b'2') {
                    self.pos += 1;
                    return Err(self.error("only the denominator 2 is supported"));
                }
                self.pos += 2;
                if self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
                    return Err(self.error("only the denominator 2 is supported"));
                }
                n
            }
            Some(b'.') => {
                if self.src.get(self.pos + 1) != Some(&b'5') {
                    self.pos += 1;
                    return Err(self.error("only the fractional part .5 is supported"));
                }
                self.pos += 2;
                if self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
                    return Err(self.error("only the fractional part .5 is supported"));
                }
                2 * n + 1
            }
            _ => 2 * n,
        };
        Ok(Value::from_twice(if negative { -twice } else { twice }))
    }
}
