//! Text form of multivectors.
//!
//! ```text
//! expr  := ['+'|'-'] term (('+'|'-') term)*
//! term  := coeff ['*'] blade | blade | coeff
//! coeff := real | '(' ['-'] real ('+'|'-') real 'i' ')' | real 'i' | 'i'
//! blade := 'e' [indices]
//! ```
//!
//! For `n <= 9` every digit after `e` is one generator (`e134`). For larger
//! `n` indices are separated by `_` (`e1_12`) and an unseparated run is a
//! single index. Reals have no exponent part so `2e1` reads as `2*e1`.
//! Printing uses the shortest decimal that round-trips, so
//! `parse(print(u)) == u` exactly.

use std::fmt;

use num_complex::Complex64;

use super::blade::Blade;
use super::multivector::{Field, Multivector, Operation};
use super::signature::Signature;
use crate::error::{Error, Result};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    sig: Signature,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str, sig: Signature) -> Self {
        Self { src: text.as_bytes(), pos: 0, sig }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn real(&mut self) -> Result<f64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && (self.src[self.pos].is_ascii_digit() || self.src[self.pos] == b'.') {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a number");
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        text.parse::<f64>().or_else(|_| {
            self.pos = start;
            self.err(format!("malformed number '{text}'"))
        })
    }

    fn coeff(&mut self) -> Result<Complex64> {
        if self.eat(b'(') {
            let re_sign = if self.eat(b'-') { -1.0 } else { 1.0 };
            let re = re_sign * self.real()?;
            let im_sign = if self.eat(b'+') {
                1.0
            } else if self.eat(b'-') {
                -1.0
            } else {
                return self.err("expected '+' or '-' inside complex coefficient");
            };
            let im = im_sign * self.real()?;
            if !self.eat(b'i') {
                return self.err("expected 'i'");
            }
            if !self.eat(b')') {
                return self.err("expected ')'");
            }
            return Ok(Complex64::new(re, im));
        }
        if self.eat(b'i') {
            return Ok(Complex64::new(0.0, 1.0));
        }
        let x = self.real()?;
        // no whitespace allowed between a number and its 'i'
        if self.src.get(self.pos) == Some(&b'i') {
            self.pos += 1;
            Ok(Complex64::new(0.0, x))
        } else {
            Ok(Complex64::new(x, 0.0))
        }
    }

    fn blade(&mut self) -> Result<Blade> {
        if !self.eat(b'e') {
            return self.err("expected a blade 'e...'");
        }
        let start = self.pos;
        while self.pos < self.src.len() && (self.src[self.pos].is_ascii_digit() || self.src[self.pos] == b'_') {
            self.pos += 1;
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        if text.is_empty() {
            return Ok(Blade::IDENTITY);
        }
        let n = self.sig.n();
        let indices: Vec<usize> = if text.contains('_') || n > 9 {
            let mut out = Vec::new();
            for part in text.split('_') {
                match part.parse::<usize>() {
                    Ok(a) => out.push(a),
                    Err(_) => return self.err(format!("malformed blade index list 'e{text}'")),
                }
            }
            out
        } else {
            text.bytes().map(|d| (d - b'0') as usize).collect()
        };
        if indices.iter().any(|&a| a == 0 || a > n) {
            return self.err(format!("generator index out of range 1..={n} in 'e{text}'"));
        }
        if indices.windows(2).any(|w| w[0] >= w[1]) {
            return self.err(format!("generator indices must be strictly ascending in 'e{text}'"));
        }
        Blade::from_indices(&indices)
    }

    fn term(&mut self) -> Result<(Blade, Complex64)> {
        match self.peek() {
            Some(b'e') => Ok((self.blade()?, Complex64::new(1.0, 0.0))),
            Some(c) if c == b'(' || c == b'.' || c == b'i' || c.is_ascii_digit() => {
                let c = self.coeff()?;
                let save = self.pos;
                if self.eat(b'*') {
                    if self.peek() == Some(b'e') {
                        return Ok((self.blade()?, c));
                    }
                    // a bare '*' after a coefficient is the product operator
                    self.pos = save;
                    return Ok((Blade::IDENTITY, c));
                }
                if self.peek() == Some(b'e') {
                    return Ok((self.blade()?, c));
                }
                Ok((Blade::IDENTITY, c))
            }
            Some(_) => self.err("expected a term"),
            None => self.err("unexpected end of input"),
        }
    }

    fn expr(&mut self, field: Field) -> Result<Multivector> {
        let mut terms = Vec::new();
        let mut sign = if self.eat(b'-') {
            -1.0
        } else {
            self.eat(b'+');
            1.0
        };
        loop {
            let (blade, c) = self.term()?;
            if field == Field::Real && c.im != 0.0 {
                return self.err("imaginary coefficient in a real-field expression");
            }
            terms.push((blade, c * sign));
            if self.eat(b'+') {
                sign = 1.0;
            } else if self.eat(b'-') {
                sign = -1.0;
            } else {
                break;
            }
        }
        Multivector::from_terms(self.sig, field, terms)
    }

    fn binary_op(&mut self) -> Option<Operation> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let (op, len) = if rest.starts_with(b"*") {
            (Operation::Product, 1)
        } else if rest.starts_with(b"comm") {
            (Operation::Commutator, 4)
        } else if rest.starts_with(b"anti") {
            (Operation::Anticommutator, 4)
        } else {
            return None;
        };
        self.pos += len;
        Some(op)
    }
}

/// Parses a single expression.
pub fn parse_multivector(text: &str, sig: Signature, field: Field) -> Result<Multivector> {
    let mut p = Parser::new(text, sig);
    let mv = p.expr(field)?;
    if !p.at_end() {
        return p.err("trailing input");
    }
    Ok(mv)
}

/// Parses `EXPR [op EXPR]` with `op` one of `*`, `comm`, `anti`.
pub fn parse_binary(
    text: &str,
    sig: Signature,
    field: Field,
) -> Result<(Multivector, Option<(Operation, Multivector)>)> {
    let mut p = Parser::new(text, sig);
    let lhs = p.expr(field)?;
    if p.at_end() {
        return Ok((lhs, None));
    }
    let Some(op) = p.binary_op() else {
        return p.err("expected '*', 'comm' or 'anti'");
    };
    let rhs = p.expr(field)?;
    if !p.at_end() {
        return p.err("trailing input");
    }
    Ok((lhs, Some((op, rhs))))
}

fn blade_text(blade: Blade, n: usize) -> String {
    let idx = blade.indices();
    let parts: Vec<String> = idx.iter().map(|a| a.to_string()).collect();
    if n > 9 {
        format!("e{}", parts.join("_"))
    } else {
        format!("e{}", parts.concat())
    }
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (blade, c)) in self.terms().enumerate() {
            let blade = blade_text(blade, self.n());
            let (negative, body) = if c.im == 0.0 {
                let body = if c.re.abs() == 1.0 { blade } else { format!("{}*{blade}", c.re.abs()) };
                (c.re < 0.0, body)
            } else if c.re == 0.0 {
                (c.im < 0.0, format!("{}i*{blade}", c.im.abs()))
            } else {
                let op = if c.im < 0.0 { '-' } else { '+' };
                (false, format!("({}{op}{}i)*{blade}", c.re, c.im.abs()))
            };
            match (i, negative) {
                (0, true) => write!(f, "-{body}")?,
                (0, false) => f.write_str(&body)?,
                (_, true) => write!(f, " - {body}")?,
                (_, false) => write!(f, " + {body}")?,
            }
        }
        Ok(())
    }
}
