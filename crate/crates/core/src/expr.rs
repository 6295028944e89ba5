//! Text form of states and momenta.
//!
//! ```text
//! state   := term (('+' | '-') term)*
//! term    := ['-'] factor ('*' factor)*
//! factor  := rational | '(' state ')' | 'exp' '[' mom ']' | 'd' ['^' int] 'phi' '[' mom ']'
//! mom     := ['-'] mterm (('+' | '-') mterm)*
//! mterm   := [rational ['*']] symbol [suffix] | rational
//! symbol  := 'a' | 'a1'..'an' | 'l1'..'ln' | 'Q'
//! suffix  := '/sqrtp' | '*sqrtp'
//! ```
//!
//! Momenta are coordinates in the ambient basis `e_i = α_i/√p`, so `a1` is
//! already `α_1/√p` and the `/sqrtp` suffix is accepted as a no-op. `*sqrtp`
//! multiplies by `p` (`α√p = p·e`). `li` is `λ_i/√p`. A bare rational inside
//! `[...]` is only allowed as `0`.

use crate::error::{Error, Result};
use crate::freefield::{Factor, FieldElement, Monomial};
use crate::lattice::{Momentum, ScreeningLattices};
use crate::rational::{fmt_rat, int, parse_rat, Rational};
use num_traits::{One, Signed, Zero};

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    sl: &'a ScreeningLattices,
}

fn err<T>(pos: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse {
        pos,
        msg: msg.into(),
    })
}

impl<'a> Parser<'a> {
    fn rank(&self) -> usize {
        self.sl.rs.rank
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            err(self.pos, format!("expected '{}'", c as char))
        }
    }

    fn eat_word(&mut self, w: &str) -> bool {
        self.skip_ws();
        let b = w.as_bytes();
        if self.s[self.pos..].starts_with(b) {
            let next = self.s.get(self.pos + b.len());
            if next.is_none_or(|c| !c.is_ascii_alphanumeric()) {
                self.pos += b.len();
                return true;
            }
        }
        false
    }

    fn ident(&mut self) -> Option<(usize, String)> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_alphanumeric() {
            self.pos += 1;
        }
        (self.pos > start)
            .then(|| (start, String::from_utf8_lossy(&self.s[start..self.pos]).into_owned()))
    }

    fn at_number(&mut self) -> bool {
        self.peek().is_some_and(|c| c.is_ascii_digit())
    }

    /// `123` or `123/45`; a `/` not followed by a digit is left alone.
    fn rational(&mut self) -> Result<Rational> {
        self.skip_ws();
        let start = self.pos;
        let digits = |p: &mut Self| {
            let s = p.pos;
            while p.pos < p.s.len() && p.s[p.pos].is_ascii_digit() {
                p.pos += 1;
            }
            p.pos > s
        };
        if !digits(self) {
            return err(start, "expected a number");
        }
        if self.s.get(self.pos) == Some(&b'/') && self.s.get(self.pos + 1).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
            digits(self);
        }
        let text = std::str::from_utf8(&self.s[start..self.pos]).expect("ascii");
        match parse_rat(text) {
            Some(r) => Ok(r),
            None => err(start, format!("bad rational '{text}'")),
        }
    }

    fn symbol(&mut self) -> Result<Momentum> {
        let (at, name) = match self.ident() {
            Some(x) => x,
            None => return err(self.pos, "expected a momentum symbol"),
        };
        let n = self.rank();
        let index = |s: &str| -> Result<usize> {
            match s.parse::<usize>() {
                Ok(i) if (1..=n).contains(&i) => Ok(i - 1),
                _ => err(at, format!("unknown symbol '{name}'")),
            }
        };
        let mut v = if name == "Q" {
            self.sl.q.clone()
        } else if name == "a" && n == 1 {
            Momentum::unit(1, 0)
        } else if let Some(rest) = name.strip_prefix('a') {
            Momentum::unit(n, index(rest)?)
        } else if let Some(rest) = name.strip_prefix('l') {
            Momentum(self.sl.rs.fund_weights.row(index(rest)?))
        } else {
            return err(at, format!("unknown symbol '{name}'"));
        };
        self.skip_ws();
        let rest = &self.s[self.pos..];
        if rest.starts_with(b"/sqrtp") {
            self.pos += 6;
        } else if rest.starts_with(b"*sqrtp") {
            self.pos += 6;
            v = v.scale(int(self.sl.p as i128));
        }
        Ok(v)
    }

    fn mterm(&mut self) -> Result<Momentum> {
        let start = self.pos;
        if self.at_number() {
            let c = self.rational()?;
            self.eat(b'*');
            if self.peek().is_some_and(|c| c.is_ascii_alphabetic()) {
                return Ok(self.symbol()?.scale(c));
            }
            if c.is_zero() {
                return Ok(Momentum::zero(self.rank()));
            }
            return err(start, "bare number in a momentum; only 0 is allowed");
        }
        self.symbol()
    }

    fn momentum(&mut self) -> Result<Momentum> {
        let neg = self.eat(b'-');
        let mut v = self.mterm()?;
        if neg {
            v = v.neg();
        }
        loop {
            if self.eat(b'+') {
                v = v.add(&self.mterm()?);
            } else if self.eat(b'-') {
                v = v.sub(&self.mterm()?);
            } else {
                return Ok(v);
            }
        }
    }

    fn bracket(&mut self) -> Result<Momentum> {
        self.expect(b'[')?;
        let m = self.momentum()?;
        self.expect(b']')?;
        Ok(m)
    }

    fn factor(&mut self) -> Result<FieldElement> {
        let n = self.rank();
        if self.at_number() {
            return Ok(FieldElement::scalar(n, self.rational()?));
        }
        if self.eat(b'(') {
            let e = self.state()?;
            self.expect(b')')?;
            return Ok(e);
        }
        if self.eat_word("exp") {
            return Ok(FieldElement::exp(self.bracket()?));
        }
        if self.eat_word("d") {
            let mut order = 1u32;
            if self.eat(b'^') {
                let at = self.pos;
                let r = self.rational()?;
                if !r.is_integer() || r < int(1) || r > int(64) {
                    return err(at, "derivative order must be an integer in 1..=64");
                }
                order = r.to_integer() as u32;
            }
            if !self.eat_word("phi") {
                return err(self.pos, "expected 'phi'");
            }
            return Ok(FieldElement::dphi(order, &self.bracket()?));
        }
        err(self.pos, "expected a number, '(', 'exp' or 'd'")
    }

    fn term(&mut self) -> Result<FieldElement> {
        let neg = self.eat(b'-');
        let mut t = self.factor()?;
        while self.eat(b'*') {
            t = t.mul(&self.factor()?);
        }
        Ok(if neg { t.neg() } else { t })
    }

    fn state(&mut self) -> Result<FieldElement> {
        let mut e = self.term()?;
        loop {
            // `term` consumes a leading '-' itself.
            if self.eat(b'+') || self.peek() == Some(b'-') {
                e = e.add(&self.term()?);
            } else {
                return Ok(e);
            }
        }
    }

    fn finish(&mut self) -> Result<()> {
        if self.peek().is_some() {
            return err(self.pos, "trailing input");
        }
        Ok(())
    }
}

pub fn parse_state(text: &str, sl: &ScreeningLattices) -> Result<FieldElement> {
    let mut p = Parser {
        s: text.as_bytes(),
        pos: 0,
        sl,
    };
    let e = p.state()?;
    p.finish()?;
    Ok(e)
}

pub fn parse_momentum(text: &str, sl: &ScreeningLattices) -> Result<Momentum> {
    let mut p = Parser {
        s: text.as_bytes(),
        pos: 0,
        sl,
    };
    let m = p.momentum()?;
    p.finish()?;
    Ok(m)
}

fn symbol_name(rank: usize, i: usize) -> String {
    if rank == 1 {
        "a".into()
    } else {
        format!("a{}", i + 1)
    }
}

/// Canonical text of a momentum, e.g. `1/2*a1 - a2` or `0`.
pub fn print_momentum(m: &Momentum) -> String {
    let mut out = String::new();
    for (i, c) in m.0.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let sym = symbol_name(m.rank(), i);
        let mag = c.abs();
        let body = if mag.is_one() {
            sym
        } else {
            format!("{}*{sym}", fmt_rat(&mag))
        };
        match (out.is_empty(), *c < int(0)) {
            (true, true) => out.push_str(&format!("-{body}")),
            (true, false) => out.push_str(&body),
            (false, true) => out.push_str(&format!(" - {body}")),
            (false, false) => out.push_str(&format!(" + {body}")),
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

fn print_factor(f: &Factor, rank: usize) -> String {
    let d = if f.order == 1 {
        "d".to_string()
    } else {
        format!("d^{}", f.order)
    };
    format!("{d} phi[{}]", symbol_name(rank, f.basis as usize))
}

fn print_term(c: &Rational, m: &Momentum, u: &Monomial) -> String {
    let mut parts = Vec::new();
    if !c.is_one() {
        parts.push(fmt_rat(c));
    }
    parts.extend(u.0.iter().map(|f| print_factor(f, m.rank())));
    parts.push(format!("exp[{}]", print_momentum(m)));
    parts.join(" * ")
}

/// Canonical text of a state: terms in storage order, `exp[...]` always
/// present, `0` for the zero element.
pub fn print_state(e: &FieldElement) -> String {
    let mut out = String::new();
    for (m, u, c) in e.terms() {
        let neg = *c < int(0);
        let body = print_term(&c.abs(), m, u);
        match (out.is_empty(), neg) {
            (true, true) => out.push_str(&format!("-{body}")),
            (true, false) => out.push_str(&body),
            (false, true) => out.push_str(&format!(" - {body}")),
            (false, false) => out.push_str(&format!(" + {body}")),
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}
