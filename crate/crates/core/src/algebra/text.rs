//! Text form of polynomials.
//!
//! Terms are joined by `+` or `-`; a term is a `*`-separated product of
//! coefficients and powers `var^e`. Prime-field coefficients are integers
//! reduced mod `p`; extension-field coefficients are bracketed coordinate
//! vectors, low degree first (`[1,0,1]` is `1 + u^2`).

use super::field::Field;
use super::monomial::Monomial;
use super::poly::Poly;
use crate::error::{Error, Result};

/// `x, y, z, w` for up to four variables, `x0, x1, …` beyond that.
pub fn default_var_names(nvars: usize) -> Vec<String> {
    if nvars <= 4 {
        ["x", "y", "z", "w"][..nvars].iter().map(|s| s.to_string()).collect()
    } else {
        (0..nvars).map(|i| format!("x{i}")).collect()
    }
}

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
    line: usize,
}

impl Cursor<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::parse(self.line, format!("{} (column {})", msg.into(), self.pos + 1))
    }

    fn number(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a number"));
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| self.err("number too large"))
    }

    fn ident(&mut self) -> &str {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && (self.s[self.pos].is_ascii_alphanumeric() || self.s[self.pos] == b'_') {
            self.pos += 1;
        }
        std::str::from_utf8(&self.s[start..self.pos]).unwrap()
    }
}

/// Parses `text` as a polynomial in the named variables.
pub fn parse_poly(text: &str, field: &Field, vars: &[String]) -> Result<Poly> {
    parse_poly_at(text, field, vars, 1)
}

pub(crate) fn parse_poly_at(text: &str, field: &Field, vars: &[String], line: usize) -> Result<Poly> {
    let nvars = vars.len();
    let mut cur = Cursor { s: text.as_bytes(), pos: 0, line };
    let mut terms = Vec::new();
    let mut sign_neg = false;
    match cur.peek() {
        Some(b'-') => {
            sign_neg = true;
            cur.pos += 1;
        }
        Some(b'+') => cur.pos += 1,
        None => return Err(cur.err("empty polynomial")),
        _ => {}
    }
    loop {
        let (m, mut c) = parse_term(&mut cur, field, vars)?;
        if sign_neg {
            c = field.neg(c);
        }
        terms.push((m, c));
        match cur.peek() {
            None => break,
            Some(b'+') => {
                sign_neg = false;
                cur.pos += 1;
            }
            Some(b'-') => {
                sign_neg = true;
                cur.pos += 1;
            }
            Some(ch) => return Err(cur.err(format!("unexpected character '{}'", ch as char))),
        }
    }
    Ok(Poly::from_terms(field, nvars, terms))
}

fn parse_term(cur: &mut Cursor<'_>, field: &Field, vars: &[String]) -> Result<(Monomial, u32)> {
    let mut exps = vec![0u32; vars.len()];
    let mut coeff = 1u32;
    loop {
        match cur.peek() {
            Some(ch) if ch.is_ascii_digit() => {
                let n = cur.number()?;
                coeff = field.mul(coeff, (n % field.characteristic() as u64) as u32);
            }
            Some(b'[') => {
                cur.pos += 1;
                let mut coords = Vec::new();
                loop {
                    let n = cur.number()?;
                    coords.push((n % field.characteristic() as u64) as u32);
                    match cur.peek() {
                        Some(b',') => cur.pos += 1,
                        Some(b']') => {
                            cur.pos += 1;
                            break;
                        }
                        _ => return Err(cur.err("expected ',' or ']'")),
                    }
                }
                let v = field.from_coords(&coords).map_err(|_| {
                    cur.err(format!("coefficient has more than {} coordinates", field.degree()))
                })?;
                coeff = field.mul(coeff, v);
            }
            Some(ch) if ch.is_ascii_alphabetic() || ch == b'_' => {
                let name = cur.ident().to_string();
                let idx = vars
                    .iter()
                    .position(|v| *v == name)
                    .ok_or_else(|| cur.err(format!("unknown variable '{name}'")))?;
                let mut e = 1u64;
                if cur.peek() == Some(b'^') {
                    cur.pos += 1;
                    e = cur.number()?;
                }
                exps[idx] += e.min(1 << 20) as u32;
            }
            _ => return Err(cur.err("expected a coefficient or variable")),
        }
        if cur.peek() == Some(b'*') {
            cur.pos += 1;
        } else {
            break;
        }
    }
    let m = Monomial::from_exponents(&exps).map_err(|e| cur.err(e.to_string()))?;
    Ok((m, coeff))
}

/// Canonical text form: descending grevlex, canonical residues, no minus signs.
pub fn format_poly(p: &Poly, vars: &[String]) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let field = p.field();
    let coeff = |c: u32| -> String {
        if field.is_prime_field() {
            c.to_string()
        } else {
            let parts: Vec<String> = field.coords(c).iter().map(u32::to_string).collect();
            format!("[{}]", parts.join(","))
        }
    };
    let terms: Vec<String> = p
        .terms()
        .iter()
        .map(|&(m, c)| {
            let mut factors = Vec::new();
            if c != 1 || m == Monomial::ONE {
                factors.push(coeff(c));
            }
            for (i, name) in vars.iter().enumerate().take(p.nvars()) {
                match m.exponent(i) {
                    0 => {}
                    1 => factors.push(name.clone()),
                    e => factors.push(format!("{name}^{e}")),
                }
            }
            factors.join("*")
        })
        .collect();
    terms.join(" + ")
}
