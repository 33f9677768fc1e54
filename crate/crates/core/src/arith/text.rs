//! Canonical text form of polynomials and rational functions.
//!
//! Grammar accepted by the parsers:
//!
//! ```text
//! ratfun := group [ "/" group ]
//! group  := "(" poly ")" | poly
//! poly   := [sign] term { sign term }
//! term   := factor { "*" factor }
//! factor := integer | ident [ "^" integer ]
//! ```
//!
//! Coefficients are integers; the slash only separates numerator from denominator.

use num_bigint::BigInt;
use num_traits::One;

use super::coeff::Coeff;
use super::poly::{IntPoly, Monomial, Poly, VarSet};
use super::ratfun::RationalFunction;
use crate::error::{Error, Result};

/// Largest exponent the parser accepts on a single factor.
pub const MAX_PARSED_EXPONENT: u16 = 4096;

pub fn format_poly<C: Coeff>(p: &Poly<C>) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let names = p.vars().names();
    let mut out = String::new();
    for (k, (m, c)) in p.terms().iter().enumerate() {
        let negative = c.is_negative();
        let abs = if negative { -c.clone() } else { c.clone() };
        if k == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let mono = format_monomial(m, names);
        if mono.is_empty() {
            out.push_str(&abs.to_string());
        } else if abs.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&abs.to_string());
            out.push('*');
            out.push_str(&mono);
        }
    }
    out
}

fn format_monomial(m: &Monomial, names: &[String]) -> String {
    let mut parts = Vec::new();
    for (e, name) in m.exponents().iter().zip(names) {
        match e {
            0 => {}
            1 => parts.push(name.clone()),
            e => parts.push(format!("{name}^{e}")),
        }
    }
    parts.join("*")
}

pub fn format_ratfun(f: &RationalFunction) -> String {
    format!("({}) / ({})", format_poly(f.numer()), format_poly(f.denom()))
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(s: &'a str) -> Self {
        Parser {
            src: s.as_bytes(),
            pos: 0,
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
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

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected integer");
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digits parse"))
    }

    fn ident(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        match self.src.get(self.pos) {
            Some(b) if b.is_ascii_alphabetic() || *b == b'_' => self.pos += 1,
            _ => return None,
        }
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        Some(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii ident"))
    }

    fn term(&mut self, vars: &VarSet) -> Result<(Monomial, BigInt)> {
        let mut coeff = BigInt::one();
        let mut exps = vec![0u16; vars.len()];
        loop {
            match self.peek() {
                Some(b) if b.is_ascii_digit() => coeff *= self.integer()?,
                Some(_) => {
                    let before = self.pos;
                    let Some(name) = self.ident() else {
                        return self.err("expected coefficient or variable");
                    };
                    let Some(idx) = vars.index_of(name) else {
                        self.pos = before;
                        return self.err(format!("unknown variable '{name}'"));
                    };
                    let mut e: u16 = 1;
                    if self.eat(b'^') {
                        let v = self.integer()?;
                        match u16::try_from(v) {
                            Ok(v) if v <= MAX_PARSED_EXPONENT => e = v,
                            _ => return self.err("exponent too large"),
                        }
                    }
                    exps[idx] = match exps[idx].checked_add(e) {
                        Some(x) if x <= MAX_PARSED_EXPONENT => x,
                        _ => return self.err("exponent too large"),
                    };
                }
                None => return self.err("unexpected end of input"),
            }
            if !self.eat(b'*') {
                break;
            }
        }
        Ok((Monomial::from_exponents(&exps), coeff))
    }

    fn poly(&mut self, vars: &VarSet) -> Result<IntPoly> {
        let mut terms = Vec::new();
        let mut negative = false;
        if self.eat(b'-') {
            negative = true;
        } else {
            self.eat(b'+');
        }
        loop {
            let (m, c) = self.term(vars)?;
            terms.push((m, if negative { -c } else { c }));
            if self.eat(b'+') {
                negative = false;
            } else if self.eat(b'-') {
                negative = true;
            } else {
                break;
            }
        }
        Ok(Poly::from_terms(vars, terms))
    }

    fn group(&mut self, vars: &VarSet) -> Result<IntPoly> {
        if self.eat(b'(') {
            let p = self.poly(vars)?;
            if !self.eat(b')') {
                return self.err("expected ')'");
            }
            Ok(p)
        } else {
            self.poly(vars)
        }
    }
}

/// Parses an integer-coefficient polynomial over `vars`.
pub fn parse_int_poly(s: &str, vars: &VarSet) -> Result<IntPoly> {
    let mut p = Parser::new(s);
    let poly = p.group(vars)?;
    if !p.at_end() {
        return p.err("trailing input");
    }
    Ok(poly)
}

/// Parses `"(num) / (den)"` (or a bare polynomial) into canonical form.
pub fn parse_ratfun(s: &str, vars: &VarSet) -> Result<RationalFunction> {
    let mut p = Parser::new(s);
    let num = p.group(vars)?;
    let den = if p.eat(b'/') {
        p.group(vars)?
    } else {
        IntPoly::one(vars)
    };
    if !p.at_end() {
        return p.err("trailing input");
    }
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(RationalFunction::new(num, den))
}

fn var_rank(name: &str) -> (u8, u64, String) {
    if let Some(rest) = name.strip_prefix('a') {
        if let Ok(n) = rest.parse::<u64>() {
            return (0, n, String::new());
        }
    }
    match name {
        "eps" => (2, 0, String::new()),
        "h" => (3, 0, String::new()),
        _ => (1, 0, name.to_string()),
    }
}

/// Collects the identifiers appearing in `texts` and orders them as
/// `a1, a2, ..`, then other names alphabetically, then `eps`, then `h`.
pub fn infer_vars<S: AsRef<str>>(texts: &[S]) -> VarSet {
    let mut names: Vec<String> = Vec::new();
    for t in texts {
        let mut p = Parser::new(t.as_ref());
        while p.pos < p.src.len() {
            if let Some(id) = p.ident() {
                if !names.iter().any(|n| n == id) {
                    names.push(id.to_string());
                }
            } else {
                p.pos += 1;
            }
        }
    }
    names.sort_by_key(|n| var_rank(n));
    VarSet::new(&names)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn format_canonical_example() {
        let v = VarSet::new(&["a", "h"]);
        let f = parse_ratfun("(a^2 + 3*a*h + 2*h^2) / (1)", &v).unwrap();
        assert_eq!(f.to_string(), "(a^2 + 3*a*h + 2*h^2) / (1)");
    }

    #[test]
    fn negative_terms_and_constants() {
        let v = VarSet::new(&["a", "h"]);
        let p = parse_int_poly("-a + 2 - 3*h^2*a", &v).unwrap();
        assert_eq!(format_poly(&p), "-3*a*h^2 - a + 2");
        assert_eq!(format_poly(&IntPoly::zero(&v)), "0");
    }

    #[test]
    fn rejects_garbage() {
        let v = VarSet::new(&["a", "h"]);
        for bad in ["", "(", "a +", "x", "a^99999", "(a) / (0)", "a ) ", "2**a", "a/h/h"] {
            assert!(parse_ratfun(bad, &v).is_err(), "{bad:?} should fail");
        }
    }

    #[test]
    fn repeated_factors_multiply() {
        let v = VarSet::new(&["a", "h"]);
        let p = parse_int_poly("2*a*3*a", &v).unwrap();
        assert_eq!(format_poly(&p), "6*a^2");
    }

    #[test]
    fn infer_standard_order() {
        let v = infer_vars(&["h + a2", "eps*a1 + a10"]);
        assert_eq!(v.names(), &["a1", "a2", "a10", "eps", "h"]);
    }

    #[test]
    fn zero_numerator() {
        let v = VarSet::new(&["h"]);
        let f = parse_ratfun("(0) / (h)", &v).unwrap();
        assert!(f.is_zero());
    }
}
