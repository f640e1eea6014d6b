//! Canonical text form for polynomials, plus a small expression parser.
//!
//! The canonical *printer* emits a flat sum of terms in ascending graded-lex
//! order, e.g. `1 - t1*z1 + t1^2*z2 - t1^3*z3 + t1^4`.  It is deterministic,
//! so printed polynomials can be compared byte-for-byte.
//!
//! The *parser* accepts a superset of that form: parenthesized groups,
//! products of groups, and powers, e.g. `(1 - t2^2) * (1 + t2)^3 - 2*t1`.
//! This lets tabulated constants be written factored exactly as they appear
//! in their source, while everything funnels into the same exact
//! representation.  The only operators are `+ - * ^`; rational coefficients
//! are written `p/q`.  Round-tripping print -> parse is the identity.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::poly::{glex_cmp, Coef, LaurentPoly};
use crate::vars::VarSet;
use crate::Result;

/// Renders the canonical flat-sum form, leading term first.
pub fn format_poly(p: &LaurentPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut terms: Vec<(&Vec<i32>, &Coef)> = p.terms().collect();
    terms.sort_by(|(a, _), (b, _)| glex_cmp(b, a));

    let mut out = String::new();
    for (i, (expo, coef)) in terms.iter().enumerate() {
        let negative = coef.is_negative();
        if i == 0 {
            if negative {
                out.push('-');
            }
        } else if negative {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let mag = if negative {
            -(*coef).clone()
        } else {
            (*coef).clone()
        };
        let mut factors: Vec<String> = Vec::new();
        if !mag.is_one() || expo.iter().all(|&e| e == 0) {
            factors.push(format_coef(&mag));
        }
        for (j, &e) in expo.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if e == 1 {
                factors.push(p.vars().name(j).to_string());
            } else {
                factors.push(alloc::format!("{}^{}", p.vars().name(j), e));
            }
        }
        out.push_str(&factors.join("*"));
    }
    out
}

fn format_coef(c: &Coef) -> String {
    if c.is_integer() {
        alloc::format!("{}", c.numer())
    } else {
        alloc::format!("{}/{}", c.numer(), c.denom())
    }
}

/// Parses an expression over the given variables.
pub fn parse_poly(vars: &VarSet, input: &str) -> Result<LaurentPoly> {
    let mut p = Parser {
        vars,
        bytes: input.as_bytes(),
        pos: 0,
    };
    let poly = p.expression()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(poly)
}

struct Parser<'a> {
    vars: &'a VarSet,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, message: &str) -> Error {
        Error::Parse {
            offset: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self
            .bytes
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_whitespace())
        {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    /// `['+'|'-'] product (('+'|'-') product)*`
    fn expression(&mut self) -> Result<LaurentPoly> {
        let mut acc = LaurentPoly::zero(self.vars);
        let mut negate = false;
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                negate = true;
            }
            Some(b'+') => {
                self.pos += 1;
            }
            Some(_) => {}
            None => return Err(self.err("empty expression")),
        }
        loop {
            let term = self.product()?;
            acc = if negate {
                acc.checked_sub(&term)?
            } else {
                acc.checked_add(&term)?
            };
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    negate = false;
                }
                Some(b'-') => {
                    self.pos += 1;
                    negate = true;
                }
                _ => return Ok(acc),
            }
        }
    }

    /// `power ('*' power)*`
    fn product(&mut self) -> Result<LaurentPoly> {
        let mut acc = self.power()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let rhs = self.power()?;
            acc = acc.checked_mul(&rhs)?;
        }
        Ok(acc)
    }

    /// `atom ['^' integer]`
    fn power(&mut self) -> Result<LaurentPoly> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.integer()?;
            return poly_power(&base, e);
        }
        Ok(base)
    }

    /// number | variable | `(` expression `)`
    fn atom(&mut self) -> Result<LaurentPoly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expression()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(b) if b.is_ascii_digit() => {
                let c = self.number()?;
                Ok(LaurentPoly::constant(self.vars, c))
            }
            Some(b) if b.is_ascii_alphabetic() => {
                let start = self.pos;
                let name = self.ident();
                match self.vars.index_of(&name) {
                    Some(_) => LaurentPoly::var(self.vars, &name),
                    None => Err(Error::Parse {
                        offset: start,
                        message: alloc::format!("unknown variable `{name}`"),
                    }),
                }
            }
            _ => Err(self.err("expected a number, variable, or `(`")),
        }
    }

    /// `digits ['/' digits]`
    fn number(&mut self) -> Result<Coef> {
        let numer = self.digits()?;
        // A '/' here is always a rational literal: division is not an
        // operator in this grammar.
        if self.bytes.get(self.pos) == Some(&b'/') {
            self.pos += 1;
            let denom = self.digits()?;
            if denom.is_zero() {
                return Err(self.err("zero denominator"));
            }
            Ok(Coef::new(numer, denom))
        } else {
            Ok(Coef::from_integer(numer))
        }
    }

    /// `['-'] digits`, for exponents.
    fn integer(&mut self) -> Result<i32> {
        self.skip_ws();
        let mut sign = 1i64;
        if self.bytes.get(self.pos) == Some(&b'-') {
            self.pos += 1;
            sign = -1;
        }
        let n = self.digits()?;
        let n = i64::try_from(&n).map_err(|_| self.err("exponent too large"))?;
        i32::try_from(sign * n).map_err(|_| self.err("exponent too large"))
    }

    fn digits(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.bytes.get(self.pos).is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected digits"));
        }
        let s = core::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        Ok(s.parse::<BigInt>().expect("digit string"))
    }

    fn ident(&mut self) -> String {
        let start = self.pos;
        while self
            .bytes
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_alphanumeric() || *b == b'_')
        {
            self.pos += 1;
        }
        core::str::from_utf8(&self.bytes[start..self.pos])
            .expect("ascii ident")
            .to_string()
    }
}

/// Raises a parsed subexpression to an integer power.  Negative powers are
/// only defined for invertible monomials (single terms).
fn poly_power(p: &LaurentPoly, e: i32) -> Result<LaurentPoly> {
    if e >= 0 {
        return Ok(p.pow(e as u32));
    }
    if p.num_terms() != 1 {
        return Err(Error::InexactDivision);
    }
    let (expo, coef) = p.terms().next().expect("one term");
    let inv_e: Vec<i32> = expo.iter().map(|&x| x * e).collect();
    let inv_c = crate::poly::rat_pow(coef, e)?;
    Ok(LaurentPoly::monomial(p.vars(), &inv_e, inv_c))
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_poly(self))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.vars().describe(), format_poly(self))
    }
}
