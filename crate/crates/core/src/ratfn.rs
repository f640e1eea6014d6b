//! Rational functions: a numerator/denominator pair over one variable set.
//!
//! No reduction to lowest terms is attempted — callers hand us closed forms
//! whose factored denominators carry meaning, and the series expander only
//! needs the pair as-is.

use crate::error::Error;
use crate::poly::LaurentPoly;
use crate::text::parse_poly;
use crate::vars::VarSet;
use crate::Result;

/// A formal quotient `num / den` with `den != 0`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalFn {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFn {
    /// Builds a quotient, checking the variable sets match and `den != 0`.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<RationalFn> {
        num.vars().expect_same(den.vars())?;
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RationalFn { num, den })
    }

    /// Parses numerator and denominator expressions over `vars`.
    pub fn from_texts(vars: &VarSet, num: &str, den: &str) -> Result<RationalFn> {
        RationalFn::new(parse_poly(vars, num)?, parse_poly(vars, den)?)
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn vars(&self) -> &VarSet {
        self.den.vars()
    }

    /// The quotient with both parts multiplied by another denominator,
    /// i.e. `self * (1/extra)`.
    pub fn with_extra_den(&self, extra: &LaurentPoly) -> Result<RationalFn> {
        RationalFn::new(self.num.clone(), self.den.checked_mul(extra)?)
    }
}
