//! Sparse multivariate Laurent polynomials with exact rational coefficients.
//!
//! Terms are stored in a `BTreeMap` from exponent vectors to nonzero
//! coefficients, so every polynomial has one canonical representation and
//! iteration order is deterministic.  Exponents may be negative (Laurent);
//! operations that require honest polynomials say so and check.
//!
//! Exact division works in the Laurent ring: both operands are first reduced
//! by their monomial content (componentwise minimum exponent), the resulting
//! honest polynomials are divided by leading-term elimination under the
//! graded-lexicographic order, and the content shift is restored.  Graded-lex
//! is a well-order on non-negative exponents, which is what makes the
//! elimination loop terminate; plain lex would not be.  If the division is
//! not exact the loop provably hits a non-divisible leading term and reports
//! [`Error::InexactDivision`].

use alloc::collections::btree_map::Entry;
use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::vars::VarSet;
use crate::Result;

/// Exact coefficient type: arbitrary-precision rationals.
pub type Coef = BigRational;

/// Shorthand for an integer coefficient.
pub fn coef_int(n: i64) -> Coef {
    Coef::from_integer(BigInt::from(n))
}

/// Shorthand for a rational coefficient `n/d`.
pub fn coef_ratio(n: i64, d: i64) -> Coef {
    Coef::new(BigInt::from(n), BigInt::from(d))
}

/// Graded-lexicographic comparison of exponent vectors (total degree first,
/// then lex in variable order).
pub fn glex_cmp(a: &[i32], b: &[i32]) -> Ordering {
    let ga: i64 = a.iter().map(|&e| e as i64).sum();
    let gb: i64 = b.iter().map(|&e| e as i64).sum();
    ga.cmp(&gb).then_with(|| a.cmp(b))
}

/// A sparse Laurent polynomial over a fixed [`VarSet`].
#[derive(Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    vars: VarSet,
    /// Exponent vector (length = number of variables) -> nonzero coefficient.
    terms: BTreeMap<Vec<i32>, Coef>,
}

impl LaurentPoly {
    /// The zero polynomial.
    pub fn zero(vars: &VarSet) -> LaurentPoly {
        LaurentPoly {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    /// A constant polynomial.
    pub fn constant(vars: &VarSet, c: Coef) -> LaurentPoly {
        let mut p = LaurentPoly::zero(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; vars.len()], c);
        }
        p
    }

    /// A constant integer polynomial.
    pub fn from_int(vars: &VarSet, n: i64) -> LaurentPoly {
        LaurentPoly::constant(vars, coef_int(n))
    }

    /// The polynomial `1`.
    pub fn one(vars: &VarSet) -> LaurentPoly {
        LaurentPoly::from_int(vars, 1)
    }

    /// A single named variable.
    pub fn var(vars: &VarSet, name: &str) -> Result<LaurentPoly> {
        let i = vars
            .index_of(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        Ok(LaurentPoly::monomial(vars, &e, Coef::one()))
    }

    /// A single term `c * x^e`.
    pub fn monomial(vars: &VarSet, expo: &[i32], c: Coef) -> LaurentPoly {
        assert_eq!(expo.len(), vars.len(), "exponent vector length");
        let mut p = LaurentPoly::zero(vars);
        if !c.is_zero() {
            p.terms.insert(expo.to_vec(), c);
        }
        p
    }

    /// Builds from (exponent, coefficient) pairs, summing duplicates.
    pub fn from_terms<I>(vars: &VarSet, items: I) -> LaurentPoly
    where
        I: IntoIterator<Item = (Vec<i32>, Coef)>,
    {
        let mut p = LaurentPoly::zero(vars);
        for (e, c) in items {
            assert_eq!(e.len(), vars.len(), "exponent vector length");
            add_assign_term(&mut p.terms, e, c);
        }
        p
    }

    /// Adopts an already-canonical term map (no zero coefficients).
    pub(crate) fn from_map(vars: &VarSet, terms: BTreeMap<Vec<i32>, Coef>) -> LaurentPoly {
        debug_assert!(terms.values().all(|c| !c.is_zero()));
        debug_assert!(terms.keys().all(|e| e.len() == vars.len()));
        LaurentPoly {
            vars: vars.clone(),
            terms,
        }
    }

    /// The variable set this polynomial lives over.
    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    /// True iff this is the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored (nonzero) terms.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Iterates over `(exponent, coefficient)` pairs in map order.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i32>, &Coef)> {
        self.terms.iter()
    }

    /// Coefficient of `x^e` (zero if absent).
    pub fn coeff_at(&self, e: &[i32]) -> Coef {
        self.terms.get(e).cloned().unwrap_or_else(Coef::zero)
    }

    /// The constant term.
    pub fn constant_term(&self) -> Coef {
        self.coeff_at(&vec![0; self.vars.len()])
    }

    /// Leading `(exponent, coefficient)` under graded-lex, if nonzero.
    pub fn leading(&self) -> Option<(&Vec<i32>, &Coef)> {
        glex_max(&self.terms)
    }

    /// Sum of all coefficients, i.e. the evaluation at all variables = 1.
    pub fn coeff_sum(&self) -> Coef {
        let mut s = Coef::zero();
        for c in self.terms.values() {
            s += c;
        }
        s
    }

    /// True iff every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// True iff no exponent is negative (an honest polynomial).
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x >= 0))
    }

    /// Errors with the offending variable if any exponent is negative.
    pub fn expect_polynomial(&self) -> Result<()> {
        for e in self.terms.keys() {
            for (i, &x) in e.iter().enumerate() {
                if x < 0 {
                    return Err(Error::NegativeExponent {
                        var: self.vars.name(i).to_string(),
                        exponent: x as i64,
                    });
                }
            }
        }
        Ok(())
    }

    /// Addition with a variable-set check.
    pub fn checked_add(&self, rhs: &LaurentPoly) -> Result<LaurentPoly> {
        self.vars.expect_same(&rhs.vars)?;
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            add_assign_term(&mut out.terms, e.clone(), c.clone());
        }
        Ok(out)
    }

    /// Subtraction with a variable-set check.
    pub fn checked_sub(&self, rhs: &LaurentPoly) -> Result<LaurentPoly> {
        self.vars.expect_same(&rhs.vars)?;
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            add_assign_term(&mut out.terms, e.clone(), -c.clone());
        }
        Ok(out)
    }

    /// Multiplication with a variable-set check.
    pub fn checked_mul(&self, rhs: &LaurentPoly) -> Result<LaurentPoly> {
        self.vars.expect_same(&rhs.vars)?;
        let mut terms: BTreeMap<Vec<i32>, Coef> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Vec<i32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                add_assign_term(&mut terms, e, ca * cb);
            }
        }
        Ok(LaurentPoly {
            vars: self.vars.clone(),
            terms,
        })
    }

    /// Multiplies by a scalar.
    pub fn scale(&self, c: &Coef) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero(&self.vars);
        }
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect(),
        }
    }

    /// Multiplies by the monomial `c * x^shift`.
    pub fn mul_monomial(&self, shift: &[i32], c: &Coef) -> LaurentPoly {
        assert_eq!(shift.len(), self.vars.len(), "exponent vector length");
        if c.is_zero() {
            return LaurentPoly::zero(&self.vars);
        }
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, k)| {
                    let ne: Vec<i32> = e.iter().zip(shift).map(|(a, b)| a + b).collect();
                    (ne, k * c)
                })
                .collect(),
        }
    }

    /// Non-negative integer power by repeated multiplication.
    pub fn pow(&self, n: u32) -> LaurentPoly {
        let mut out = LaurentPoly::one(&self.vars);
        for _ in 0..n {
            out = out.checked_mul(self).expect("same variable set");
        }
        out
    }

    /// Exact division in the Laurent ring; errors if not exact.
    ///
    /// Strips monomial content from both operands, then eliminates leading
    /// terms under graded-lex.  Succeeds iff `self = q * den` for some
    /// Laurent polynomial `q`, in which case `q` is returned.
    pub fn exact_div(&self, den: &LaurentPoly) -> Result<LaurentPoly> {
        self.vars.expect_same(&den.vars)?;
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(LaurentPoly::zero(&self.vars));
        }
        let (p, p_min) = self.stripped_content();
        let (d, d_min) = den.stripped_content();

        let (d_lead_e, d_lead_c) = glex_max(&d).expect("nonzero divisor");
        let d_lead_e = d_lead_e.clone();
        let d_lead_c = d_lead_c.clone();

        let mut rem = p;
        let mut quo: BTreeMap<Vec<i32>, Coef> = BTreeMap::new();
        while let Some((r_lead_e, r_lead_c)) = glex_max(&rem) {
            let mut mono = Vec::with_capacity(r_lead_e.len());
            for (a, b) in r_lead_e.iter().zip(&d_lead_e) {
                let e = a - b;
                if e < 0 {
                    return Err(Error::InexactDivision);
                }
                mono.push(e);
            }
            let c = r_lead_c / &d_lead_c;
            for (de, dc) in &d {
                let te: Vec<i32> = de.iter().zip(&mono).map(|(a, b)| a + b).collect();
                add_assign_term(&mut rem, te, -(dc * &c));
            }
            quo.insert(mono, c);
        }

        // Restore the Laurent shift: self/den = x^(p_min - d_min) * (p/d).
        let shift: Vec<i32> = p_min.iter().zip(&d_min).map(|(a, b)| a - b).collect();
        let body = LaurentPoly {
            vars: self.vars.clone(),
            terms: quo,
        };
        Ok(body.mul_monomial(&shift, &Coef::one()))
    }

    /// Splits off the monomial content: returns terms shifted so every
    /// variable has minimum exponent 0, plus the vector of minima.
    fn stripped_content(&self) -> (BTreeMap<Vec<i32>, Coef>, Vec<i32>) {
        let n = self.vars.len();
        let mut mins = vec![i32::MAX; n];
        for e in self.terms.keys() {
            for i in 0..n {
                mins[i] = mins[i].min(e[i]);
            }
        }
        if self.terms.is_empty() {
            mins = vec![0; n];
        }
        let shifted = self
            .terms
            .iter()
            .map(|(e, c)| {
                let ne: Vec<i32> = e.iter().zip(&mins).map(|(a, b)| a - b).collect();
                (ne, c.clone())
            })
            .collect();
        (shifted, mins)
    }

    /// Substitutes polynomials for variables.
    ///
    /// `bindings` maps variable names of `self` to polynomials over
    /// `out_vars`.  Unbound variables must themselves appear in `out_vars`
    /// and pass through unchanged.  A negative exponent on a bound variable
    /// requires the binding to be an invertible (single-term) monomial;
    /// otherwise the substitution would leave the Laurent ring and
    /// [`Error::InexactDivision`] is returned.
    pub fn subst(
        &self,
        out_vars: &VarSet,
        bindings: &[(&str, &LaurentPoly)],
    ) -> Result<LaurentPoly> {
        let n = self.vars.len();
        let mut bound: Vec<Option<&LaurentPoly>> = vec![None; n];
        for (name, value) in bindings {
            let i = self
                .vars
                .index_of(name)
                .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
            out_vars.expect_same(value.vars())?;
            bound[i] = Some(value);
        }
        // Unbound variables map to themselves in the output set.  The lookup
        // is lazy: a variable that never occurs needs no target.
        let mut passthrough: Vec<Option<usize>> = vec![None; n];
        for i in 0..n {
            if bound[i].is_none() {
                passthrough[i] = out_vars.index_of(self.vars.name(i));
            }
        }

        // Powers of each binding are cached across terms; negative powers
        // exist only for invertible monomials.
        let mut cache: BTreeMap<(usize, i32), LaurentPoly> = BTreeMap::new();
        let mut acc = LaurentPoly::zero(out_vars);
        for (expo, coef) in &self.terms {
            let mut term = LaurentPoly::constant(out_vars, coef.clone());
            let mut shift = vec![0i32; out_vars.len()];
            for (i, &e) in expo.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match (bound[i], passthrough[i]) {
                    (Some(b), _) => {
                        let p = binding_power(i, b, e, &mut cache)?;
                        term = term.checked_mul(&p)?;
                    }
                    (None, Some(j)) => shift[j] += e,
                    (None, None) => {
                        return Err(Error::UnknownVariable(self.vars.name(i).to_string()))
                    }
                }
            }
            term = term.mul_monomial(&shift, &Coef::one());
            acc = acc.checked_add(&term)?;
        }
        Ok(acc)
    }

    /// Evaluates at a rational point (one value per variable, in order).
    pub fn eval(&self, point: &[Coef]) -> Result<Coef> {
        assert_eq!(point.len(), self.vars.len(), "point dimension");
        let mut total = Coef::zero();
        for (e, c) in &self.terms {
            let mut v = c.clone();
            for (i, &k) in e.iter().enumerate() {
                v *= rat_pow(&point[i], k)?;
            }
            total += v;
        }
        Ok(total)
    }

    /// Formal partial derivative with respect to `name`.
    pub fn partial_diff(&self, name: &str) -> Result<LaurentPoly> {
        let i = self
            .vars
            .index_of(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        let mut out = LaurentPoly::zero(&self.vars);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut ne = e.clone();
            ne[i] -= 1;
            add_assign_term(&mut out.terms, ne, c * coef_int(e[i] as i64));
        }
        Ok(out)
    }

    /// Swaps two variables (by name), e.g. to exploit a diagram symmetry.
    pub fn swap_vars(&self, a: &str, b: &str) -> Result<LaurentPoly> {
        let i = self
            .vars
            .index_of(a)
            .ok_or_else(|| Error::UnknownVariable(a.to_string()))?;
        let j = self
            .vars
            .index_of(b)
            .ok_or_else(|| Error::UnknownVariable(b.to_string()))?;
        let mut out = LaurentPoly::zero(&self.vars);
        for (e, c) in &self.terms {
            let mut ne = e.clone();
            ne.swap(i, j);
            add_assign_term(&mut out.terms, ne, c.clone());
        }
        Ok(out)
    }

    /// Replaces every variable by its reciprocal (negates all exponents).
    pub fn negate_exponents(&self) -> LaurentPoly {
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().map(|&x| -x).collect(), c.clone()))
                .collect(),
        }
    }

    /// Reinterprets over a larger variable set containing all current names.
    pub fn embed_into(&self, sup: &VarSet) -> Result<LaurentPoly> {
        let mut map = Vec::with_capacity(self.vars.len());
        for name in self.vars.iter() {
            let j = sup
                .index_of(name)
                .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
            map.push(j);
        }
        let mut out = LaurentPoly::zero(sup);
        for (e, c) in &self.terms {
            let mut ne = vec![0i32; sup.len()];
            for (i, &x) in e.iter().enumerate() {
                ne[map[i]] = x;
            }
            add_assign_term(&mut out.terms, ne, c.clone());
        }
        Ok(out)
    }

    /// Reinterprets over a smaller variable set; variables being dropped
    /// must not occur (exponent 0 everywhere).
    pub fn restrict_to(&self, sub: &VarSet) -> Result<LaurentPoly> {
        let mut map: Vec<Option<usize>> = Vec::with_capacity(self.vars.len());
        for name in self.vars.iter() {
            map.push(sub.index_of(name));
        }
        let mut out = LaurentPoly::zero(sub);
        for (e, c) in &self.terms {
            let mut ne = vec![0i32; sub.len()];
            for (i, &x) in e.iter().enumerate() {
                match map[i] {
                    Some(j) => ne[j] = x,
                    None if x == 0 => {}
                    None => return Err(Error::UnknownVariable(self.vars.name(i).to_string())),
                }
            }
            add_assign_term(&mut out.terms, ne, c.clone());
        }
        Ok(out)
    }
}

/// Adds `c` at key `e`, removing the entry if it cancels to zero.
pub(crate) fn add_assign_term(map: &mut BTreeMap<Vec<i32>, Coef>, e: Vec<i32>, c: Coef) {
    if c.is_zero() {
        return;
    }
    match map.entry(e) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

/// Maximum key under graded-lex (the division leading term).
fn glex_max(map: &BTreeMap<Vec<i32>, Coef>) -> Option<(&Vec<i32>, &Coef)> {
    map.iter().max_by(|(a, _), (b, _)| glex_cmp(a, b))
}

/// `base^e` for a substitution binding, caching powers per bound variable.
fn binding_power(
    slot: usize,
    base: &LaurentPoly,
    e: i32,
    cache: &mut BTreeMap<(usize, i32), LaurentPoly>,
) -> Result<LaurentPoly> {
    if let Some(p) = cache.get(&(slot, e)) {
        return Ok(p.clone());
    }
    let value = if e > 0 {
        let prev = if e == 1 {
            LaurentPoly::one(base.vars())
        } else {
            binding_power(slot, base, e - 1, cache)?
        };
        prev.checked_mul(base)?
    } else {
        // Negative power: only invertible monomials survive in the ring.
        if base.num_terms() != 1 {
            return Err(Error::InexactDivision);
        }
        let (expo, coef) = base.terms().next().expect("one term");
        let inv_e: Vec<i32> = expo.iter().map(|&x| x * e).collect();
        let inv_c = rat_pow(coef, e)?;
        LaurentPoly::monomial(base.vars(), &inv_e, inv_c)
    };
    cache.insert((slot, e), value.clone());
    Ok(value)
}

/// `c^e` for rational `c` and integer `e` (negative powers need `c != 0`).
pub fn rat_pow(c: &Coef, e: i32) -> Result<Coef> {
    if e == 0 {
        return Ok(Coef::one());
    }
    if c.is_zero() {
        if e < 0 {
            return Err(Error::DivisionByZero);
        }
        return Ok(Coef::zero());
    }
    let mut out = Coef::one();
    for _ in 0..e.unsigned_abs() {
        out *= c;
    }
    if e < 0 {
        out = out.recip();
    }
    Ok(out)
}

/// Converts a rational known to be an integer, or reports what it was.
pub fn expect_integer(c: &Coef) -> Result<BigInt> {
    if c.is_integer() {
        Ok(c.to_integer())
    } else {
        Err(Error::NonIntegralValue(alloc::format!("{c}")))
    }
}

/// Converts a rational known to be a small non-negative integer.
pub fn expect_u64(c: &Coef) -> Result<u64> {
    let n = expect_integer(c)?;
    if n.is_negative() {
        return Err(Error::NonIntegralValue(alloc::format!("{n} (negative)")));
    }
    u64::try_from(&n).map_err(|_| Error::NonIntegralValue(alloc::format!("{n} (overflow)")))
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_add(rhs).expect("same variable set")
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_sub(rhs).expect("same variable set")
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_mul(rhs).expect("same variable set")
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(&-Coef::one())
    }
}
