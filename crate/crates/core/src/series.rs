//! Truncated multivariate power-series expansion of rational functions.
//!
//! A [`TruncatedSeries`] is a finite box of coefficients: for expansion
//! variables `t1..tk` with per-variable caps `c1..ck` it stores every
//! coefficient of `t^e` with `0 <= e_i <= c_i`.  Coefficients are
//! [`LaurentPoly`]s over the remaining ("coefficient") variables, so a
//! series in `t` over `z` represents sum_e S_e(z) t^e.
//!
//! Expansion inverts the denominator by the standard recurrence
//!
//! ```text
//! S[e] = ( N[e] - sum_{0 != f <= e} D[f] * S[e-f] ) / D[0]
//! ```
//!
//! which requires the denominator's constant term `D[0]` to be a nonzero
//! scalar.  Everything is exact; the truncation box is the only
//! approximation, and every stored coefficient is exactly the coefficient of
//! the full series (box truncation never feeds back into lower orders).

use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::Error;
use crate::poly::{add_assign_term, Coef, LaurentPoly};
use crate::ratfn::RationalFn;
use crate::vars::VarSet;
use crate::Result;

/// A box-truncated power series with exact polynomial coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncatedSeries {
    expand_vars: VarSet,
    caps: Vec<u32>,
    coeff_vars: VarSet,
    /// Exponent in the expansion variables -> nonzero coefficient.
    terms: BTreeMap<Vec<u32>, LaurentPoly>,
}

impl TruncatedSeries {
    /// Expands `f` as a power series in `expand_names` around the origin,
    /// keeping exponents up to `caps` (inclusive, per variable).
    ///
    /// Variables of `f` not listed in `expand_names` become coefficient
    /// variables.  The numerator and denominator must be polynomial in the
    /// expansion variables, and the denominator's constant term (in them)
    /// must be a nonzero scalar.
    pub fn expand(f: &RationalFn, expand_names: &[&str], caps: &[u32]) -> Result<TruncatedSeries> {
        assert_eq!(expand_names.len(), caps.len(), "one cap per variable");
        let full = f.vars();
        let expand_vars = VarSet::new(expand_names)?;
        let mut expand_idx = Vec::with_capacity(expand_names.len());
        for name in expand_names {
            let i = full
                .index_of(name)
                .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
            expand_idx.push(i);
        }
        let coeff_names: Vec<&str> = full.iter().filter(|n| !expand_names.contains(n)).collect();
        let coeff_vars = VarSet::new(&coeff_names)?;

        let num = split_by_expansion(f.num(), &expand_idx, &coeff_vars, full)?;
        let den = split_by_expansion(f.den(), &expand_idx, &coeff_vars, full)?;

        let zero_e = vec![0u32; expand_idx.len()];
        let c0 = match den.get(&zero_e) {
            None => return Err(Error::ZeroConstantTerm),
            Some(d0) => {
                let ct = d0.constant_term();
                if d0.num_terms() != 1 || ct.is_zero() {
                    return Err(Error::NonScalarConstantTerm);
                }
                ct
            }
        };

        let mut out = TruncatedSeries {
            expand_vars,
            caps: caps.to_vec(),
            coeff_vars: coeff_vars.clone(),
            terms: BTreeMap::new(),
        };

        // March through the box in lexicographic order; every e-f needed on
        // the right-hand side is componentwise smaller, hence already done.
        let mut e = vec![0u32; caps.len()];
        loop {
            let mut acc: BTreeMap<Vec<i32>, Coef> = BTreeMap::new();
            if let Some(n) = num.get(&e) {
                for (me, mc) in n.terms() {
                    add_assign_term(&mut acc, me.clone(), mc.clone());
                }
            }
            for (fe, fp) in &den {
                if fe.iter().all(|&x| x == 0) {
                    continue;
                }
                if !fe.iter().zip(&e).all(|(a, b)| a <= b) {
                    continue;
                }
                let prev_e: Vec<u32> = e.iter().zip(fe).map(|(a, b)| a - b).collect();
                let Some(prev) = out.terms.get(&prev_e) else {
                    continue;
                };
                // acc -= fp * prev
                for (pe, pc) in fp.terms() {
                    for (qe, qc) in prev.terms() {
                        let me: Vec<i32> = pe.iter().zip(qe).map(|(a, b)| a + b).collect();
                        add_assign_term(&mut acc, me, -(pc * qc));
                    }
                }
            }
            if !acc.is_empty() {
                let inv = c0.recip();
                let coeff = LaurentPoly::from_map(
                    &coeff_vars,
                    acc.into_iter().map(|(k, v)| (k, v * &inv)).collect(),
                );
                out.terms.insert(e.clone(), coeff);
            }
            if !advance(&mut e, caps) {
                break;
            }
        }
        Ok(out)
    }

    /// The expansion variables, in cap order.
    pub fn expand_vars(&self) -> &VarSet {
        &self.expand_vars
    }

    /// The coefficient variables (possibly empty).
    pub fn coeff_vars(&self) -> &VarSet {
        &self.coeff_vars
    }

    /// Per-variable truncation caps (inclusive).
    pub fn caps(&self) -> &[u32] {
        &self.caps
    }

    /// The coefficient of `t^e`; zero if absent, error outside the box.
    pub fn coeff(&self, e: &[u32]) -> Result<LaurentPoly> {
        assert_eq!(e.len(), self.caps.len(), "exponent dimension");
        if e.iter().zip(&self.caps).any(|(x, c)| x > c) {
            return Err(Error::ExponentOutOfCaps {
                requested: e.iter().map(|&x| x as i64).collect(),
                caps: self.caps.clone(),
            });
        }
        Ok(self
            .terms
            .get(e)
            .cloned()
            .unwrap_or_else(|| LaurentPoly::zero(&self.coeff_vars)))
    }

    /// Iterates over stored (nonzero) terms in exponent order.
    pub fn iter(&self) -> impl Iterator<Item = (&Vec<u32>, &LaurentPoly)> {
        self.terms.iter()
    }

    /// True iff every coefficient in the box vanishes.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Termwise difference; boxes and variable sets must agree.
    pub fn checked_sub(&self, rhs: &TruncatedSeries) -> Result<TruncatedSeries> {
        self.expand_vars.expect_same(&rhs.expand_vars)?;
        self.coeff_vars.expect_same(&rhs.coeff_vars)?;
        if self.caps != rhs.caps {
            return Err(Error::CapsMismatch);
        }
        let mut terms = self.terms.clone();
        for (e, p) in &rhs.terms {
            let cur = terms
                .remove(e)
                .unwrap_or_else(|| LaurentPoly::zero(&self.coeff_vars));
            let next = cur.checked_sub(p)?;
            if !next.is_zero() {
                terms.insert(e.clone(), next);
            }
        }
        Ok(TruncatedSeries {
            expand_vars: self.expand_vars.clone(),
            caps: self.caps.clone(),
            coeff_vars: self.coeff_vars.clone(),
            terms,
        })
    }

    /// Applies an exact map to every coefficient, dropping zero results.
    pub fn map_coeffs<F>(&self, mut f: F) -> Result<TruncatedSeries>
    where
        F: FnMut(&LaurentPoly) -> Result<LaurentPoly>,
    {
        let mut terms = BTreeMap::new();
        for (e, p) in &self.terms {
            let q = f(p)?;
            if !q.is_zero() {
                q.vars().expect_same(&self.coeff_vars)?;
                terms.insert(e.clone(), q);
            }
        }
        Ok(TruncatedSeries {
            expand_vars: self.expand_vars.clone(),
            caps: self.caps.clone(),
            coeff_vars: self.coeff_vars.clone(),
            terms,
        })
    }

    /// Builds a series directly from terms (used by operators and tests).
    pub(crate) fn from_parts(
        expand_vars: VarSet,
        caps: Vec<u32>,
        coeff_vars: VarSet,
        terms: BTreeMap<Vec<u32>, LaurentPoly>,
    ) -> TruncatedSeries {
        debug_assert!(terms.values().all(|p| !p.is_zero()));
        TruncatedSeries {
            expand_vars,
            caps,
            coeff_vars,
            terms,
        }
    }
}

/// Regroups a polynomial over the full variable set as a map from exponents
/// in the expansion variables to polynomials in the remaining variables.
fn split_by_expansion(
    p: &LaurentPoly,
    expand_idx: &[usize],
    coeff_vars: &VarSet,
    full: &VarSet,
) -> Result<BTreeMap<Vec<u32>, LaurentPoly>> {
    let coeff_idx: Vec<usize> = full
        .iter()
        .enumerate()
        .filter(|(i, _)| !expand_idx.contains(i))
        .map(|(i, _)| i)
        .collect();
    let mut grouped: BTreeMap<Vec<u32>, BTreeMap<Vec<i32>, Coef>> = BTreeMap::new();
    for (expo, coef) in p.terms() {
        let mut te = Vec::with_capacity(expand_idx.len());
        for &i in expand_idx {
            if expo[i] < 0 {
                return Err(Error::NegativeExponent {
                    var: full.name(i).to_string(),
                    exponent: expo[i] as i64,
                });
            }
            te.push(expo[i] as u32);
        }
        let ce: Vec<i32> = coeff_idx.iter().map(|&i| expo[i]).collect();
        add_assign_term(grouped.entry(te).or_default(), ce, coef.clone());
    }
    Ok(grouped
        .into_iter()
        .filter(|(_, m)| !m.is_empty())
        .map(|(k, m)| (k, LaurentPoly::from_map(coeff_vars, m)))
        .collect())
}

/// Lexicographic odometer over the box `0..=caps`; false when exhausted.
fn advance(e: &mut [u32], caps: &[u32]) -> bool {
    for i in (0..e.len()).rev() {
        if e[i] < caps[i] {
            e[i] += 1;
            return true;
        }
        e[i] = 0;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_poly;
    use crate::vars;

    #[test]
    fn geometric_series() {
        let v = vars::t_vars();
        let f = RationalFn::from_texts(&v, "1", "1 - t1").unwrap();
        let s = TruncatedSeries::expand(&f, &["t1", "t2", "t3"], &[3, 1, 1]).unwrap();
        for e0 in 0..=3u32 {
            let c = s.coeff(&[e0, 0, 0]).unwrap();
            assert_eq!(c.constant_term(), crate::poly::coef_int(1));
            assert_eq!(c.num_terms(), 1);
        }
        assert!(s.coeff(&[1, 1, 0]).unwrap().is_zero());
        assert!(matches!(
            s.coeff(&[4, 0, 0]),
            Err(Error::ExponentOutOfCaps { .. })
        ));
    }

    #[test]
    fn coefficients_can_be_laurent() {
        // 1/(1 - t1*(z1 + z1^-1)) counts walks: coefficient of t1^n is
        // (z1 + z1^-1)^n.
        let v = VarSet::new(&["t1", "z1"]).unwrap();
        let f = RationalFn::from_texts(&v, "1", "1 - t1*z1 - t1*z1^-1").unwrap();
        let s = TruncatedSeries::expand(&f, &["t1"], &[4]).unwrap();
        let zv = VarSet::new(&["z1"]).unwrap();
        let expect = parse_poly(&zv, "(z1 + z1^-1)^3").unwrap();
        assert_eq!(s.coeff(&[3]).unwrap(), expect);
    }

    #[test]
    fn multivariate_product_of_geometrics() {
        let v = vars::t_vars();
        let f = RationalFn::from_texts(&v, "1", "(1 - t1)*(1 - t2)*(1 - t1*t2*t3)").unwrap();
        let s = TruncatedSeries::expand(&f, &["t1", "t2", "t3"], &[2, 2, 2]).unwrap();
        // coefficient of t1^a t2^b t3^c is 1 iff c <= min(a, b): choose k = c
        // copies of t1 t2 t3, the rest from the two geometric factors.
        for a in 0..=2u32 {
            for b in 0..=2u32 {
                for c in 0..=2u32 {
                    let expect = u64::from(c <= a.min(b));
                    let got = s.coeff(&[a, b, c]).unwrap().constant_term();
                    assert_eq!(got, crate::poly::coef_int(expect as i64), "at {a},{b},{c}");
                }
            }
        }
    }

    #[test]
    fn denominator_must_start_with_a_scalar() {
        let v = vars::t_vars();
        let f = RationalFn::from_texts(&v, "1", "t1 + t2").unwrap();
        assert!(matches!(
            TruncatedSeries::expand(&f, &["t1", "t2", "t3"], &[1, 1, 1]),
            Err(Error::ZeroConstantTerm)
        ));
        let g = RationalFn::from_texts(&v, "1", "1 + t3 - t1").unwrap();
        // t3 is NOT expanded here, so the constant term is 1 + t3: not scalar.
        assert!(matches!(
            TruncatedSeries::expand(&g, &["t1"], &[1]),
            Err(Error::NonScalarConstantTerm)
        ));
    }

    #[test]
    fn exactness_against_direct_product() {
        // (num/den) expanded, then multiplied back by den, must reproduce num
        // on the part of the box where no truncated terms can contribute.
        let v = vars::t_vars();
        let f = RationalFn::from_texts(&v, "1 + t1 - t2*t3", "1 - t1 - t2 - t3").unwrap();
        let s = TruncatedSeries::expand(&f, &["t1", "t2", "t3"], &[3, 3, 3]).unwrap();
        // check the recurrence at a few points by brute force convolution
        let den = parse_poly(&v, "1 - t1 - t2 - t3").unwrap();
        let num = parse_poly(&v, "1 + t1 - t2*t3").unwrap();
        for e in [[1u32, 1, 1], [2, 1, 0], [3, 3, 3], [0, 0, 0]] {
            let mut conv = crate::poly::Coef::zero();
            for (de, dc) in den.terms() {
                let f0 = e[0] as i32 - de[0];
                let f1 = e[1] as i32 - de[1];
                let f2 = e[2] as i32 - de[2];
                if f0 < 0 || f1 < 0 || f2 < 0 {
                    continue;
                }
                let sc = s
                    .coeff(&[f0 as u32, f1 as u32, f2 as u32])
                    .unwrap()
                    .constant_term();
                conv += dc * sc;
            }
            let ne: Vec<i32> = e.iter().map(|&x| x as i32).collect();
            assert_eq!(conv, num.coeff_at(&ne), "at {e:?}");
        }
    }

    #[test]
    fn subtraction_requires_matching_boxes() {
        let v = vars::t_vars();
        let f = RationalFn::from_texts(&v, "1", "1 - t1").unwrap();
        let a = TruncatedSeries::expand(&f, &["t1", "t2", "t3"], &[2, 2, 2]).unwrap();
        let b = TruncatedSeries::expand(&f, &["t1", "t2", "t3"], &[2, 2, 1]).unwrap();
        assert!(matches!(a.checked_sub(&b), Err(Error::CapsMismatch)));
        assert!(a.checked_sub(&a).unwrap().is_zero());
    }
}
