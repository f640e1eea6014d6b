//! Linear differential operators with polynomial coefficients.
//!
//! An operator is a sum of terms `p(x) * d^k1/dx1^k1 ... d^kn/dxn^kn`.  It
//! can act on a polynomial directly, or on a [`TruncatedSeries`] through its
//! expansion variables (where monomial coefficients act diagonally on
//! exponents, so truncation commutes with application).

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::poly::{coef_int, Coef, LaurentPoly};
use crate::series::TruncatedSeries;
use crate::vars::VarSet;
use crate::Result;

/// One `coefficient * mixed-partial` summand.
#[derive(Clone, Debug)]
pub struct DiffTerm {
    /// Polynomial coefficient, over the operator's variable set.
    pub coeff: LaurentPoly,
    /// Derivative order per variable.
    pub orders: Vec<u32>,
}

/// A differential operator `sum_i coeff_i * D^orders_i`.
#[derive(Clone, Debug)]
pub struct DiffOperator {
    vars: VarSet,
    terms: Vec<DiffTerm>,
}

impl DiffOperator {
    pub fn new(vars: &VarSet) -> DiffOperator {
        DiffOperator {
            vars: vars.clone(),
            terms: Vec::new(),
        }
    }

    /// Adds a term (builder style).  Zero coefficients are dropped.
    pub fn with_term(mut self, coeff: LaurentPoly, orders: &[u32]) -> DiffOperator {
        assert_eq!(orders.len(), self.vars.len(), "one order per variable");
        coeff
            .vars()
            .expect_same(&self.vars)
            .expect("coefficient over operator variables");
        if !coeff.is_zero() {
            self.terms.push(DiffTerm {
                coeff,
                orders: orders.to_vec(),
            });
        }
        self
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn terms(&self) -> &[DiffTerm] {
        &self.terms
    }

    /// Applies the operator to a polynomial over the same variables.
    pub fn apply_poly(&self, p: &LaurentPoly) -> Result<LaurentPoly> {
        p.vars().expect_same(&self.vars)?;
        let mut out = LaurentPoly::zero(&self.vars);
        for term in &self.terms {
            let mut d = p.clone();
            for (i, &k) in term.orders.iter().enumerate() {
                for _ in 0..k {
                    d = d.partial_diff(self.vars.name(i))?;
                    if d.is_zero() {
                        break;
                    }
                }
                if d.is_zero() {
                    break;
                }
            }
            if d.is_zero() {
                continue;
            }
            out = out.checked_add(&term.coeff.checked_mul(&d)?)?;
        }
        Ok(out)
    }

    /// Applies the operator through the expansion variables of a series.
    ///
    /// The operator's variables must equal the series' expansion variables.
    /// Results falling outside the truncation box (or below exponent zero)
    /// are discarded, consistent with box semantics: on monomials the
    /// operator acts diagonally up to the shifts introduced by its
    /// coefficient monomials, and none of the retained box entries would
    /// have received contributions from discarded ones.
    pub fn apply_series(&self, s: &TruncatedSeries) -> Result<TruncatedSeries> {
        s.expand_vars().expect_same(&self.vars)?;
        let caps = s.caps();
        let mut terms: BTreeMap<Vec<u32>, LaurentPoly> = BTreeMap::new();
        for (e, cz) in s.iter() {
            for term in &self.terms {
                // d^k/dt^k t^e = e(e-1)...(e-k+1) t^(e-k)
                let mut factor = Coef::from_integer(1.into());
                let mut base = Vec::with_capacity(e.len());
                let mut vanished = false;
                for (&ei, &ki) in e.iter().zip(&term.orders) {
                    if ei < ki {
                        vanished = true;
                        break;
                    }
                    for j in 0..ki {
                        factor *= coef_int((ei - j) as i64);
                    }
                    base.push((ei - ki) as i64);
                }
                if vanished || factor.is_zero() {
                    continue;
                }
                for (me, mc) in term.coeff.terms() {
                    let mut g = Vec::with_capacity(base.len());
                    let mut inside = true;
                    for (i, &b) in base.iter().enumerate() {
                        let gi = b + me[i] as i64;
                        if gi < 0 || gi > caps[i] as i64 {
                            inside = false;
                            break;
                        }
                        g.push(gi as u32);
                    }
                    if !inside {
                        continue;
                    }
                    let add = cz.scale(&(mc * &factor));
                    if add.is_zero() {
                        continue;
                    }
                    match terms.remove(&g) {
                        None => {
                            terms.insert(g, add);
                        }
                        Some(cur) => {
                            let next = cur.checked_add(&add)?;
                            if !next.is_zero() {
                                terms.insert(g, next);
                            }
                        }
                    }
                }
            }
        }
        Ok(TruncatedSeries::from_parts(
            s.expand_vars().clone(),
            caps.to_vec(),
            s.coeff_vars().clone(),
            terms,
        ))
    }
}
