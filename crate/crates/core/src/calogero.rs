//! Characters of A3 as polynomial eigenfunctions.
//!
//! The irreducible characters, written as polynomials in the three
//! fundamental characters `z1,z2,z3`, are exactly the polynomial
//! eigenfunctions of a second-order differential operator in the
//! `z`-variables (the radial part of a quantum Calogero–Sutherland
//! Hamiltonian at unit coupling).  The eigenvalue attached to the highest
//! weight `m` is an explicit quadratic form, and distinct ansatz monomials
//! almost always carry distinct eigenvalues, so the eigenvalue equation can
//! be solved by exact back-substitution: start from the leading monomial
//! `z^m` and walk down the weight lattice one positive root at a time.
//!
//! This gives a route to the characters that is completely independent of
//! the Weyl character formula, which is what makes it a useful cross-check.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::diffop::DiffOperator;
use crate::error::Error;
use crate::golden;
use crate::poly::{add_assign_term, coef_ratio, expect_u64, Coef, LaurentPoly};
use crate::roots::{Algebra, RootSystem, Weight};
use crate::text::parse_poly;
use crate::vars::{x_vars, z_vars};
use crate::Result;

/// The eigenvalue of a highest weight: the quadratic-plus-linear form
/// `(m^T Q m + L·m) / 2` with integer `Q` (symmetric, stored as its upper
/// triangle) and `L`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenForm {
    /// `quad[i][j]` for `j >= i` is the printed coefficient of `m_i*m_j`.
    quad: Vec<Vec<i64>>,
    linear: Vec<i64>,
}

impl EigenForm {
    /// The three-label form for A3:
    /// `(3m1^2 + 4m2^2 + 3m3^2 + 4m1m2 + 2m1m3 + 4m2m3 + 12m1 + 16m2 + 12m3)/2`.
    pub fn a3() -> EigenForm {
        EigenForm {
            quad: vec![vec![3, 4, 2], vec![4, 4], vec![3]],
            linear: vec![12, 16, 12],
        }
    }

    /// The two-label form for the symmetric family `m = (m1, m2, m1)`,
    /// obtained by restricting [`EigenForm::a3`]:
    /// `(8m1^2 + 4m2^2 + 8m1m2 + 24m1 + 16m2)/2`.
    pub fn a3_real() -> EigenForm {
        EigenForm {
            quad: vec![vec![8, 8], vec![4]],
            linear: vec![24, 16],
        }
    }

    pub fn nvars(&self) -> usize {
        self.linear.len()
    }

    /// The coefficient of `m_i * m_j` (requires `j >= i`; the form is
    /// stored as its upper triangle).
    pub fn quad_coeff(&self, i: usize, j: usize) -> i64 {
        self.quad[i][j - i]
    }

    /// The coefficient of `m_i`.
    pub fn linear_coeff(&self, i: usize) -> i64 {
        self.linear[i]
    }

    /// Evaluate the form; half-integer values are possible.
    pub fn eval(&self, m: &[i64]) -> Coef {
        assert_eq!(m.len(), self.nvars());
        let mut twice = 0i64;
        for (i, row) in self.quad.iter().enumerate() {
            for (offset, q) in row.iter().enumerate() {
                twice += q * m[i] * m[i + offset];
            }
        }
        for (l, mi) in self.linear.iter().zip(m) {
            twice += l * mi;
        }
        coef_ratio(twice, 2)
    }
}

/// The second-order operator on `z`-polynomials whose eigenfunctions are
/// the irreducible characters of A3 (built from the tabulated coefficient
/// polynomials, including the global factor 1/2).
pub fn delta_z() -> DiffOperator {
    let z = z_vars();
    let half = coef_ratio(1, 2);
    let mut op = DiffOperator::new(&z);
    for (text, orders) in golden::DELTA_Z_TERMS {
        let coeff = parse_poly(&z, text)
            .expect("tabulated operator coefficient must parse")
            .scale(&half);
        op = op.with_term(coeff, orders);
    }
    op
}

/// Applies the character operator to a polynomial in `z1,z2,z3`.
///
/// The input must be a true polynomial: the operator preserves
/// polynomiality but not Laurent tails, and characters never have negative
/// `z`-exponents.
pub fn apply_delta_z(p: &LaurentPoly) -> Result<LaurentPoly> {
    p.vars().expect_same(&z_vars())?;
    p.expect_polynomial()?;
    delta_z().apply_poly(p)
}

/// Eigenvalue attached to the dominant weight `m`.
pub fn eigenvalue(m: Weight) -> Result<Coef> {
    RootSystem::expect_dominant(m)?;
    Ok(EigenForm::a3().eval(&m))
}

/// An irreducible character of A3 as a polynomial in the fundamental
/// characters, labelled by its highest weight.
#[derive(Debug, Clone, PartialEq)]
pub struct CharPoly {
    weight: Weight,
    body: LaurentPoly,
}

impl CharPoly {
    pub fn weight(&self) -> Weight {
        self.weight
    }

    /// The character as a polynomial over `z1,z2,z3`.
    pub fn body(&self) -> &LaurentPoly {
        &self.body
    }

    pub fn into_body(self) -> LaurentPoly {
        self.body
    }
}

/// All dominant weights `a` reachable from `m` by subtracting positive
/// roots, i.e. the candidate monomials `z^a` of the character of `m`.
/// Enumerated by walking the simple-root coordinate box `0..=k(m)`.
pub(crate) fn ansatz_weights(sys: &RootSystem, m: Weight) -> Vec<Weight> {
    let cartan = sys.cartan();
    let k_max = sys.to_root_coords(m);
    let mut bounds = [0i64; 3];
    for (b, c) in bounds.iter_mut().zip(k_max.iter()) {
        // m is dominant, so its root coordinates are non-negative.
        *b = (c.numer() / c.denom()).try_into().expect("small weight");
    }
    let mut out = Vec::new();
    for k1 in 0..=bounds[0] {
        for k2 in 0..=bounds[1] {
            for k3 in 0..=bounds[2] {
                let k = [k1, k2, k3];
                let mut a = m;
                for (j, aj) in a.iter_mut().enumerate() {
                    for (i, ki) in k.iter().enumerate() {
                        *aj -= ki * cartan[i][j];
                    }
                }
                if a.iter().all(|&c| c >= 0) {
                    out.push(a);
                }
            }
        }
    }
    out
}

/// Solves the eigenvalue equation for the character of highest weight `m`
/// by back-substitution.
///
/// The ansatz runs over the monomials `z^a` with `a` dominant and below `m`
/// in the root order.  The operator maps `z^a` to its eigenvalue times
/// `z^a` plus monomials strictly lower in the root order, so processing
/// candidates by increasing root-height of `m - a` makes the linear system
/// triangular: each coefficient is an accumulated sum divided by
/// `eps(m) - eps(a)`.  A vanishing divisor is reported as
/// [`Error::EigenvalueCollision`]; no such pair exists for any `m` with
/// `m1+m2+m3 <= 10` (covered by the test suite).
pub fn solve_character(m: Weight) -> Result<CharPoly> {
    RootSystem::expect_dominant(m)?;
    let sys = RootSystem::new(Algebra::A3);
    let form = EigenForm::a3();
    let eps_m = form.eval(&m);

    // Candidate monomials, sorted by increasing height of m - a.
    let mut candidates: Vec<(i64, Weight)> = ansatz_weights(&sys, m)
        .into_iter()
        .map(|a| {
            let diff = [m[0] - a[0], m[1] - a[1], m[2] - a[2]];
            let k = sys
                .root_coords_if_grid(diff)
                .expect("ansatz weights differ from m by root-lattice vectors");
            (k[0] + k[1] + k[2], a)
        })
        .collect();
    candidates.sort();

    for (height, a) in &candidates {
        if *height > 0 && form.eval(a) == eps_m {
            return Err(Error::EigenvalueCollision {
                target: m,
                other: *a,
            });
        }
    }

    let z = z_vars();
    let op = delta_z();
    // Off-diagonal scatter accumulated from already-solved coefficients.
    let mut acc: BTreeMap<Vec<i32>, Coef> = BTreeMap::new();
    let mut solved: BTreeMap<Vec<i32>, Coef> = BTreeMap::new();

    for (height, a) in &candidates {
        let expo: Vec<i32> = a.iter().map(|&c| c as i32).collect();
        let coeff = if *height == 0 {
            Coef::from_integer(1.into())
        } else {
            let eps_a = form.eval(a);
            match acc.get(&expo) {
                Some(raw) => raw / (&eps_m - &eps_a),
                None => continue,
            }
        };
        if coeff.is_zero() {
            continue;
        }
        // Scatter: push c_a times the sub-leading part of the operator's
        // action on z^a down onto lower monomials.
        let monomial = LaurentPoly::monomial(&z, &expo, coeff.clone());
        let image = op.apply_poly(&monomial)?;
        for (e, c) in image.terms() {
            if e != &expo {
                add_assign_term(&mut acc, e.clone(), c.clone());
            }
        }
        solved.insert(expo, coeff);
    }

    let body = LaurentPoly::from_terms(&z, solved);
    assert!(
        body.is_integral(),
        "character of {m:?} came out with non-integer coefficients"
    );
    Ok(CharPoly { weight: m, body })
}

/// Rewrites a character from `z`- to `x`-variables by substituting the
/// fundamental characters, i.e. expands it into weight monomials.
///
/// Implemented as a three-level Horner evaluation (over `z1`, then `z2`,
/// then `z3`) so each level performs one polynomial multiplication per
/// degree instead of one per monomial; the result for large weights has
/// tens of thousands of terms and naive per-monomial substitution is far
/// too slow.
pub fn char_to_x(c: &CharPoly) -> LaurentPoly {
    let x = x_vars();
    let fundamental: Vec<LaurentPoly> = golden::FUNDAMENTAL_X
        .iter()
        .map(|text| parse_poly(&x, text).expect("tabulated fundamental character must parse"))
        .collect();

    // Regroup the body as { a1 -> { a2 -> { a3 -> coefficient } } }.
    let mut groups: BTreeMap<i32, BTreeMap<i32, BTreeMap<i32, Coef>>> = BTreeMap::new();
    for (e, coeff) in c.body().terms() {
        groups
            .entry(e[0])
            .or_default()
            .entry(e[1])
            .or_default()
            .insert(e[2], coeff.clone());
    }

    let horner = |acc: LaurentPoly, base: &LaurentPoly, add: Option<LaurentPoly>| {
        let stepped = &acc * base;
        match add {
            Some(p) => &stepped + &p,
            None => stepped,
        }
    };

    let mut outer = LaurentPoly::zero(&x);
    let max1 = groups.keys().next_back().copied().unwrap_or(0);
    for a1 in (0..=max1).rev() {
        let inner1 = groups.get(&a1).map(|g2| {
            let mut mid = LaurentPoly::zero(&x);
            let max2 = g2.keys().next_back().copied().unwrap_or(0);
            for a2 in (0..=max2).rev() {
                let inner2 = g2.get(&a2).map(|g3| {
                    let mut low = LaurentPoly::zero(&x);
                    let max3 = g3.keys().next_back().copied().unwrap_or(0);
                    for a3 in (0..=max3).rev() {
                        let scalar = g3
                            .get(&a3)
                            .map(|coeff| LaurentPoly::constant(&x, coeff.clone()));
                        low = horner(low, &fundamental[2], scalar);
                    }
                    low
                });
                mid = horner(mid, &fundamental[1], inner2);
            }
            mid
        });
        outer = horner(outer, &fundamental[0], inner1);
    }
    outer
}

/// The weight diagram of the irreducible representation with highest weight
/// `m`: every weight (in fundamental-weight labels) with its multiplicity.
/// The multiplicities are read off as the monomial coefficients of the
/// character in `x`-variables; their sum is checked against the Weyl
/// dimension formula before returning.
pub fn weight_multiplicities(m: Weight) -> Result<BTreeMap<Weight, u64>> {
    let character = solve_character(m)?;
    let expanded = char_to_x(&character);
    let mut out = BTreeMap::new();
    let mut total = 0u64;
    for (e, coeff) in expanded.terms() {
        let n = [i64::from(e[0]), i64::from(e[1]), i64::from(e[2])];
        let mult = expect_u64(coeff)?;
        assert!(
            mult > 0,
            "weight {n:?} of {m:?} stored with zero multiplicity"
        );
        total += mult;
        out.insert(n, mult);
    }
    let dim = RootSystem::new(Algebra::A3).weyl_dim(m)?;
    assert_eq!(
        num_bigint::BigInt::from(total),
        dim,
        "weight multiplicities of {m:?} do not sum to the dimension"
    );
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::coef_int;

    fn solve_body(m: Weight) -> LaurentPoly {
        solve_character(m).unwrap().into_body()
    }

    fn z_poly(text: &str) -> LaurentPoly {
        parse_poly(&z_vars(), text).unwrap()
    }

    #[test]
    fn operator_action_on_fundamentals() {
        assert!(apply_delta_z(&z_poly("1")).unwrap().is_zero());
        assert_eq!(
            apply_delta_z(&z_poly("z1")).unwrap(),
            z_poly("z1").scale(&coef_ratio(15, 2))
        );
        assert_eq!(
            apply_delta_z(&z_poly("z2")).unwrap(),
            z_poly("z2").scale(&coef_int(10))
        );
        assert_eq!(
            apply_delta_z(&z_poly("z3")).unwrap(),
            z_poly("z3").scale(&coef_ratio(15, 2))
        );
    }

    #[test]
    fn operator_requires_polynomials() {
        let err = apply_delta_z(&z_poly("z1^-1")).unwrap_err();
        assert!(matches!(err, Error::NegativeExponent { .. }));
    }

    #[test]
    fn eigenvalue_spot_values() {
        assert_eq!(eigenvalue([0, 0, 0]).unwrap(), coef_int(0));
        assert_eq!(eigenvalue([1, 0, 0]).unwrap(), coef_ratio(15, 2));
        assert_eq!(eigenvalue([0, 1, 0]).unwrap(), coef_int(10));
        assert_eq!(eigenvalue([1, 0, 1]).unwrap(), coef_int(16));
        assert!(eigenvalue([0, -1, 0]).is_err());
    }

    #[test]
    fn eigenform_is_flip_symmetric() {
        let form = EigenForm::a3();
        for m1 in 0..=5 {
            for m2 in 0..=5 {
                for m3 in 0..=5 {
                    assert_eq!(form.eval(&[m1, m2, m3]), form.eval(&[m3, m2, m1]));
                }
            }
        }
    }

    #[test]
    fn restricted_form_agrees_with_symmetric_evaluations() {
        let full = EigenForm::a3();
        let real = EigenForm::a3_real();
        for m1 in 0..=6 {
            for m2 in 0..=6 {
                assert_eq!(real.eval(&[m1, m2]), full.eval(&[m1, m2, m1]));
            }
        }
    }

    #[test]
    fn monomials_are_diagonal_to_leading_order() {
        // The coefficient of z^a in (operator applied to z^a) is exactly the
        // eigenvalue form at a, for every monomial in a small grid.
        let z = z_vars();
        let op = delta_z();
        let form = EigenForm::a3();
        for a1 in 0..=4i32 {
            for a2 in 0..=4i32 {
                for a3 in 0..=4i32 {
                    let mono = LaurentPoly::monomial(&z, &[a1, a2, a3], coef_int(1));
                    let image = op.apply_poly(&mono).unwrap();
                    assert_eq!(
                        image.coeff_at(&[a1, a2, a3]),
                        form.eval(&[a1 as i64, a2 as i64, a3 as i64]),
                        "diagonal at {:?}",
                        (a1, a2, a3)
                    );
                }
            }
        }
    }

    #[test]
    fn low_weight_characters() {
        assert_eq!(solve_body([0, 0, 0]), z_poly("1"));
        assert_eq!(solve_body([1, 0, 0]), z_poly("z1"));
        assert_eq!(solve_body([0, 1, 0]), z_poly("z2"));
        assert_eq!(solve_body([0, 0, 1]), z_poly("z3"));
        assert_eq!(solve_body([2, 0, 0]), z_poly("z1^2 - z2"));
        assert_eq!(solve_body([1, 0, 1]), z_poly("z1*z3 - 1"));
        assert!(matches!(
            solve_character([0, 0, -1]),
            Err(Error::NonDominantWeight(_))
        ));
    }

    #[test]
    fn solved_characters_satisfy_the_eigenvalue_equation() {
        for m1 in 0..=6i64 {
            for m2 in 0..=6 - m1 {
                for m3 in 0..=6 - m1 - m2 {
                    let m = [m1, m2, m3];
                    let body = solve_body(m);
                    let lhs = apply_delta_z(&body).unwrap();
                    let rhs = body.scale(&eigenvalue(m).unwrap());
                    assert_eq!(lhs, rhs, "eigenvalue equation at {m:?}");
                }
            }
        }
    }

    #[test]
    fn characters_evaluate_to_dimensions() {
        let sys = RootSystem::new(Algebra::A3);
        let point = [coef_int(4), coef_int(6), coef_int(4)];
        for m1 in 0..=8i64 {
            for m2 in 0..=8 - m1 {
                for m3 in 0..=8 - m1 - m2 {
                    let m = [m1, m2, m3];
                    let value = solve_body(m).eval(&point).unwrap();
                    assert_eq!(value, Coef::from_integer(sys.weyl_dim(m).unwrap()), "{m:?}");
                }
            }
        }
    }

    #[test]
    fn diagram_flip_swaps_outer_variables() {
        for m1 in 0..=6i64 {
            for m2 in 0..=6 - m1 {
                for m3 in 0..=6 - m1 - m2 {
                    let direct = solve_body([m3, m2, m1]);
                    let swapped = solve_body([m1, m2, m3]).swap_vars("z1", "z3").unwrap();
                    assert_eq!(direct, swapped);
                }
            }
        }
    }

    #[test]
    fn no_eigenvalue_collisions_up_to_height_ten() {
        let sys = RootSystem::new(Algebra::A3);
        let form = EigenForm::a3();
        for m1 in 0..=10i64 {
            for m2 in 0..=10 - m1 {
                for m3 in 0..=10 - m1 - m2 {
                    let m = [m1, m2, m3];
                    let eps = form.eval(&m);
                    for a in ansatz_weights(&sys, m) {
                        assert!(
                            a == m || form.eval(&a) != eps,
                            "eigenvalue collision between {m:?} and {a:?}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn x_expansion_matches_weyl_characters() {
        let sys = RootSystem::new(Algebra::A3);
        for m1 in 0..=4i64 {
            for m2 in 0..=4 - m1 {
                for m3 in 0..=4 - m1 - m2 {
                    let m = [m1, m2, m3];
                    let from_solver = char_to_x(&solve_character(m).unwrap());
                    assert_eq!(from_solver, sys.weyl_character(m).unwrap(), "{m:?}");
                }
            }
        }
    }

    #[test]
    fn weight_diagrams() {
        let quartet = weight_multiplicities([1, 0, 0]).unwrap();
        assert_eq!(quartet.len(), 4);
        assert!(quartet.values().all(|&mult| mult == 1));

        let adjoint = weight_multiplicities([1, 0, 1]).unwrap();
        assert_eq!(adjoint[&[0, 0, 0]], 3);
        assert_eq!(adjoint.values().sum::<u64>(), 15);

        let bigger = weight_multiplicities([2, 0, 2]).unwrap();
        assert_eq!(bigger[&[1, 0, 1]], 3);
    }
}
