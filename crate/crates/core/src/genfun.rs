//! Closed-form generating functions for characters and dimensions.
//!
//! This is the second, independent route to the characters: rational
//! functions in counting variables `t1,t2,t3` whose power-series
//! coefficients are whole families of characters (as `z`-polynomials) or of
//! dimensions.  Four functions cover A3 — characters `G`, dimensions `E`,
//! and their restrictions `G_R`, `E_R` to the symmetric weights
//! `(m1, m2, m1)` — and six more cover the B3/C3 weight families
//! `m1*w1`, `m3*w3`, and `m1*w1 + m3*w3`.
//!
//! The character functions satisfy an exactly checkable identity: applying
//! the counting-variable operator (the eigenvalue form with each label
//! traded for `t d/dt`) must agree with applying the character operator to
//! every series coefficient, because each coefficient is an eigenfunction
//! with the eigenvalue read off its `t`-monomial.  [`verify_pde`] computes
//! that residual; it vanishing over a truncation box confirms both the
//! transcribed closed form and the operator to that order.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::calogero::{self, EigenForm};
use crate::diffop::DiffOperator;
use crate::error::Error;
use crate::golden;
use crate::poly::{coef_int, coef_ratio, LaurentPoly};
use crate::ratfn::RationalFn;
use crate::roots::Algebra;
use crate::series::TruncatedSeries;
use crate::text::parse_poly;
use crate::vars::{t13z_vars, t2_vars, t2z_vars, t_vars, tz_vars, VarSet};
use crate::Result;

/// A named generating function `num / den`, expanded as a power series in a
/// designated subset of its variables.
#[derive(Clone, Debug, PartialEq)]
pub struct GenFun {
    name: String,
    expand_names: Vec<&'static str>,
    num: LaurentPoly,
    den: LaurentPoly,
}

impl GenFun {
    fn assemble(
        name: &str,
        expand_names: &[&'static str],
        num: LaurentPoly,
        den: LaurentPoly,
    ) -> GenFun {
        num.vars()
            .expect_same(den.vars())
            .expect("numerator and denominator over one variable set");
        assert_eq!(
            den.constant_term(),
            coef_int(1),
            "generating-function denominators are normalized at the origin"
        );
        for v in expand_names {
            assert!(
                den.vars().index_of(v).is_some(),
                "expansion variable {v} must occur in the function"
            );
        }
        GenFun {
            name: String::from(name),
            expand_names: expand_names.to_vec(),
            num,
            den,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// The variables the series runs over, in cap order.
    pub fn expand_names(&self) -> &[&'static str] {
        &self.expand_names
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

    /// The same function with the numerator replaced — support for negative
    /// controls that corrupt one closed form and confirm the verification
    /// machinery notices.
    pub fn with_numerator(&self, num: LaurentPoly) -> Result<GenFun> {
        num.vars().expect_same(self.den.vars())?;
        Ok(GenFun {
            name: self.name.clone(),
            expand_names: self.expand_names.clone(),
            num,
            den: self.den.clone(),
        })
    }

    /// Expands the function to the given caps (inclusive, one per expansion
    /// variable).
    pub fn expand(&self, caps: &[u32]) -> Result<TruncatedSeries> {
        let f = RationalFn::new(self.num.clone(), self.den.clone())?;
        TruncatedSeries::expand(&f, &self.expand_names, caps)
    }
}

fn poly(vars: &VarSet, text: &str) -> LaurentPoly {
    parse_poly(vars, text).expect("tabulated formula must parse")
}

/// The character generating function: the coefficient of `t1^m1 t2^m2 t3^m3`
/// is the irreducible character of highest weight `m` as a polynomial in
/// `z1,z2,z3`.  The denominator is the product of one factor per fundamental
/// weight, each a `t`-polynomial over the Weyl orbit of that weight.
pub fn build_g() -> GenFun {
    let v = tz_vars();
    let den = &(&poly(&v, golden::A3_CHAR_DEN_1) * &poly(&v, golden::A3_CHAR_DEN_2))
        * &poly(&v, golden::A3_CHAR_DEN_3);
    GenFun::assemble("g", &["t1", "t2", "t3"], poly(&v, golden::A3_CHAR_NUM), den)
}

/// The dimension generating function: `G` with every `z` evaluated at the
/// identity, so the coefficient of `t^m` is the dimension of the
/// representation with highest weight `m`.
pub fn build_e() -> GenFun {
    let v = t_vars();
    GenFun::assemble(
        "e",
        &["t1", "t2", "t3"],
        poly(&v, golden::A3_DIM_NUM),
        poly(&v, golden::A3_DIM_DEN),
    )
}

/// The generating function of the characters with symmetric highest weight
/// `(m1, m2, m1)` — the self-conjugate (real) family — counted by
/// `t1^m1 t2^m2`.
pub fn build_g_real() -> GenFun {
    let v = t2z_vars();
    let den = &poly(&v, golden::REAL_CHAR_DEN_13) * &poly(&v, golden::A3_CHAR_DEN_2);
    GenFun::assemble(
        "g-real",
        &["t1", "t2"],
        poly(&v, golden::REAL_CHAR_NUM),
        den,
    )
}

/// Dimension counterpart of [`build_g_real`].  The numerator is kept in the
/// factored shape of the source table rather than reduced against the
/// denominator.
pub fn build_e_real() -> GenFun {
    let v = t2_vars();
    let num = &poly(&v, golden::REAL_DIM_NUM_PREFACTOR) * &poly(&v, golden::REAL_DIM_NUM_POLY);
    GenFun::assemble("e-real", &["t1", "t2"], num, poly(&v, golden::REAL_DIM_DEN))
}

/// Which B3/C3 weight family a restricted generating function covers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RestrictedKind {
    /// Multiples of the first fundamental weight, counted by `t1`.
    First,
    /// Multiples of the third fundamental weight, counted by `t3`.
    Third,
    /// The two-parameter family `m1*w1 + m3*w3`, counted by `t1` and `t3`.
    Mixed,
}

impl RestrictedKind {
    /// Parses a kind name; `spinor` is accepted for the third family.
    pub fn parse(s: &str) -> Result<RestrictedKind> {
        match s.to_ascii_lowercase().as_str() {
            "first" => Ok(RestrictedKind::First),
            "third" | "spinor" => Ok(RestrictedKind::Third),
            "mixed" => Ok(RestrictedKind::Mixed),
            _ => Err(Error::UnknownKind(format!("restriction kind `{s}`"))),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            RestrictedKind::First => "first",
            RestrictedKind::Third => "third",
            RestrictedKind::Mixed => "mixed",
        }
    }
}

/// A restricted character generating function for B3 or C3: the coefficient
/// of `t^m`, as a polynomial in `z1,z2,z3` (the fundamental characters of
/// the chosen algebra), is the character of the corresponding weight in the
/// family.  The mixed family's denominator is the product of the two
/// single-index denominators.
pub fn build_restricted(algebra: Algebra, kind: RestrictedKind) -> Result<GenFun> {
    let v = t13z_vars();
    let (first, third, mixed_num) = match algebra {
        Algebra::B3 => (
            (golden::B3_FIRST_NUM, golden::B3_FIRST_DEN),
            (golden::B3_THIRD_NUM, golden::B3_THIRD_DEN),
            golden::B3_MIXED_NUM,
        ),
        Algebra::C3 => (
            (golden::C3_FIRST_NUM, golden::C3_FIRST_DEN),
            (golden::C3_THIRD_NUM, golden::C3_THIRD_DEN),
            golden::C3_MIXED_NUM,
        ),
        Algebra::A3 => {
            return Err(Error::UnknownKind(format!(
                "no tabulated restricted generating functions for {}",
                algebra.name()
            )))
        }
    };
    let name = format!("{}-{}", algebra.name(), kind.name());
    Ok(match kind {
        RestrictedKind::First => {
            GenFun::assemble(&name, &["t1"], poly(&v, first.0), poly(&v, first.1))
        }
        RestrictedKind::Third => {
            GenFun::assemble(&name, &["t3"], poly(&v, third.0), poly(&v, third.1))
        }
        RestrictedKind::Mixed => {
            let den = &poly(&v, first.1) * &poly(&v, third.1);
            GenFun::assemble(&name, &["t1", "t3"], poly(&v, mixed_num), den)
        }
    })
}

/// The operator obtained from an eigenvalue form by trading each weight
/// label `m_i` for `t_i d/dt_i`: on the monomial `t^m` it acts as
/// multiplication by the form's value at `m`.  Squares expand as
/// `t_i d_i (t_i d_i) = t_i^2 d_i^2 + t_i d_i`, so each diagonal quadratic
/// coefficient leaves a first-order remainder that joins the linear part.
pub fn delta_t_from_eigen(form: &EigenForm, vars: &VarSet) -> DiffOperator {
    assert_eq!(
        vars.len(),
        form.nvars(),
        "one counting variable per weight label"
    );
    let n = form.nvars();
    let mut op = DiffOperator::new(vars);
    for i in 0..n {
        for j in i..n {
            let mut expo = vec![0i32; n];
            expo[i] += 1;
            expo[j] += 1;
            let mut orders = vec![0u32; n];
            orders[i] += 1;
            orders[j] += 1;
            op = op.with_term(
                LaurentPoly::monomial(vars, &expo, coef_ratio(form.quad_coeff(i, j), 2)),
                &orders,
            );
        }
        let remainder = form.quad_coeff(i, i) + form.linear_coeff(i);
        let mut expo = vec![0i32; n];
        expo[i] = 1;
        let mut orders = vec![0u32; n];
        orders[i] = 1;
        op = op.with_term(
            LaurentPoly::monomial(vars, &expo, coef_ratio(remainder, 2)),
            &orders,
        );
    }
    op
}

/// Counting-variable operator paired with [`build_g`].
pub fn delta_t() -> DiffOperator {
    delta_t_from_eigen(&EigenForm::a3(), &t_vars())
}

/// Counting-variable operator paired with [`build_g_real`].
pub fn delta_t_real() -> DiffOperator {
    delta_t_from_eigen(&EigenForm::a3_real(), &t2_vars())
}

/// The eigenfunction identity as a finite computation: expands `g` within
/// `caps`, applies the counting operator to the series and the character
/// operator to every `z`-coefficient, and returns the difference.
///
/// For the true character functions the residual is identically zero; any
/// transcription error in `g` shows up as a nonzero coefficient localizing
/// the failure.  The counting operator preserves `t`-degree term by term,
/// so the truncation introduces no spurious boundary effects.
pub fn verify_pde(g: &GenFun, op: &DiffOperator, caps: &[u32]) -> Result<TruncatedSeries> {
    let series = g.expand(caps)?;
    let lhs = op.apply_series(&series)?;
    let rhs = series.map_coeffs(calogero::apply_delta_z)?;
    lhs.checked_sub(&rhs)
}

/// Expands `g` and returns its nonzero coefficients keyed by `t`-exponent;
/// absent keys inside the caps are zero.
pub fn expand_genfun(g: &GenFun, caps: &[u32]) -> Result<BTreeMap<Vec<u32>, LaurentPoly>> {
    let series = g.expand(caps)?;
    Ok(series.iter().map(|(e, p)| (e.clone(), p.clone())).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calogero::solve_character;
    use crate::poly::Coef;
    use crate::roots::RootSystem;
    use crate::vars::{x_vars, z_vars};

    /// Collapses an operator to `orders -> total coefficient` so that two
    /// differently assembled operators can be compared.
    fn term_map(op: &DiffOperator) -> BTreeMap<Vec<u32>, LaurentPoly> {
        let mut out: BTreeMap<Vec<u32>, LaurentPoly> = BTreeMap::new();
        for term in op.terms() {
            let next = match out.remove(&term.orders) {
                None => term.coeff.clone(),
                Some(cur) => cur.checked_add(&term.coeff).unwrap(),
            };
            out.insert(term.orders.clone(), next);
        }
        out
    }

    #[test]
    fn real_counting_operator_matches_printed_form() {
        let t2 = t2_vars();
        let mut printed = DiffOperator::new(&t2);
        for (text, orders) in golden::REAL_DELTA_T_TERMS {
            printed = printed.with_term(parse_poly(&t2, text).unwrap(), orders);
        }
        assert_eq!(term_map(&delta_t_real()), term_map(&printed));
    }

    #[test]
    fn counting_operators_act_by_the_eigenvalue() {
        let t = t_vars();
        let full = delta_t();
        let form = EigenForm::a3();
        for m in [[0i64, 0, 0], [1, 0, 0], [0, 1, 0], [1, 0, 1], [2, 2, 2]] {
            let expo: Vec<i32> = m.iter().map(|&c| c as i32).collect();
            let mono = LaurentPoly::monomial(&t, &expo, coef_int(1));
            assert_eq!(full.apply_poly(&mono).unwrap(), mono.scale(&form.eval(&m)));
        }
        let t2 = t2_vars();
        let real = delta_t_real();
        let real_form = EigenForm::a3_real();
        for m in [[0i64, 0], [1, 0], [0, 1], [3, 2]] {
            let expo: Vec<i32> = m.iter().map(|&c| c as i32).collect();
            let mono = LaurentPoly::monomial(&t2, &expo, coef_int(1));
            assert_eq!(
                real.apply_poly(&mono).unwrap(),
                mono.scale(&real_form.eval(&m))
            );
        }
    }

    #[test]
    fn character_function_coefficients_match_the_solver() {
        let s = build_g().expand(&[2, 2, 2]).unwrap();
        for m1 in 0..=2u32 {
            for m2 in 0..=2u32 {
                for m3 in 0..=2u32 {
                    let from_series = s.coeff(&[m1, m2, m3]).unwrap();
                    let solved = solve_character([m1 as i64, m2 as i64, m3 as i64])
                        .unwrap()
                        .into_body();
                    assert_eq!(from_series, solved, "at {:?}", (m1, m2, m3));
                }
            }
        }
    }

    #[test]
    fn symmetric_function_coefficients_match_the_solver() {
        let s = build_g_real().expand(&[3, 2]).unwrap();
        for m1 in 0..=3u32 {
            for m2 in 0..=2u32 {
                let from_series = s.coeff(&[m1, m2]).unwrap();
                let solved = solve_character([m1 as i64, m2 as i64, m1 as i64])
                    .unwrap()
                    .into_body();
                assert_eq!(from_series, solved, "at {:?}", (m1, m2));
            }
        }
    }

    #[test]
    fn dimension_functions_count_dimensions() {
        let sys = RootSystem::new(Algebra::A3);
        let e = build_e().expand(&[4, 4, 4]).unwrap();
        for m1 in 0..=4u32 {
            for m2 in 0..=4u32 {
                for m3 in 0..=4u32 {
                    let dim = sys.weyl_dim([m1 as i64, m2 as i64, m3 as i64]).unwrap();
                    assert_eq!(
                        e.coeff(&[m1, m2, m3]).unwrap().constant_term(),
                        Coef::from_integer(dim),
                        "at {:?}",
                        (m1, m2, m3)
                    );
                }
            }
        }
        let er = build_e_real().expand(&[4, 4]).unwrap();
        for m1 in 0..=4u32 {
            for m2 in 0..=4u32 {
                let dim = sys.weyl_dim([m1 as i64, m2 as i64, m1 as i64]).unwrap();
                assert_eq!(
                    er.coeff(&[m1, m2]).unwrap().constant_term(),
                    Coef::from_integer(dim),
                    "at {:?}",
                    (m1, m2)
                );
            }
        }
    }

    #[test]
    fn pde_residuals_vanish() {
        let full = verify_pde(&build_g(), &delta_t(), &[2, 2, 2]).unwrap();
        assert!(full.is_zero());
        let real = verify_pde(&build_g_real(), &delta_t_real(), &[3, 3]).unwrap();
        assert!(real.is_zero());
    }

    #[test]
    fn pde_detects_a_corrupted_numerator() {
        let g = build_g();
        // Flip the sign of the numerator term -t1*t2*z3.
        let expo = [1, 1, 0, 0, 0, 1];
        let coeff = g.num().coeff_at(&expo);
        assert_eq!(coeff, coef_int(-1), "expected numerator term is present");
        let delta = LaurentPoly::monomial(g.vars(), &expo, coeff * coef_int(2));
        let corrupted = g
            .with_numerator(g.num().checked_sub(&delta).unwrap())
            .unwrap();
        let residual = verify_pde(&corrupted, &delta_t(), &[2, 2, 2]).unwrap();
        assert!(!residual.is_zero());
    }

    #[test]
    fn restricted_functions_reproduce_weyl_characters() {
        let z = z_vars();
        let x = x_vars();
        for algebra in [Algebra::B3, Algebra::C3] {
            let sys = RootSystem::new(algebra);
            let fx: Vec<LaurentPoly> = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
                .iter()
                .map(|&w| sys.weyl_character(w).unwrap())
                .collect();
            let bind = [("z1", &fx[0]), ("z2", &fx[1]), ("z3", &fx[2])];
            let to_x = |p: &LaurentPoly| p.restrict_to(&z).unwrap().subst(&x, &bind).unwrap();

            let first = build_restricted(algebra, RestrictedKind::First)
                .unwrap()
                .expand(&[3])
                .unwrap();
            let third = build_restricted(algebra, RestrictedKind::Third)
                .unwrap()
                .expand(&[3])
                .unwrap();
            for m in 0..=3u32 {
                assert_eq!(
                    to_x(&first.coeff(&[m]).unwrap()),
                    sys.weyl_character([m as i64, 0, 0]).unwrap(),
                    "{algebra:?} first family at {m}"
                );
                assert_eq!(
                    to_x(&third.coeff(&[m]).unwrap()),
                    sys.weyl_character([0, 0, m as i64]).unwrap(),
                    "{algebra:?} third family at {m}"
                );
            }

            let mixed = build_restricted(algebra, RestrictedKind::Mixed)
                .unwrap()
                .expand(&[2, 2])
                .unwrap();
            for m1 in 0..=2u32 {
                for m3 in 0..=2u32 - m1 {
                    assert_eq!(
                        to_x(&mixed.coeff(&[m1, m3]).unwrap()),
                        sys.weyl_character([m1 as i64, 0, m3 as i64]).unwrap(),
                        "{algebra:?} mixed family at {:?}",
                        (m1, m3)
                    );
                }
            }
        }
    }

    #[test]
    fn restricted_families_exist_for_b3_and_c3_only() {
        assert!(matches!(
            build_restricted(Algebra::A3, RestrictedKind::First),
            Err(Error::UnknownKind(_))
        ));
        assert_eq!(
            RestrictedKind::parse("spinor").unwrap(),
            RestrictedKind::Third
        );
        assert_eq!(
            RestrictedKind::parse("MIXED").unwrap(),
            RestrictedKind::Mixed
        );
        assert!(matches!(
            RestrictedKind::parse("fourth"),
            Err(Error::UnknownKind(_))
        ));
    }

    #[test]
    fn expansion_map_is_keyed_by_counting_exponents() {
        let map = expand_genfun(&build_g(), &[1, 1, 1]).unwrap();
        assert_eq!(map.len(), 8, "every coefficient in the box is nonzero");
        let z = z_vars();
        assert_eq!(map[[0u32, 0, 0].as_slice()], parse_poly(&z, "1").unwrap());
        assert_eq!(map[[1u32, 0, 0].as_slice()], parse_poly(&z, "z1").unwrap());
        assert_eq!(
            map[[1u32, 0, 1].as_slice()],
            parse_poly(&z, "z1*z3 - 1").unwrap()
        );
    }
}
