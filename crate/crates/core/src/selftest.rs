//! The verification suite: ten numbered acceptance criteria, each an exact
//! cross-check between independent computation routes.
//!
//! Every criterion is a pure function from an effort [`Level`] to a
//! pass/fail [`CriterionReport`].  Failures carry a localized
//! counterexample (the first offending weight or exponent) instead of
//! panicking, so the suite can run to completion and report everything it
//! found.  `Quick` halves every bound for fast smoke runs; the negative
//! controls keep their caps, since they must cover every tabulated
//! numerator term to mean anything.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::calogero::{apply_delta_z, char_to_x, eigenvalue, solve_character};
use crate::error::Error;
use crate::genfun::{
    build_e, build_e_real, build_g, build_g_real, build_restricted, delta_t, delta_t_real,
    verify_pde, RestrictedKind,
};
use crate::kostant::{kostant_multiplicity, kostant_z, kostant_z_series};
use crate::mult::{build_a, closed_mu, expand_a, TABULATED_TARGETS};
use crate::poly::{coef_int, coef_ratio, LaurentPoly};
use crate::roots::{Algebra, RootSystem, Weight};
use crate::text::parse_poly;
use crate::vars::{x_vars, z_vars};
use crate::Result;

/// Verification effort: `Full` runs the published bounds, `Quick` halves
/// them (except for the negative controls, whose box must stay fixed).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Level {
    Quick,
    Full,
}

impl Level {
    pub fn parse(s: &str) -> Result<Level> {
        match s.to_ascii_lowercase().as_str() {
            "quick" => Ok(Level::Quick),
            "full" => Ok(Level::Full),
            _ => Err(Error::UnknownKind(format!("verification level `{s}`"))),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Level::Quick => "quick",
            Level::Full => "full",
        }
    }

    fn pick<T>(&self, quick: T, full: T) -> T {
        match self {
            Level::Quick => quick,
            Level::Full => full,
        }
    }
}

/// Outcome of one criterion: a pass flag plus either a summary of what was
/// covered or the first counterexample found.
#[derive(Clone, Debug)]
pub struct CriterionReport {
    pub id: usize,
    pub name: &'static str,
    pub level: Level,
    pub passed: bool,
    pub detail: String,
}

type RunFn = fn(Level) -> core::result::Result<String, String>;

struct Entry {
    name: &'static str,
    run: RunFn,
}

const ENTRIES: [Entry; 10] = [
    Entry {
        name: "three-way character equality",
        run: c1_characters,
    },
    Entry {
        name: "eigenvalue identity residuals",
        run: c2_residuals,
    },
    Entry {
        name: "dimension generating functions",
        run: c3_dimensions,
    },
    Entry {
        name: "multiplicity generating functions",
        run: c4_multiplicities,
    },
    Entry {
        name: "kostant partition closed forms",
        run: c5_kostant,
    },
    Entry {
        name: "closed multiplicity formulas",
        run: c6_closed_mu,
    },
    Entry {
        name: "symmetric-family diagonal",
        run: c7_diagonal,
    },
    Entry {
        name: "restricted families for b3 and c3",
        run: c8_restricted,
    },
    Entry {
        name: "independent spot values",
        run: c9_spots,
    },
    Entry {
        name: "corruption negative controls",
        run: c10_negative_controls,
    },
];

/// Number of criteria in the suite.
pub const CRITERION_COUNT: usize = ENTRIES.len();

/// The name of criterion `id` (1-based).
pub fn criterion_name(id: usize) -> &'static str {
    assert!(
        (1..=CRITERION_COUNT).contains(&id),
        "criterion id out of range"
    );
    ENTRIES[id - 1].name
}

/// Runs criterion `id` (1-based) at the given level.
pub fn run_criterion(id: usize, level: Level) -> CriterionReport {
    assert!(
        (1..=CRITERION_COUNT).contains(&id),
        "criterion id out of range"
    );
    let entry = &ENTRIES[id - 1];
    let (passed, detail) = match (entry.run)(level) {
        Ok(detail) => (true, detail),
        Err(detail) => (false, detail),
    };
    CriterionReport {
        id,
        name: entry.name,
        level,
        passed,
        detail,
    }
}

/// Runs the whole suite in order.
pub fn run_all(level: Level) -> Vec<CriterionReport> {
    (1..=CRITERION_COUNT)
        .map(|id| run_criterion(id, level))
        .collect()
}

fn lib<T>(r: Result<T>) -> core::result::Result<T, String> {
    r.map_err(|e| format!("library error: {e}"))
}

fn ensure<F>(cond: bool, msg: F) -> core::result::Result<(), String>
where
    F: FnOnce() -> String,
{
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Dominant weights with label sum at most `bound`.
fn weights_with_sum_up_to(bound: i64) -> Vec<Weight> {
    let mut out = Vec::new();
    for m1 in 0..=bound {
        for m2 in 0..=bound - m1 {
            for m3 in 0..=bound - m1 - m2 {
                out.push([m1, m2, m3]);
            }
        }
    }
    out
}

/// Dominant weights inside the box `0..=cap` per label.
fn weights_in_box(cap: i64) -> Vec<Weight> {
    let mut out = Vec::new();
    for m1 in 0..=cap {
        for m2 in 0..=cap {
            for m3 in 0..=cap {
                out.push([m1, m2, m3]);
            }
        }
    }
    out
}

fn as_caps(m: Weight) -> [u32; 3] {
    [m[0] as u32, m[1] as u32, m[2] as u32]
}

fn c1_characters(level: Level) -> core::result::Result<String, String> {
    let bound = level.pick(3i64, 6);
    let cap = bound as u32;
    let sys = RootSystem::new(Algebra::A3);
    let series = lib(build_g().expand(&[cap, cap, cap]))?;
    let weights = weights_with_sum_up_to(bound);
    for &m in &weights {
        let solved = lib(solve_character(m))?;
        let from_series = series.coeff(&as_caps(m)).unwrap();
        ensure(&from_series == solved.body(), || {
            format!("generating function disagrees with the eigenvalue solver at m={m:?}")
        })?;
        let weyl = lib(sys.weyl_character(m))?;
        ensure(char_to_x(&solved) == weyl, || {
            format!("eigenvalue solver disagrees with the character formula at m={m:?}")
        })?;
    }
    Ok(format!(
        "{} highest weights with label sum <= {bound}: all three routes agree",
        weights.len()
    ))
}

fn c2_residuals(level: Level) -> core::result::Result<String, String> {
    let caps_full: [u32; 3] = level.pick([2, 2, 2], [4, 4, 4]);
    let caps_real: [u32; 2] = level.pick([3, 3], [6, 6]);
    let residual = lib(verify_pde(&build_g(), &delta_t(), &caps_full))?;
    if let Some((e, p)) = residual.iter().next() {
        return Err(format!(
            "full-family residual is nonzero at t-exponent {e:?}: {p}"
        ));
    }
    let residual_real = lib(verify_pde(&build_g_real(), &delta_t_real(), &caps_real))?;
    if let Some((e, p)) = residual_real.iter().next() {
        return Err(format!(
            "symmetric-family residual is nonzero at t-exponent {e:?}: {p}"
        ));
    }
    Ok(format!(
        "residuals vanish identically to caps {caps_full:?} and {caps_real:?}"
    ))
}

fn real_dimension(m1: i64, m2: i64) -> BigInt {
    let (m1, m2) = (i128::from(m1), i128::from(m2));
    let product =
        (m1 + 1) * (m1 + 1) * (m2 + 1) * (m1 + m2 + 2) * (m1 + m2 + 2) * (2 * m1 + m2 + 3);
    assert!(product % 12 == 0, "dimension formula must divide by 12");
    BigInt::from(product / 12)
}

fn c3_dimensions(level: Level) -> core::result::Result<String, String> {
    let bound = level.pick(5i64, 10);
    let real_bound = level.pick(4i64, 8);
    let sys = RootSystem::new(Algebra::A3);
    let cap = bound as u32;
    let series = lib(build_e().expand(&[cap, cap, cap]))?;
    let weights = weights_with_sum_up_to(bound);
    for &m in &weights {
        let got = series.coeff(&as_caps(m)).unwrap().constant_term();
        let want = lib(sys.weyl_dim(m))?;
        ensure(got == want.clone().into(), || {
            format!("dimension function disagrees with the dimension formula at m={m:?}")
        })?;
    }
    let real_cap = real_bound as u32;
    let series_real = lib(build_e_real().expand(&[real_cap, real_cap]))?;
    let mut real_count = 0usize;
    for m1 in 0..=real_bound {
        for m2 in 0..=real_bound - m1 {
            let got = series_real
                .coeff(&[m1 as u32, m2 as u32])
                .unwrap()
                .constant_term();
            ensure(got == real_dimension(m1, m2).into(), || {
                format!("symmetric dimension function disagrees at (m1,m2)=({m1},{m2})")
            })?;
            real_count += 1;
        }
    }
    Ok(format!(
        "{} full and {real_count} symmetric dimensions match their closed formulas",
        weights.len()
    ))
}

fn c4_multiplicities(level: Level) -> core::result::Result<String, String> {
    let cap = level.pick(3i64, 6);
    let caps = [cap as u32; 3];
    let sys = RootSystem::new(Algebra::A3);
    let tables: Vec<(Weight, BTreeMap<Weight, u64>)> = {
        let mut out = Vec::new();
        for n in TABULATED_TARGETS {
            out.push((n, lib(expand_a(&lib(build_a(n))?, &caps))?));
        }
        out
    };
    let weights = weights_in_box(cap);
    for &m in &weights {
        let diagram = lib(crate::calogero::weight_multiplicities(m))?;
        for (n, table) in &tables {
            let from_table = table.get(&m).copied().unwrap_or(0);
            let from_diagram = diagram.get(n).copied().unwrap_or(0);
            ensure(from_table == from_diagram, || {
                format!(
                    "multiplicity function {from_table} vs weight diagram {from_diagram} at m={m:?}, n={n:?}"
                )
            })?;
            let from_sum = lib(kostant_multiplicity(&sys, m, *n))?;
            ensure(BigInt::from(from_table) == from_sum, || {
                format!(
                    "multiplicity function {from_table} vs partition sum {from_sum} at m={m:?}, n={n:?}"
                )
            })?;
        }
    }
    Ok(format!(
        "{} weights x {} targets: tables, diagrams, and sums agree",
        weights.len(),
        tables.len()
    ))
}

fn c5_kostant(level: Level) -> core::result::Result<String, String> {
    let cap = level.pick(7i64, 15);
    let series = lib(kostant_z_series(&[cap as u32; 3]))?;
    let mut count = 0usize;
    for k1 in 0..=cap {
        for k2 in 0..=cap {
            for k3 in 0..=cap {
                let closed = kostant_z([k1, k2, k3]);
                ensure(closed == kostant_z([k3, k2, k1]), || {
                    format!("partition count not symmetric at k={:?}", (k1, k2, k3))
                })?;
                let from_series = series
                    .coeff(&[k1 as u32, k2 as u32, k3 as u32])
                    .unwrap()
                    .constant_term();
                ensure(from_series == closed.clone().into(), || {
                    format!(
                        "partition closed form {closed} vs series {from_series} at k={:?}",
                        (k1, k2, k3)
                    )
                })?;
                count += 1;
            }
        }
    }
    Ok(format!(
        "{count} lattice points: closed forms match the series"
    ))
}

fn c6_closed_mu(level: Level) -> core::result::Result<String, String> {
    let cap = level.pick(4i64, 8);
    let sys = RootSystem::new(Algebra::A3);
    let targets = [[0i64, 0, 0], [0, 1, 0], [1, 0, 1], [0, 2, 0]];
    let weights = weights_in_box(cap);
    for &m in &weights {
        for n in targets {
            let closed = lib(closed_mu(m, n))?;
            let sum = lib(kostant_multiplicity(&sys, m, n))?;
            ensure(closed == sum, || {
                format!("closed formula {closed} vs partition sum {sum} at m={m:?}, n={n:?}")
            })?;
        }
    }
    Ok(format!(
        "{} weights x 4 self-dual targets: closed formulas match the sums",
        weights.len()
    ))
}

fn c7_diagonal(level: Level) -> core::result::Result<String, String> {
    let bound = level.pick(2u32, 5);
    let g = lib(build_g().expand(&[bound, bound, bound]))?;
    let g_real = lib(build_g_real().expand(&[bound, bound]))?;
    let mut count = 0usize;
    for a in 0..=bound {
        for b in 0..=bound - a {
            let diagonal = g.coeff(&[a, b, a]).unwrap();
            let real = g_real.coeff(&[a, b]).unwrap();
            ensure(diagonal == real, || {
                format!("symmetric family disagrees with the diagonal slice at (t1,t2)=({a},{b})")
            })?;
            count += 1;
        }
    }
    Ok(format!(
        "{count} symmetric coefficients equal their diagonal slices"
    ))
}

fn c8_restricted(level: Level) -> core::result::Result<String, String> {
    let single = level.pick(3u32, 6);
    let mixed_bound = level.pick(2u32, 4);
    let z = z_vars();
    let x = x_vars();
    let mut count = 0usize;
    for algebra in [Algebra::B3, Algebra::C3] {
        let sys = RootSystem::new(algebra);
        let f1 = lib(sys.weyl_character([1, 0, 0]))?;
        let f2 = lib(sys.weyl_character([0, 1, 0]))?;
        let f3 = lib(sys.weyl_character([0, 0, 1]))?;
        let bind = [("z1", &f1), ("z2", &f2), ("z3", &f3)];
        let to_x = |p: &LaurentPoly| -> core::result::Result<LaurentPoly, String> {
            lib(lib(p.restrict_to(&z))?.subst(&x, &bind))
        };

        let first = lib(lib(build_restricted(algebra, RestrictedKind::First))?.expand(&[single]))?;
        let third = lib(lib(build_restricted(algebra, RestrictedKind::Third))?.expand(&[single]))?;
        for m in 0..=single {
            let want_first = lib(sys.weyl_character([m as i64, 0, 0]))?;
            ensure(to_x(&first.coeff(&[m]).unwrap())? == want_first, || {
                format!("{} first family disagrees at m={m}", algebra.name())
            })?;
            let want_third = lib(sys.weyl_character([0, 0, m as i64]))?;
            ensure(to_x(&third.coeff(&[m]).unwrap())? == want_third, || {
                format!("{} third family disagrees at m={m}", algebra.name())
            })?;
            count += 2;
        }

        let mixed = lib(lib(build_restricted(algebra, RestrictedKind::Mixed))?
            .expand(&[mixed_bound, mixed_bound]))?;
        for m1 in 0..=mixed_bound {
            for m3 in 0..=mixed_bound - m1 {
                let want = lib(sys.weyl_character([m1 as i64, 0, m3 as i64]))?;
                ensure(to_x(&mixed.coeff(&[m1, m3]).unwrap())? == want, || {
                    format!(
                        "{} mixed family disagrees at (m1,m3)=({m1},{m3})",
                        algebra.name()
                    )
                })?;
                count += 1;
            }
        }
    }
    Ok(format!(
        "{count} restricted characters match the reflection-group formula"
    ))
}

fn c9_spots(_level: Level) -> core::result::Result<String, String> {
    let sys = RootSystem::new(Algebra::A3);
    let z = z_vars();

    let dims = lib(build_e().expand(&[1, 0, 1]))?;
    for (m, want) in [([1i64, 0, 0], 4i64), ([1, 0, 1], 15)] {
        ensure(lib(sys.weyl_dim(m))? == BigInt::from(want), || {
            format!("dimension formula at {m:?} differs from {want}")
        })?;
        ensure(
            dims.coeff(&as_caps(m)).unwrap().constant_term() == coef_int(want),
            || format!("dimension function at {m:?} differs from {want}"),
        )?;
    }

    ensure(
        lib(closed_mu([1, 0, 1], [0, 0, 0]))? == BigInt::from(3),
        || String::from("closed formula: zero-weight multiplicity of the adjoint differs from 3"),
    )?;
    let zero_table = lib(expand_a(&lib(build_a([0, 0, 0]))?, &[1, 0, 1]))?;
    ensure(zero_table.get(&[1, 0, 1]).copied() == Some(3), || {
        String::from(
            "multiplicity function: zero-weight multiplicity of the adjoint differs from 3",
        )
    })?;
    ensure(
        lib(kostant_multiplicity(&sys, [1, 0, 1], [0, 0, 0]))? == BigInt::from(3),
        || String::from("partition sum: zero-weight multiplicity of the adjoint differs from 3"),
    )?;

    let want_char = lib(parse_poly(&z, "z1^2 - z2"))?;
    ensure(
        lib(solve_character([2, 0, 0]))?.body() == &want_char,
        || String::from("solver character at (2,0,0) differs from z1^2 - z2"),
    )?;
    let g = lib(build_g().expand(&[2, 0, 0]))?;
    ensure(g.coeff(&[2, 0, 0]).unwrap() == want_char, || {
        String::from("generating function character at (2,0,0) differs from z1^2 - z2")
    })?;

    ensure(lib(eigenvalue([1, 0, 0]))? == coef_ratio(15, 2), || {
        String::from("eigenvalue form at (1,0,0) differs from 15/2")
    })?;
    let z1 = lib(parse_poly(&z, "z1"))?;
    ensure(
        lib(apply_delta_z(&z1))? == z1.scale(&coef_ratio(15, 2)),
        || String::from("operator action on z1 differs from (15/2) z1"),
    )?;

    ensure(kostant_z([1, 1, 1]) == BigInt::from(4), || {
        String::from("partition closed form at (1,1,1) differs from 4")
    })?;
    let zs = lib(kostant_z_series(&[1, 1, 1]))?;
    ensure(
        zs.coeff(&[1, 1, 1]).unwrap().constant_term() == coef_int(4),
        || String::from("partition series at (1,1,1) differs from 4"),
    )?;

    Ok(String::from(
        "six spot values, each confirmed by two independent routes",
    ))
}

fn c10_negative_controls(_level: Level) -> core::result::Result<String, String> {
    // The box must contain every numerator term regardless of level.
    let caps: [u32; 3] = [2, 4, 2];
    let g = build_g();
    let op = delta_t();

    // Reference characters over the box, from the independent solver route.
    let mut reference: BTreeMap<[u32; 3], LaurentPoly> = BTreeMap::new();
    for e1 in 0..=caps[0] {
        for e2 in 0..=caps[1] {
            for e3 in 0..=caps[2] {
                let body = lib(solve_character([e1 as i64, e2 as i64, e3 as i64]))?.into_body();
                reference.insert([e1, e2, e3], body);
            }
        }
    }

    let flips: Vec<(Vec<i32>, crate::poly::Coef)> = g
        .num()
        .terms()
        .map(|(e, c)| (e.clone(), c.clone()))
        .collect();
    for (expo, coeff) in &flips {
        let delta = LaurentPoly::monomial(g.vars(), expo, coeff * coef_int(2));
        let corrupted = lib(g.with_numerator(lib(g.num().checked_sub(&delta))?))?;

        let residual = lib(verify_pde(&corrupted, &op, &caps))?;
        ensure(!residual.is_zero(), || {
            format!("sign flip at numerator exponent {expo:?} left the residual zero")
        })?;

        let series = lib(corrupted.expand(&caps))?;
        let mut diverged = false;
        'search: for (e, want) in &reference {
            if &series.coeff(e).unwrap() != want {
                diverged = true;
                break 'search;
            }
        }
        ensure(diverged, || {
            format!("sign flip at numerator exponent {expo:?} left every character intact")
        })?;
    }
    Ok(format!(
        "{} single-sign corruptions, each flagged by both the expansion and the residual",
        flips.len()
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_suite_passes() {
        for report in run_all(Level::Quick) {
            assert!(
                report.passed,
                "criterion {} ({}) failed: {}",
                report.id, report.name, report.detail
            );
        }
    }

    #[test]
    fn names_and_count_are_stable() {
        assert_eq!(CRITERION_COUNT, 10);
        assert_eq!(criterion_name(1), "three-way character equality");
        assert_eq!(criterion_name(10), "corruption negative controls");
        assert_eq!(Level::parse("QUICK").unwrap(), Level::Quick);
        assert!(Level::parse("medium").is_err());
    }
}
