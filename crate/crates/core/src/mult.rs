//! Weight multiplicities: tabulated generating functions and closed
//! formulas.
//!
//! For a fixed target weight `n = n1*w1 + n2*w2 + n3*w3` with
//! `n1+n2+n3 <= 2`, the multiplicity of `n` in the representation of
//! highest weight `m` has a rational generating function
//! `A_n(t) = N_n(t) / D0(t)` over the common denominator
//! `D0 = (1-t1^4)(1-t3^4)(1-t1 t3)^2 (1-t1^2 t2)(1-t2 t3^2)(1-t2^2)^2`.
//!
//! The ten numerators trace back to a triple contour integral: `A_n` is the
//! constant term of the character generating function in `x`-variables
//! against `x^-n`, taken over the unit torus.  Evaluated by residues, the
//! `x2` integral picks up poles at `x2 = t1, t1*x3, t3*x1, t2*x1*x3`; the
//! `x1` integral at `x1 = t3, t1^2*x3, t2*x3, t2^2/x3`; and the final `x3`
//! integral at `x3 = t1, t2*t3, t3^3, t2^(3/2), t2^(-3/2)`, plus one extra
//! pole at the origin for the target `(2,0,0)`.  That residue calculation
//! is deliberately *not* re-run here.  The numerators are treated as
//! tabulated inputs, and their correctness is established by exact
//! coefficient agreement with two independent routes — weight diagrams of
//! solved characters, and the Kostant sum — which checks strictly more than
//! repeating the residue algebra would.
//!
//! For the four self-dual targets `(0,0,0)`, `(0,1,0)`, `(1,0,1)`,
//! `(0,2,0)` there are also closed piecewise-polynomial formulas
//! ([`closed_mu`]): after normalizing to `m1 <= m3`, the multiplicity is
//! nonzero only when an integer `p` solves the target's congruence on
//! `m3 - m1`, and is then a short polynomial in `m` with Kronecker-delta
//! corrections, split on the sign of `p`.

use alloc::collections::BTreeMap;

use num_bigint::BigInt;

use crate::error::Error;
use crate::golden;
use crate::kostant::kostant_multiplicity;
use crate::poly::{expect_u64, Coef, LaurentPoly};
use crate::ratfn::RationalFn;
use crate::roots::{Algebra, RootSystem, Weight};
use crate::series::TruncatedSeries;
use crate::text::parse_poly;
use crate::vars::t_vars;
use crate::Result;

/// The ten target weights with tabulated generating functions.
pub const TABULATED_TARGETS: [Weight; 10] = [
    [0, 0, 0],
    [1, 0, 0],
    [0, 1, 0],
    [0, 0, 1],
    [2, 0, 0],
    [1, 1, 0],
    [1, 0, 1],
    [0, 1, 1],
    [0, 2, 0],
    [0, 0, 2],
];

/// Label bound keeping all closed-formula intermediates inside `i128`.
const ARG_LIMIT: i64 = 1 << 30;

/// A multiplicity generating function: the coefficient of `t^m` counts the
/// occurrences of the fixed target weight in the representation of highest
/// weight `m`.
#[derive(Clone, Debug, PartialEq)]
pub struct MultGenFun {
    target: Weight,
    num: LaurentPoly,
    den: LaurentPoly,
}

impl MultGenFun {
    pub fn target(&self) -> Weight {
        self.target
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }
}

/// Builds the generating function for the target weight `n`
/// (`n1+n2+n3 <= 2`).  Seven numerators are stored directly; the other
/// three are the `t1 <-> t3` images of their reversed targets.
pub fn build_a(n: Weight) -> Result<MultGenFun> {
    if n.iter().any(|&c| c < 0) || n.iter().sum::<i64>() > 2 {
        return Err(Error::UnsupportedWeight(n));
    }
    let t = t_vars();
    let den = parse_poly(&t, golden::MULT_DEN).expect("tabulated denominator must parse");
    for (key, text) in golden::MULT_NUMS {
        if *key == n {
            let num = parse_poly(&t, text).expect("tabulated numerator must parse");
            return Ok(MultGenFun {
                target: n,
                num,
                den,
            });
        }
    }
    let reversed = [n[2], n[1], n[0]];
    for (key, text) in golden::MULT_NUMS {
        if *key == reversed {
            let num = parse_poly(&t, text)
                .expect("tabulated numerator must parse")
                .swap_vars("t1", "t3")
                .expect("counting variables exist");
            return Ok(MultGenFun {
                target: n,
                num,
                den,
            });
        }
    }
    unreachable!("every target with label sum <= 2 is tabulated directly or by reflection")
}

/// Expands a multiplicity function over the box `0..=caps` and returns the
/// nonzero coefficients keyed by highest weight; absent keys are zero.
/// Every coefficient must be a non-negative integer — anything else means a
/// corrupted table and is reported as an error rather than repaired.
pub fn expand_a(a: &MultGenFun, caps: &[u32; 3]) -> Result<BTreeMap<Weight, u64>> {
    let f = RationalFn::new(a.num.clone(), a.den.clone())?;
    let s = TruncatedSeries::expand(&f, &["t1", "t2", "t3"], caps)?;
    let mut out = BTreeMap::new();
    for (e, p) in s.iter() {
        let value = expect_u64(&p.constant_term())?;
        out.insert([i64::from(e[0]), i64::from(e[1]), i64::from(e[2])], value);
    }
    Ok(out)
}

fn twice_a(m1: i128, m2: i128) -> i128 {
    (m1 + 1) * (m2 + 1) * (m1 + m2 + 2)
}

fn b_form(m1: i128, m2: i128, m3: i128) -> i128 {
    4 * ((m2 + 1) * (m3 + 1) - 1) - (m1 - m3) * (m1 - m3)
}

fn delta(a: i128, b: i128) -> i128 {
    i128::from(a == b)
}

/// The two helper values entering the closed formulas:
/// `a = (m1+1)(m2+1)(m1+m2+2)/2` (always an integer, returned as a
/// rational to keep the printed shape) and
/// `b = 4[(m2+1)(m3+1) - 1] - (m1-m3)^2`.
pub fn helpers_ab(m: Weight) -> (Coef, i64) {
    assert!(
        m.iter().all(|c| c.abs() <= ARG_LIMIT),
        "weight labels exceed the supported range"
    );
    let a = Coef::new(
        BigInt::from(twice_a(i128::from(m[0]), i128::from(m[1]))),
        BigInt::from(2),
    );
    let b = b_form(i128::from(m[0]), i128::from(m[1]), i128::from(m[2]));
    (a, i64::try_from(b).expect("helper fits the return type"))
}

/// The closed-form multiplicity of one of the four self-dual target
/// weights in the representation of dominant highest weight `m`.
///
/// Exploits the `m1 <-> m3` symmetry to assume `m1 <= m3`, derives `p` from
/// the target's congruence (no integer solution means the target is not a
/// weight of the representation at all), evaluates the matching branch,
/// and checks the stated divisibilities exactly.
pub fn closed_mu(m: Weight, n: Weight) -> Result<BigInt> {
    RootSystem::expect_dominant(m)?;
    assert!(
        m.iter().all(|&c| c <= ARG_LIMIT),
        "weight labels exceed the supported range"
    );
    let congruence_shift: i64 = match n {
        [0, 0, 0] | [1, 0, 1] => 0,
        [0, 1, 0] => 2,
        [0, 2, 0] => 4,
        _ => return Err(Error::UnsupportedWeight(n)),
    };
    let [m1, m2, m3] = if m[0] <= m[2] { m } else { [m[2], m[1], m[0]] };
    let q = m3 - m1 - 2 * m2 + congruence_shift;
    if q.rem_euclid(4) != 0 {
        return Ok(BigInt::from(0));
    }
    let p = i128::from(q / 4);
    let (m1, m2, m3) = (i128::from(m1), i128::from(m2), i128::from(m3));

    let mu = if p >= 0 {
        let twice = twice_a(m1, m2)
            + match n {
                [0, 0, 0] => 0,
                [0, 1, 0] => -4 * (m1 + 1) * delta(p, 0),
                [1, 0, 1] => -2 * (m1 + 1) * delta(p, 0),
                _ => {
                    -4 * (m1 + 1) * (delta(p, 1) + 3 * delta(p, 0))
                        + 2 * (delta(p, 1) * delta(m2, 0) + delta(p, 0) * delta(m2, 2))
                }
            };
        assert!(
            twice.rem_euclid(2) == 0,
            "closed multiplicity formula produced a half-integer at {m:?}/{n:?}"
        );
        twice / 2
    } else {
        let b = b_form(m1, m2, m3);
        let eight = match n {
            [0, 0, 0] => (m1 + 1) * (b + 8),
            [0, 1, 0] => (m1 + 1) * (b + 4),
            [1, 0, 1] => (m1 + 1) * b,
            _ => (m1 + 1) * (b - 8) + 8 * delta(m1, m3),
        };
        assert!(
            eight.rem_euclid(8) == 0,
            "closed multiplicity formula not divisible by 8 at {m:?}/{n:?}"
        );
        eight / 8
    };
    assert!(mu >= 0, "negative multiplicity at {m:?}/{n:?}");
    Ok(BigInt::from(mu))
}

/// The multiplicity of an arbitrary weight `n` in the representation of
/// dominant highest weight `m`: the closed formula when `n` is one of its
/// four targets, the Kostant sum otherwise.
pub fn multiplicity(m: Weight, n: Weight) -> Result<BigInt> {
    match n {
        [0, 0, 0] | [0, 1, 0] | [1, 0, 1] | [0, 2, 0] => closed_mu(m, n),
        _ => kostant_multiplicity(&RootSystem::new(Algebra::A3), m, n),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calogero::weight_multiplicities;
    use crate::poly::coef_int;

    fn mu_u64(m: Weight, n: Weight) -> u64 {
        u64::try_from(closed_mu(m, n).unwrap()).unwrap()
    }

    #[test]
    fn helper_spot_values() {
        assert_eq!(helpers_ab([0, 0, 0]).0, coef_int(1));
        assert_eq!(helpers_ab([1, 0, 1]).0, coef_int(3));
        assert_eq!(helpers_ab([2, 2, 2]).1, 32);
    }

    #[test]
    fn closed_formula_spot_values() {
        assert_eq!(mu_u64([1, 0, 1], [0, 0, 0]), 3);
        assert_eq!(mu_u64([2, 1, 2], [0, 0, 0]), 0);
        assert_eq!(mu_u64([2, 2, 2], [0, 0, 0]), 15);
        assert_eq!(mu_u64([0, 2, 0], [0, 2, 0]), 1);
        assert_eq!(mu_u64([0, 1, 0], [0, 1, 0]), 1);
        assert_eq!(mu_u64([1, 0, 1], [1, 0, 1]), 1);
        assert!(matches!(
            closed_mu([1, 0, 1], [1, 0, 0]),
            Err(Error::UnsupportedWeight(_))
        ));
        assert!(matches!(
            closed_mu([-1, 0, 0], [0, 0, 0]),
            Err(Error::NonDominantWeight(_))
        ));
    }

    #[test]
    fn closed_formulas_match_the_kostant_sum() {
        let sys = RootSystem::new(Algebra::A3);
        for m1 in 0..=5i64 {
            for m2 in 0..=5 {
                for m3 in 0..=5 {
                    let m = [m1, m2, m3];
                    for n in [[0i64, 0, 0], [0, 1, 0], [1, 0, 1], [0, 2, 0]] {
                        assert_eq!(
                            closed_mu(m, n).unwrap(),
                            kostant_multiplicity(&sys, m, n).unwrap(),
                            "at {m:?}/{n:?}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn zero_weight_occurs_exactly_on_the_root_lattice() {
        for m1 in 0..=6i64 {
            for m2 in 0..=6 {
                for m3 in 0..=6 {
                    let positive = closed_mu([m1, m2, m3], [0, 0, 0]).unwrap() > BigInt::from(0);
                    let on_lattice = (m1 + 2 * m2 + 3 * m3) % 4 == 0;
                    assert_eq!(positive, on_lattice, "at {:?}", (m1, m2, m3));
                }
            }
        }
    }

    #[test]
    fn unsupported_targets_are_rejected_by_the_table() {
        for n in [[1i64, 1, 1], [3, 0, 0], [0, 0, 3], [-1, 0, 0], [2, 1, 0]] {
            assert!(
                matches!(build_a(n), Err(Error::UnsupportedWeight(_))),
                "{n:?}"
            );
        }
        for n in TABULATED_TARGETS {
            build_a(n).unwrap();
        }
    }

    #[test]
    fn tabulated_expansion_spot_values() {
        let zero = expand_a(&build_a([0, 0, 0]).unwrap(), &[2, 2, 2]).unwrap();
        assert_eq!(zero.get(&[0, 0, 0]).copied(), Some(1));
        assert_eq!(zero.get(&[1, 0, 1]).copied(), Some(3));
        assert_eq!(
            zero.get(&[1, 0, 0]).copied(),
            None,
            "not a weight of the quartet"
        );
        let middle = expand_a(&build_a([0, 1, 0]).unwrap(), &[2, 2, 2]).unwrap();
        assert_eq!(middle.get(&[0, 1, 0]).copied(), Some(1));
    }

    #[test]
    fn reflected_targets_count_reflected_weights() {
        let caps = [3u32, 2, 3];
        for n in TABULATED_TARGETS {
            let table = expand_a(&build_a(n).unwrap(), &caps).unwrap();
            let mirrored = expand_a(&build_a([n[2], n[1], n[0]]).unwrap(), &caps).unwrap();
            for (m, value) in &table {
                let rev = [m[2], m[1], m[0]];
                assert_eq!(
                    mirrored.get(&rev).copied().unwrap_or(0),
                    *value,
                    "{n:?} at {m:?}"
                );
            }
            assert_eq!(table.len(), mirrored.len(), "{n:?}");
        }
    }

    #[test]
    fn all_three_routes_agree_on_a_small_box() {
        let caps = [3u32, 3, 3];
        let sys = RootSystem::new(Algebra::A3);
        let tables: alloc::vec::Vec<(Weight, BTreeMap<Weight, u64>)> = TABULATED_TARGETS
            .iter()
            .map(|&n| (n, expand_a(&build_a(n).unwrap(), &caps).unwrap()))
            .collect();
        for m1 in 0..=3i64 {
            for m2 in 0..=3 {
                for m3 in 0..=3 {
                    let m = [m1, m2, m3];
                    let diagram = weight_multiplicities(m).unwrap();
                    for (n, table) in &tables {
                        let from_table = table.get(&m).copied().unwrap_or(0);
                        let from_diagram = diagram.get(n).copied().unwrap_or(0);
                        let from_kostant =
                            u64::try_from(kostant_multiplicity(&sys, m, *n).unwrap()).unwrap();
                        assert_eq!(from_table, from_diagram, "table vs diagram at {m:?}/{n:?}");
                        assert_eq!(from_table, from_kostant, "table vs sum at {m:?}/{n:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn general_multiplicity_routes_by_target() {
        assert_eq!(multiplicity([1, 0, 1], [0, 0, 0]).unwrap(), BigInt::from(3));
        assert_eq!(multiplicity([2, 0, 2], [1, 0, 1]).unwrap(), BigInt::from(3));
        assert_eq!(multiplicity([1, 0, 0], [1, 0, 0]).unwrap(), BigInt::from(1));
        // A non-dominant target is fine for the general route.
        assert_eq!(
            multiplicity([1, 0, 0], [-1, 1, 0]).unwrap(),
            BigInt::from(1)
        );
        assert_eq!(multiplicity([1, 0, 0], [5, 5, 5]).unwrap(), BigInt::from(0));
    }
}
