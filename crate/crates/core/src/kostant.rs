//! The Kostant partition function of A3 — piecewise closed form and
//! generating function — and Kostant's weight-multiplicity formula.
//!
//! `Z[k1,k2,k3]` counts the ways to write `k1*a1 + k2*a2 + k3*a3` (the `a_i`
//! being the simple roots) as a sum of positive roots of A3 with non-negative
//! integer coefficients.  The closed form is a four-case piecewise cubic in
//! the `k_i`, stated for `k1 <= k3` and extended by the `k1 <-> k3`
//! symmetry; each case yields `6*Z`, and divisibility by 6 is asserted on
//! every evaluation since a failure could only come from a transcription
//! error in the case polynomials.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::poly::Coef;
use crate::ratfn::RationalFn;
use crate::roots::{Algebra, RootSystem, Weight};
use crate::series::TruncatedSeries;
use crate::vars::t_vars;
use crate::Result;

/// Largest argument magnitude accepted by [`kostant_z`]; keeps the internal
/// 128-bit arithmetic provably overflow-free.
const KOSTANT_ARG_LIMIT: i64 = 1 << 31;

/// The Kostant partition function of A3.  Total on all integer vectors:
/// arguments outside the positive octant give 0.
pub fn kostant_z(k: [i64; 3]) -> BigInt {
    if k.iter().any(|&ki| ki < 0) {
        return BigInt::zero();
    }
    assert!(
        k.iter().all(|&ki| ki <= KOSTANT_ARG_LIMIT),
        "partition-function argument {k:?} out of supported range"
    );
    let (k1, k2, k3) = (
        i128::from(k[0].min(k[2])),
        i128::from(k[1]),
        i128::from(k[0].max(k[2])),
    );
    let six_z = if k1 >= k2 {
        // case i)
        (k2 + 1) * (k2 + 2) * (k2 + 3)
    } else if k3 >= k2 {
        // case ii): k1 < k2, k3 >= k2
        (k1 + 1) * (k1 + 2) * (3 * k2 - 2 * k1 + 3)
    } else if k1 <= k2 - k3 {
        // case iii): k3 < k2, k1 <= k2 - k3
        (k1 + 1) * (k1 + 2) * (3 * k3 - k1 + 3)
    } else {
        // case iv): k3 < k2, k1 > k2 - k3
        (k2 - k3 + 1) * (k2 - k3 + 2) * (2 * k2 - 3 * k1 + k3 + 3)
            - (k1 - k2 + k3)
                * (3 * k1 + 3 * k3 - 12 * k2 + 2 * k1 * k1 + 2 * k3 * k3
                    - k2 * k2
                    - k1 * k2
                    - 2 * k1 * k3
                    - k2 * k3
                    - 11)
    };
    assert!(
        six_z % 6 == 0 && six_z >= 0,
        "piecewise partition function gave 6*Z = {six_z} at {k:?}; \
         the case polynomials must be mistranscribed"
    );
    BigInt::from(six_z / 6)
}

/// Value of the partition function at rational root coordinates: zero unless
/// all three are non-negative integers.
pub fn kostant_z_rat(k: &[Coef; 3]) -> BigInt {
    let mut ints = [0i64; 3];
    for (slot, c) in ints.iter_mut().zip(k.iter()) {
        if !c.is_integer() {
            return BigInt::zero();
        }
        match i64::try_from(c.to_integer()) {
            Ok(v) => *slot = v,
            Err(_) => panic!("partition-function argument {c} out of supported range"),
        }
    }
    kostant_z(ints)
}

/// Expansion of the partition-function generating function
/// `1/[(1-t1)(1-t2)(1-t3)(1-t1*t2*t3)(1-t1*t2)(1-t2*t3)]`
/// up to the given caps; the coefficient of `t^k` is `Z[k]`.
pub fn kostant_z_series(caps: &[u32; 3]) -> Result<TruncatedSeries> {
    let f = RationalFn::from_texts(
        &t_vars(),
        "1",
        "(1 - t1) * (1 - t2) * (1 - t3) * (1 - t1*t2*t3) * (1 - t1*t2) * (1 - t2*t3)",
    )?;
    TruncatedSeries::expand(&f, &["t1", "t2", "t3"], caps)
}

/// Kostant's multiplicity formula for A3: the multiplicity of the weight
/// `n1*w1 + n2*w2 + n3*w3` in the irreducible representation of highest
/// weight `m`, computed as
/// `sum_w sign(w) * Z[root coords of w(m + rho) - (n + rho)]`.
pub fn kostant_multiplicity(sys: &RootSystem, m: Weight, n: Weight) -> Result<BigInt> {
    assert_eq!(
        sys.algebra(),
        Algebra::A3,
        "the closed partition function is specific to A3"
    );
    RootSystem::expect_dominant(m)?;
    let rho = RootSystem::rho();
    let shifted = [m[0] + rho[0], m[1] + rho[1], m[2] + rho[2]];
    let target = [n[0] + rho[0], n[1] + rho[1], n[2] + rho[2]];
    let mut acc = BigInt::zero();
    for w in sys.weyl() {
        let image = w.apply(shifted);
        let diff = [
            image[0] - target[0],
            image[1] - target[1],
            image[2] - target[2],
        ];
        if let Some(k) = sys.root_coords_if_grid(diff) {
            let z = kostant_z(k);
            if w.sign() > 0 {
                acc += z;
            } else {
                acc -= z;
            }
        }
    }
    assert!(
        !acc.is_negative(),
        "Kostant sum for m={m:?}, n={n:?} came out negative: {acc}"
    );
    Ok(acc)
}
