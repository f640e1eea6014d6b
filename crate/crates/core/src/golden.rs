//! The tabulated closed-form polynomial data, stored as canonical text and
//! parsed on demand.
//!
//! Everything in this module is *input* data for the library — numerators
//! and denominators of the generating functions, the second-order operator
//! coefficients, the fundamental characters in `x`-variables.  None of it is
//! derived at runtime, which is exactly why it is all cross-checked by the
//! verification suite: every constant here is confirmed against at least one
//! independently computed quantity before it is trusted.
//!
//! The larger blocks live as text files next to the crate sources (under
//! `golden/`) and are compiled in with `include_str!`; short ones are inline
//! string constants.  All use the same expression grammar as
//! [`crate::text::parse_poly`].

/// Factor of the character-function denominator carrying `t1` (first Dynkin
/// label); coefficients are `z`-polynomials.
pub const A3_CHAR_DEN_1: &str = include_str!("../golden/a3_d1.txt");
/// Factor of the character-function denominator carrying `t2`.
pub const A3_CHAR_DEN_2: &str = include_str!("../golden/a3_d2.txt");
/// Factor of the character-function denominator carrying `t3`.
pub const A3_CHAR_DEN_3: &str = include_str!("../golden/a3_d3.txt");
/// Numerator of the A3 character generating function (20 terms).
pub const A3_CHAR_NUM: &str = include_str!("../golden/a3_n.txt");
/// Numerator of the A3 dimension generating function (20 terms).
pub const A3_DIM_NUM: &str = include_str!("../golden/a3_p.txt");
/// Denominator of the A3 dimension generating function.
pub const A3_DIM_DEN: &str = "(1 - t1)^4 * (1 - t2)^6 * (1 - t3)^4";

/// Denominator factor of the symmetric-weight character function built on
/// the orbit of the weight `w1+w3`; spans `t1^0 .. t1^12`.
pub const REAL_CHAR_DEN_13: &str = include_str!("../golden/real_d13.txt");
/// Numerator of the symmetric-weight character generating function.
pub const REAL_CHAR_NUM: &str = include_str!("../golden/real_nr.txt");
/// Polynomial part of the symmetric-weight dimension numerator (16 terms).
pub const REAL_DIM_NUM_POLY: &str = include_str!("../golden/real_pr.txt");
/// Prefactor multiplying [`REAL_DIM_NUM_POLY`] in the dimension numerator.
pub const REAL_DIM_NUM_PREFACTOR: &str = "(1 - t1)^6 * (1 - t2)";
/// Denominator of the symmetric-weight dimension generating function.
pub const REAL_DIM_DEN: &str = "(1 - t1)^12 * (1 - t2)^6";

/// B3: numerator and denominator of the generating function for the
/// characters of highest weights `m1*w1`.
pub const B3_FIRST_NUM: &str = include_str!("../golden/b3_first_num.txt");
pub const B3_FIRST_DEN: &str = include_str!("../golden/b3_first_den.txt");
/// B3: the same for highest weights `m3*w3`.
pub const B3_THIRD_NUM: &str = include_str!("../golden/b3_third_num.txt");
pub const B3_THIRD_DEN: &str = include_str!("../golden/b3_third_den.txt");
/// B3: numerator for highest weights `m1*w1 + m3*w3` (the denominator is
/// the product of the two single-index denominators).
pub const B3_MIXED_NUM: &str = include_str!("../golden/b3_mixed_num.txt");

/// C3 counterparts of the B3 constants above.
pub const C3_FIRST_NUM: &str = include_str!("../golden/c3_first_num.txt");
pub const C3_FIRST_DEN: &str = include_str!("../golden/c3_first_den.txt");
pub const C3_THIRD_NUM: &str = include_str!("../golden/c3_third_num.txt");
pub const C3_THIRD_DEN: &str = include_str!("../golden/c3_third_den.txt");
pub const C3_MIXED_NUM: &str = include_str!("../golden/c3_mixed_num.txt");

/// Common denominator of all tabulated weight-multiplicity generating
/// functions.
pub const MULT_DEN: &str = include_str!("../golden/mult_d0.txt");

/// Numerators of the multiplicity generating functions `A_n` for the seven
/// tabulated target weights `n`.  Three further weights — (0,0,1), (0,1,1),
/// (0,0,2) — follow from these by swapping `t1` and `t3`.
pub const MULT_NUMS: &[([i64; 3], &str)] = &[
    ([0, 0, 0], include_str!("../golden/mult_n_000.txt")),
    ([1, 0, 0], include_str!("../golden/mult_n_100.txt")),
    ([0, 1, 0], include_str!("../golden/mult_n_010.txt")),
    ([2, 0, 0], include_str!("../golden/mult_n_200.txt")),
    ([1, 1, 0], include_str!("../golden/mult_n_110.txt")),
    ([1, 0, 1], include_str!("../golden/mult_n_101.txt")),
    ([0, 2, 0], include_str!("../golden/mult_n_020.txt")),
];

/// The three fundamental characters of A3 in `x`-variables; exponents are
/// fundamental-weight labels.  These define the change of variables between
/// `z`- and `x`-polynomials.
pub const FUNDAMENTAL_X: [&str; 3] = [
    "x1 + x1^-1*x2 + x2^-1*x3 + x3^-1",
    "x2 + x1^-1*x3 + x1^-1*x2*x3^-1 + x1*x2^-1*x3 + x1*x3^-1 + x2^-1",
    "x3 + x2*x3^-1 + x1*x2^-1 + x1^-1",
];

/// The second-order operator on `z`-polynomials whose eigenfunctions are the
/// A3 characters: coefficient expression and derivative orders
/// `(d/dz1, d/dz2, d/dz3)` of each term.  The whole sum carries a further
/// global factor 1/2, applied by the builder in [`crate::calogero`].
pub const DELTA_Z_TERMS: &[(&str, [u32; 3])] = &[
    ("3*z1^2 - 8*z2", [2, 0, 0]),
    ("4*z2^2 - 8*z1*z3 - 16", [0, 2, 0]),
    ("3*z3^2 - 8*z2", [0, 0, 2]),
    ("4*z1*z2 - 24*z3", [1, 1, 0]),
    ("2*z1*z3 - 32", [1, 0, 1]),
    ("4*z2*z3 - 24*z1", [0, 1, 1]),
    ("15*z1", [1, 0, 0]),
    ("20*z2", [0, 1, 0]),
    ("15*z3", [0, 0, 1]),
];

/// The printed form of the counting-variable operator for the
/// symmetric-weight family, over `t1,t2`.  Used only as a cross-check
/// against the operator derived from the eigenvalue form.
pub const REAL_DELTA_T_TERMS: &[(&str, [u32; 2])] = &[
    ("4*t1^2", [2, 0]),
    ("2*t2^2", [0, 2]),
    ("4*t1*t2", [1, 1]),
    ("16*t1", [1, 0]),
    ("10*t2", [0, 1]),
];
