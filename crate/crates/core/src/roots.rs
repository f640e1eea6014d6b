//! Root systems, Weyl groups, and the Weyl character/dimension oracles for
//! the rank-3 simple Lie algebras A3, B3 and C3.
//!
//! Weights live in fundamental-weight coordinates (Dynkin labels) throughout.
//! A monomial `x1^a1*x2^a2*x3^a3` stands for the weight `a1*w1+a2*w2+a3*w3`
//! with `w_i` the fundamental weights, so characters are Laurent polynomials
//! over the `x`-variables.  Simple root `alpha_i` in weight coordinates is
//! row `i` of the Cartan matrix; positive roots are stored by their integer
//! coordinates in the simple-root basis.  For B3/C3 the third simple root is
//! the one of unequal length (short for B3, long for C3).

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::poly::{coef_int, coef_ratio, expect_integer, Coef, LaurentPoly};
use crate::vars::x_vars;
use crate::Result;

/// Weight in fundamental-weight coordinates (Dynkin labels).
pub type Weight = [i64; 3];

/// The three rank-3 algebras handled by this crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Algebra {
    A3,
    B3,
    C3,
}

impl Algebra {
    /// Parse a user-facing algebra name such as `a3` or `B3`.
    pub fn parse(s: &str) -> Result<Algebra> {
        match s.to_ascii_lowercase().as_str() {
            "a3" => Ok(Algebra::A3),
            "b3" => Ok(Algebra::B3),
            "c3" => Ok(Algebra::C3),
            _ => Err(Error::UnknownKind(format!("algebra `{s}`"))),
        }
    }

    /// Canonical lower-case name.
    pub fn name(self) -> &'static str {
        match self {
            Algebra::A3 => "a3",
            Algebra::B3 => "b3",
            Algebra::C3 => "c3",
        }
    }

    /// Cartan matrix `A[i][j] = <alpha_i, alpha_j^vee>`; row `i` is the
    /// simple root `alpha_i` written in fundamental-weight coordinates.
    pub const fn cartan(self) -> [[i64; 3]; 3] {
        match self {
            Algebra::A3 => [[2, -1, 0], [-1, 2, -1], [0, -1, 2]],
            Algebra::B3 => [[2, -1, 0], [-1, 2, -2], [0, -1, 2]],
            Algebra::C3 => [[2, -1, 0], [-1, 2, -1], [0, -2, 2]],
        }
    }

    /// Half squared lengths `(alpha_i, alpha_i)/2`, normalised so that the
    /// roots shared with A3 have half-norm 1.
    fn half_norms(self) -> [Coef; 3] {
        match self {
            Algebra::A3 => [coef_int(1), coef_int(1), coef_int(1)],
            Algebra::B3 => [coef_int(1), coef_int(1), coef_ratio(1, 2)],
            Algebra::C3 => [coef_int(1), coef_int(1), coef_int(2)],
        }
    }
}

/// One Weyl-group element: an integer matrix acting on fundamental-weight
/// coordinates, together with its determinant sign.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylElement {
    matrix: [[i64; 3]; 3],
    sign: i64,
}

impl WeylElement {
    fn identity() -> WeylElement {
        WeylElement {
            matrix: [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
            sign: 1,
        }
    }

    /// Reflection in the simple root `alpha_i`:
    /// `s_i(v) = v - v_i * alpha_i`, as a matrix on weight coordinates.
    fn simple_reflection(cartan: &[[i64; 3]; 3], i: usize) -> WeylElement {
        let mut m = [[0i64; 3]; 3];
        for (j, row) in m.iter_mut().enumerate() {
            row[j] = 1;
            row[i] -= cartan[i][j];
        }
        let sign = det3(&m);
        assert_eq!(sign, -1, "simple reflection must have determinant -1");
        WeylElement { matrix: m, sign }
    }

    fn compose(&self, rhs: &WeylElement) -> WeylElement {
        let mut m = [[0i64; 3]; 3];
        for (row, self_row) in m.iter_mut().zip(self.matrix.iter()) {
            for (k, entry) in row.iter_mut().enumerate() {
                for (l, rhs_row) in rhs.matrix.iter().enumerate() {
                    *entry += self_row[l] * rhs_row[k];
                }
            }
        }
        WeylElement {
            matrix: m,
            sign: self.sign * rhs.sign,
        }
    }

    /// Apply to a weight in fundamental-weight coordinates.
    pub fn apply(&self, v: Weight) -> Weight {
        let mut out = [0i64; 3];
        for (j, row) in self.matrix.iter().enumerate() {
            out[j] = row[0] * v[0] + row[1] * v[1] + row[2] * v[2];
        }
        out
    }

    /// Determinant of the matrix, `+1` or `-1`.
    pub fn sign(&self) -> i64 {
        self.sign
    }

    /// Matrix entries, row by row.
    pub fn matrix(&self) -> &[[i64; 3]; 3] {
        &self.matrix
    }
}

fn det3(m: &[[i64; 3]; 3]) -> i64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

/// Immutable root-system data: Cartan matrix, full Weyl group, positive
/// roots, and the exact change of basis between weight and root coordinates.
#[derive(Debug, Clone)]
pub struct RootSystem {
    algebra: Algebra,
    cartan: [[i64; 3]; 3],
    weyl: Vec<WeylElement>,
    positive_roots: Vec<[i64; 3]>,
    half_norms: [Coef; 3],
    // Adjugate and determinant of the transpose of the Cartan matrix, so
    // that root coordinates of `v` are `adj * v / det` exactly.
    basis_adj: [[i64; 3]; 3],
    basis_det: i64,
}

impl RootSystem {
    pub fn new(algebra: Algebra) -> RootSystem {
        let cartan = algebra.cartan();
        let weyl = enumerate_weyl(&cartan);
        let expected = match algebra {
            Algebra::A3 => 24,
            Algebra::B3 | Algebra::C3 => 48,
        };
        assert_eq!(
            weyl.len(),
            expected,
            "Weyl group of {} has wrong order",
            algebra.name()
        );

        // Transpose of the Cartan matrix maps root coordinates to weight
        // coordinates; invert it exactly via the adjugate.
        let mut tr = [[0i64; 3]; 3];
        for (i, row) in cartan.iter().enumerate() {
            for (j, &a) in row.iter().enumerate() {
                tr[j][i] = a;
            }
        }
        let basis_det = det3(&tr);
        assert!(basis_det != 0, "Cartan matrix must be invertible");
        let basis_adj = adjugate3(&tr);

        let mut sys = RootSystem {
            algebra,
            cartan,
            weyl,
            positive_roots: Vec::new(),
            half_norms: algebra.half_norms(),
            basis_adj,
            basis_det,
        };
        sys.positive_roots = sys.enumerate_positive_roots();
        let expected_pos = match algebra {
            Algebra::A3 => 6,
            Algebra::B3 | Algebra::C3 => 9,
        };
        assert_eq!(
            sys.positive_roots.len(),
            expected_pos,
            "{} has wrong number of positive roots",
            algebra.name()
        );
        sys
    }

    /// Positive roots: Weyl orbit of the simple roots, filtered to the ones
    /// with non-negative integer coordinates in the simple-root basis.
    fn enumerate_positive_roots(&self) -> Vec<[i64; 3]> {
        let mut found = BTreeSet::new();
        for i in 0..3 {
            let alpha = self.cartan[i];
            for w in &self.weyl {
                let image = w.apply(alpha);
                if let Some(k) = self.root_coords_if_grid(image) {
                    if k.iter().all(|&ki| ki >= 0) {
                        found.insert(k);
                    }
                }
            }
        }
        found.into_iter().collect()
    }

    pub fn algebra(&self) -> Algebra {
        self.algebra
    }

    pub fn cartan(&self) -> &[[i64; 3]; 3] {
        &self.cartan
    }

    /// The full Weyl group; the identity is the first element.
    pub fn weyl(&self) -> &[WeylElement] {
        &self.weyl
    }

    /// Positive roots in simple-root coordinates, sorted.
    pub fn positive_roots(&self) -> &[[i64; 3]] {
        &self.positive_roots
    }

    /// The Weyl vector: sum of fundamental weights.
    pub fn rho() -> Weight {
        [1, 1, 1]
    }

    pub fn is_dominant(v: Weight) -> bool {
        v.iter().all(|&c| c >= 0)
    }

    pub(crate) fn expect_dominant(v: Weight) -> Result<()> {
        if RootSystem::is_dominant(v) {
            Ok(())
        } else {
            Err(Error::NonDominantWeight(v))
        }
    }

    /// Exact coordinates of `v` (weight coordinates) in the simple-root
    /// basis.
    pub fn to_root_coords(&self, v: [i64; 3]) -> [Coef; 3] {
        let mut out = [Coef::zero(), Coef::zero(), Coef::zero()];
        for (j, row) in self.basis_adj.iter().enumerate() {
            let num = row[0] * v[0] + row[1] * v[1] + row[2] * v[2];
            out[j] = coef_ratio(num, self.basis_det);
        }
        out
    }

    /// Root coordinates of `v` if they are integers, `None` otherwise
    /// (i.e. `None` when `v` is not in the root lattice).
    pub fn root_coords_if_grid(&self, v: [i64; 3]) -> Option<[i64; 3]> {
        let mut out = [0i64; 3];
        for (j, row) in self.basis_adj.iter().enumerate() {
            let num = row[0] * v[0] + row[1] * v[1] + row[2] * v[2];
            if num % self.basis_det != 0 {
                return None;
            }
            out[j] = num / self.basis_det;
        }
        Some(out)
    }

    /// Irreducible character of highest weight `lambda` as a Laurent
    /// polynomial in `x1,x2,x3`: the ratio of the two Weyl alternants
    /// `sum_w sign(w) x^{w(lambda+rho)}` and `sum_w sign(w) x^{w(rho)}`.
    pub fn weyl_character(&self, lambda: Weight) -> Result<LaurentPoly> {
        RootSystem::expect_dominant(lambda)?;
        let vars = x_vars();
        let num = self.alternant(&vars, lambda);
        let den = self.alternant(&vars, [0, 0, 0]);
        let chi = num.exact_div(&den)?;
        for (_, c) in chi.terms() {
            assert!(
                c.is_integer() && c.is_positive(),
                "character coefficients must be positive integers, got {c} for weight {lambda:?}"
            );
        }
        Ok(chi)
    }

    /// `sum_w sign(w) x^{w(lambda+rho)}`.  The orbit of the strictly
    /// dominant weight `lambda+rho` is free, so the sum has exactly `|W|`
    /// terms.
    fn alternant(&self, vars: &crate::vars::VarSet, lambda: Weight) -> LaurentPoly {
        let rho = RootSystem::rho();
        let shifted = [lambda[0] + rho[0], lambda[1] + rho[1], lambda[2] + rho[2]];
        let poly = LaurentPoly::from_terms(
            vars,
            self.weyl.iter().map(|w| {
                let image = w.apply(shifted);
                let expo = [image[0] as i32, image[1] as i32, image[2] as i32];
                (expo.to_vec(), coef_int(w.sign()))
            }),
        );
        assert_eq!(
            poly.num_terms(),
            self.weyl.len(),
            "alternant orbit must be free"
        );
        poly
    }

    /// Dimension of the irreducible representation of highest weight
    /// `lambda`, by the product over positive roots of
    /// `(lambda+rho, beta) / (rho, beta)`.
    pub fn weyl_dim(&self, lambda: Weight) -> Result<BigInt> {
        RootSystem::expect_dominant(lambda)?;
        let mut acc = Coef::one();
        for k in &self.positive_roots {
            let mut num = Coef::zero();
            let mut den = Coef::zero();
            for i in 0..3 {
                let d = &self.half_norms[i];
                num += d * coef_int(k[i] * (lambda[i] + 1));
                den += d * coef_int(k[i]);
            }
            acc *= num / den;
        }
        let dim = expect_integer(&acc)
            .map_err(|_| Error::NonIntegralValue(format!("dimension of {lambda:?}")))?;
        assert!(dim.is_positive(), "dimension must be positive");
        Ok(dim)
    }
}

fn adjugate3(m: &[[i64; 3]; 3]) -> [[i64; 3]; 3] {
    let cof = |r0: usize, r1: usize, c0: usize, c1: usize| -> i64 {
        m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0]
    };
    // Adjugate = transpose of the cofactor matrix.
    [
        [cof(1, 2, 1, 2), -cof(0, 2, 1, 2), cof(0, 1, 1, 2)],
        [-cof(1, 2, 0, 2), cof(0, 2, 0, 2), -cof(0, 1, 0, 2)],
        [cof(1, 2, 0, 1), -cof(0, 2, 0, 1), cof(0, 1, 0, 1)],
    ]
}

/// Breadth-first closure of the three simple reflections.
fn enumerate_weyl(cartan: &[[i64; 3]; 3]) -> Vec<WeylElement> {
    let gens: Vec<WeylElement> = (0..3)
        .map(|i| WeylElement::simple_reflection(cartan, i))
        .collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let identity = WeylElement::identity();
    seen.insert(identity.matrix);
    out.push(identity);
    let mut cursor = 0;
    while cursor < out.len() {
        let current = out[cursor].clone();
        cursor += 1;
        for g in &gens {
            let next = current.compose(g);
            assert_eq!(next.sign, det3(&next.matrix), "sign bookkeeping mismatch");
            if seen.insert(next.matrix) {
                out.push(next);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_poly;

    fn all_systems() -> [RootSystem; 3] {
        [
            RootSystem::new(Algebra::A3),
            RootSystem::new(Algebra::B3),
            RootSystem::new(Algebra::C3),
        ]
    }

    #[test]
    fn weyl_group_orders_and_signs() {
        for sys in all_systems() {
            let expected = if sys.algebra() == Algebra::A3 { 24 } else { 48 };
            assert_eq!(sys.weyl().len(), expected);
            assert_eq!(sys.weyl()[0].sign(), 1);
            assert_eq!(sys.weyl()[0].apply([3, 1, 2]), [3, 1, 2]);
            // Closure: the product of any two elements stays in the group.
            let matrices: BTreeSet<_> = sys.weyl().iter().map(|w| *w.matrix()).collect();
            for a in sys.weyl() {
                for b in sys.weyl() {
                    assert!(matrices.contains(a.compose(b).matrix()));
                }
            }
        }
    }

    #[test]
    fn simple_roots_have_unit_root_coords() {
        for sys in all_systems() {
            for i in 0..3 {
                let alpha = sys.cartan()[i];
                let mut expected = [0i64; 3];
                expected[i] = 1;
                assert_eq!(sys.root_coords_if_grid(alpha), Some(expected));
            }
        }
    }

    #[test]
    fn positive_root_sets() {
        let base = [
            [1, 0, 0],
            [0, 1, 0],
            [0, 0, 1],
            [1, 1, 0],
            [0, 1, 1],
            [1, 1, 1],
        ];
        let sorted = |extra: &[[i64; 3]]| {
            let mut v: Vec<[i64; 3]> = base.iter().chain(extra.iter()).copied().collect();
            v.sort();
            v
        };
        let a3 = RootSystem::new(Algebra::A3);
        assert_eq!(a3.positive_roots(), sorted(&[]).as_slice());
        let b3 = RootSystem::new(Algebra::B3);
        assert_eq!(
            b3.positive_roots(),
            sorted(&[[0, 1, 2], [1, 1, 2], [1, 2, 2]]).as_slice()
        );
        let c3 = RootSystem::new(Algebra::C3);
        assert_eq!(
            c3.positive_roots(),
            sorted(&[[0, 2, 1], [1, 2, 1], [2, 2, 1]]).as_slice()
        );
    }

    #[test]
    fn root_coord_conversion_spot_values() {
        let a3 = RootSystem::new(Algebra::A3);
        assert_eq!(
            a3.to_root_coords([2, -1, 0]),
            [coef_int(1), coef_int(0), coef_int(0)]
        );
        assert_eq!(
            a3.to_root_coords([0, 0, 0]),
            [coef_int(0), coef_int(0), coef_int(0)]
        );
        // Highest root of A3 = alpha1 + alpha2 + alpha3 has labels (1,0,1).
        assert_eq!(a3.root_coords_if_grid([1, 0, 1]), Some([1, 1, 1]));
        // A single fundamental weight is not in the A3 root lattice.
        assert_eq!(a3.root_coords_if_grid([1, 0, 0]), None);
        assert_eq!(
            a3.to_root_coords([1, 0, 0]),
            [coef_ratio(3, 4), coef_ratio(1, 2), coef_ratio(1, 4)]
        );
    }

    #[test]
    fn known_dimensions() {
        let a3 = RootSystem::new(Algebra::A3);
        let b3 = RootSystem::new(Algebra::B3);
        let c3 = RootSystem::new(Algebra::C3);
        let cases: [(&RootSystem, Weight, i64); 8] = [
            (&a3, [1, 0, 0], 4),
            (&a3, [0, 1, 0], 6),
            (&a3, [1, 0, 1], 15),
            (&a3, [2, 0, 0], 10),
            (&b3, [0, 0, 1], 8),
            (&b3, [0, 1, 0], 21),
            (&c3, [1, 0, 0], 6),
            (&c3, [0, 0, 1], 14),
        ];
        for (sys, m, dim) in cases {
            assert_eq!(
                sys.weyl_dim(m).unwrap(),
                BigInt::from(dim),
                "{} {m:?}",
                sys.algebra().name()
            );
        }
    }

    #[test]
    fn a3_dimension_matches_factored_sextic() {
        let a3 = RootSystem::new(Algebra::A3);
        for m1 in 0..=6i64 {
            for m2 in 0..=6i64 {
                for m3 in 0..=6i64 {
                    let product = (m1 + 1)
                        * (m2 + 1)
                        * (m3 + 1)
                        * (m1 + m2 + 2)
                        * (m2 + m3 + 2)
                        * (m1 + m2 + m3 + 3);
                    assert_eq!(product % 12, 0);
                    assert_eq!(
                        a3.weyl_dim([m1, m2, m3]).unwrap(),
                        BigInt::from(product / 12)
                    );
                }
            }
        }
    }

    #[test]
    fn fundamental_characters_of_a3() {
        let a3 = RootSystem::new(Algebra::A3);
        let vars = x_vars();
        let expected = [
            "x1 + x1^-1*x2 + x2^-1*x3 + x3^-1",
            "x2 + x1^-1*x3 + x1^-1*x2*x3^-1 + x1*x2^-1*x3 + x1*x3^-1 + x2^-1",
            "x3 + x2*x3^-1 + x1*x2^-1 + x1^-1",
        ];
        for (i, text) in expected.iter().enumerate() {
            let mut m = [0i64; 3];
            m[i] = 1;
            let chi = a3.weyl_character(m).unwrap();
            assert_eq!(
                chi,
                parse_poly(&vars, text).unwrap(),
                "fundamental {}",
                i + 1
            );
        }
    }

    #[test]
    fn b3_spinor_character_is_one_free_orbit() {
        let b3 = RootSystem::new(Algebra::B3);
        let chi = b3.weyl_character([0, 0, 1]).unwrap();
        assert_eq!(chi.num_terms(), 8);
        assert!(chi.terms().all(|(_, c)| c == &coef_int(1)));
    }

    #[test]
    fn coefficient_sums_equal_dimensions() {
        for sys in all_systems() {
            for m1 in 0..=4i64 {
                for m2 in 0..=4 - m1 {
                    for m3 in 0..=4 - m1 - m2 {
                        let chi = sys.weyl_character([m1, m2, m3]).unwrap();
                        let total = chi.coeff_sum();
                        assert!(total.is_integer());
                        assert_eq!(
                            total.to_integer(),
                            sys.weyl_dim([m1, m2, m3]).unwrap(),
                            "{} {:?}",
                            sys.algebra().name(),
                            [m1, m2, m3]
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn a3_diagram_flip_reverses_labels() {
        let a3 = RootSystem::new(Algebra::A3);
        for m1 in 0..=4i64 {
            for m2 in 0..=4 - m1 {
                for m3 in 0..=4 - m1 - m2 {
                    let flipped = a3.weyl_character([m1, m2, m3]).unwrap().negate_exponents();
                    let reversed = a3.weyl_character([m3, m2, m1]).unwrap();
                    assert_eq!(flipped, reversed);
                }
            }
        }
    }

    #[test]
    fn non_dominant_weights_are_rejected() {
        let a3 = RootSystem::new(Algebra::A3);
        assert_eq!(
            a3.weyl_character([1, -1, 0]),
            Err(Error::NonDominantWeight([1, -1, 0]))
        );
        assert_eq!(
            a3.weyl_dim([-2, 0, 0]),
            Err(Error::NonDominantWeight([-2, 0, 0]))
        );
    }

    #[test]
    fn algebra_names_round_trip() {
        for name in ["a3", "b3", "c3"] {
            assert_eq!(Algebra::parse(name).unwrap().name(), name);
            assert_eq!(Algebra::parse(&name.to_uppercase()).unwrap().name(), name);
        }
        assert!(Algebra::parse("d4").is_err());
    }
}
