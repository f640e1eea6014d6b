//! Ordered variable sets.
//!
//! A [`VarSet`] fixes both the alphabet of a polynomial ring and the order of
//! the variables.  The order matters: exponent vectors, the graded-lex
//! monomial order used for exact division, and the canonical text form all
//! refer to it.  Two variable sets are equal iff they list the same names in
//! the same order.

use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;
use crate::Result;

/// An immutable, ordered list of distinct variable names.
///
/// Cloning is cheap (shared storage).  Equality is by content, so
/// independently built sets over the same names are interchangeable.
#[derive(Clone)]
pub struct VarSet {
    names: Arc<Vec<String>>,
}

impl VarSet {
    /// Builds a variable set from names, rejecting duplicates.
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<VarSet> {
        let mut seen: Vec<&str> = Vec::with_capacity(names.len());
        for n in names {
            let n = n.as_ref();
            if seen.contains(&n) {
                return Err(Error::DuplicateVariable(n.to_string()));
            }
            seen.push(n);
        }
        Ok(VarSet {
            names: Arc::new(names.iter().map(|s| s.as_ref().to_string()).collect()),
        })
    }

    /// Number of variables.
    pub fn len(&self) -> usize {
        self.names.len()
    }

    /// True for the empty (constants-only) set.
    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    /// Position of `name`, if present.
    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Name at position `i`.
    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    /// Iterator over the names in order.
    pub fn iter(&self) -> impl Iterator<Item = &str> {
        self.names.iter().map(|s| s.as_str())
    }

    /// Comma-separated names, used in error messages.
    pub fn describe(&self) -> String {
        let mut out = String::new();
        for (i, n) in self.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push_str(n);
        }
        out
    }

    /// Errors unless `self` and `other` are the same set.
    pub fn expect_same(&self, other: &VarSet) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::VarSetMismatch {
                left: self.describe(),
                right: other.describe(),
            })
        }
    }
}

impl PartialEq for VarSet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.names, &other.names) || self.names == other.names
    }
}

impl Eq for VarSet {}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VarSet[{}]", self.describe())
    }
}

/// Character variables `x1,x2,x3` (exponents are weight labels).
pub fn x_vars() -> VarSet {
    VarSet::new(&["x1", "x2", "x3"]).expect("distinct names")
}

/// Fundamental-character variables `z1,z2,z3`.
pub fn z_vars() -> VarSet {
    VarSet::new(&["z1", "z2", "z3"]).expect("distinct names")
}

/// Dynkin-label counting variables `t1,t2,t3`.
pub fn t_vars() -> VarSet {
    VarSet::new(&["t1", "t2", "t3"]).expect("distinct names")
}

/// Counting variables for the two-parameter restricted families: `t1,t2`.
pub fn t2_vars() -> VarSet {
    VarSet::new(&["t1", "t2"]).expect("distinct names")
}

/// Joint set `t1,t2,t3,z1,z2,z3` for character generating functions.
pub fn tz_vars() -> VarSet {
    VarSet::new(&["t1", "t2", "t3", "z1", "z2", "z3"]).expect("distinct names")
}

/// Joint set `t1,t2,z1,z2,z3` for the symmetric-weight character function.
pub fn t2z_vars() -> VarSet {
    VarSet::new(&["t1", "t2", "z1", "z2", "z3"]).expect("distinct names")
}

/// Joint set `t1,t3,z1,z2,z3` for the B3/C3 outer-index functions.
pub fn t13z_vars() -> VarSet {
    VarSet::new(&["t1", "t3", "z1", "z2", "z3"]).expect("distinct names")
}

/// The empty set: ring of plain rational constants.
pub fn no_vars() -> VarSet {
    VarSet::new::<&str>(&[]).expect("empty")
}
