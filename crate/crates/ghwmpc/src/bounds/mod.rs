//! Lower and upper bounds on the generalized Hamming weights of
//! matrix-product codes.
//!
//! The lower bounds minimize a block-wise sum B over a small set Y of
//! integer tuples; each admissible shape (2x2 with or without a zero at
//! a_21, nested with h = 2 or 3, two nested constituents spread over
//! three blocks) has its own Y-set. An exhaustive bound that enumerates
//! subcodes, an upper bound through the constituent weights, and a
//! closed form for nested Reed-Solomon pairs round out the set.
//!
//! Every bound returns a [`BoundReport`] carrying the value, the method
//! id, and the lexicographically smallest minimizing tuple, so results
//! are reproducible byte for byte.

use std::fmt;
use std::ops::Add;

use crate::codes::{ghw_with, weight_hierarchy_with, LinearCode};
use crate::{EnumOptions, Error, Result};

mod general;
mod rs_formula;
mod three_blocks;
mod two_codes;

pub use general::{dims_b, lb_general_exhaustive, ub_ghw, ub_ghw_auto};
pub use rs_formula::{mds_extended_weight, mds_pair_b, rs_ghw_closed_form};
pub use three_blocks::{lb_h3_nested, lb_h3_s2, y_h3_s2_tuples};
pub use two_codes::{lb_2x2, lb_h2_nested, min_dist_lower_eq2, min_dist_lower_eq3, Variant2x2};

/// A weight in the hierarchy extended with d_0 = 0 and d_r = infinity
/// for r above the dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ExtendedWeight {
    Finite(u64),
    Infinite,
}

impl ExtendedWeight {
    pub fn is_finite(&self) -> bool {
        matches!(self, ExtendedWeight::Finite(_))
    }

    pub fn finite(&self) -> Option<u64> {
        match self {
            ExtendedWeight::Finite(v) => Some(*v),
            ExtendedWeight::Infinite => None,
        }
    }

    /// Unwraps a value that the caller's constraints promise is finite.
    pub fn expect_finite(&self, what: &str) -> Result<u64> {
        self.finite().ok_or_else(|| {
            Error::Internal(format!("{what} produced an infinite weight"))
        })
    }
}

impl Add for ExtendedWeight {
    type Output = ExtendedWeight;

    fn add(self, rhs: ExtendedWeight) -> ExtendedWeight {
        match (self, rhs) {
            (ExtendedWeight::Finite(a), ExtendedWeight::Finite(b)) => {
                ExtendedWeight::Finite(a + b)
            }
            _ => ExtendedWeight::Infinite,
        }
    }
}

impl fmt::Display for ExtendedWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedWeight::Finite(v) => write!(f, "{v}"),
            ExtendedWeight::Infinite => write!(f, "inf"),
        }
    }
}

/// d_r(C) extended to every r >= 0.
pub fn extended_ghw(c: &LinearCode, r: usize) -> Result<ExtendedWeight> {
    extended_ghw_with(c, r, &EnumOptions::default())
}

pub fn extended_ghw_with(c: &LinearCode, r: usize, opts: &EnumOptions) -> Result<ExtendedWeight> {
    if r == 0 {
        return Ok(ExtendedWeight::Finite(0));
    }
    if r > c.dim() {
        return Ok(ExtendedWeight::Infinite);
    }
    Ok(ExtendedWeight::Finite(ghw_with(c, r, opts)?))
}

/// A full weight hierarchy, memoized so bound evaluations can index
/// extended weights without re-enumerating.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hierarchy {
    weights: Vec<u64>,
}

impl Hierarchy {
    pub fn of(c: &LinearCode, opts: &EnumOptions) -> Result<Hierarchy> {
        Ok(Hierarchy {
            weights: weight_hierarchy_with(c, opts)?,
        })
    }

    /// Wraps an already-known hierarchy d_1 < d_2 < ... < d_k.
    pub fn from_weights(weights: Vec<u64>) -> Hierarchy {
        Hierarchy { weights }
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn ext(&self, r: usize) -> ExtendedWeight {
        if r == 0 {
            ExtendedWeight::Finite(0)
        } else if r <= self.weights.len() {
            ExtendedWeight::Finite(self.weights[r - 1])
        } else {
            ExtendedWeight::Infinite
        }
    }

    /// d_r under constraints that keep r within the dimension; an
    /// infinite result is an internal error, not a user-facing one.
    pub fn fin(&self, r: usize) -> Result<u64> {
        self.ext(r)
            .expect_finite("a constraint-guarded hierarchy lookup")
    }
}

/// Identifier of a bound, as accepted and printed by the interfaces.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Eq2,
    Eq3,
    TwoGeneral,
    TwoNz,
    TwoZ,
    H2Nested,
    H3Nested,
    H3S2,
    GeneralExhaustive,
    Upper,
    RsFormula,
}

impl Method {
    pub fn id(&self) -> &'static str {
        match self {
            Method::Eq2 => "eq2",
            Method::Eq3 => "eq3",
            Method::TwoGeneral => "2x2-general",
            Method::TwoNz => "2x2-nz",
            Method::TwoZ => "2x2-z",
            Method::H2Nested => "h2-nested",
            Method::H3Nested => "h3-nested",
            Method::H3S2 => "h3-s2",
            Method::GeneralExhaustive => "general-exhaustive",
            Method::Upper => "upper",
            Method::RsFormula => "rs-formula",
        }
    }

    pub fn parse(s: &str) -> Option<Method> {
        Method::all().into_iter().find(|m| m.id() == s)
    }

    pub fn all() -> [Method; 11] {
        [
            Method::Eq2,
            Method::Eq3,
            Method::TwoGeneral,
            Method::TwoNz,
            Method::TwoZ,
            Method::H2Nested,
            Method::H3Nested,
            Method::H3S2,
            Method::GeneralExhaustive,
            Method::Upper,
            Method::RsFormula,
        ]
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// The minimizing tuple of a bound, in the shape of its Y-set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    None,
    /// The constituent index attaining a min over l.
    Constituent { ell: usize },
    /// (alpha_1, alpha_2) for the two-constituent bounds.
    Pair { alpha: [usize; 2] },
    /// (alpha, beta) for two nested constituents over three blocks.
    ThreeBlocksS2 { alpha: [usize; 3], beta: usize },
    /// (alpha, gamma, beta) for three nested constituents.
    ThreeBlocks {
        alpha: [usize; 3],
        gamma: [usize; 3],
        beta: usize,
    },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::None => write!(f, "-"),
            Witness::Constituent { ell } => write!(f, "ell={ell}"),
            Witness::Pair { alpha } => write!(f, "alpha=({},{})", alpha[0], alpha[1]),
            Witness::ThreeBlocksS2 { alpha, beta } => write!(
                f,
                "alpha=({},{},{}) beta={beta}",
                alpha[0], alpha[1], alpha[2]
            ),
            Witness::ThreeBlocks { alpha, gamma, beta } => write!(
                f,
                "alpha=({},{},{}) gamma=({},{},{}) beta={beta}",
                alpha[0], alpha[1], alpha[2], gamma[0], gamma[1], gamma[2]
            ),
        }
    }
}

/// Outcome of a bound evaluation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub method: Method,
    pub r: usize,
    pub value: ExtendedWeight,
    /// Lexicographically smallest minimizer of B over the Y-set.
    pub witness: Witness,
    /// The 2x2 bounds normalize a_22 = 0 by swapping columns first.
    pub swapped_columns: bool,
    /// Set when the upper bound degenerates to the code length.
    pub vacuous: bool,
}

impl BoundReport {
    pub(crate) fn new(method: Method, r: usize, value: ExtendedWeight, witness: Witness) -> Self {
        BoundReport {
            method,
            r,
            value,
            witness,
            swapped_columns: false,
            vacuous: false,
        }
    }
}
