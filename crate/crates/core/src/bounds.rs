//! Executable bound checkers for the general Sombor index.
//!
//! Every checker evaluates one inequality `lhs REL rhs` on one graph and
//! reports the signed slack (non-negative when the inequality holds), whether
//! the structural equality condition predicts a tight bound, and whether the
//! bound is numerically tight.
//!
//! | id          | inequality                                                        | regime        |
//! |-------------|-------------------------------------------------------------------|---------------|
//! | B0a         | `F >= M1^2 / (2m)`                                                | `m >= 1`      |
//! | B0b         | `M1 >= 4m^2 / n`                                                  |               |
//! | B1          | `SO_a` vs `m^(1-a/2) F^(a/2)`                                     | `a != 1`      |
//! | B2          | `SO_a` vs `8^(a/2) m^(1+a) n^(-a)`                                | `a != 1`      |
//! | B3.1        | `SO_a >= F^(a/2)`                                                 | `0 < a < 1`   |
//! | B3.2        | `SO_a <= 2^(a/2-1) n(n-1)`                                        | `a < 0`       |
//! | B3.3        | `SO_a <= 2^(a/2) m (n-1)^a`                                       | `a > 1`       |
//! | B4.1a       | `SO_a(G) + SO_a(~G) <= 2^(a/2-1) n (n-1)^(a+1)`                   | `a > 0`       |
//! | B4.1b       | `SO_a(G) + SO_a(~G) >= n (n-1)^(1+a) / 2^(1+a)`                   | `a >= 1`      |
//! | B4.1c       | `SO_a(G) + SO_a(~G) >= n^(a/2) (n-1)^(3a/2) / 2^(3a/2)`           | `0 < a < 1`   |
//! | B4.2a/B4.2b | `2^(a/2-1) n (n-1)^(a+1) <= SO_a(G) + SO_a(~G) < 2^(a/2) n(n-1)`  | `a < 0`       |
//! | B5.L/B5.R   | `2^(a/2) R_a / Delta^a <= SO_a <= 2^(a/2) R_a / delta^a`          | `m >= 1`      |
//! | B6.L/B6.R   | `chi_a / 2^(a/2) <= SO_a <= sqrt(m Delta^a chi_a)`                | `m >= 1`      |
//!
//! Several of these are only valid on part of the range where they are
//! usually quoted. [`Reading::Verified`] (the default everywhere) uses the
//! direction that actually holds and tags it [`Form::Corrected`]:
//!
//! * B1 on `1 < a < 2`: `x^(a/2)` is concave there, so `SO_a <= ...`.
//! * B2 on `0 < a < 1`: `SO_a >= ...` holds for every `a > 0`.
//! * B5 and B6 on `a < 0`: raising to a negative power reverses each
//!   per-edge comparison, so `Delta` and `delta` trade places and the
//!   `chi_a` comparison becomes an upper bound.
//!
//! [`Reading::AsPrinted`] evaluates the quoted direction instead. B2 for
//! `a < 0` has no valid direction in general and is always evaluated as
//! quoted.
//!
//! `Delta` and `delta` in B5/B6 range over non-isolated vertices.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::classify::edge_quantity_constant;
use crate::graph::Graph;
use crate::indices::{
    first_zagreb, forgotten, general_randic, general_sombor, general_sum_connectivity, second_zagreb,
};

/// Relative factor of the equality / violation tolerance.
pub const EQUALITY_TOLERANCE: f64 = 1e-9;

/// `EQUALITY_TOLERANCE * max(1, |lhs|, |rhs|)`.
pub fn tolerance(lhs: f64, rhs: f64) -> f64 {
    EQUALITY_TOLERANCE * 1f64.max(lhs.abs()).max(rhs.abs())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BoundId {
    B0a,
    B0b,
    B1,
    B2,
    B3_1,
    B3_2,
    B3_3,
    B4_1a,
    B4_1b,
    B4_1c,
    B4_2a,
    B4_2b,
    B5L,
    B5R,
    B6L,
    B6R,
}

impl BoundId {
    pub const ALL: [BoundId; 16] = [
        BoundId::B0a,
        BoundId::B0b,
        BoundId::B1,
        BoundId::B2,
        BoundId::B3_1,
        BoundId::B3_2,
        BoundId::B3_3,
        BoundId::B4_1a,
        BoundId::B4_1b,
        BoundId::B4_1c,
        BoundId::B4_2a,
        BoundId::B4_2b,
        BoundId::B5L,
        BoundId::B5R,
        BoundId::B6L,
        BoundId::B6R,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            BoundId::B0a => "B0a",
            BoundId::B0b => "B0b",
            BoundId::B1 => "B1",
            BoundId::B2 => "B2",
            BoundId::B3_1 => "B3.1",
            BoundId::B3_2 => "B3.2",
            BoundId::B3_3 => "B3.3",
            BoundId::B4_1a => "B4.1a",
            BoundId::B4_1b => "B4.1b",
            BoundId::B4_1c => "B4.1c",
            BoundId::B4_2a => "B4.2a",
            BoundId::B4_2b => "B4.2b",
            BoundId::B5L => "B5.L",
            BoundId::B5R => "B5.R",
            BoundId::B6L => "B6.L",
            BoundId::B6R => "B6.R",
        }
    }

    pub fn family(self) -> BoundFamily {
        match self {
            BoundId::B0a => BoundFamily::B0a,
            BoundId::B0b => BoundFamily::B0b,
            BoundId::B1 => BoundFamily::B1,
            BoundId::B2 => BoundFamily::B2,
            BoundId::B3_1 | BoundId::B3_2 | BoundId::B3_3 => BoundFamily::B3,
            BoundId::B4_1a | BoundId::B4_1b | BoundId::B4_1c | BoundId::B4_2a | BoundId::B4_2b => BoundFamily::B4,
            BoundId::B5L | BoundId::B5R => BoundFamily::B5,
            BoundId::B6L | BoundId::B6R => BoundFamily::B6,
        }
    }
}

impl fmt::Display for BoundId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for BoundId {
    type Err = BoundError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        BoundId::ALL
            .into_iter()
            .find(|id| id.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| BoundError::UnknownBound(s.to_string()))
    }
}

impl Serialize for BoundId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for BoundId {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// One theorem-level group of bounds; a checker call evaluates a whole family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BoundFamily {
    B0a,
    B0b,
    B1,
    B2,
    B3,
    B4,
    B5,
    B6,
}

impl BoundFamily {
    pub const ALL: [BoundFamily; 8] = [
        BoundFamily::B0a,
        BoundFamily::B0b,
        BoundFamily::B1,
        BoundFamily::B2,
        BoundFamily::B3,
        BoundFamily::B4,
        BoundFamily::B5,
        BoundFamily::B6,
    ];

    pub fn takes_alpha(self) -> bool {
        !matches!(self, BoundFamily::B0a | BoundFamily::B0b)
    }

    pub fn ids(self) -> impl Iterator<Item = BoundId> {
        BoundId::ALL.into_iter().filter(move |id| id.family() == self)
    }
}

impl fmt::Display for BoundFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for BoundFamily {
    type Err = BoundError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        BoundFamily::ALL
            .into_iter()
            .find(|f| f.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| BoundError::UnknownBound(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Relation {
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = ">=")]
    Ge,
    #[serde(rename = "<")]
    Lt,
}

impl Relation {
    pub fn as_str(self) -> &'static str {
        match self {
            Relation::Le => "<=",
            Relation::Ge => ">=",
            Relation::Lt => "<",
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Provenance of the evaluated inequality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Form {
    /// The inequality as usually quoted.
    Printed,
    /// Direction (or extremal degree) swapped because the quoted form is false here.
    Corrected,
    /// A boundary exponent at which both sides coincide identically.
    Degenerate,
}

/// Which direction to evaluate where the quoted inequality is false.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Reading {
    #[default]
    Verified,
    AsPrinted,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BoundError {
    #[error("{0} needs at least one edge")]
    NoEdges(BoundFamily),
    #[error("{family} needs at least {min} vertices")]
    TooFewVertices { family: BoundFamily, min: usize },
    #[error("{family} makes no claim at alpha = {alpha}")]
    NoClaim { family: BoundFamily, alpha: f64 },
    #[error("alpha must be finite, got {0}")]
    NonFiniteAlpha(f64),
    #[error("unknown bound id {0:?}")]
    UnknownBound(String),
}

/// One inequality evaluated on one graph.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundCheck {
    pub bound: BoundId,
    pub alpha: Option<f64>,
    pub lhs: f64,
    pub relation: Relation,
    pub rhs: f64,
    pub form: Form,
    /// Oriented so that `slack >= 0` means the inequality holds.
    pub slack: f64,
    pub holds: bool,
    /// Structural equality condition; `None` where no equality case is claimed.
    pub equality_predicted: Option<bool>,
    pub equality_observed: bool,
}

impl BoundCheck {
    pub fn new(
        bound: BoundId,
        alpha: Option<f64>,
        lhs: f64,
        relation: Relation,
        rhs: f64,
        form: Form,
        equality_predicted: Option<bool>,
    ) -> Self {
        let slack = match relation {
            Relation::Le | Relation::Lt => rhs - lhs,
            Relation::Ge => lhs - rhs,
        };
        let eps = tolerance(lhs, rhs);
        let holds = match relation {
            Relation::Lt => slack > eps,
            Relation::Le | Relation::Ge => slack >= -eps,
        };
        BoundCheck {
            bound,
            alpha,
            lhs,
            relation,
            rhs,
            form,
            slack,
            holds,
            equality_predicted,
            equality_observed: slack.abs() <= eps,
        }
    }

    /// Predicted and observed equality disagree (only where a prediction exists).
    pub fn equality_mismatch(&self) -> bool {
        self.equality_predicted.is_some_and(|p| p != self.equality_observed)
    }

    /// The same check with `lhs` and `rhs` exchanged: a corrupted checker
    /// used as a negative control for the verification harness.
    pub fn with_sides_swapped(&self) -> Self {
        BoundCheck::new(self.bound, self.alpha, self.rhs, self.relation, self.lhs, self.form, self.equality_predicted)
    }
}

fn require_edges(g: &Graph, family: BoundFamily) -> Result<(), BoundError> {
    if g.is_edgeless() {
        Err(BoundError::NoEdges(family))
    } else {
        Ok(())
    }
}

fn require_order(g: &Graph, family: BoundFamily, min: usize) -> Result<(), BoundError> {
    if g.order() < min {
        Err(BoundError::TooFewVertices { family, min })
    } else {
        Ok(())
    }
}

fn require_finite(alpha: f64) -> Result<(), BoundError> {
    if alpha.is_finite() {
        Ok(())
    } else {
        Err(BoundError::NonFiniteAlpha(alpha))
    }
}

fn is_regular(g: &Graph) -> bool {
    g.degrees().iter().all(|&d| d == g.degree(0))
}

fn non_isolated_extremes(g: &Graph) -> (f64, f64) {
    let p = g.degree_profile();
    let max = p.max_non_isolated().expect("caller checked m >= 1");
    let min = p.min_non_isolated().expect("caller checked m >= 1");
    (max as f64, min as f64)
}

/// B0a: `F(G) >= M1(G)^2 / (2m)`. Tight exactly when all non-isolated vertices
/// share one degree.
pub fn check_aux_forgotten(g: &Graph) -> Result<BoundCheck, BoundError> {
    require_edges(g, BoundFamily::B0a)?;
    let m = g.size() as f64;
    let m1 = first_zagreb(g);
    Ok(BoundCheck::new(
        BoundId::B0a,
        None,
        forgotten(g),
        Relation::Ge,
        m1 * m1 / (2.0 * m),
        Form::Printed,
        Some(g.degree_profile().non_isolated_uniform()),
    ))
}

/// B0b: `M1(G) >= 4m^2 / n`, tight iff `G` is regular.
pub fn check_aux_zagreb(g: &Graph) -> Result<BoundCheck, BoundError> {
    let (n, m) = (g.order() as f64, g.size() as f64);
    Ok(BoundCheck::new(
        BoundId::B0b,
        None,
        first_zagreb(g),
        Relation::Ge,
        4.0 * m * m / n,
        Form::Printed,
        Some(is_regular(g)),
    ))
}

/// B1: `SO_a` against `m^(1-a/2) F^(a/2)`; tight iff `d(u)^2 + d(v)^2` is
/// constant over edges (every graph at `a` in {0, 2}).
pub fn check_sombor_forgotten(g: &Graph, alpha: f64) -> Result<BoundCheck, BoundError> {
    check_sombor_forgotten_reading(g, alpha, Reading::Verified)
}

pub fn check_sombor_forgotten_reading(g: &Graph, alpha: f64, reading: Reading) -> Result<BoundCheck, BoundError> {
    require_finite(alpha)?;
    require_edges(g, BoundFamily::B1)?;
    let (relation, form) = if !(0.0..2.0).contains(&alpha) {
        (Relation::Ge, Form::Printed)
    } else if alpha == 0.0 {
        (Relation::Ge, Form::Degenerate)
    } else if alpha < 1.0 {
        (Relation::Le, Form::Printed)
    } else if alpha == 1.0 {
        return Err(BoundError::NoClaim { family: BoundFamily::B1, alpha });
    } else {
        match reading {
            Reading::Verified => (Relation::Le, Form::Corrected),
            Reading::AsPrinted => (Relation::Ge, Form::Printed),
        }
    };
    let m = g.size() as f64;
    let half = alpha / 2.0;
    let rhs = m.powf(1.0 - half) * forgotten(g).powf(half);
    let predicted = alpha == 0.0 || alpha == 2.0 || edge_quantity_constant(g, |a, b| a * a + b * b);
    Ok(BoundCheck::new(BoundId::B1, Some(alpha), general_sombor(g, alpha), relation, rhs, form, Some(predicted)))
}

/// B2: `SO_a` against `8^(a/2) m^(1+a) n^(-a)`; tight iff `G` is regular.
pub fn check_sombor_nm(g: &Graph, alpha: f64) -> Result<BoundCheck, BoundError> {
    check_sombor_nm_reading(g, alpha, Reading::Verified)
}

pub fn check_sombor_nm_reading(g: &Graph, alpha: f64, reading: Reading) -> Result<BoundCheck, BoundError> {
    require_finite(alpha)?;
    require_edges(g, BoundFamily::B2)?;
    let (relation, form) = if !(0.0..=1.0).contains(&alpha) {
        (Relation::Ge, Form::Printed)
    } else if alpha == 0.0 {
        (Relation::Ge, Form::Degenerate)
    } else if alpha == 1.0 {
        return Err(BoundError::NoClaim { family: BoundFamily::B2, alpha });
    } else {
        match reading {
            Reading::Verified => (Relation::Ge, Form::Corrected),
            Reading::AsPrinted => (Relation::Le, Form::Printed),
        }
    };
    let (n, m) = (g.order() as f64, g.size() as f64);
    let rhs = 8f64.powf(alpha / 2.0) * m.powf(1.0 + alpha) * n.powf(-alpha);
    let predicted = alpha == 0.0 || is_regular(g);
    Ok(BoundCheck::new(BoundId::B2, Some(alpha), general_sombor(g, alpha), relation, rhs, form, Some(predicted)))
}

/// B3.1 / B3.2 / B3.3, selected by the sign of `alpha`.
pub fn check_theorem2(g: &Graph, alpha: f64) -> Result<BoundCheck, BoundError> {
    require_finite(alpha)?;
    require_order(g, BoundFamily::B3, 2)?;
    let (n, m) = (g.order() as f64, g.size() as f64);
    let so = general_sombor(g, alpha);
    let check = if alpha > 0.0 && alpha < 1.0 {
        BoundCheck::new(
            BoundId::B3_1,
            Some(alpha),
            so,
            Relation::Ge,
            forgotten(g).powf(alpha / 2.0),
            Form::Printed,
            Some(g.size() <= 1),
        )
    } else if alpha < 0.0 {
        BoundCheck::new(
            BoundId::B3_2,
            Some(alpha),
            so,
            Relation::Le,
            2f64.powf(alpha / 2.0 - 1.0) * n * (n - 1.0),
            Form::Printed,
            Some(g.order() == 2 && g.size() == 1),
        )
    } else if alpha > 1.0 {
        BoundCheck::new(
            BoundId::B3_3,
            Some(alpha),
            so,
            Relation::Le,
            2f64.powf(alpha / 2.0) * m * (n - 1.0).powf(alpha),
            Form::Printed,
            Some(g.is_edgeless() || g.is_complete()),
        )
    } else {
        return Err(BoundError::NoClaim { family: BoundFamily::B3, alpha });
    };
    Ok(check)
}

/// Nordhaus-Gaddum bounds on `SO_a(G) + SO_a(complement of G)`.
///
/// `a > 0`: B4.1a plus B4.1b (`a >= 1`) or B4.1c (`a < 1`).
/// `a < 0`: B4.2a and the strict B4.2b.
pub fn check_nordhaus_gaddum(g: &Graph, alpha: f64) -> Result<Vec<BoundCheck>, BoundError> {
    require_finite(alpha)?;
    require_order(g, BoundFamily::B4, 2)?;
    if alpha == 0.0 {
        return Err(BoundError::NoClaim { family: BoundFamily::B4, alpha });
    }
    let n = g.order() as f64;
    let lhs = general_sombor(g, alpha) + general_sombor(&g.complement(), alpha);
    let extremal = g.is_edgeless() || g.is_complete();
    let complete_value = 2f64.powf(alpha / 2.0 - 1.0) * n * (n - 1.0).powf(alpha + 1.0);
    let check =
        |id, relation, rhs, predicted| BoundCheck::new(id, Some(alpha), lhs, relation, rhs, Form::Printed, predicted);

    let checks = if alpha > 0.0 {
        let lower = if alpha >= 1.0 {
            check(BoundId::B4_1b, Relation::Ge, n * (n - 1.0).powf(1.0 + alpha) / 2f64.powf(1.0 + alpha), None)
        } else {
            check(
                BoundId::B4_1c,
                Relation::Ge,
                n.powf(alpha / 2.0) * (n - 1.0).powf(1.5 * alpha) / 2f64.powf(1.5 * alpha),
                None,
            )
        };
        vec![check(BoundId::B4_1a, Relation::Le, complete_value, Some(extremal)), lower]
    } else {
        vec![
            check(BoundId::B4_2a, Relation::Ge, complete_value, Some(extremal)),
            check(BoundId::B4_2b, Relation::Lt, 2f64.powf(alpha / 2.0) * n * (n - 1.0), None),
        ]
    };
    Ok(checks)
}

/// B5: `SO_a` between `2^(a/2) R_a / Delta^a` and `2^(a/2) R_a / delta^a`,
/// the extremes exchanged for `a < 0`. Returns `[B5.L, B5.R]`; both tight iff
/// all non-isolated vertices share one degree.
pub fn check_sombor_randic(g: &Graph, alpha: f64) -> Result<[BoundCheck; 2], BoundError> {
    check_sombor_randic_reading(g, alpha, Reading::Verified)
}

pub fn check_sombor_randic_reading(g: &Graph, alpha: f64, reading: Reading) -> Result<[BoundCheck; 2], BoundError> {
    require_finite(alpha)?;
    require_edges(g, BoundFamily::B5)?;
    let (max, min) = non_isolated_extremes(g);
    let so = general_sombor(g, alpha);
    let scaled = 2f64.powf(alpha / 2.0) * general_randic(g, alpha);
    let predicted = Some(alpha == 0.0 || g.degree_profile().non_isolated_uniform());
    let (left_degree, right_degree, form) = match (alpha, reading) {
        (a, _) if a > 0.0 => (max, min, Form::Printed),
        (0.0, _) => (max, min, Form::Degenerate),
        (_, Reading::Verified) => (min, max, Form::Corrected),
        (_, Reading::AsPrinted) => (max, min, Form::Printed),
    };
    Ok([
        BoundCheck::new(BoundId::B5L, Some(alpha), so, Relation::Ge, scaled / left_degree.powf(alpha), form, predicted),
        BoundCheck::new(
            BoundId::B5R,
            Some(alpha),
            so,
            Relation::Le,
            scaled / right_degree.powf(alpha),
            form,
            predicted,
        ),
    ])
}

/// B6: `chi_a / 2^(a/2) <= SO_a <= sqrt(m Delta^a chi_a)` for `a > 0`; for
/// `a < 0`, `SO_a <= chi_a / 2^(a/2)` and `SO_a <= sqrt(m delta^a chi_a)`.
/// Returns `[B6.L, B6.R]`. The left side is tight iff `d(u) = d(v)` on every
/// edge, the right side iff all non-isolated vertices share one degree.
pub fn check_sombor_chi(g: &Graph, alpha: f64) -> Result<[BoundCheck; 2], BoundError> {
    check_sombor_chi_reading(g, alpha, Reading::Verified)
}

pub fn check_sombor_chi_reading(g: &Graph, alpha: f64, reading: Reading) -> Result<[BoundCheck; 2], BoundError> {
    require_finite(alpha)?;
    require_edges(g, BoundFamily::B6)?;
    let (max, min) = non_isolated_extremes(g);
    let m = g.size() as f64;
    let so = general_sombor(g, alpha);
    let chi = general_sum_connectivity(g, alpha);
    let left_predicted = alpha == 0.0 || g.edges().iter().all(|&(u, v)| g.degree(u) == g.degree(v));
    let right_predicted = alpha == 0.0 || g.degree_profile().non_isolated_uniform();
    let (left_relation, right_degree, form) = match (alpha, reading) {
        (a, _) if a > 0.0 => (Relation::Ge, max, Form::Printed),
        (0.0, _) => (Relation::Ge, max, Form::Degenerate),
        (_, Reading::Verified) => (Relation::Le, min, Form::Corrected),
        (_, Reading::AsPrinted) => (Relation::Ge, max, Form::Printed),
    };
    let left = chi / 2f64.powf(alpha / 2.0);
    let right = (m * right_degree.powf(alpha) * chi).sqrt();
    Ok([
        BoundCheck::new(BoundId::B6L, Some(alpha), so, left_relation, left, form, Some(left_predicted)),
        BoundCheck::new(BoundId::B6R, Some(alpha), so, Relation::Le, right, form, Some(right_predicted)),
    ])
}

/// Runs every checker of `family` on `g`. B0a/B0b ignore `alpha`.
pub fn check_family(
    family: BoundFamily,
    g: &Graph,
    alpha: Option<f64>,
    reading: Reading,
) -> Result<Vec<BoundCheck>, BoundError> {
    let a = || alpha.ok_or(BoundError::NonFiniteAlpha(f64::NAN));
    Ok(match family {
        BoundFamily::B0a => vec![check_aux_forgotten(g)?],
        BoundFamily::B0b => vec![check_aux_zagreb(g)?],
        BoundFamily::B1 => vec![check_sombor_forgotten_reading(g, a()?, reading)?],
        BoundFamily::B2 => vec![check_sombor_nm_reading(g, a()?, reading)?],
        BoundFamily::B3 => vec![check_theorem2(g, a()?)?],
        BoundFamily::B4 => check_nordhaus_gaddum(g, a()?)?,
        BoundFamily::B5 => check_sombor_randic_reading(g, a()?, reading)?.to_vec(),
        BoundFamily::B6 => check_sombor_chi_reading(g, a()?, reading)?.to_vec(),
    })
}

/// The two `alpha = 1` corollaries evaluated directly:
/// `sqrt(2) M2 / Delta <= SO <= sqrt(2) M2 / delta` and
/// `M1 / sqrt(2) <= SO <= sqrt(m Delta M1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SomborCorollaries {
    pub zagreb2_lower: f64,
    pub zagreb2_upper: f64,
    pub zagreb1_lower: f64,
    pub zagreb1_upper: f64,
}

pub fn sombor_corollaries(g: &Graph) -> Result<SomborCorollaries, BoundError> {
    require_edges(g, BoundFamily::B5)?;
    let (max, min) = non_isolated_extremes(g);
    let m2 = second_zagreb(g);
    let m1 = first_zagreb(g);
    Ok(SomborCorollaries {
        zagreb2_lower: std::f64::consts::SQRT_2 * m2 / max,
        zagreb2_upper: std::f64::consts::SQRT_2 * m2 / min,
        zagreb1_lower: m1 / std::f64::consts::SQRT_2,
        zagreb1_upper: (g.size() as f64 * max * m1).sqrt(),
    })
}
