//! Degree-based topological indices.
//!
//! Edge-sum indices are sums over edges `uv` of a function of `(d(u), d(v))`.
//! Both endpoints of an edge have degree at least one, so negative exponents
//! never meet a zero base there. Only the vertex-sum [`general_first_zagreb`]
//! can hit `0^p` with `p < 0`, and it reports that as an error.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

/// Identifier of an index, as written in reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum IndexId {
    M1,
    M2,
    M1P,
    F,
    R,
    RALPHA,
    CHI,
    CHIALPHA,
    SO,
    SOALPHA,
}

impl IndexId {
    pub const ALL: [IndexId; 10] = [
        IndexId::M1,
        IndexId::M2,
        IndexId::M1P,
        IndexId::F,
        IndexId::R,
        IndexId::RALPHA,
        IndexId::CHI,
        IndexId::CHIALPHA,
        IndexId::SO,
        IndexId::SOALPHA,
    ];

    /// Whether the index takes an exponent (`p` or `alpha`).
    pub fn is_parametric(self) -> bool {
        matches!(self, IndexId::M1P | IndexId::RALPHA | IndexId::CHIALPHA | IndexId::SOALPHA)
    }
}

impl fmt::Display for IndexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum IndexError {
    #[error("0^{p} is undefined: vertex {vertex} is isolated and p < 0")]
    IsolatedVertexNegativePower { vertex: usize, p: f64 },
    #[error("{index} needs {what}")]
    Parameter { index: IndexId, what: &'static str },
}

/// One evaluated index.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IndexValue {
    pub id: IndexId,
    pub parameter: Option<f64>,
    pub value: f64,
}

/// Evaluates `id` on `g`. Parametric indices require `parameter`.
pub fn evaluate(g: &Graph, id: IndexId, parameter: Option<f64>) -> Result<IndexValue, IndexError> {
    let need = |what| IndexError::Parameter { index: id, what };
    let value = match (id, parameter) {
        (IndexId::M1, _) => first_zagreb(g),
        (IndexId::M2, _) => second_zagreb(g),
        (IndexId::F, _) => forgotten(g),
        (IndexId::R, _) => randic(g),
        (IndexId::CHI, _) => sum_connectivity(g),
        (IndexId::SO, _) => sombor(g),
        (IndexId::M1P, Some(p)) => general_first_zagreb(g, p)?,
        (IndexId::RALPHA, Some(a)) => general_randic(g, a),
        (IndexId::CHIALPHA, Some(a)) => general_sum_connectivity(g, a),
        (IndexId::SOALPHA, Some(a)) => general_sombor(g, a),
        (IndexId::M1P, None) => return Err(need("an exponent p")),
        (_, None) => return Err(need("an exponent alpha")),
    };
    let parameter = if id.is_parametric() { parameter } else { None };
    Ok(IndexValue { id, parameter, value })
}

// Folds from +0.0: `Sum for f64` starts at -0.0, which would leak into the
// value of an edgeless graph.
fn edge_sum(g: &Graph, term: impl Fn(f64, f64) -> f64) -> f64 {
    g.edges().iter().fold(0.0, |acc, &(u, v)| acc + term(g.degree(u) as f64, g.degree(v) as f64))
}

/// First Zagreb index, vertex form: sum of `d(u)^2`.
pub fn first_zagreb(g: &Graph) -> f64 {
    g.degrees().iter().fold(0.0, |acc, &d| acc + (d * d) as f64)
}

/// First Zagreb index, edge form: sum over edges of `d(u) + d(v)`.
pub fn first_zagreb_edge_form(g: &Graph) -> f64 {
    edge_sum(g, |a, b| a + b)
}

pub fn second_zagreb(g: &Graph) -> f64 {
    edge_sum(g, |a, b| a * b)
}

/// General first Zagreb index `sum of d(u)^p` over vertices.
///
/// Isolated vertices contribute nothing for `p >= 0` (so `p = 0` counts the
/// non-isolated vertices); for `p < 0` they are a domain error.
pub fn general_first_zagreb(g: &Graph, p: f64) -> Result<f64, IndexError> {
    let mut total = 0.0;
    for (vertex, &d) in g.degrees().iter().enumerate() {
        if d == 0 {
            if p < 0.0 {
                return Err(IndexError::IsolatedVertexNegativePower { vertex, p });
            }
            continue;
        }
        total += (d as f64).powf(p);
    }
    Ok(total)
}

/// Forgotten index, edge form: sum over edges of `d(u)^2 + d(v)^2`.
pub fn forgotten(g: &Graph) -> f64 {
    edge_sum(g, |a, b| a * a + b * b)
}

/// Classical Randić index: sum over edges of `1 / sqrt(d(u) d(v))`.
pub fn randic(g: &Graph) -> f64 {
    edge_sum(g, |a, b| 1.0 / (a * b).sqrt())
}

pub fn general_randic(g: &Graph, alpha: f64) -> f64 {
    edge_sum(g, |a, b| (a * b).powf(alpha))
}

/// Sum-connectivity index: sum over edges of `1 / sqrt(d(u) + d(v))`.
pub fn sum_connectivity(g: &Graph) -> f64 {
    edge_sum(g, |a, b| 1.0 / (a + b).sqrt())
}

pub fn general_sum_connectivity(g: &Graph, alpha: f64) -> f64 {
    edge_sum(g, |a, b| (a + b).powf(alpha))
}

/// Sombor index: sum over edges of `sqrt(d(u)^2 + d(v)^2)`.
pub fn sombor(g: &Graph) -> f64 {
    edge_sum(g, |a, b| (a * a + b * b).sqrt())
}

/// General Sombor index: sum over edges of `(d(u)^2 + d(v)^2)^(alpha/2)`.
///
/// `alpha = 1` is the Sombor index and `alpha = 2` the forgotten index.
pub fn general_sombor(g: &Graph, alpha: f64) -> f64 {
    let half = alpha / 2.0;
    edge_sum(g, |a, b| (a * a + b * b).powf(half))
}

/// Exact integer forms, for reference checks.
pub mod exact {
    use crate::graph::Graph;

    pub fn first_zagreb(g: &Graph) -> u64 {
        g.degrees().iter().map(|&d| (d * d) as u64).sum()
    }

    pub fn first_zagreb_edge_form(g: &Graph) -> u64 {
        g.edges().iter().map(|&(u, v)| (g.degree(u) + g.degree(v)) as u64).sum()
    }

    pub fn second_zagreb(g: &Graph) -> u64 {
        g.edges().iter().map(|&(u, v)| (g.degree(u) * g.degree(v)) as u64).sum()
    }

    pub fn forgotten(g: &Graph) -> u64 {
        g.edges()
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (g.degree(u) as u64, g.degree(v) as u64);
                a * a + b * b
            })
            .sum()
    }

    /// Sum of `d^p` over non-isolated vertices.
    pub fn general_first_zagreb(g: &Graph, p: u32) -> u64 {
        g.degrees().iter().filter(|&&d| d > 0).map(|&d| (d as u64).pow(p)).sum()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum ClosedFormError {
    #[error("{family} closed form needs n >= {min}, got {n}")]
    TooFewVertices { family: &'static str, min: usize, n: usize },
}

/// `SO_alpha(K_n) = 2^(alpha/2 - 1) n (n-1)^(alpha+1)`; zero for `K_1`.
pub fn closed_form_complete(n: usize, alpha: f64) -> Result<f64, ClosedFormError> {
    match n {
        0 => Err(ClosedFormError::TooFewVertices { family: "complete", min: 1, n }),
        1 => Ok(0.0),
        _ => {
            let n = n as f64;
            Ok(2f64.powf(alpha / 2.0 - 1.0) * n * (n - 1.0).powf(alpha + 1.0))
        }
    }
}

/// `SO_alpha(C_n) = 2^(3 alpha / 2) n`.
pub fn closed_form_cycle(n: usize, alpha: f64) -> Result<f64, ClosedFormError> {
    if n < 3 {
        return Err(ClosedFormError::TooFewVertices { family: "cycle", min: 3, n });
    }
    Ok(2f64.powf(1.5 * alpha) * n as f64)
}

/// `SO_alpha(K_{a,b}) = a b (a^2 + b^2)^(alpha/2)`; stars are `K_{1,k}`.
pub fn closed_form_complete_bipartite(a: usize, b: usize, alpha: f64) -> Result<f64, ClosedFormError> {
    if a == 0 || b == 0 {
        return Err(ClosedFormError::TooFewVertices { family: "complete_bipartite", min: 1, n: a.min(b) });
    }
    let (a, b) = (a as f64, b as f64);
    Ok(a * b * (a * a + b * b).powf(alpha / 2.0))
}

/// Which closed form to use for paths.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PathVariant {
    /// Two pendant edges (`1^2 + 2^2 = 5`) and `n - 3` inner edges (`2^2 + 2^2 = 8`).
    Corrected,
    /// `2 * 5^(alpha/2) + 2 (n - 3) 2^(alpha/2)`, the commonly quoted form,
    /// which only agrees with the definition at `alpha = 1` (or `n <= 3`).
    Paper,
}

/// `SO_alpha(P_n)`; `2^(alpha/2)` for `n = 2` under either variant.
pub fn closed_form_path(n: usize, alpha: f64, variant: PathVariant) -> Result<f64, ClosedFormError> {
    if n < 2 {
        return Err(ClosedFormError::TooFewVertices { family: "path", min: 2, n });
    }
    if n == 2 {
        return Ok(2f64.powf(alpha / 2.0));
    }
    let inner = (n - 3) as f64;
    let pendant = 2.0 * 5f64.powf(alpha / 2.0);
    Ok(match variant {
        PathVariant::Corrected => pendant + inner * 2f64.powf(1.5 * alpha),
        PathVariant::Paper => pendant + 2.0 * inner * 2f64.powf(alpha / 2.0),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn g(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::new(n, edges.iter().copied()).unwrap()
    }
    fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }
    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }
    fn complete(n: usize) -> Graph {
        Graph::new(n, (0..n).flat_map(|j| (0..j).map(move |i| (i, j)))).unwrap()
    }
    fn star3() -> Graph {
        g(4, &[(0, 1), (0, 2), (0, 3)])
    }

    #[test]
    fn zagreb_indices() {
        assert_eq!(first_zagreb(&cycle(5)), 20.0);
        assert_eq!(first_zagreb(&complete(4)), 36.0);
        assert_eq!(first_zagreb(&path(4)), 10.0);
        assert_eq!(first_zagreb_edge_form(&path(4)), 10.0);

        assert_eq!(second_zagreb(&path(3)), 4.0);
        assert_eq!(second_zagreb(&complete(4)), 54.0);
        assert_eq!(second_zagreb(&star3()), 9.0);
    }

    #[test]
    fn general_first_zagreb_cases() {
        assert_eq!(general_first_zagreb(&cycle(5), 3.0), Ok(40.0));
        assert_eq!(general_first_zagreb(&path(4), 2.0), Ok(10.0));
        assert_eq!(general_first_zagreb(&Graph::empty(3).unwrap(), 1.5), Ok(0.0));
        // Isolated vertices contribute 0 even at p = 0.
        assert_eq!(general_first_zagreb(&g(3, &[(0, 1)]), 0.0), Ok(2.0));
        assert!(matches!(
            general_first_zagreb(&g(3, &[(0, 1)]), -1.0),
            Err(IndexError::IsolatedVertexNegativePower { vertex: 2, .. })
        ));
    }

    #[test]
    fn forgotten_both_forms() {
        assert_eq!(forgotten(&cycle(5)), 40.0);
        assert_eq!(forgotten(&star3()), 30.0);
        assert_eq!(forgotten(&path(4)), 18.0);
        assert_eq!(general_first_zagreb(&path(4), 3.0), Ok(18.0));
    }

    #[test]
    fn randic_and_sum_connectivity() {
        assert_relative_eq!(general_randic(&complete(4), -0.5), 2.0, max_relative = 1e-15);
        assert_relative_eq!(randic(&complete(4)), 2.0, max_relative = 1e-15);
        assert_eq!(general_randic(&path(3), 1.0), 4.0);
        assert_eq!(general_randic(&path(3), -1.0), 1.0);

        assert_eq!(general_sum_connectivity(&path(4), 1.0), 10.0);
        assert_relative_eq!(general_sum_connectivity(&path(3), -1.0), 2.0 / 3.0, max_relative = 1e-15);
        assert_eq!(general_sum_connectivity(&cycle(5), 2.0), 80.0);
    }

    #[test]
    fn general_sombor_examples() {
        assert_eq!(general_sombor(&cycle(5), 2.0), 40.0);
        assert_relative_eq!(general_sombor(&star3(), 1.0), 9.486832980505138, max_relative = 1e-14);
        assert_relative_eq!(sombor(&star3()), 3.0 * 10f64.sqrt(), max_relative = 1e-15);
        for alpha in [-2.0, -0.5, 0.5, 3.0] {
            assert_eq!(general_sombor(&Graph::empty(5).unwrap(), alpha).to_bits(), 0f64.to_bits());
        }
    }

    #[test]
    fn evaluate_dispatch() {
        let c5 = cycle(5);
        assert_eq!(evaluate(&c5, IndexId::SOALPHA, Some(2.0)).unwrap().value, 40.0);
        assert_eq!(evaluate(&c5, IndexId::M1, Some(7.0)).unwrap().parameter, None);
        assert!(evaluate(&c5, IndexId::RALPHA, None).is_err());
    }

    #[test]
    fn closed_form_examples() {
        assert_relative_eq!(closed_form_complete(4, 1.0).unwrap(), 18.0 * 2f64.sqrt(), max_relative = 1e-14);
        assert_relative_eq!(
            closed_form_complete(4, 1.0).unwrap(),
            general_sombor(&complete(4), 1.0),
            max_relative = 1e-14
        );
        for alpha in [-2.0, -1.0, 0.5, 3.0] {
            assert_relative_eq!(closed_form_complete(2, alpha).unwrap(), 2f64.powf(alpha / 2.0), max_relative = 1e-15);
            assert_eq!(closed_form_complete(1, alpha), Ok(0.0));
        }

        assert_eq!(closed_form_cycle(5, 2.0), Ok(40.0));
        assert_eq!(closed_form_cycle(6, 0.0), Ok(6.0));
        assert_relative_eq!(closed_form_cycle(5, 1.0).unwrap(), 10.0 * 2f64.sqrt(), max_relative = 1e-15);
        assert!(closed_form_cycle(2, 1.0).is_err());

        assert_eq!(closed_form_path(4, 2.0, PathVariant::Corrected), Ok(18.0));
        assert_eq!(closed_form_path(4, 2.0, PathVariant::Paper), Ok(14.0));
        let expected = 2.0 * 5f64.sqrt() + 4.0 * 2f64.sqrt();
        for variant in [PathVariant::Corrected, PathVariant::Paper] {
            assert_relative_eq!(closed_form_path(5, 1.0, variant).unwrap(), expected, max_relative = 1e-14);
            assert_relative_eq!(closed_form_path(2, 3.0, variant).unwrap(), 2f64.powf(1.5), max_relative = 1e-15);
        }
        assert!(closed_form_path(1, 1.0, PathVariant::Corrected).is_err());

        // K_{1,3}: three edges of weight 1 + 9.
        assert_eq!(closed_form_complete_bipartite(1, 3, 2.0), Ok(30.0));
        assert_relative_eq!(
            closed_form_complete_bipartite(1, 3, 3.0).unwrap(),
            3.0 * 10f64.powf(1.5),
            max_relative = 1e-15
        );
        assert!(closed_form_complete_bipartite(0, 3, 1.0).is_err());
    }

    #[test]
    fn exact_paths_match_float_paths() {
        let g = star3().disjoint_union(&cycle(5));
        assert_eq!(exact::first_zagreb(&g) as f64, first_zagreb(&g));
        assert_eq!(exact::first_zagreb_edge_form(&g), exact::first_zagreb(&g));
        assert_eq!(exact::second_zagreb(&g) as f64, second_zagreb(&g));
        assert_eq!(exact::forgotten(&g), exact::general_first_zagreb(&g, 3));
    }
}
