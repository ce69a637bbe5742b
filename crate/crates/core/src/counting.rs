//! Exact counting relations between vertices, edges and faces.
//!
//! Every quantity here is computed with [`Rational`]; nothing in the
//! feasibility path touches floating point.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::figure::VertexFigure;

/// Exact fraction, always in lowest terms with a positive denominator.
pub type Rational = Ratio<i64>;

/// Which derived count failed the integrality test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Quantity {
    Vertices,
    Edges,
    /// `F_p` for the given face degree.
    Faces(u32),
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Quantity::Vertices => f.write_str("V"),
            Quantity::Edges => f.write_str("E"),
            Quantity::Faces(p) => write!(f, "F{p}"),
        }
    }
}

/// Why a vertex figure cannot close up into a map on the sphere.
///
/// This is a classification, not a failure: the enumeration oracle
/// records which test killed each candidate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Infeasible {
    /// Zero is a flat tiling, negative is hyperbolic.
    #[error("vertex-count denominator {denominator} is not positive")]
    NonPositiveDenominator { denominator: Rational },
    #[error("{quantity} = {value} is not an integer")]
    NonIntegralCount { quantity: Quantity, value: Rational },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("valence counts are required but missing")]
pub struct MissingValenceCounts;

/// Vertex, edge and face totals together with the per-degree breakdowns.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountData {
    pub vertices: u64,
    pub edges: u64,
    pub faces: u64,
    /// `F_p`: number of `p`-gonal faces.
    pub face_counts: BTreeMap<u32, u64>,
    /// `V_d`: number of vertices of degree `d`, known for realized maps.
    pub valence_counts: Option<BTreeMap<u32, u64>>,
}

impl CountData {
    /// Builds counts with `F` taken as the sum of `face_counts`.
    pub fn from_face_counts(vertices: u64, edges: u64, face_counts: BTreeMap<u32, u64>) -> Self {
        let faces = face_counts.values().sum();
        Self {
            vertices,
            edges,
            faces,
            face_counts,
            valence_counts: None,
        }
    }

    pub fn face_count(&self, p: u32) -> u64 {
        self.face_counts.get(&p).copied().unwrap_or(0)
    }

    pub fn valence_count(&self, d: u32) -> Option<u64> {
        self.valence_counts
            .as_ref()
            .map(|v| v.get(&d).copied().unwrap_or(0))
    }

    /// The handshake identities: `Σ F_p = F`, `Σ p·F_p = 2E`, and when
    /// valences are known `Σ V_d = V`, `Σ d·V_d = 2E`.
    pub fn is_consistent(&self) -> bool {
        let face_sum: u64 = self.face_counts.values().sum();
        let face_darts: u64 = self.face_counts.iter().map(|(&p, &n)| u64::from(p) * n).sum();
        if face_sum != self.faces || face_darts != 2 * self.edges {
            return false;
        }
        match &self.valence_counts {
            None => true,
            Some(valences) => {
                let vertex_sum: u64 = valences.values().sum();
                let vertex_darts: u64 = valences.iter().map(|(&d, &n)| u64::from(d) * n).sum();
                vertex_sum == self.vertices && vertex_darts == 2 * self.edges
            }
        }
    }

    /// `V − E + F`.
    pub fn euler_characteristic(&self) -> i64 {
        self.vertices as i64 - self.edges as i64 + self.faces as i64
    }
}

/// `V − E + F = 2`.
pub fn euler_check(counts: &CountData) -> bool {
    counts.euler_characteristic() == 2
}

/// Both sides of `3F₃ + 2F₄ + F₅ = 12 + Σ_{d≥4} 2(d−3)V_d + Σ_{p≥7} (p−6)F_p`.
///
/// Degrees below 3 (which cannot occur on a polyhedron) are moved to the
/// side that keeps their coefficient positive, so the identity is exactly
/// `6F − 2E = 12 − 6V + 4E` rearranged.
pub fn balance_sides(counts: &CountData) -> Result<(i64, i64), MissingValenceCounts> {
    let valences = counts.valence_counts.as_ref().ok_or(MissingValenceCounts)?;
    let mut left = 0i64;
    let mut right = 12i64;
    for (&p, &n) in &counts.face_counts {
        let coeff = 6 - i64::from(p);
        if coeff > 0 {
            left += coeff * n as i64;
        } else {
            right -= coeff * n as i64;
        }
    }
    for (&d, &n) in valences {
        let coeff = 2 * (i64::from(d) - 3);
        if coeff > 0 {
            right += coeff * n as i64;
        } else {
            left -= coeff * n as i64;
        }
    }
    Ok((left, right))
}

/// Whether the face/valence balance identity holds.
pub fn balance_check(counts: &CountData) -> Result<bool, MissingValenceCounts> {
    balance_sides(counts).map(|(l, r)| l == r)
}

/// `1 − r/2 + Σ 1/pᵢ`; the vertex count is `2` divided by this.
pub fn vertex_denominator(figure: &VertexFigure) -> Rational {
    let r = figure.valence() as i64;
    let reciprocals: Rational = figure
        .degrees()
        .iter()
        .map(|&p| Rational::new(1, i64::from(p)))
        .sum();
    Rational::one() - Rational::new(r, 2) + reciprocals
}

/// `V = 2 / (1 − r/2 + Σ 1/pᵢ)` when the denominator is positive.
pub fn vertex_count(figure: &VertexFigure) -> Result<Rational, Infeasible> {
    let denominator = vertex_denominator(figure);
    if !denominator.is_positive() {
        return Err(Infeasible::NonPositiveDenominator { denominator });
    }
    Ok(Rational::from_integer(2) / denominator)
}

/// `E = r·V/2`.
pub fn edge_count(figure: &VertexFigure, vertices: u64) -> Rational {
    Rational::new(figure.valence() as i64 * vertices as i64, 2)
}

/// `F_p = q·V/p` where `q` is the multiplicity of `p` in the figure; zero
/// when `p` does not occur.
pub fn face_count(figure: &VertexFigure, vertices: u64, p: u32) -> Rational {
    let q = figure.multiplicity(p) as i64;
    if q == 0 {
        return Rational::zero();
    }
    Rational::new(q * vertices as i64, i64::from(p))
}

fn integral(quantity: Quantity, value: Rational) -> Result<u64, Infeasible> {
    if value.is_integer() && value.is_positive() {
        Ok(value.to_integer() as u64)
    } else {
        Err(Infeasible::NonIntegralCount { quantity, value })
    }
}

/// All counts implied by a figure, provided `V`, `E` and every `F_p` are
/// positive integers.
pub fn counts(figure: &VertexFigure) -> Result<CountData, Infeasible> {
    let vertices = integral(Quantity::Vertices, vertex_count(figure)?)?;
    let edges = integral(Quantity::Edges, edge_count(figure, vertices))?;
    let mut face_counts = BTreeMap::new();
    for p in figure.distinct_degrees() {
        let n = integral(Quantity::Faces(p), face_count(figure, vertices, p))?;
        face_counts.insert(p, n);
    }
    let data = CountData::from_face_counts(vertices, edges, face_counts);
    debug_assert!(euler_check(&data), "{figure}: {data:?}");
    debug_assert!(data.is_consistent());
    Ok(data)
}

/// `V = 4p / (2p − qp + 2q)` for `q` `p`-gons at every vertex.
pub fn regular_vertex_count(p: u32, q: u32) -> Result<Rational, Infeasible> {
    let (p, q) = (i64::from(p), i64::from(q));
    let denominator = Rational::from_integer(2 * p - q * p + 2 * q);
    if !denominator.is_positive() {
        return Err(Infeasible::NonPositiveDenominator { denominator });
    }
    Ok(Rational::from_integer(4 * p) / denominator)
}

/// Every `(p, q)` with `p, q ≥ 3` and `(p − 2)(q − 2) < 4`, ascending.
///
/// Since `q − 2 ≥ 1`, the product bound forces `p − 2 < 4`, and likewise
/// for `q`, so scanning `3..=6` in each coordinate is exhaustive.
pub fn enumerate_regular() -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for p in 3..=6u32 {
        for q in 3..=6u32 {
            if (p - 2) * (q - 2) < 4 {
                out.push((p, q));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fig(d: &[u32]) -> VertexFigure {
        VertexFigure::new(d).unwrap()
    }

    fn int(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    #[test]
    fn vertex_count_matches_tables() {
        assert_eq!(vertex_count(&fig(&[3, 4, 5, 4])), Ok(int(60)));
        assert_eq!(vertex_count(&fig(&[4, 6, 8])), Ok(int(48)));
        assert_eq!(vertex_count(&fig(&[3, 3, 3, 3, 4])), Ok(int(24)));
    }

    #[test]
    fn flat_tiling_is_infeasible() {
        assert_eq!(
            vertex_count(&fig(&[3, 6, 3, 6])),
            Err(Infeasible::NonPositiveDenominator {
                denominator: Rational::zero()
            })
        );
    }

    #[test]
    fn edge_and_face_counts() {
        let cubo = fig(&[3, 4, 3, 4]);
        assert_eq!(edge_count(&cubo, 12), int(24));
        assert_eq!(face_count(&cubo, 12, 3), int(8));
        assert_eq!(face_count(&cubo, 12, 4), int(6));
        assert_eq!(face_count(&cubo, 12, 5), int(0));
        assert_eq!(edge_count(&fig(&[3, 3, 3, 3, 5]), 60), int(150));
        assert_eq!(edge_count(&fig(&[3, 3, 3]), 4), int(6));
        assert_eq!(face_count(&fig(&[4, 6, 10]), 120, 10), int(12));
    }

    #[test]
    fn counts_for_truncated_cube() {
        let c = counts(&fig(&[3, 8, 8])).unwrap();
        assert_eq!((c.vertices, c.edges, c.faces), (24, 36, 14));
        assert_eq!(c.face_count(3), 8);
        assert_eq!(c.face_count(8), 6);
        assert!(c.is_consistent());
    }

    #[test]
    fn counts_for_dodecahedron() {
        let c = counts(&fig(&[5, 5, 5])).unwrap();
        assert_eq!((c.vertices, c.edges, c.faces), (20, 30, 12));
        assert_eq!(c.face_count(5), 12);
    }

    #[test]
    fn non_integral_vertex_count() {
        assert_eq!(
            counts(&fig(&[3, 7, 7])),
            Err(Infeasible::NonIntegralCount {
                quantity: Quantity::Vertices,
                value: Rational::new(84, 5),
            })
        );
    }

    #[test]
    fn euler() {
        let c = |v, e, f| CountData {
            vertices: v,
            edges: e,
            faces: f,
            face_counts: BTreeMap::new(),
            valence_counts: None,
        };
        assert!(euler_check(&c(12, 24, 14)));
        assert!(euler_check(&c(4, 6, 4)));
        assert!(!euler_check(&c(8, 12, 5)));
    }

    fn with_valences(faces: &[(u32, u64)], valences: &[(u32, u64)], v: u64, e: u64) -> CountData {
        let mut c = CountData::from_face_counts(v, e, faces.iter().copied().collect());
        c.valence_counts = Some(valences.iter().copied().collect());
        c
    }

    #[test]
    fn balance_on_table_rows() {
        let cubo = with_valences(&[(3, 8), (4, 6)], &[(4, 12)], 12, 24);
        assert_eq!(balance_sides(&cubo), Ok((36, 36)));
        let cube = with_valences(&[(4, 6)], &[(3, 8)], 8, 12);
        assert_eq!(balance_sides(&cube), Ok((12, 12)));
        let tc = with_valences(&[(3, 8), (8, 6)], &[(3, 24)], 24, 36);
        assert_eq!(balance_sides(&tc), Ok((24, 24)));
        assert_eq!(balance_check(&tc), Ok(true));
    }

    #[test]
    fn balance_requires_valences() {
        let c = counts(&fig(&[3, 4, 3, 4])).unwrap();
        assert_eq!(balance_check(&c), Err(MissingValenceCounts));
    }

    #[test]
    fn balance_detects_imbalance() {
        let bogus = with_valences(&[(4, 5)], &[(3, 8)], 8, 12);
        assert_eq!(balance_check(&bogus), Ok(false));
    }

    #[test]
    fn regular_counts() {
        assert_eq!(regular_vertex_count(3, 3), Ok(int(4)));
        assert_eq!(regular_vertex_count(5, 3), Ok(int(20)));
        assert!(matches!(
            regular_vertex_count(6, 3),
            Err(Infeasible::NonPositiveDenominator { .. })
        ));
    }

    #[test]
    fn regular_pairs() {
        let pairs = enumerate_regular();
        assert_eq!(pairs, vec![(3, 3), (3, 4), (3, 5), (4, 3), (5, 3)]);
        assert!(!pairs.contains(&(4, 4)));
        assert!(!pairs.contains(&(3, 6)));
    }
}
