//! Vertex figures: the cyclic sequence of face sizes met around a vertex.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Smallest polygon that can bound a face.
pub const MIN_FACE_DEGREE: u32 = 3;

/// Smallest number of faces that can meet at a vertex.
pub const MIN_VALENCE: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FigureError {
    #[error("vertex figure is empty")]
    Empty,
    #[error("vertex figure {degrees:?} has {len} faces, at least {MIN_VALENCE} are required")]
    TooFewFaces { degrees: Vec<u32>, len: usize },
    #[error("face degree {degree} is below {MIN_FACE_DEGREE}")]
    DegreeTooSmall { degree: u32 },
}

/// A vertex figure stored in canonical form.
///
/// The canonical form is the lexicographically least sequence among all
/// rotations of the degrees and of their reversal, so two figures that
/// agree up to rotation and reflection compare equal.
///
/// Figures are ordered first by valence, then lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct VertexFigure {
    degrees: Vec<u32>,
}

impl VertexFigure {
    /// Canonicalizes `degrees`, rejecting figures with fewer than three
    /// faces or any face with fewer than three sides.
    pub fn new(degrees: &[u32]) -> Result<Self, FigureError> {
        if degrees.is_empty() {
            return Err(FigureError::Empty);
        }
        if let Some(&degree) = degrees.iter().find(|&&d| d < MIN_FACE_DEGREE) {
            return Err(FigureError::DegreeTooSmall { degree });
        }
        if degrees.len() < MIN_VALENCE {
            return Err(FigureError::TooFewFaces {
                degrees: degrees.to_vec(),
                len: degrees.len(),
            });
        }
        Ok(Self {
            degrees: least_dihedral_rotation(degrees),
        })
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    /// Number of faces (equivalently edges) at the vertex.
    pub fn valence(&self) -> usize {
        self.degrees.len()
    }

    /// How many times a `p`-gon occurs around the vertex.
    pub fn multiplicity(&self, p: u32) -> usize {
        self.degrees.iter().filter(|&&d| d == p).count()
    }

    /// Distinct face degrees, ascending.
    pub fn distinct_degrees(&self) -> Vec<u32> {
        let mut out = self.degrees.clone();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn min_degree(&self) -> u32 {
        *self.degrees.iter().min().expect("figures are never empty")
    }

    pub fn max_degree(&self) -> u32 {
        *self.degrees.iter().max().expect("figures are never empty")
    }

    /// The two faces adjacent (cyclically) to position `i`.
    pub fn neighbors(&self, i: usize) -> (u32, u32) {
        let r = self.degrees.len();
        (self.degrees[(i + r - 1) % r], self.degrees[(i + 1) % r])
    }
}

/// Canonical form of a degree sequence, see [`VertexFigure::new`].
pub fn canonical_figure(degrees: &[u32]) -> Result<VertexFigure, FigureError> {
    VertexFigure::new(degrees)
}

fn least_dihedral_rotation(degrees: &[u32]) -> Vec<u32> {
    let r = degrees.len();
    let reversed: Vec<u32> = degrees.iter().rev().copied().collect();
    let mut best: Option<Vec<u32>> = None;
    for seq in [degrees, reversed.as_slice()] {
        for start in 0..r {
            let candidate = seq[start..].iter().chain(&seq[..start]);
            let better = match &best {
                None => true,
                Some(b) => candidate.clone().lt(b.iter()),
            };
            if better {
                best = Some(candidate.copied().collect());
            }
        }
    }
    best.expect("non-empty input")
}

impl Ord for VertexFigure {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degrees
            .len()
            .cmp(&other.degrees.len())
            .then_with(|| self.degrees.cmp(&other.degrees))
    }
}

impl PartialOrd for VertexFigure {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<u32>> for VertexFigure {
    type Error = FigureError;

    fn try_from(degrees: Vec<u32>) -> Result<Self, Self::Error> {
        Self::new(&degrees)
    }
}

impl From<VertexFigure> for Vec<u32> {
    fn from(figure: VertexFigure) -> Self {
        figure.degrees
    }
}

/// Dotted rendering, e.g. `3.4.3.4`.
impl fmt::Display for VertexFigure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, d) in self.degrees.iter().enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}
