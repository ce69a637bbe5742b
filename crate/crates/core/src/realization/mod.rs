//! Every classified figure built as a map on the sphere.
//!
//! Sporadic solids come from the Platonic seeds through [`operators`];
//! prisms and antiprisms have direct generators. The results are checked
//! with [`analyze`] rather than trusted.

use serde::Serialize;
use thiserror::Error;

use crate::enumeration::Classification;
use crate::figure::VertexFigure;
use crate::solid::Solid;

pub mod analyze;
pub mod map;
pub mod operators;
pub mod seeds;

pub use analyze::{analyze, MapReport};
pub use map::{MapError, PolyhedralMap};
pub use operators::{ambo, bevel, dual, expand, snub, truncate, two_coloring, OperatorError};
pub use seeds::{antiprism, platonic_seed, prism, Seed, SeedError};

/// Smallest family parameter the generators accept.
pub const MIN_FAMILY_SIDES: u32 = 3;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RealizeError {
    #[error("{0} needs a side count")]
    MissingSides(Solid),
    #[error("{solid} needs at least {MIN_FAMILY_SIDES} sides, got {sides}")]
    SidesBelowBound { solid: Solid, sides: u32 },
    #[error("realized {solid} is not uniform with figure {expected}")]
    FigureMismatch { solid: Solid, expected: VertexFigure },
    #[error(transparent)]
    Operator(#[from] OperatorError),
    #[error(transparent)]
    Seed(#[from] SeedError),
}

/// Builds a named solid, or family member with `sides` sides.
pub fn realize_solid(solid: Solid, sides: Option<u32>) -> Result<PolyhedralMap, RealizeError> {
    use Solid::*;
    let seed = platonic_seed;
    let map = match solid {
        Tetrahedron => seed(Seed::Tetrahedron),
        Cube => seed(Seed::Cube),
        Octahedron => seed(Seed::Octahedron),
        Dodecahedron => seed(Seed::Dodecahedron),
        Icosahedron => seed(Seed::Icosahedron),
        TruncatedTetrahedron => truncate(&seed(Seed::Tetrahedron)),
        TruncatedCube => truncate(&seed(Seed::Cube)),
        TruncatedOctahedron => truncate(&seed(Seed::Octahedron)),
        TruncatedDodecahedron => truncate(&seed(Seed::Dodecahedron)),
        TruncatedIcosahedron => truncate(&seed(Seed::Icosahedron)),
        Cuboctahedron => ambo(&seed(Seed::Cube)),
        Icosidodecahedron => ambo(&seed(Seed::Dodecahedron)),
        SmallRhombicuboctahedron => expand(&seed(Seed::Cube)),
        SmallRhombicosidodecahedron => expand(&seed(Seed::Dodecahedron)),
        GreatRhombicuboctahedron => bevel(&seed(Seed::Cube)),
        GreatRhombicosidodecahedron => bevel(&seed(Seed::Dodecahedron)),
        SnubCube => snub(&seed(Seed::Cube))?,
        SnubDodecahedron => snub(&seed(Seed::Dodecahedron))?,
        Prism | Antiprism => {
            let sides = sides.ok_or(RealizeError::MissingSides(solid))?;
            if sides < MIN_FAMILY_SIDES {
                return Err(RealizeError::SidesBelowBound { solid, sides });
            }
            if solid == Prism {
                prism(sides)?
            } else {
                antiprism(sides)?
            }
        }
    };
    Ok(map)
}

/// Builds a classification and checks that the result is uniform with the
/// classified figure. `sides` is required for families and ignored
/// otherwise.
pub fn realize(entry: &Classification, sides: Option<u32>) -> Result<PolyhedralMap, RealizeError> {
    let map = realize_solid(entry.solid, sides)?;
    let expected = match entry.figure() {
        Some(figure) => figure.clone(),
        None => match entry.solid {
            Solid::Prism => crate::enumeration::prism_figure(sides.unwrap_or_default()),
            _ => crate::enumeration::antiprism_figure(sides.unwrap_or_default()),
        },
    };
    let report = analyze(&map);
    if report.figure() != Some(&expected) {
        return Err(RealizeError::FigureMismatch {
            solid: entry.solid,
            expected,
        });
    }
    Ok(map)
}

/// JSON form of a realized map.
#[derive(Debug, Clone, Serialize)]
pub struct MapDocument {
    pub name: String,
    #[serde(rename = "V")]
    pub vertices: usize,
    #[serde(rename = "E")]
    pub edges: usize,
    #[serde(rename = "F")]
    pub faces: usize,
    pub report: MapReport,
    pub face_list: Vec<Vec<usize>>,
}

impl MapDocument {
    pub fn new(name: impl Into<String>, map: &PolyhedralMap) -> Self {
        Self {
            name: name.into(),
            vertices: map.vertex_count(),
            edges: map.edge_count(),
            faces: map.face_count(),
            report: analyze(map),
            face_list: map.faces(),
        }
    }
}
