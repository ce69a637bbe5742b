//! Starting maps: the Platonic solids, prisms and antiprisms.

use std::str::FromStr;

use thiserror::Error;

use super::map::PolyhedralMap;
use super::operators::dual;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeedError {
    #[error("unknown seed `{0}`, expected tetrahedron, cube, octahedron, dodecahedron or icosahedron")]
    UnknownSeed(String),
    #[error("a polygonal family member needs at least 3 sides, got {0}")]
    TooFewSides(u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Seed {
    Tetrahedron,
    Cube,
    Octahedron,
    Dodecahedron,
    Icosahedron,
}

impl FromStr for Seed {
    type Err = SeedError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "tetrahedron" => Ok(Seed::Tetrahedron),
            "cube" => Ok(Seed::Cube),
            "octahedron" => Ok(Seed::Octahedron),
            "dodecahedron" => Ok(Seed::Dodecahedron),
            "icosahedron" => Ok(Seed::Icosahedron),
            _ => Err(SeedError::UnknownSeed(s.to_string())),
        }
    }
}

fn build(faces: Vec<Vec<usize>>) -> PolyhedralMap {
    PolyhedralMap::from_faces(&faces).expect("seed face lists are valid")
}

fn tetrahedron() -> PolyhedralMap {
    build(vec![vec![0, 1, 2], vec![0, 2, 3], vec![0, 3, 1], vec![1, 3, 2]])
}

/// Pentagonal antiprism with both pentagons replaced by five-triangle caps.
fn icosahedron() -> PolyhedralMap {
    let (top, bottom) = (10, 11);
    let upper = |i: usize| i % 5;
    let lower = |i: usize| 5 + i % 5;
    let mut faces = Vec::with_capacity(20);
    for i in 0..5 {
        faces.push(vec![top, upper(i), upper(i + 1)]);
        faces.push(vec![upper(i), lower(i), upper(i + 1)]);
        faces.push(vec![upper(i + 1), lower(i), lower(i + 1)]);
        faces.push(vec![bottom, lower(i + 1), lower(i)]);
    }
    build(faces)
}

pub fn platonic_seed(seed: Seed) -> PolyhedralMap {
    match seed {
        Seed::Tetrahedron => tetrahedron(),
        Seed::Cube => prism(4).expect("four sides"),
        Seed::Octahedron => dual(&platonic_seed(Seed::Cube)),
        Seed::Icosahedron => icosahedron(),
        Seed::Dodecahedron => dual(&icosahedron()),
    }
}

/// `n`-gonal prism: `V = 2n`, `E = 3n`, `F = n + 2`.
pub fn prism(n: u32) -> Result<PolyhedralMap, SeedError> {
    if n < 3 {
        return Err(SeedError::TooFewSides(n));
    }
    let n = n as usize;
    let top = |i: usize| i % n;
    let bottom = |i: usize| n + i % n;
    let mut faces = Vec::with_capacity(n + 2);
    faces.push((0..n).map(top).collect());
    faces.push((0..n).rev().map(bottom).collect());
    for i in 0..n {
        faces.push(vec![top(i), bottom(i), bottom(i + 1), top(i + 1)]);
    }
    Ok(build(faces))
}

/// `n`-gonal antiprism: `V = 2n`, `E = 4n`, `F = 2n + 2`.
pub fn antiprism(n: u32) -> Result<PolyhedralMap, SeedError> {
    if n < 3 {
        return Err(SeedError::TooFewSides(n));
    }
    let n = n as usize;
    let top = |i: usize| i % n;
    let bottom = |i: usize| n + i % n;
    let mut faces = Vec::with_capacity(2 * n + 2);
    faces.push((0..n).map(top).collect());
    faces.push((0..n).rev().map(bottom).collect());
    for i in 0..n {
        faces.push(vec![top(i), bottom(i), top(i + 1)]);
        faces.push(vec![top(i + 1), bottom(i), bottom(i + 1)]);
    }
    Ok(build(faces))
}
