//! Conway-style operators on rotation systems.
//!
//! Every operator except [`dual`] is written as a consistently oriented
//! face list over new vertex labels and rebuilt with
//! [`PolyhedralMap::from_faces`], which re-checks every map invariant.
//! Original faces keep their boundary order; faces created at an original
//! vertex walk its darts backwards (`σ⁻¹`) so that each shared edge is
//! traversed in opposite directions by its two faces.

use std::collections::{HashMap, VecDeque};

use thiserror::Error;

use super::map::{inverse, MapError, PolyhedralMap};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OperatorError {
    #[error("vertices of the bevelled map cannot be two-coloured")]
    NotBipartite,
    #[error("alternation left a face with {size} corners")]
    CollapsedFace { size: usize },
    #[error(transparent)]
    Map(#[from] MapError),
}

fn rebuild(faces: Vec<Vec<usize>>) -> PolyhedralMap {
    PolyhedralMap::from_faces(&faces).expect("operators preserve spherical maps")
}

/// Vertex-face duality: `(σ, α) ↦ (σ∘α, α)`. Applying it twice returns
/// the identical rotation system.
pub fn dual(map: &PolyhedralMap) -> PolyhedralMap {
    let n = map.dart_count();
    let rotation: Vec<usize> = (0..n).map(|d| map.face_next(d)).collect();
    PolyhedralMap::new(rotation, map.opposite().to_vec()).expect("dual of a spherical map")
}

fn vertex_cycles(map: &PolyhedralMap) -> Vec<Vec<usize>> {
    let back = inverse(map.rotation());
    (0..map.vertex_count())
        .map(|v| {
            let start = map.vertex_darts(v)[0];
            let mut cycle = vec![start];
            let mut d = back[start];
            while d != start {
                cycle.push(d);
                d = back[d];
            }
            cycle
        })
        .collect()
}

/// Cuts every vertex off: `V' = 2E`, `E' = 3E`, `F' = F + V`.
///
/// New vertices are the darts of the original map, one near each end of
/// every edge. A `p`-gon becomes a `2p`-gon and a degree-`d` vertex a
/// `d`-gon.
pub fn truncate(map: &PolyhedralMap) -> PolyhedralMap {
    let opposite = map.opposite();
    let mut faces = Vec::with_capacity(map.face_count() + map.vertex_count());
    for f in 0..map.face_count() {
        faces.push(
            map.face_darts(f)
                .into_iter()
                .flat_map(|d| [d, opposite[d]])
                .collect(),
        );
    }
    faces.extend(vertex_cycles(map));
    rebuild(faces)
}

/// Rectification: `V' = E`, `E' = 2E`, `F' = F + V`. New vertices sit
/// at edge midpoints.
pub fn ambo(map: &PolyhedralMap) -> PolyhedralMap {
    let edge = |d: usize| map.edge_of(d);
    let mut faces = Vec::with_capacity(map.face_count() + map.vertex_count());
    for f in 0..map.face_count() {
        faces.push(map.face_darts(f).into_iter().map(edge).collect());
    }
    for cycle in vertex_cycles(map) {
        faces.push(cycle.into_iter().map(edge).collect());
    }
    rebuild(faces)
}

/// `ambo∘ambo`: `V' = 2E`, `E' = 4E`, `F' = F + V + E`.
pub fn expand(map: &PolyhedralMap) -> PolyhedralMap {
    ambo(&ambo(map))
}

/// `truncate∘ambo`: `V' = 4E`, `E' = 6E`, `F' = F + V + E`. Every vertex
/// has degree 3 and every face has even length.
pub fn bevel(map: &PolyhedralMap) -> PolyhedralMap {
    truncate(&ambo(map))
}

/// Two-colouring of the vertex graph, if one exists.
pub fn two_coloring(map: &PolyhedralMap) -> Option<Vec<u8>> {
    let mut adjacency = vec![Vec::new(); map.vertex_count()];
    for (a, b) in map.edges() {
        adjacency[a].push(b);
        adjacency[b].push(a);
    }
    let mut color = vec![u8::MAX; map.vertex_count()];
    for root in 0..map.vertex_count() {
        if color[root] != u8::MAX {
            continue;
        }
        color[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &w in &adjacency[v] {
                if color[w] == u8::MAX {
                    color[w] = 1 - color[v];
                    queue.push_back(w);
                } else if color[w] == color[v] {
                    return None;
                }
            }
        }
    }
    Some(color)
}

/// Snub by alternation: `V' = 2E`, `E' = 5E`, `F' = F + V + 2E`.
///
/// The bevel is two-coloured and the colour class of vertex 0 is kept.
/// Every `2k`-gon of the bevel shrinks to a `k`-gon on the kept vertices,
/// every deleted (3-valent) vertex becomes a triangle on its neighbours,
/// and the digons left by the bevel's squares are contracted to single
/// edges by dropping them from the face list.
pub fn snub(map: &PolyhedralMap) -> Result<PolyhedralMap, OperatorError> {
    let bevelled = bevel(map);
    let color = two_coloring(&bevelled).ok_or(OperatorError::NotBipartite)?;
    let keep = color[0];

    let mut faces = Vec::new();
    // for each deleted vertex w: kept vertex after w -> kept vertex before w
    let mut around: HashMap<usize, HashMap<usize, usize>> = HashMap::new();
    for face in bevelled.faces() {
        let k = face.len();
        let kept: Vec<usize> = face.iter().copied().filter(|&v| color[v] == keep).collect();
        for (i, &w) in face.iter().enumerate() {
            if color[w] != keep {
                let before = face[(i + k - 1) % k];
                let after = face[(i + 1) % k];
                around.entry(w).or_default().insert(after, before);
            }
        }
        match kept.len() {
            2 => {} // digon: contracted
            n if n < 2 => return Err(OperatorError::CollapsedFace { size: n }),
            _ => faces.push(kept),
        }
    }

    let mut deleted: Vec<usize> = around.keys().copied().collect();
    deleted.sort_unstable();
    for w in deleted {
        let next = &around[&w];
        let start = *next.keys().min().expect("deleted vertex has neighbours");
        let mut cycle = vec![start];
        let mut v = next[&start];
        while v != start {
            cycle.push(v);
            v = next[&v];
        }
        faces.push(cycle);
    }
    Ok(PolyhedralMap::from_faces(&faces)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::realization::seeds::{platonic_seed, prism, Seed};

    fn counts(m: &PolyhedralMap) -> (usize, usize, usize) {
        (m.vertex_count(), m.edge_count(), m.face_count())
    }

    #[test]
    fn dual_is_an_involution() {
        let cube = platonic_seed(Seed::Cube);
        assert_eq!(counts(&dual(&cube)), (6, 12, 8));
        assert_eq!(dual(&dual(&cube)), cube);
    }

    #[test]
    fn truncate_cube() {
        assert_eq!(counts(&truncate(&platonic_seed(Seed::Cube))), (24, 36, 14));
    }

    #[test]
    fn ambo_and_expand() {
        let cube = platonic_seed(Seed::Cube);
        assert_eq!(counts(&ambo(&cube)), (12, 24, 14));
        assert_eq!(counts(&expand(&cube)), (24, 48, 26));
    }

    #[test]
    fn bevel_is_bipartite() {
        let b = bevel(&platonic_seed(Seed::Cube));
        assert_eq!(counts(&b), (48, 72, 26));
        assert!(two_coloring(&b).is_some());
    }

    #[test]
    fn snub_cube() {
        let s = snub(&platonic_seed(Seed::Cube)).unwrap();
        assert_eq!(counts(&s), (24, 60, 38));
    }

    #[test]
    fn odd_prism_is_not_two_colourable() {
        assert!(two_coloring(&prism(5).unwrap()).is_none());
        assert!(two_coloring(&prism(6).unwrap()).is_some());
    }
}
