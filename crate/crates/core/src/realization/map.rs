use std::collections::{BTreeSet, HashMap, VecDeque};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error("a map needs at least one edge")]
    Empty,
    #[error("rotation has {rotation} darts but the edge involution has {opposite}")]
    LengthMismatch { rotation: usize, opposite: usize },
    #[error("the vertex rotation is not a permutation")]
    NotPermutation,
    #[error("dart {dart} is not paired with a distinct opposite dart")]
    BadInvolution { dart: usize },
    #[error("the map is not connected")]
    Disconnected,
    #[error("V - E + F = {characteristic}, expected 2")]
    NotSpherical { characteristic: i64 },
    #[error("face {face} has fewer than two corners")]
    DegenerateFace { face: usize },
    #[error("directed edge {from} -> {to} occurs twice")]
    RepeatedEdge { from: usize, to: usize },
    #[error("directed edge {from} -> {to} has no reverse")]
    UnmatchedEdge { from: usize, to: usize },
    #[error("vertex {vertex} is not a disc: its corners form more than one cycle")]
    PinchedVertex { vertex: usize },
}

/// A map on the sphere as a rotation system.
///
/// Darts are `0..2E`. `rotation` (σ) sends a dart to the next dart around
/// the same vertex; `opposite` (α) swaps the two darts of an edge. Faces
/// are the orbits of `σ∘α`, i.e. `face_next(d) = rotation[opposite[d]]`.
///
/// Vertices, edges and faces are numbered in order of discovery when
/// scanning darts from 0, which makes every derived listing deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyhedralMap {
    rotation: Vec<usize>,
    opposite: Vec<usize>,
    vertex_of: Vec<usize>,
    edge_of: Vec<usize>,
    face_of: Vec<usize>,
    vertex_start: Vec<usize>,
    face_start: Vec<usize>,
    edge_count: usize,
}

fn orbits(n: usize, next: impl Fn(usize) -> usize) -> (Vec<usize>, Vec<usize>) {
    let mut label = vec![usize::MAX; n];
    let mut starts = Vec::new();
    for d in 0..n {
        if label[d] != usize::MAX {
            continue;
        }
        let id = starts.len();
        starts.push(d);
        let mut x = d;
        while label[x] == usize::MAX {
            label[x] = id;
            x = next(x);
        }
    }
    (label, starts)
}

impl PolyhedralMap {
    /// Validates and indexes a rotation system: `opposite` must be a
    /// fixed-point-free involution, `rotation` a permutation, the two must
    /// generate a transitive action, and the result must have Euler
    /// characteristic 2.
    pub fn new(rotation: Vec<usize>, opposite: Vec<usize>) -> Result<Self, MapError> {
        let n = rotation.len();
        if n == 0 {
            return Err(MapError::Empty);
        }
        if opposite.len() != n {
            return Err(MapError::LengthMismatch {
                rotation: n,
                opposite: opposite.len(),
            });
        }
        let mut seen = vec![false; n];
        for &d in &rotation {
            if d >= n || std::mem::replace(&mut seen[d], true) {
                return Err(MapError::NotPermutation);
            }
        }
        for (d, &o) in opposite.iter().enumerate() {
            if o >= n || o == d || opposite[o] != d {
                return Err(MapError::BadInvolution { dart: d });
            }
        }

        let mut reached = vec![false; n];
        let mut queue = VecDeque::from([0]);
        reached[0] = true;
        while let Some(d) = queue.pop_front() {
            for e in [rotation[d], opposite[d]] {
                if !reached[e] {
                    reached[e] = true;
                    queue.push_back(e);
                }
            }
        }
        if reached.iter().any(|r| !r) {
            return Err(MapError::Disconnected);
        }

        let (vertex_of, vertex_start) = orbits(n, |d| rotation[d]);
        let (edge_of, edge_starts) = orbits(n, |d| opposite[d]);
        let (face_of, face_start) = orbits(n, |d| rotation[opposite[d]]);
        let characteristic = vertex_start.len() as i64 - edge_starts.len() as i64 + face_start.len() as i64;
        if characteristic != 2 {
            return Err(MapError::NotSpherical { characteristic });
        }
        Ok(Self {
            rotation,
            opposite,
            vertex_of,
            edge_of,
            face_of,
            vertex_start,
            face_start,
            edge_count: edge_starts.len(),
        })
    }

    /// Builds a map from consistently oriented faces, each a cyclic list of
    /// vertex labels. Labels need not be contiguous; they are renumbered in
    /// order of first appearance.
    ///
    /// Every directed edge `u → v` must occur in exactly one face and its
    /// reverse in exactly one other.
    pub fn from_faces(faces: &[Vec<usize>]) -> Result<Self, MapError> {
        let mut dart_of: HashMap<(usize, usize), usize> = HashMap::new();
        let mut tail = Vec::new();
        let mut face_next = Vec::new();
        for (fi, face) in faces.iter().enumerate() {
            if face.len() < 2 {
                return Err(MapError::DegenerateFace { face: fi });
            }
            let base = tail.len();
            let k = face.len();
            for i in 0..k {
                let (u, v) = (face[i], face[(i + 1) % k]);
                if dart_of.insert((u, v), base + i).is_some() {
                    return Err(MapError::RepeatedEdge { from: u, to: v });
                }
                tail.push(u);
                face_next.push(base + (i + 1) % k);
            }
        }
        let n = tail.len();
        if n == 0 {
            return Err(MapError::Empty);
        }
        let mut opposite = vec![0; n];
        for (&(u, v), &d) in &dart_of {
            opposite[d] = *dart_of
                .get(&(v, u))
                .ok_or(MapError::UnmatchedEdge { from: u, to: v })?;
        }
        // face_next = σ∘α and α is an involution, so σ = face_next∘α
        let rotation: Vec<usize> = (0..n).map(|d| face_next[opposite[d]]).collect();
        let map = Self::new(rotation, opposite)?;

        let labels: BTreeSet<usize> = tail.iter().copied().collect();
        if labels.len() != map.vertex_count() {
            let mut owner: HashMap<usize, usize> = HashMap::new();
            for (&label, &v) in tail.iter().zip(&map.vertex_of) {
                if *owner.entry(label).or_insert(v) != v {
                    return Err(MapError::PinchedVertex { vertex: label });
                }
            }
        }
        Ok(map)
    }

    pub fn dart_count(&self) -> usize {
        self.rotation.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_start.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn face_count(&self) -> usize {
        self.face_start.len()
    }

    /// σ
    pub fn rotation(&self) -> &[usize] {
        &self.rotation
    }

    /// α
    pub fn opposite(&self) -> &[usize] {
        &self.opposite
    }

    /// `σ∘α`: the next dart along the same face.
    pub fn face_next(&self, dart: usize) -> usize {
        self.rotation[self.opposite[dart]]
    }

    pub fn vertex_of(&self, dart: usize) -> usize {
        self.vertex_of[dart]
    }

    pub fn edge_of(&self, dart: usize) -> usize {
        self.edge_of[dart]
    }

    pub fn face_of(&self, dart: usize) -> usize {
        self.face_of[dart]
    }

    /// Darts leaving `vertex`, in rotation order.
    pub fn vertex_darts(&self, vertex: usize) -> Vec<usize> {
        cycle(self.vertex_start[vertex], |d| self.rotation[d])
    }

    /// Darts along `face`, in boundary order.
    pub fn face_darts(&self, face: usize) -> Vec<usize> {
        cycle(self.face_start[face], |d| self.face_next(d))
    }

    pub fn valence(&self, vertex: usize) -> usize {
        self.vertex_darts(vertex).len()
    }

    pub fn face_size(&self, face: usize) -> usize {
        self.face_darts(face).len()
    }

    /// Each face as the cyclic list of its vertex indices.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        (0..self.face_count())
            .map(|f| {
                self.face_darts(f)
                    .into_iter()
                    .map(|d| self.vertex_of[d])
                    .collect()
            })
            .collect()
    }

    /// Endpoints of every edge, lower vertex index first.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = vec![(0, 0); self.edge_count];
        for d in 0..self.dart_count() {
            let (a, b) = (self.vertex_of[d], self.vertex_of[self.opposite[d]]);
            out[self.edge_of[d]] = (a.min(b), a.max(b));
        }
        out
    }

    /// The face-list document: a header line `V E F`, then one line per
    /// face with its vertex indices separated by spaces.
    pub fn face_list(&self) -> String {
        let mut out = format!(
            "{} {} {}\n",
            self.vertex_count(),
            self.edge_count(),
            self.face_count()
        );
        for face in self.faces() {
            let line: Vec<String> = face.iter().map(|v| v.to_string()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }
}

fn cycle(start: usize, next: impl Fn(usize) -> usize) -> Vec<usize> {
    let mut out = vec![start];
    let mut d = next(start);
    while d != start {
        out.push(d);
        d = next(d);
    }
    out
}

pub(crate) fn inverse(perm: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; perm.len()];
    for (i, &p) in perm.iter().enumerate() {
        inv[p] = i;
    }
    inv
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tetrahedron() -> Vec<Vec<usize>> {
        vec![vec![0, 1, 2], vec![0, 2, 3], vec![0, 3, 1], vec![1, 3, 2]]
    }

    #[test]
    fn tetrahedron_from_faces() {
        let m = PolyhedralMap::from_faces(&tetrahedron()).unwrap();
        assert_eq!((m.vertex_count(), m.edge_count(), m.face_count()), (4, 6, 4));
        assert_eq!(m.faces(), tetrahedron());
        for v in 0..4 {
            assert_eq!(m.valence(v), 3);
        }
    }

    #[test]
    fn face_list_text() {
        let m = PolyhedralMap::from_faces(&tetrahedron()).unwrap();
        assert_eq!(m.face_list(), "4 6 4\n0 1 2\n0 2 3\n0 3 1\n1 3 2\n");
    }

    #[test]
    fn labels_are_renumbered() {
        let faces: Vec<Vec<usize>> = tetrahedron()
            .into_iter()
            .map(|f| f.into_iter().map(|v| 10 * v + 7).collect())
            .collect();
        let m = PolyhedralMap::from_faces(&faces).unwrap();
        assert_eq!(m.faces(), tetrahedron());
    }

    #[test]
    fn inconsistent_orientation_is_rejected() {
        let mut faces = tetrahedron();
        faces[3].reverse();
        assert!(matches!(
            PolyhedralMap::from_faces(&faces),
            Err(MapError::RepeatedEdge { .. })
        ));
    }

    #[test]
    fn open_surface_is_rejected() {
        let faces = tetrahedron()[..3].to_vec();
        assert!(matches!(
            PolyhedralMap::from_faces(&faces),
            Err(MapError::UnmatchedEdge { .. })
        ));
    }

    #[test]
    fn torus_is_rejected() {
        // 3x3 grid of squares with opposite sides identified
        let idx = |i: usize, j: usize| (i % 3) * 3 + (j % 3);
        let mut faces = Vec::new();
        for i in 0..3 {
            for j in 0..3 {
                faces.push(vec![idx(i, j), idx(i + 1, j), idx(i + 1, j + 1), idx(i, j + 1)]);
            }
        }
        assert_eq!(
            PolyhedralMap::from_faces(&faces),
            Err(MapError::NotSpherical { characteristic: 0 })
        );
    }

    #[test]
    fn raw_permutation_checks() {
        assert_eq!(PolyhedralMap::new(vec![], vec![]), Err(MapError::Empty));
        assert_eq!(
            PolyhedralMap::new(vec![0, 1], vec![0, 1]),
            Err(MapError::BadInvolution { dart: 0 })
        );
        assert_eq!(
            PolyhedralMap::new(vec![0, 0], vec![1, 0]),
            Err(MapError::NotPermutation)
        );
        // a single edge between two vertices: V=2, E=1, F=1
        let m = PolyhedralMap::new(vec![0, 1], vec![1, 0]).unwrap();
        assert_eq!((m.vertex_count(), m.edge_count(), m.face_count()), (2, 1, 1));
    }

    #[test]
    fn two_components_are_rejected() {
        assert_eq!(
            PolyhedralMap::new(vec![0, 1, 2, 3], vec![1, 0, 3, 2]),
            Err(MapError::Disconnected)
        );
    }
}
