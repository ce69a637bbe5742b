use std::collections::BTreeMap;

use serde::Serialize;

use super::map::PolyhedralMap;
use super::operators::two_coloring;
use crate::counting::{balance_check, euler_check, CountData};
use crate::figure::VertexFigure;

/// Combinatorial summary of a realized map.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MapReport {
    /// Includes `valence_counts`.
    pub counts: CountData,
    /// How many vertices carry each figure, keyed by dotted figure in JSON.
    #[serde(serialize_with = "figures_by_name")]
    pub figures: BTreeMap<VertexFigure, usize>,
    /// Vertices whose incident faces do not form a valid figure (a face of
    /// fewer than three sides, or fewer than three faces).
    pub malformed_vertices: usize,
    /// Every vertex carries the same figure.
    pub uniform: bool,
    pub bipartite: bool,
    pub euler: bool,
    pub balanced: bool,
}

fn figures_by_name<S: serde::Serializer>(
    figures: &BTreeMap<VertexFigure, usize>,
    serializer: S,
) -> Result<S::Ok, S::Error> {
    serializer.collect_map(figures.iter().map(|(f, n)| (f.to_string(), n)))
}

impl MapReport {
    /// The shared figure of a uniform map.
    pub fn figure(&self) -> Option<&VertexFigure> {
        if self.uniform {
            self.figures.keys().next()
        } else {
            None
        }
    }

    /// All structural checks: Euler characteristic, face/valence balance
    /// and a uniform vertex figure.
    pub fn passes(&self) -> bool {
        self.euler && self.balanced && self.uniform
    }
}

/// The cyclic sequence of face sizes around `vertex`, in rotation order.
pub fn vertex_face_sizes(map: &PolyhedralMap, vertex: usize) -> Vec<u32> {
    map.vertex_darts(vertex)
        .into_iter()
        .map(|d| map.face_size(map.face_of(d)) as u32)
        .collect()
}

pub fn analyze(map: &PolyhedralMap) -> MapReport {
    let face_sizes: Vec<u32> = (0..map.face_count()).map(|f| map.face_size(f) as u32).collect();
    let mut face_counts = BTreeMap::new();
    for &size in &face_sizes {
        *face_counts.entry(size).or_insert(0u64) += 1;
    }
    let mut valence_counts = BTreeMap::new();
    let mut figures = BTreeMap::new();
    let mut malformed_vertices = 0;
    for v in 0..map.vertex_count() {
        let sizes: Vec<u32> = map
            .vertex_darts(v)
            .into_iter()
            .map(|d| face_sizes[map.face_of(d)])
            .collect();
        *valence_counts.entry(sizes.len() as u32).or_insert(0u64) += 1;
        match VertexFigure::new(&sizes) {
            Ok(figure) => *figures.entry(figure).or_insert(0) += 1,
            Err(_) => malformed_vertices += 1,
        }
    }

    let mut counts =
        CountData::from_face_counts(map.vertex_count() as u64, map.edge_count() as u64, face_counts);
    counts.valence_counts = Some(valence_counts);

    MapReport {
        euler: euler_check(&counts),
        balanced: balance_check(&counts).expect("valences were filled in"),
        uniform: malformed_vertices == 0 && figures.len() == 1,
        bipartite: two_coloring(map).is_some(),
        counts,
        figures,
        malformed_vertices,
    }
}
