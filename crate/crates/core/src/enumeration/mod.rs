//! The classification of vertex figures that close up on the sphere.
//!
//! [`cases`] walks the valence-by-valence case analysis and produces the
//! named solids and families. [`oracle`] independently sweeps every
//! arithmetically feasible figure and explains the difference.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;
use thiserror::Error;

use crate::counting::vertex_denominator;
use crate::figure::VertexFigure;
use crate::solid::{Class, ProofCase, Solid};

pub mod cases;
pub mod oracle;

pub use cases::{enumerate_case_r3, enumerate_case_r4, enumerate_case_r5, r4_triangle_pairs};
pub use oracle::{
    arithmetic_feasible, killing_filter, oracle_diff, oracle_enumerate, oracle_report, Filter, OracleError,
    OracleReport, RealizedFigure, SpuriousFigure, MIN_DIFF_DEGREE, MIN_SWEEP_DEGREE,
};

/// The figure, or figure family, a classification stands for.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum Pattern {
    Fixed {
        figure: VertexFigure,
    },
    /// `4.4.m` for every `m ≥ min_sides`.
    Prism {
        min_sides: u32,
    },
    /// `3.3.3.m` for every `m ≥ min_sides`.
    Antiprism {
        min_sides: u32,
    },
}

pub fn prism_figure(m: u32) -> VertexFigure {
    VertexFigure::new(&[4, 4, m]).expect("prism sides are at least 3")
}

pub fn antiprism_figure(m: u32) -> VertexFigure {
    VertexFigure::new(&[3, 3, 3, m]).expect("antiprism sides are at least 3")
}

impl Pattern {
    pub fn fixed(figure: VertexFigure) -> Self {
        Pattern::Fixed { figure }
    }

    pub fn valence(&self) -> usize {
        match self {
            Pattern::Fixed { figure } => figure.valence(),
            Pattern::Prism { .. } => 3,
            Pattern::Antiprism { .. } => 4,
        }
    }

    /// The figure itself, or the smallest family member.
    pub fn representative(&self) -> VertexFigure {
        match self {
            Pattern::Fixed { figure } => figure.clone(),
            Pattern::Prism { min_sides } => prism_figure(*min_sides),
            Pattern::Antiprism { min_sides } => antiprism_figure(*min_sides),
        }
    }

    /// Family parameter for which `figure` is a member, if any.
    pub fn parameter_of(&self, figure: &VertexFigure) -> Option<u32> {
        let d = figure.degrees();
        match self {
            Pattern::Fixed { figure: own } => (own == figure).then_some(0),
            Pattern::Prism { min_sides } => match d {
                // canonical forms of 4.4.m are 3.4.4 (m = 3) or 4.4.m (m ≥ 4)
                [3, 4, 4] if *min_sides <= 3 => Some(3),
                [4, 4, m] if m >= min_sides => Some(*m),
                _ => None,
            },
            Pattern::Antiprism { min_sides } => match d {
                [3, 3, 3, m] if m >= min_sides => Some(*m),
                _ => None,
            },
        }
    }

    pub fn matches(&self, figure: &VertexFigure) -> bool {
        self.parameter_of(figure).is_some()
    }

    /// Every figure matched by the pattern whose largest face is at most
    /// `max_degree`.
    pub fn instances_up_to(&self, max_degree: u32) -> Vec<VertexFigure> {
        match self {
            Pattern::Fixed { figure } => {
                if figure.max_degree() <= max_degree {
                    vec![figure.clone()]
                } else {
                    Vec::new()
                }
            }
            Pattern::Prism { min_sides } => (*min_sides..=max_degree).map(prism_figure).collect(),
            Pattern::Antiprism { min_sides } => (*min_sides..=max_degree).map(antiprism_figure).collect(),
        }
    }
}

/// A solid or family produced by the case analysis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub solid: Solid,
    pub pattern: Pattern,
    /// The branches that produced it; one for every sporadic solid.
    pub proof_cases: BTreeSet<ProofCase>,
}

impl Classification {
    pub fn new(solid: Solid, pattern: Pattern, case: ProofCase) -> Self {
        Self {
            solid,
            pattern,
            proof_cases: BTreeSet::from([case]),
        }
    }

    pub fn name(&self) -> &'static str {
        self.solid.name()
    }

    pub fn class(&self) -> Class {
        self.solid.class()
    }

    /// The single figure of a sporadic entry.
    pub fn figure(&self) -> Option<&VertexFigure> {
        match &self.pattern {
            Pattern::Fixed { figure } => Some(figure),
            _ => None,
        }
    }

    fn sort_key(&self) -> (VertexFigure, Solid) {
        (self.pattern.representative(), self.solid)
    }
}

/// Canonical result ordering: valence, then representative figure.
pub fn sort_classifications(items: &mut [Classification]) {
    items.sort_by_key(Classification::sort_key);
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("{0} was produced by more than one case")]
    DuplicateSolid(Solid),
    #[error("the {0} family members produced by different cases do not form one range")]
    FamilyGap(Solid),
    #[error(
        "expected 5 platonic, 13 archimedean and 2 families, got {platonic}, {archimedean} and {families}"
    )]
    Cardinality {
        platonic: usize,
        archimedean: usize,
        families: usize,
    },
}

/// Largest number of faces that can meet at a vertex.
///
/// With every face a triangle the vertex-count denominator is `1 − r/6`,
/// and larger faces only shrink it, so the first valence at which the
/// all-triangle figure stops being positive bounds every figure.
pub fn max_valence() -> usize {
    let mut r = 3;
    loop {
        let all_triangles = VertexFigure::new(&vec![3; r + 1]).expect("valid figure");
        if vertex_denominator(&all_triangles) <= num_traits::Zero::zero() {
            return r;
        }
        r += 1;
    }
}

fn family_range(item: &Classification) -> (u32, Solid) {
    let m = match &item.pattern {
        Pattern::Fixed { figure } => {
            let family = match item.solid {
                Solid::Prism => Pattern::Prism { min_sides: 3 },
                _ => Pattern::Antiprism { min_sides: 3 },
            };
            family.parameter_of(figure).expect("family member")
        }
        Pattern::Prism { min_sides } | Pattern::Antiprism { min_sides } => *min_sides,
    };
    (m, item.solid)
}

/// Union of the three valence cases, with family members from different
/// cases merged into a single family entry.
pub fn full_catalog() -> Result<Vec<Classification>, EnumerationError> {
    let all: Vec<Classification> = enumerate_case_r5()
        .into_iter()
        .chain(enumerate_case_r4())
        .chain(enumerate_case_r3())
        .collect();

    let mut sporadic: BTreeMap<Solid, Classification> = BTreeMap::new();
    let mut families: BTreeMap<Solid, Vec<Classification>> = BTreeMap::new();
    for item in all {
        if item.solid.is_family() {
            families.entry(item.solid).or_default().push(item);
        } else if sporadic.insert(item.solid, item.clone()).is_some() {
            return Err(EnumerationError::DuplicateSolid(item.solid));
        }
    }

    let mut out: Vec<Classification> = sporadic.into_values().collect();
    for (solid, parts) in families {
        let fixed: BTreeSet<u32> = parts
            .iter()
            .filter(|p| matches!(p.pattern, Pattern::Fixed { .. }))
            .map(|p| family_range(p).0)
            .collect();
        let open = parts
            .iter()
            .filter(|p| !matches!(p.pattern, Pattern::Fixed { .. }))
            .map(|p| family_range(p).0)
            .min()
            .ok_or(EnumerationError::FamilyGap(solid))?;
        // every fixed member must sit just below or inside the open range
        let mut lower = open;
        for &m in fixed.iter().rev() {
            if m + 1 == lower {
                lower = m;
            } else if m < lower {
                return Err(EnumerationError::FamilyGap(solid));
            }
        }
        let pattern = match solid {
            Solid::Prism => Pattern::Prism { min_sides: lower },
            _ => Pattern::Antiprism { min_sides: lower },
        };
        let proof_cases = parts.iter().flat_map(|p| p.proof_cases.iter().copied()).collect();
        out.push(Classification {
            solid,
            pattern,
            proof_cases,
        });
    }

    let count = |class| out.iter().filter(|c| c.class() == class).count();
    let platonic = count(Class::Platonic);
    let archimedean = count(Class::Archimedean);
    let families = count(Class::PrismFamily) + count(Class::AntiprismFamily);
    if (platonic, archimedean, families) != (5, 13, 2) {
        return Err(EnumerationError::Cardinality {
            platonic,
            archimedean,
            families,
        });
    }
    sort_classifications(&mut out);
    Ok(out)
}
