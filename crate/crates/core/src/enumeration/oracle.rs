//! Brute-force sweep over every cyclic order of faces, used to check that
//! the case analysis misses nothing.
//!
//! The sweep knows only arithmetic: positivity of the vertex-count
//! denominator and integrality of every derived count. Whatever it finds
//! beyond the case analysis must be rejected by one of the configuration
//! arguments, which are re-stated here as [`Filter`]s on single figures.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::One;
use serde::Serialize;
use thiserror::Error;

use super::{full_catalog, EnumerationError};
use crate::counting::{counts, CountData, Infeasible, Rational};
use crate::figure::VertexFigure;
use crate::solid::Solid;

/// Smallest face bound accepted by [`oracle_enumerate`].
pub const MIN_SWEEP_DEGREE: u32 = 5;
/// Smallest face bound accepted by [`oracle_diff`]; large enough to reach
/// the `3.p.p` bound `p < 12`.
pub const MIN_DIFF_DEGREE: u32 = 12;

/// Configuration argument that rules out an arithmetically feasible figure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Filter {
    /// Four-valent: no triangle is flanked by two equal faces.
    TriangleNeighborsEqual,
    /// Three-valent with a triangle: the two other faces differ.
    TriangleFlanksEqual,
    /// Three-valent `3.p.p` with `p` odd and greater than 3.
    TriangleFlankParity,
    /// Three-valent with a square: a face meeting two different face
    /// types has an odd number of sides.
    SquareFlankParity,
    /// Three-valent with a pentagon: the two other faces differ.
    PentagonFlanksEqual,
}

impl Filter {
    pub fn as_str(self) -> &'static str {
        match self {
            Filter::TriangleNeighborsEqual => "triangle-neighbors-equal",
            Filter::TriangleFlanksEqual => "triangle-flanks-equal",
            Filter::TriangleFlankParity => "triangle-flank-parity",
            Filter::SquareFlankParity => "square-flank-parity",
            Filter::PentagonFlanksEqual => "pentagon-flanks-equal",
        }
    }
}

impl fmt::Display for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The first configuration filter, in case order, that rejects `figure`.
///
/// Only meaningful for figures that pass [`arithmetic_feasible`]; the
/// filters are scoped to the branch the figure would belong to, keyed by
/// valence and smallest face.
pub fn killing_filter(figure: &VertexFigure) -> Option<Filter> {
    let d = figure.degrees();
    match figure.valence() {
        4 => {
            let flanked = (0..4).any(|i| {
                d[i] == 3 && {
                    let (a, b) = figure.neighbors(i);
                    a == b
                }
            });
            (!flanked).then_some(Filter::TriangleNeighborsEqual)
        }
        // three-valent canonical forms are sorted ascending
        3 => match (d[0], d[1], d[2]) {
            (3, a, b) if a != b => Some(Filter::TriangleFlanksEqual),
            (3, a, _) if a != 3 && a % 2 == 1 => Some(Filter::TriangleFlankParity),
            (4, a, b) if a != 4 && (a % 2 == 1 || b % 2 == 1) => Some(Filter::SquareFlankParity),
            (5, a, b) if a != b => Some(Filter::PentagonFlanksEqual),
            _ => None,
        },
        _ => None,
    }
}

/// `Ok(counts)` when the denominator is positive and `V`, `E` and every
/// `F_p` are whole numbers.
pub fn arithmetic_feasible(figure: &VertexFigure) -> Result<CountData, Infeasible> {
    counts(figure)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("face bound {given} is below the minimum {required}")]
    MaxDegreeTooSmall { given: u32, required: u32 },
    #[error("feasible figures not explained by any filter: {}", join(.0))]
    Unexplained(Vec<VertexFigure>),
    #[error("classified figures that fail the arithmetic test: {}", join(.0))]
    RealizedInfeasible(Vec<VertexFigure>),
    #[error(transparent)]
    Catalog(#[from] EnumerationError),
}

fn join(figures: &[VertexFigure]) -> String {
    figures
        .iter()
        .map(|f| f.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

/// Depth-first generation of canonical sequences with entries in
/// `first..=max_degree`, where `first` is the smallest entry.
///
/// The remaining slots can contribute at most `1/first` each, which prunes
/// every prefix that can no longer clear the positivity threshold.
fn sweep(
    r: usize,
    max_degree: u32,
    prefix: &mut Vec<u32>,
    partial: Rational,
    needed: Rational,
    out: &mut BTreeSet<VertexFigure>,
) {
    if prefix.len() == r {
        if partial <= needed {
            return;
        }
        let figure = VertexFigure::new(prefix).expect("valid degrees");
        if figure.degrees() == prefix.as_slice() && arithmetic_feasible(&figure).is_ok() {
            out.insert(figure);
        }
        return;
    }
    let smallest = prefix.first().copied();
    let lo = smallest.unwrap_or(3);
    for p in lo..=max_degree {
        let head = smallest.unwrap_or(p);
        let remaining = (r - prefix.len() - 1) as i64;
        let next = partial + Rational::new(1, i64::from(p));
        if next + Rational::new(remaining, i64::from(head)) <= needed {
            // larger p only lowers the bound
            break;
        }
        prefix.push(p);
        sweep(r, max_degree, prefix, next, needed, out);
        prefix.pop();
    }
}

fn sweep_valence(r: usize, max_degree: u32) -> BTreeSet<VertexFigure> {
    let needed = Rational::new(r as i64, 2) - Rational::one();
    let mut out = BTreeSet::new();
    sweep(
        r,
        max_degree,
        &mut Vec::with_capacity(r),
        Rational::from_integer(0),
        needed,
        &mut out,
    );
    out
}

/// Every arithmetically feasible canonical figure with valence 3 to 5 and
/// faces of `3..=max_degree` sides, counted up to rotation and reflection
/// but not up to reordering. Sorted.
pub fn oracle_enumerate(max_degree: u32) -> Result<Vec<VertexFigure>, OracleError> {
    if max_degree < MIN_SWEEP_DEGREE {
        return Err(OracleError::MaxDegreeTooSmall {
            given: max_degree,
            required: MIN_SWEEP_DEGREE,
        });
    }
    let mut all = BTreeSet::new();
    for r in 3..=5 {
        all.extend(sweep_valence(r, max_degree));
    }
    Ok(all.into_iter().collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RealizedFigure {
    pub figure: VertexFigure,
    pub solid: Solid,
    /// Family parameter, for prism and antiprism members.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sides: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpuriousFigure {
    pub figure: VertexFigure,
    pub filter: Filter,
}

/// Difference between the brute-force sweep and the case analysis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub max_degree: u32,
    pub feasible: Vec<VertexFigure>,
    pub realized: Vec<RealizedFigure>,
    pub spurious: Vec<SpuriousFigure>,
    /// Feasible, not classified, and not rejected by any filter.
    pub unexplained: Vec<VertexFigure>,
    /// Classified but not feasible.
    pub infeasible_realized: Vec<VertexFigure>,
}

impl OracleReport {
    pub fn is_complete(&self) -> bool {
        self.unexplained.is_empty() && self.infeasible_realized.is_empty()
    }

    pub fn spurious_filter(&self, figure: &VertexFigure) -> Option<Filter> {
        self.spurious
            .iter()
            .find(|s| &s.figure == figure)
            .map(|s| s.filter)
    }
}

/// Sweep plus classification of every feasible figure. Never fails on an
/// incomplete result; see [`oracle_diff`] for the checked form.
pub fn oracle_report(max_degree: u32) -> Result<OracleReport, OracleError> {
    let feasible = oracle_enumerate(max_degree)?;
    let catalog = full_catalog()?;

    // sporadic entries first, so that 4.4.4 and 3.3.3.3 keep their own names
    let ordered = catalog
        .iter()
        .filter(|c| !c.solid.is_family())
        .chain(catalog.iter().filter(|c| c.solid.is_family()));
    let mut realized: Vec<RealizedFigure> = Vec::new();
    for item in ordered {
        for figure in item.pattern.instances_up_to(max_degree) {
            if realized.iter().any(|r| r.figure == figure) {
                continue;
            }
            let sides = item
                .solid
                .is_family()
                .then(|| item.pattern.parameter_of(&figure))
                .flatten();
            realized.push(RealizedFigure {
                figure,
                solid: item.solid,
                sides,
            });
        }
    }
    realized.sort_by(|a, b| a.figure.cmp(&b.figure));

    let feasible_set: BTreeSet<&VertexFigure> = feasible.iter().collect();
    let realized_set: BTreeSet<&VertexFigure> = realized.iter().map(|r| &r.figure).collect();
    let infeasible_realized = realized
        .iter()
        .filter(|r| !feasible_set.contains(&r.figure))
        .map(|r| r.figure.clone())
        .collect();

    let mut spurious = Vec::new();
    let mut unexplained = Vec::new();
    for figure in feasible.iter().filter(|f| !realized_set.contains(f)) {
        match killing_filter(figure) {
            Some(filter) => spurious.push(SpuriousFigure {
                figure: figure.clone(),
                filter,
            }),
            None => unexplained.push(figure.clone()),
        }
    }

    Ok(OracleReport {
        max_degree,
        feasible,
        realized,
        spurious,
        unexplained,
        infeasible_realized,
    })
}

/// [`oracle_report`] with the completeness check: every feasible figure is
/// classified or filtered, and everything classified is feasible.
pub fn oracle_diff(max_degree: u32) -> Result<OracleReport, OracleError> {
    if max_degree < MIN_DIFF_DEGREE {
        return Err(OracleError::MaxDegreeTooSmall {
            given: max_degree,
            required: MIN_DIFF_DEGREE,
        });
    }
    let report = oracle_report(max_degree)?;
    if !report.infeasible_realized.is_empty() {
        return Err(OracleError::RealizedInfeasible(report.infeasible_realized));
    }
    if !report.unexplained.is_empty() {
        return Err(OracleError::Unexplained(report.unexplained));
    }
    Ok(report)
}
