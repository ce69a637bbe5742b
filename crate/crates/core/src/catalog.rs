//! Reference data for the regular and semiregular polyhedra, independent
//! of the enumeration, plus the `a^b.c^d` symbol grammar and the JSON/CSV
//! serializations.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::Serialize;
use thiserror::Error;

use crate::counting::{counts, CountData};
use crate::enumeration::{Classification, Pattern};
use crate::figure::{FigureError, VertexFigure};
use crate::solid::{Class, ProofCase, Solid};

/// Face-degree columns of the CSV layout.
pub const CSV_FACE_DEGREES: [u32; 6] = [3, 4, 5, 6, 8, 10];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub solid: Solid,
    pub symbol: &'static str,
    /// `None` for families.
    pub figure: Option<VertexFigure>,
    /// `None` for families.
    pub counts: Option<CountData>,
    /// Smallest family parameter.
    pub family_param_bound: Option<u32>,
    pub proof_cases: BTreeSet<ProofCase>,
    pub notes: Option<&'static str>,
}

impl CatalogEntry {
    pub fn name(&self) -> &'static str {
        self.solid.name()
    }

    pub fn class(&self) -> Class {
        self.solid.class()
    }

    pub fn pattern(&self) -> Pattern {
        match (self.solid, &self.figure, self.family_param_bound) {
            (Solid::Prism, _, Some(m)) => Pattern::Prism { min_sides: m },
            (Solid::Antiprism, _, Some(m)) => Pattern::Antiprism { min_sides: m },
            (_, Some(figure), _) => Pattern::fixed(figure.clone()),
            _ => unreachable!("catalog entries carry a figure or a family bound"),
        }
    }

    /// The family member with `m` sides, parsed from the symbol.
    pub fn instance(&self, m: u32) -> Result<VertexFigure, SymbolError> {
        parse_family_symbol(self.symbol, m)
    }
}

struct Row {
    solid: Solid,
    symbol: &'static str,
    degrees: &'static [u32],
    v: u64,
    e: u64,
    f: u64,
    faces: &'static [(u32, u64)],
    case: ProofCase,
    notes: Option<&'static str>,
}

const TRUNCATED_ICOSAHEDRON_NOTE: &str =
    "sometimes misprinted as 4.6.10, the great rhombicosidodecahedron symbol; 5.6^2 matches F5=12, F6=20";

#[rustfmt::skip]
const ROWS: &[Row] = &[
    Row { solid: Solid::Tetrahedron, symbol: "3^3", degrees: &[3, 3, 3], v: 4, e: 6, f: 4, faces: &[(3, 4)], case: ProofCase::R3Triangle, notes: None },
    Row { solid: Solid::Octahedron, symbol: "3^4", degrees: &[3, 3, 3, 3], v: 6, e: 12, f: 8, faces: &[(3, 8)], case: ProofCase::R4Triangle, notes: None },
    Row { solid: Solid::Icosahedron, symbol: "3^5", degrees: &[3, 3, 3, 3, 3], v: 12, e: 30, f: 20, faces: &[(3, 20)], case: ProofCase::R5Triangle, notes: None },
    Row { solid: Solid::Cube, symbol: "4^3", degrees: &[4, 4, 4], v: 8, e: 12, f: 6, faces: &[(4, 6)], case: ProofCase::R3Square, notes: None },
    Row { solid: Solid::Dodecahedron, symbol: "5^3", degrees: &[5, 5, 5], v: 20, e: 30, f: 12, faces: &[(5, 12)], case: ProofCase::R3Pentagon, notes: None },
    Row { solid: Solid::Cuboctahedron, symbol: "(3.4)^2", degrees: &[3, 4, 3, 4], v: 12, e: 24, f: 14, faces: &[(3, 8), (4, 6)], case: ProofCase::R4Triangle, notes: None },
    Row { solid: Solid::GreatRhombicosidodecahedron, symbol: "4.6.10", degrees: &[4, 6, 10], v: 120, e: 180, f: 62, faces: &[(4, 30), (6, 20), (10, 12)], case: ProofCase::R3Square, notes: None },
    Row { solid: Solid::GreatRhombicuboctahedron, symbol: "4.6.8", degrees: &[4, 6, 8], v: 48, e: 72, f: 26, faces: &[(4, 12), (6, 8), (8, 6)], case: ProofCase::R3Square, notes: None },
    Row { solid: Solid::Icosidodecahedron, symbol: "(3.5)^2", degrees: &[3, 5, 3, 5], v: 30, e: 60, f: 32, faces: &[(3, 20), (5, 12)], case: ProofCase::R4Triangle, notes: None },
    Row { solid: Solid::SmallRhombicosidodecahedron, symbol: "3.4.5.4", degrees: &[3, 4, 5, 4], v: 60, e: 120, f: 62, faces: &[(3, 20), (4, 30), (5, 12)], case: ProofCase::R4Triangle, notes: None },
    Row { solid: Solid::SmallRhombicuboctahedron, symbol: "3.4^3", degrees: &[3, 4, 4, 4], v: 24, e: 48, f: 26, faces: &[(3, 8), (4, 18)], case: ProofCase::R4Triangle, notes: None },
    Row { solid: Solid::SnubCube, symbol: "3^4.4", degrees: &[3, 3, 3, 3, 4], v: 24, e: 60, f: 38, faces: &[(3, 32), (4, 6)], case: ProofCase::R5Triangle, notes: None },
    Row { solid: Solid::SnubDodecahedron, symbol: "3^4.5", degrees: &[3, 3, 3, 3, 5], v: 60, e: 150, f: 92, faces: &[(3, 80), (5, 12)], case: ProofCase::R5Triangle, notes: None },
    Row { solid: Solid::TruncatedCube, symbol: "3.8^2", degrees: &[3, 8, 8], v: 24, e: 36, f: 14, faces: &[(3, 8), (8, 6)], case: ProofCase::R3Triangle, notes: None },
    Row { solid: Solid::TruncatedDodecahedron, symbol: "3.10^2", degrees: &[3, 10, 10], v: 60, e: 90, f: 32, faces: &[(3, 20), (10, 12)], case: ProofCase::R3Triangle, notes: None },
    Row { solid: Solid::TruncatedIcosahedron, symbol: "5.6^2", degrees: &[5, 6, 6], v: 60, e: 90, f: 32, faces: &[(5, 12), (6, 20)], case: ProofCase::R3Pentagon, notes: Some(TRUNCATED_ICOSAHEDRON_NOTE) },
    Row { solid: Solid::TruncatedOctahedron, symbol: "4.6^2", degrees: &[4, 6, 6], v: 24, e: 36, f: 14, faces: &[(4, 6), (6, 8)], case: ProofCase::R3Square, notes: None },
    Row { solid: Solid::TruncatedTetrahedron, symbol: "3.6^2", degrees: &[3, 6, 6], v: 12, e: 18, f: 8, faces: &[(3, 4), (6, 4)], case: ProofCase::R3Triangle, notes: None },
];

/// The five regular and thirteen semiregular solids in table order,
/// followed by the prism and antiprism families.
pub fn reference_catalog() -> Vec<CatalogEntry> {
    let mut out: Vec<CatalogEntry> = ROWS
        .iter()
        .map(|row| CatalogEntry {
            solid: row.solid,
            symbol: row.symbol,
            figure: Some(VertexFigure::new(row.degrees).expect("valid table figure")),
            counts: Some(CountData {
                vertices: row.v,
                edges: row.e,
                faces: row.f,
                face_counts: row.faces.iter().copied().collect(),
                valence_counts: None,
            }),
            family_param_bound: None,
            proof_cases: BTreeSet::from([row.case]),
            notes: row.notes,
        })
        .collect();
    out.push(CatalogEntry {
        solid: Solid::Prism,
        symbol: "4^2.m",
        figure: None,
        counts: None,
        family_param_bound: Some(3),
        proof_cases: BTreeSet::from([ProofCase::R3Triangle, ProofCase::R3Square]),
        notes: Some("m = 3 is the triangular prism 3.4^2; m = 4 coincides with the cube"),
    });
    out.push(CatalogEntry {
        solid: Solid::Antiprism,
        symbol: "3^3.m",
        figure: None,
        counts: None,
        family_param_bound: Some(4),
        proof_cases: BTreeSet::from([ProofCase::R4Triangle]),
        notes: Some("m = 3 coincides with the octahedron"),
    });
    out
}

/// Catalog entry by display name or kebab-cased slug.
pub fn lookup(name: &str) -> Option<CatalogEntry> {
    let solid: Solid = name.parse().ok()?;
    reference_catalog().into_iter().find(|e| e.solid == solid)
}

/// Counts of the `m`-sided prism or antiprism.
pub fn family_counts(solid: Solid, m: u32) -> Option<CountData> {
    let m = u64::from(m);
    let (v, e, faces) = match solid {
        Solid::Prism => (2 * m, 3 * m, vec![(4, m), (m as u32, 2)]),
        Solid::Antiprism => (2 * m, 4 * m, vec![(3, 2 * m), (m as u32, 2)]),
        _ => return None,
    };
    let mut face_counts = BTreeMap::new();
    for (p, n) in faces {
        *face_counts.entry(p).or_insert(0) += n;
    }
    Some(CountData::from_face_counts(v, e, face_counts))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymbolError {
    #[error("empty symbol")]
    Empty,
    #[error("unexpected {found} at byte {pos} in `{symbol}`")]
    Unexpected {
        symbol: String,
        pos: usize,
        found: String,
    },
    #[error("`{0}` has a family parameter `m` but none was given")]
    MissingParameter(String),
    #[error("exponent must be at least 1 in `{0}`")]
    ZeroExponent(String),
    #[error(transparent)]
    Figure(#[from] FigureError),
}

struct SymbolParser<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
    param: Option<u32>,
}

impl<'a> SymbolParser<'a> {
    fn error(&self) -> SymbolError {
        let found = match self.bytes.get(self.pos) {
            Some(&b) => format!("`{}`", b as char),
            None => "end of input".to_string(),
        };
        SymbolError::Unexpected {
            symbol: self.src.to_string(),
            pos: self.pos,
            found,
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn number(&mut self) -> Result<u32, SymbolError> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        self.src[start..self.pos].parse().map_err(|_| {
            self.pos = start;
            self.error()
        })
    }

    fn sequence(&mut self) -> Result<Vec<u32>, SymbolError> {
        let mut out = self.term()?;
        while self.peek() == Some(b'.') {
            self.pos += 1;
            out.extend(self.term()?);
        }
        Ok(out)
    }

    fn term(&mut self) -> Result<Vec<u32>, SymbolError> {
        let atom = match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.sequence()?;
                if self.peek() != Some(b')') {
                    return Err(self.error());
                }
                self.pos += 1;
                inner
            }
            Some(b'm') => {
                self.pos += 1;
                vec![self
                    .param
                    .ok_or_else(|| SymbolError::MissingParameter(self.src.to_string()))?]
            }
            Some(b) if b.is_ascii_digit() => vec![self.number()?],
            _ => return Err(self.error()),
        };
        if self.peek() != Some(b'^') {
            return Ok(atom);
        }
        self.pos += 1;
        let times = self.number()? as usize;
        if times == 0 {
            return Err(SymbolError::ZeroExponent(self.src.to_string()));
        }
        Ok(atom.repeat(times))
    }
}

/// Expands a symbol into its degree sequence, in written order.
pub fn expand_symbol(symbol: &str, param: Option<u32>) -> Result<Vec<u32>, SymbolError> {
    if symbol.is_empty() {
        return Err(SymbolError::Empty);
    }
    let mut parser = SymbolParser {
        src: symbol,
        bytes: symbol.as_bytes(),
        pos: 0,
        param,
    };
    let degrees = parser.sequence()?;
    if parser.pos != symbol.len() {
        return Err(parser.error());
    }
    Ok(degrees)
}

/// Parses `3.4^3`, `(3.4)^2`, `3^4.5` and the like into a canonical figure.
pub fn parse_symbol(symbol: &str) -> Result<VertexFigure, SymbolError> {
    Ok(VertexFigure::new(&expand_symbol(symbol, None)?)?)
}

/// Parses a family symbol such as `4^2.m` with `m` substituted.
pub fn parse_family_symbol(symbol: &str, m: u32) -> Result<VertexFigure, SymbolError> {
    Ok(VertexFigure::new(&expand_symbol(symbol, Some(m))?)?)
}

/// ASCII symbol for a figure: a whole-figure period as `(a.b)^k`,
/// otherwise runs of equal faces as `a^k`.
pub fn format_symbol(figure: &VertexFigure) -> String {
    let d = figure.degrees();
    let r = d.len();
    let period = (1..=r)
        .find(|&k| r.is_multiple_of(k) && (k..r).all(|i| d[i] == d[i - k]))
        .unwrap_or(r);
    if period > 1 && period < r {
        let inner: Vec<String> = d[..period].iter().map(|p| p.to_string()).collect();
        return format!("({})^{}", inner.join("."), r / period);
    }
    let mut parts = Vec::new();
    let mut i = 0;
    while i < r {
        let mut j = i;
        while j < r && d[j] == d[i] {
            j += 1;
        }
        if j - i == 1 {
            parts.push(d[i].to_string());
        } else {
            parts.push(format!("{}^{}", d[i], j - i));
        }
        i = j;
    }
    parts.join(".")
}

/// Shared JSON record for catalog entries and classifications.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CatalogRecord {
    pub name: String,
    pub class: Class,
    pub symbol: String,
    pub figure: Option<Vec<u32>>,
    #[serde(rename = "V")]
    pub vertices: Option<u64>,
    #[serde(rename = "E")]
    pub edges: Option<u64>,
    #[serde(rename = "F")]
    pub faces: Option<u64>,
    pub face_counts: BTreeMap<u32, u64>,
    pub proof_case: Vec<ProofCase>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family_param_bound: Option<u32>,
    pub notes: Option<String>,
}

fn family_symbol(solid: Solid) -> &'static str {
    match solid {
        Solid::Prism => "4^2.m",
        _ => "3^3.m",
    }
}

impl CatalogRecord {
    fn build(
        solid: Solid,
        symbol: String,
        figure: Option<&VertexFigure>,
        counts: Option<&CountData>,
        family_param_bound: Option<u32>,
        proof_cases: &BTreeSet<ProofCase>,
        notes: Option<String>,
    ) -> Self {
        Self {
            name: solid.name().to_string(),
            class: solid.class(),
            symbol,
            figure: figure.map(|f| f.degrees().to_vec()),
            vertices: counts.map(|c| c.vertices),
            edges: counts.map(|c| c.edges),
            faces: counts.map(|c| c.faces),
            face_counts: counts.map(|c| c.face_counts.clone()).unwrap_or_default(),
            proof_case: proof_cases.iter().copied().collect(),
            family_param_bound,
            notes,
        }
    }

    pub fn from_entry(entry: &CatalogEntry) -> Self {
        Self::build(
            entry.solid,
            entry.symbol.to_string(),
            entry.figure.as_ref(),
            entry.counts.as_ref(),
            entry.family_param_bound,
            &entry.proof_cases,
            entry.notes.map(str::to_string),
        )
    }

    /// Record for an enumeration result, with counts derived from the
    /// figure alone.
    pub fn from_classification(item: &Classification) -> Self {
        match &item.pattern {
            Pattern::Fixed { figure } => {
                let derived = counts(figure).ok();
                Self::build(
                    item.solid,
                    format_symbol(figure),
                    Some(figure),
                    derived.as_ref(),
                    None,
                    &item.proof_cases,
                    None,
                )
            }
            Pattern::Prism { min_sides } | Pattern::Antiprism { min_sides } => Self::build(
                item.solid,
                family_symbol(item.solid).to_string(),
                None,
                None,
                Some(*min_sides),
                &item.proof_cases,
                None,
            ),
        }
    }

    fn proof_case_cell(&self) -> String {
        let tags: Vec<&str> = self.proof_case.iter().map(|c| c.as_str()).collect();
        tags.join(";")
    }
}

pub fn to_json(records: &[CatalogRecord]) -> String {
    serde_json::to_string_pretty(records).expect("records serialize")
}

/// CSV with columns `name,class,symbol,V,E,F,F3,F4,F5,F6,F8,F10,proof_case`.
/// Family rows leave the count columns empty; multiple proof cases are
/// separated by `;`.
pub fn to_csv(records: &[CatalogRecord]) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["name".to_string(), "class".into(), "symbol".into()];
    header.extend(["V", "E", "F"].map(String::from));
    header.extend(CSV_FACE_DEGREES.iter().map(|p| format!("F{p}")));
    header.push("proof_case".into());
    writer.write_record(&header).expect("in-memory write");

    let cell = |n: Option<u64>| n.map(|n| n.to_string()).unwrap_or_default();
    for record in records {
        let is_family = record.vertices.is_none();
        let mut row = vec![
            record.name.clone(),
            record.class.to_string(),
            record.symbol.clone(),
            cell(record.vertices),
            cell(record.edges),
            cell(record.faces),
        ];
        for p in CSV_FACE_DEGREES {
            let n = record.face_counts.get(&p).copied().unwrap_or(0);
            row.push(if is_family { String::new() } else { n.to_string() });
        }
        row.push(record.proof_case_cell());
        writer.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(writer.into_inner().expect("flush")).expect("utf-8")
}

/// Fixed-width text table.
pub fn to_table(records: &[CatalogRecord]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<30} {:<16} {:<9} {:>5} {:>5} {:>5}  {:<24} proof_case",
        "name", "class", "symbol", "V", "E", "F", "faces"
    );
    for r in records {
        let n = |x: Option<u64>| x.map(|v| v.to_string()).unwrap_or_else(|| "-".into());
        let faces: Vec<String> = r.face_counts.iter().map(|(p, c)| format!("F{p}={c}")).collect();
        let faces = if faces.is_empty() {
            format!("m >= {}", r.family_param_bound.unwrap_or_default())
        } else {
            faces.join(" ")
        };
        let _ = writeln!(
            out,
            "{:<30} {:<16} {:<9} {:>5} {:>5} {:>5}  {:<24} {}",
            r.name,
            r.class.as_str(),
            r.symbol,
            n(r.vertices),
            n(r.edges),
            n(r.faces),
            faces,
            r.proof_case_cell()
        );
    }
    out
}
