//! Names for the solids and families the classification produces.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Class {
    Platonic,
    Archimedean,
    PrismFamily,
    AntiprismFamily,
}

impl Class {
    pub fn as_str(self) -> &'static str {
        match self {
            Class::Platonic => "platonic",
            Class::Archimedean => "archimedean",
            Class::PrismFamily => "prism-family",
            Class::AntiprismFamily => "antiprism-family",
        }
    }
}

impl fmt::Display for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Branch of the case analysis, keyed by valence and smallest face.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ProofCase {
    #[serde(rename = "r5-triangle")]
    R5Triangle,
    #[serde(rename = "r4-triangle")]
    R4Triangle,
    #[serde(rename = "r3-triangle")]
    R3Triangle,
    #[serde(rename = "r3-square")]
    R3Square,
    #[serde(rename = "r3-pentagon")]
    R3Pentagon,
}

impl ProofCase {
    pub const ALL: [ProofCase; 5] = [
        ProofCase::R5Triangle,
        ProofCase::R4Triangle,
        ProofCase::R3Triangle,
        ProofCase::R3Square,
        ProofCase::R3Pentagon,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ProofCase::R5Triangle => "r5-triangle",
            ProofCase::R4Triangle => "r4-triangle",
            ProofCase::R3Triangle => "r3-triangle",
            ProofCase::R3Square => "r3-square",
            ProofCase::R3Pentagon => "r3-pentagon",
        }
    }

    pub fn valence(self) -> usize {
        match self {
            ProofCase::R5Triangle => 5,
            ProofCase::R4Triangle => 4,
            _ => 3,
        }
    }
}

impl fmt::Display for ProofCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown solid `{0}`")]
pub struct UnknownSolid(pub String);

/// Every named solid plus the two infinite families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Solid {
    Tetrahedron,
    Cube,
    Octahedron,
    Dodecahedron,
    Icosahedron,
    Cuboctahedron,
    GreatRhombicosidodecahedron,
    GreatRhombicuboctahedron,
    Icosidodecahedron,
    SmallRhombicosidodecahedron,
    SmallRhombicuboctahedron,
    SnubCube,
    SnubDodecahedron,
    TruncatedCube,
    TruncatedDodecahedron,
    TruncatedIcosahedron,
    TruncatedOctahedron,
    TruncatedTetrahedron,
    Prism,
    Antiprism,
}

impl Solid {
    pub const ALL: [Solid; 20] = [
        Solid::Tetrahedron,
        Solid::Cube,
        Solid::Octahedron,
        Solid::Dodecahedron,
        Solid::Icosahedron,
        Solid::Cuboctahedron,
        Solid::GreatRhombicosidodecahedron,
        Solid::GreatRhombicuboctahedron,
        Solid::Icosidodecahedron,
        Solid::SmallRhombicosidodecahedron,
        Solid::SmallRhombicuboctahedron,
        Solid::SnubCube,
        Solid::SnubDodecahedron,
        Solid::TruncatedCube,
        Solid::TruncatedDodecahedron,
        Solid::TruncatedIcosahedron,
        Solid::TruncatedOctahedron,
        Solid::TruncatedTetrahedron,
        Solid::Prism,
        Solid::Antiprism,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Solid::Tetrahedron => "tetrahedron",
            Solid::Cube => "cube",
            Solid::Octahedron => "octahedron",
            Solid::Dodecahedron => "dodecahedron",
            Solid::Icosahedron => "icosahedron",
            Solid::Cuboctahedron => "cuboctahedron",
            Solid::GreatRhombicosidodecahedron => "great rhombicosidodecahedron",
            Solid::GreatRhombicuboctahedron => "great rhombicuboctahedron",
            Solid::Icosidodecahedron => "icosidodecahedron",
            Solid::SmallRhombicosidodecahedron => "small rhombicosidodecahedron",
            Solid::SmallRhombicuboctahedron => "small rhombicuboctahedron",
            Solid::SnubCube => "snub cube",
            Solid::SnubDodecahedron => "snub dodecahedron",
            Solid::TruncatedCube => "truncated cube",
            Solid::TruncatedDodecahedron => "truncated dodecahedron",
            Solid::TruncatedIcosahedron => "truncated icosahedron",
            Solid::TruncatedOctahedron => "truncated octahedron",
            Solid::TruncatedTetrahedron => "truncated tetrahedron",
            Solid::Prism => "prism",
            Solid::Antiprism => "antiprism",
        }
    }

    /// Command-line token, e.g. `great-rhombicosidodecahedron`.
    pub fn slug(self) -> String {
        self.name().replace(' ', "-")
    }

    pub fn class(self) -> Class {
        match self {
            Solid::Tetrahedron
            | Solid::Cube
            | Solid::Octahedron
            | Solid::Dodecahedron
            | Solid::Icosahedron => Class::Platonic,
            Solid::Prism => Class::PrismFamily,
            Solid::Antiprism => Class::AntiprismFamily,
            _ => Class::Archimedean,
        }
    }

    pub fn is_family(self) -> bool {
        matches!(self, Solid::Prism | Solid::Antiprism)
    }

    /// The eighteen solids that are not members of a family.
    pub fn sporadic() -> impl Iterator<Item = Solid> {
        Self::ALL.into_iter().filter(|s| !s.is_family())
    }
}

impl Serialize for Solid {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

impl fmt::Display for Solid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Accepts either the display name or its kebab-cased slug.
impl FromStr for Solid {
    type Err = UnknownSolid;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let wanted = s.trim().to_ascii_lowercase().replace('-', " ");
        Solid::ALL
            .into_iter()
            .find(|solid| solid.name() == wanted)
            .ok_or_else(|| UnknownSolid(s.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slugs_round_trip() {
        for solid in Solid::ALL {
            assert_eq!(solid.slug().parse::<Solid>(), Ok(solid));
            assert_eq!(solid.name().parse::<Solid>(), Ok(solid));
        }
    }

    #[test]
    fn unknown_names() {
        assert!("snub-cuboid".parse::<Solid>().is_err());
    }

    #[test]
    fn class_split() {
        let platonic = Solid::ALL.iter().filter(|s| s.class() == Class::Platonic).count();
        let archimedean = Solid::ALL
            .iter()
            .filter(|s| s.class() == Class::Archimedean)
            .count();
        assert_eq!((platonic, archimedean), (5, 13));
        assert_eq!(Solid::sporadic().count(), 18);
    }
}
