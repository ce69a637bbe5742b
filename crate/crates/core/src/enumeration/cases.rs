//! The case analysis, one function per valence.
//!
//! Each case fixes the smallest face, derives a finite bound on the
//! remaining faces from the positivity of the vertex-count denominator,
//! applies that branch's configuration argument, and names what survives.

use num_traits::{One, Zero};

use super::{sort_classifications, Classification, Pattern};
use crate::counting::Rational;
use crate::figure::VertexFigure;
use crate::solid::{ProofCase, Solid};

fn recip(p: u32) -> Rational {
    Rational::new(1, i64::from(p))
}

fn recip_sum(degrees: &[u32]) -> Rational {
    degrees.iter().map(|&p| recip(p)).sum()
}

/// Required value of `Σ 1/pᵢ` is strictly more than `r/2 − 1`.
fn threshold(r: usize) -> Rational {
    Rational::new(r as i64, 2) - Rational::one()
}

/// Largest `p ≥ 3` with `1/p > slack`, or `None` when the bound is vacuous
/// (`slack ≤ 0`).
fn reciprocal_bound(slack: Rational) -> Option<u32> {
    if slack <= Rational::zero() {
        return None;
    }
    // 1/p > a/b  <=>  p < b/a
    let limit = slack.recip();
    let p = if limit.is_integer() {
        limit.to_integer() - 1
    } else {
        limit.floor().to_integer()
    };
    Some(p as u32)
}

/// Nondecreasing sequences of length `len` with entries in `lo..=hi`.
fn nondecreasing(len: usize, lo: u32, hi: u32) -> Vec<Vec<u32>> {
    if len == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in lo..=hi {
        for mut rest in nondecreasing(len - 1, first, hi) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn figure(degrees: &[u32]) -> VertexFigure {
    VertexFigure::new(degrees).expect("case analysis only builds valid figures")
}

fn named(solid: Solid, degrees: &[u32], case: ProofCase) -> Classification {
    Classification::new(solid, Pattern::fixed(figure(degrees)), case)
}

/// Whether every face can be at least `min_face` sides with valence `r`.
fn all_at_least_is_feasible(r: usize, min_face: u32) -> bool {
    Rational::from_integer(r as i64) * recip(min_face) > threshold(r)
}

/// Five faces at a vertex.
///
/// With a triangle present the other four satisfy
/// `Σ 1/pᵢ > 7/6`; sorting them, three are at least thirds so the largest
/// obeys `1/p₅ > 1/6`. Within that bound the exact inequality already
/// excludes two faces of four or more sides (`3·1/3 + 2·1/4 = 3/2`),
/// leaving four triangles and one face of at most five sides. Without a
/// triangle, five quarters fail.
pub fn enumerate_case_r5() -> Vec<Classification> {
    const R: usize = 5;
    assert!(!all_at_least_is_feasible(R, 4));

    let rest_needed = threshold(R) - recip(3);
    let largest = reciprocal_bound(rest_needed - Rational::from_integer(3) * recip(3))
        .expect("bound exists with a triangle present");

    let mut out = Vec::new();
    for rest in nondecreasing(R - 1, 3, largest) {
        if recip_sum(&rest) <= rest_needed {
            continue;
        }
        let mut degrees = vec![3];
        degrees.extend(rest);
        let solid = match degrees.as_slice() {
            [3, 3, 3, 3, 3] => Solid::Icosahedron,
            [3, 3, 3, 3, 4] => Solid::SnubCube,
            [3, 3, 3, 3, 5] => Solid::SnubDodecahedron,
            other => unreachable!("unexpected five-valent survivor {other:?}"),
        };
        out.push(named(solid, &degrees, ProofCase::R5Triangle));
    }
    sort_classifications(&mut out);
    out
}

/// The `(p, q)` pairs of the four-valent triangle branch with
/// `1 < 2q − 3 < 9`, where the figure is `3.p.q.p` and positivity reads
/// `(p − 3)(2q − 3) < 9`. Sorted by `(p, q)`.
pub fn r4_triangle_pairs() -> Vec<(u32, u32)> {
    let mut pairs = Vec::new();
    let mut q = 3;
    while 2 * q - 3 < 9 {
        let k = 2 * q - 3;
        // (p − 3)·k ≤ 8
        for p in 3..=3 + 8 / k {
            debug_assert!(
                Rational::new(2, i64::from(p)) + recip(q) > Rational::new(2, 3),
                "({p}, {q})"
            );
            pairs.push((p, q));
        }
        q += 1;
    }
    pairs.sort_unstable();
    pairs
}

/// Four faces at a vertex.
///
/// A triangle must be present. Walking the triangle's three corners, each
/// of which carries the same figure, forces the two faces flanking the
/// triangle to agree, so the figure is `3.p.q.p`. The bounded branch is
/// [`r4_triangle_pairs`]; for `2q − 3 ≥ 9` only `p = 3` survives, which
/// together with `(3, 4)` and `(3, 5)` is the antiprism family.
pub fn enumerate_case_r4() -> Vec<Classification> {
    const R: usize = 4;
    assert!(!all_at_least_is_feasible(R, 4));

    let mut out = Vec::new();
    for (p, q) in r4_triangle_pairs() {
        let degrees = [3, p, q, p];
        let solid = match (p, q) {
            (3, 3) => Solid::Octahedron,
            (3, _) => continue, // antiprism, emitted as a family below
            (4, 3) => Solid::Cuboctahedron,
            (4, 4) => Solid::SmallRhombicuboctahedron,
            (4, 5) => Solid::SmallRhombicosidodecahedron,
            (5, 3) => Solid::Icosidodecahedron,
            other => unreachable!("unexpected four-valent pair {other:?}"),
        };
        out.push(named(solid, &degrees, ProofCase::R4Triangle));
    }
    // (p − 3)(2q − 3) < 9 with 2q − 3 ≥ 9 leaves p = 3 and every q ≥ 6.
    let open_q = (3..).find(|q| 2 * q - 3 >= 9).expect("unbounded");
    debug_assert!((4..open_q).all(|q| r4_triangle_pairs().contains(&(3, q))));
    out.push(Classification::new(
        Solid::Antiprism,
        Pattern::Antiprism { min_sides: 4 },
        ProofCase::R4Triangle,
    ));
    sort_classifications(&mut out);
    out
}

/// Three faces at a vertex, split by the smallest face.
///
/// * triangle: the triangle's edges alternate between its two flanking
///   faces around an odd cycle, so they agree (`3.p.p`); then `p < 12`,
///   and the `p`-gon's edges alternate triangle/`p`-gon so `p` is even
///   unless `p = 3`.
/// * square: `(p₂ − 4)(p₃ − 4) < 16`. With `p₂ = 4` any `p₃` closes up
///   (prisms). Otherwise both larger faces see two different neighbours
///   and must be even, `p₂ = 2a`, `p₃ = 2b`, `(a − 2)(b − 2) < 4`.
/// * pentagon: the pentagon's odd boundary forces `p₂ = p₃`, then
///   `2/p₂ > 3/10`.
pub fn enumerate_case_r3() -> Vec<Classification> {
    const R: usize = 3;
    assert!(!all_at_least_is_feasible(R, 6));
    let mut out = Vec::new();

    // triangle
    let needed = threshold(R) - recip(3);
    let bound = reciprocal_bound(needed / Rational::from_integer(2)).expect("bounded");
    for p in 3..=bound {
        if Rational::from_integer(2) * recip(p) <= needed {
            continue;
        }
        if p != 3 && p % 2 == 1 {
            continue;
        }
        let degrees = [3, p, p];
        let (solid, pattern) = match p {
            3 => (Solid::Tetrahedron, Pattern::fixed(figure(&degrees))),
            4 => (Solid::Prism, Pattern::fixed(figure(&degrees))),
            6 => (Solid::TruncatedTetrahedron, Pattern::fixed(figure(&degrees))),
            8 => (Solid::TruncatedCube, Pattern::fixed(figure(&degrees))),
            10 => (Solid::TruncatedDodecahedron, Pattern::fixed(figure(&degrees))),
            other => unreachable!("unexpected triangle flank {other}"),
        };
        out.push(Classification::new(solid, pattern, ProofCase::R3Triangle));
    }

    // square: p₂ = 4 branch
    out.push(named(Solid::Cube, &[4, 4, 4], ProofCase::R3Square));
    out.push(Classification::new(
        Solid::Prism,
        Pattern::Prism { min_sides: 4 },
        ProofCase::R3Square,
    ));
    // square: p₂ = 2a > 4, with a ≤ b forcing (a − 2)² < 4
    let mut a = 3u32;
    while (a - 2) * (a - 2) < 4 {
        let mut b = a;
        while (a - 2) * (b - 2) < 4 {
            let degrees = [4, 2 * a, 2 * b];
            debug_assert!(recip_sum(&degrees) > threshold(R));
            let solid = match (2 * a, 2 * b) {
                (6, 6) => Solid::TruncatedOctahedron,
                (6, 8) => Solid::GreatRhombicuboctahedron,
                (6, 10) => Solid::GreatRhombicosidodecahedron,
                other => unreachable!("unexpected square-branch pair {other:?}"),
            };
            out.push(named(solid, &degrees, ProofCase::R3Square));
            b += 1;
        }
        a += 1;
    }

    // pentagon
    let needed = threshold(R) - recip(5);
    let bound = reciprocal_bound(needed / Rational::from_integer(2)).expect("bounded");
    for p in 5..=bound {
        if Rational::from_integer(2) * recip(p) <= needed {
            continue;
        }
        let solid = match p {
            5 => Solid::Dodecahedron,
            6 => Solid::TruncatedIcosahedron,
            other => unreachable!("unexpected pentagon flank {other}"),
        };
        out.push(named(solid, &[5, p, p], ProofCase::R3Pentagon));
    }

    sort_classifications(&mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::counts;

    fn figures(items: &[Classification]) -> Vec<String> {
        items
            .iter()
            .map(|c| c.pattern.representative().to_string())
            .collect()
    }

    fn find(items: &[Classification], solid: Solid) -> &Classification {
        items.iter().find(|c| c.solid == solid).unwrap()
    }

    #[test]
    fn reciprocal_bounds() {
        assert_eq!(reciprocal_bound(Rational::new(1, 6)), Some(5));
        assert_eq!(reciprocal_bound(Rational::new(1, 12)), Some(11));
        assert_eq!(reciprocal_bound(Rational::new(3, 20)), Some(6));
        assert_eq!(reciprocal_bound(Rational::zero()), None);
    }

    #[test]
    fn five_valent() {
        let items = enumerate_case_r5();
        assert_eq!(figures(&items), ["3.3.3.3.3", "3.3.3.3.4", "3.3.3.3.5"]);
        assert_eq!(
            find(&items, Solid::SnubDodecahedron).class(),
            crate::Class::Archimedean
        );
        assert_eq!(find(&items, Solid::Icosahedron).class(), crate::Class::Platonic);
        assert!(items
            .iter()
            .all(|c| c.proof_cases.contains(&ProofCase::R5Triangle)));
    }

    #[test]
    fn five_valent_two_squares_fail() {
        // 3.3.3.4.4 sits exactly on the flat boundary
        let d = crate::counting::vertex_denominator(&figure(&[3, 3, 3, 4, 4]));
        assert_eq!(d, Rational::zero());
        assert!(!figures(&enumerate_case_r5()).contains(&"3.3.3.4.4".to_string()));
    }

    #[test]
    fn four_valent_pairs() {
        assert_eq!(
            r4_triangle_pairs(),
            vec![(3, 3), (3, 4), (3, 5), (4, 3), (4, 4), (4, 5), (5, 3)]
        );
    }

    #[test]
    fn four_valent() {
        let items = enumerate_case_r4();
        assert_eq!(
            figures(&items),
            ["3.3.3.3", "3.3.3.4", "3.4.3.4", "3.4.4.4", "3.4.5.4", "3.5.3.5"]
        );
        assert_eq!(
            find(&items, Solid::Antiprism).pattern,
            Pattern::Antiprism { min_sides: 4 }
        );
        let names: Vec<_> = figures(&items);
        assert!(!names.contains(&"3.4.4.5".to_string()));
        assert!(!names.contains(&"3.3.4.4".to_string()));
    }

    #[test]
    fn rejected_cyclic_orders_are_arithmetically_fine() {
        assert_eq!(counts(&figure(&[3, 4, 4, 5])).unwrap().vertices, 60);
        assert_eq!(counts(&figure(&[3, 3, 4, 4])).unwrap().vertices, 12);
    }

    #[test]
    fn three_valent() {
        let items = enumerate_case_r3();
        assert_eq!(
            figures(&items),
            [
                "3.3.3", "3.4.4", "3.6.6", "3.8.8", "3.10.10", "4.4.4", "4.4.4", "4.6.6", "4.6.8", "4.6.10",
                "5.5.5", "5.6.6"
            ]
        );
        assert_eq!(find(&items, Solid::TruncatedDodecahedron).proof_cases.len(), 1);
        assert!(find(&items, Solid::GreatRhombicosidodecahedron)
            .proof_cases
            .contains(&ProofCase::R3Square));
    }

    #[test]
    fn three_valent_parity_and_flank_rejects_are_arithmetically_fine() {
        let c = counts(&figure(&[3, 9, 9])).unwrap();
        assert_eq!(
            (c.vertices, c.edges, c.face_count(3), c.face_count(9)),
            (36, 54, 12, 8)
        );
        let c = counts(&figure(&[5, 5, 6])).unwrap();
        assert_eq!((c.vertices, c.face_count(5), c.face_count(6)), (30, 12, 5));
        let names = figures(&enumerate_case_r3());
        assert!(!names.contains(&"3.9.9".to_string()));
        assert!(!names.contains(&"5.5.6".to_string()));
    }
}
