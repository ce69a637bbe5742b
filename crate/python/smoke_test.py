"""Smoke test for the `semiregular` extension module.

Build and install first:

    maturin build --release -m crates/python/Cargo.toml -o dist
    pip install dist/semiregular-*.whl
    python python/smoke_test.py
"""

from fractions import Fraction

import semiregular as sr


def check_figures():
    f = sr.canonical_figure([4, 3, 4, 3])
    assert f.degrees == [3, 4, 3, 4], f.degrees
    assert f == sr.parse_symbol("(3.4)^2")
    assert f.symbol() == "(3.4)^2"
    assert str(f) == "3.4.3.4"
    assert len({f, sr.VertexFigure([3, 4, 3, 4])}) == 1
    try:
        sr.VertexFigure([2, 4, 4])
    except ValueError:
        pass
    else:
        raise AssertionError("degree 2 accepted")


def check_counts():
    assert sr.vertex_count([4, 6, 10]) == Fraction(120)
    assert sr.vertex_count([3, 3, 6]) == Fraction(6)
    c = sr.counts([4, 6, 10])
    assert (c["vertices"], c["edges"], c["faces"]) == (120, 180, 62)
    assert c["face_counts"] == {"4": 30, "6": 20, "10": 12}
    try:
        sr.counts([3, 7, 42, 42])
    except ValueError:
        pass
    else:
        raise AssertionError("infeasible figure accepted")
    assert sr.enumerate_regular() == [(3, 3), (3, 4), (3, 5), (4, 3), (5, 3)]


def check_catalogs():
    classified = sr.full_catalog()
    classes = [r["class"] for r in classified]
    assert classes.count("archimedean") == 13
    assert classes.count("platonic") == 5
    assert len(classified) == 20
    reference = sr.catalog()
    ti = next(r for r in reference if r["name"] == "truncated icosahedron")
    assert ti["symbol"] == "5.6^2" and ti["figure"] == [5, 6, 6]
    assert sr.catalog("csv").splitlines()[0] == "name,class,symbol,V,E,F,F3,F4,F5,F6,F8,F10,proof_case"
    assert len(sr.names()) == 20


def check_oracle():
    report = sr.oracle_diff(12)
    assert report["unexplained"] == []
    spurious = {".".join(map(str, s["figure"])): s["filter"] for s in report["spurious"]}
    assert spurious["3.9.9"] == "triangle-flank-parity"
    assert spurious["5.5.6"] == "pentagon-flanks-equal"
    assert len(spurious) == 38
    try:
        sr.oracle_diff(11)
    except ValueError:
        pass
    else:
        raise AssertionError("p_max below 12 accepted")


def check_maps():
    cube = sr.seed("cube")
    assert (cube.vertex_count, cube.edge_count, cube.face_count) == (8, 12, 6)
    assert cube.dual().dual().faces() == cube.faces()
    assert cube.bevel().is_bipartite()
    assert not cube.ambo().is_bipartite()

    snub = cube.snub()
    report = sr.analyze(snub)
    assert report["uniform"] and report["figures"] == {"3.3.3.3.4": 24}

    m = sr.realize("great-rhombicosidodecahedron")
    assert (m.vertex_count, m.edge_count, m.face_count) == (120, 180, 62)
    assert m.face_list().splitlines()[0] == "120 180 62"

    octa = sr.realize("antiprism", 3)
    assert sr.analyze(octa)["figures"] == {"3.3.3.3": 6}
    assert sr.prism(5).analyze()["bipartite"] is False
    doc = sr.antiprism(7).document("antiprism(7)")
    assert doc["V"] == 14 and len(doc["face_list"]) == 16

    tet = sr.PolyhedralMap.from_faces([[0, 1, 2], [0, 2, 3], [0, 3, 1], [1, 3, 2]])
    assert tet.truncate().analyze()["figures"] == {"3.6.6": 12}
    try:
        sr.realize("snub-cuboid")
    except ValueError:
        pass
    else:
        raise AssertionError("unknown name accepted")


def main():
    for check in (check_figures, check_counts, check_catalogs, check_oracle, check_maps):
        check()
        print(f"ok {check.__name__}")
    print("smoke test passed")


if __name__ == "__main__":
    main()
