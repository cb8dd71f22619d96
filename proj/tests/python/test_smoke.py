"""Smoke tests for the gray16 python module."""

import gray16


def test_groups():
    d8 = gray16.build_builtin("D8")
    assert d8.order == 8
    assert d8.labels[0] == "e"
    x, y = d8.index_of("x"), d8.index_of("y")
    assert d8.mul(y, x) == d8.index_of("x^3y")
    assert d8.element_order(x) == 4
    assert gray16.count_involutions(gray16.build_builtin("K8")) == 3
    assert gray16.is_isomorphic(d8, gray16.build_builtin("Q8")) is None
    iso = gray16.is_isomorphic(
        gray16.build_builtin("K8"),
        gray16.direct_product(gray16.build_builtin("C4"), gray16.build_builtin("C2")),
    )
    assert iso is not None and len(iso) == 8


def test_classification():
    groups = gray16.classify_order16()
    assert len(groups) == 14
    assert groups[0]["name"] == "G0"
    assert groups[5]["description"] == "Q16"
    assert gray16.aut_order(gray16.build_builtin("K8")) == 8


def test_gray_maps():
    g1 = gray16.type1_catalog()["G1"]
    assert g1.length == 8
    assert g1.word(g1.group.index_of("x")) == "00110011"
    assert gray16.verify_gray_map(g1)["pass"]

    report = gray16.verify_gray_map(gray16.canonical_type2("Q8").map)
    assert not report["pass"]
    assert not report["c2"]["pass"]

    assert gray16.hamming_weight("00110011") == 4
    assert gray16.hamming_distance("01", "10") == 2


def test_survey():
    rows = gray16.type2_survey()
    feasible = sorted({row.group for row in rows if row.valid})
    assert feasible == ["G0", "G12", "G13", "G7", "G8", "G9"]
    g13 = next(r for r in rows if r.group == "G13" and r.paper_section == "6.10")
    assert g13.verdict == "fails C2"
    assert not gray16.weight_parity_feasible(gray16.build_builtin("C8"), 3)["feasible"]


def test_cli_passthrough():
    status, out, _ = gray16.run_cli(["classify", "--format", "tsv"])
    assert status == 0
    assert out.count("\n") == 15  # header plus fourteen groups
    status, _, _ = gray16.run_cli(["graymap", "type2", "G11"])
    assert status == 1


def main():
    for name, check in sorted(globals().items()):
        if name.startswith("test_"):
            check()
            print(f"ok {name}")
    print("smoke tests pass")


if __name__ == "__main__":
    main()
