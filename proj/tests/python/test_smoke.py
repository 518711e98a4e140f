import operadlab as ol


def test_pipeline_names():
    assert ol.pipeline_names() == [
        "dias-from-dend",
        "polarize-assoc",
        "deform-hnf",
        "dend-deform",
        "dias-deform",
    ]


def test_verify_everything():
    assert ol.verify()


def test_report_shape():
    rep = ol.run_pipeline("dias-from-dend")
    assert rep["pipeline"] == "dias-from-dend"
    assert all(c["pass"] for c in rep["checks"])
    assert len(rep["relations"]) == 5
    assert rep["relations"][0]["space"] == "O2"


def test_hnf_and_transform():
    m = ol.matrix([[2, 4], [6, 8]])
    h = ol.hnf(m)
    assert h["entries"] == [["2", "0"], ["0", "4"]]
    assert ol.rank(m) == 2
    u = ol.hnf_transform(m)
    assert u["rows"] == 2 and u["cols"] == 2


def test_nullspace_and_saturation():
    kernel = ol.nullspace(ol.matrix([[1, 1, 1]]))
    assert kernel["rows"] == 2
    sat = ol.saturation(ol.matrix([[2, 2]]))
    assert ol.lattice_equal(sat, ol.matrix([[1, 1]]))


def test_lll():
    reduced = ol.lll_reduce(ol.matrix([[4, 1], [1, 1]]))
    assert reduced["entries"] == [["1", "1"], ["1", "-2"]]


def test_polynomial_matrices():
    m = ol.matrix([["q + 3", "q - 1"]], ring="Q[q]")
    at_one = ol.specialize(m, 1)
    assert at_one["entries"] == [["4", "0"]]
    assert ol.poly_mul("q + 1", "q - 1") == "q^2 - 1"
    assert ol.poly_eval("q^2 - 1", "3") == "8"


def test_membership():
    basis = ol.hnf(ol.matrix([[2, 0], [0, 2]]))
    assert ol.is_module_member(basis, [4, 2])
    assert not ol.is_module_member(basis, [1, 0])


def test_morphisms_round_trip():
    assoc = ol.relation("SO1", [1, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0])
    polar = ol.polarize(assoc)
    assert polar["space"] == "SO1_POLAR"
    back = ol.expand_polarized(polar)
    assert back["coeffs"] == [str(4 * int(c)) for c in assoc["coeffs"]]
    split = ol.split_expand(assoc)
    assert split["space"] == "SO2"
    assert ol.render_relation(assoc) == "((ab)c) - (a(bc))"


def test_extraction_and_module_equality():
    jac = ol.relation("SO1_POLAR", [1, -1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0])
    twice = ol.relation("SO1_POLAR", [2, -2, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0])
    kept = ol.extract_generators([twice, jac], minimize=True)
    assert len(kept) == 1
    assert kept[0]["coeffs"] == jac["coeffs"]
    assert not ol.module_equal([jac], [twice])
    assert ol.module_equal([jac], [jac])
