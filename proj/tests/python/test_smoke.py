"""Smoke tests for the python bindings (run under ctest with PYTHONPATH set)."""

import minkq


def test_linear_algebra():
    assert minkq.signature([[2, 0], [0, -3]]) == (1, 1, 0)
    assert minkq.signature([["-1", "0"], ["0", "1/2"]]) == (1, 1, 0)
    ker = minkq.kernel([[1, 1], [2, 2]])
    assert len(ker) == 1
    assert minkq.solve([[2, 0], [0, 3]], [[1], [1]]) == [["1/2"], ["1/3"]]
    assert minkq.solve([[0, 0], [0, 0]], [[1], [0]]) is None


def test_structure():
    assert minkq.so_dimension(1, 2) == 3
    assert minkq.so_dimension(2, 8) == 45
    assert minkq.killing_signature(1, 2) == (2, 1, 0)
    dims = minkq.iwasawa_dims(2, 3)
    assert dims["a"] == 2 and dims["n"] == 4 and dims["m"] == 0
    roots = dict((tuple(r), m) for r, m in minkq.roots(2, 5))
    assert roots[(1, -1)] == 1 and roots[(0, 1)] == 3

    names = {e["name"] for e in minkq.catalog(2, 5)}
    assert {"so(1,5)", "su(1,2)", "p_alpha", "p_beta", "min_parabolic"} <= names


def test_verification():
    rep = minkq.verify_quotient(2, 5, "so(1,5)")
    assert rep["status"] == "pass"
    assert any("dimension 1" in d for d in rep["details"])

    rep_su = minkq.verify_quotient(2, 4, "su(1,2)")
    assert rep_su["status"] == "fail"

    lemma = minkq.check_lemma(3)
    assert lemma["status"] == "pass"

    full = minkq.run_all(3)
    assert full["version"] == 1
    assert full["summary"]["status"] == "pass"
    assert full["summary"]["fail"] == 0


if __name__ == "__main__":
    test_linear_algebra()
    test_structure()
    test_verification()
    print("python smoke tests passed")
