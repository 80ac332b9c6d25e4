"""Smoke test for the pycomin extension module.

Build and install it first, for example with
    pip install --no-build-isolation ./crates/py
then run
    python python/smoke_test.py
"""

import pycomin


def main() -> None:
    gr = pycomin.Space("Gr(2,4)")
    assert gr.dim == 4
    assert len(gr.positions()) == 6
    assert gr.dual("(1)") == "(2,1)"

    ok, witness = pycomin.is_feasible(gr, ["(2)", "(1,1)"])
    assert not ok and witness["r"] == 1 and witness["lhs"] > witness["rhs"]
    assert pycomin.is_feasible(gr, ["(1)", "(1)", "(1,1)"]) == (True, None)
    assert not pycomin.product_nonzero(gr, ["(2)", "(1,1)"], "lr")

    lg = pycomin.Space("LG(4)")
    assert [o["dim_z"] for o in lg.orbits()] == [6, 3, 1]
    tuples = pycomin.enumerate_feasible(pycomin.Space("LG(3)"), 3)
    assert len(tuples) == 37
    for t in tuples:
        assert pycomin.product_nonzero(pycomin.Space("LG(3)"), t)

    q = pycomin.Space("Q(10)")
    assert pycomin.is_feasible(q, ["5", "5bar"])[0]
    assert not pycomin.is_feasible(q, ["5", "5"])[0]

    assert pycomin.inequalities(gr, 3)
    assert pycomin.classical_horn_feasible(2, 4, [[1], [1]], [1, 1])
    assert pycomin.one_factor_feasible(2, 4, [[1], [1], [1, 1]])
    assert pycomin.naive_lg_check(3, [[1], [2], [3]])[0]
    tuples, feasible, mismatches = pycomin.compare_gr(2, 5, 3)
    assert (tuples, feasible, mismatches) == (83, 56, [])

    try:
        pycomin.Space("Gr(5,3)")
    except ValueError:
        pass
    else:
        raise AssertionError("bad space accepted")
    try:
        pycomin.Space("Gr(3,6)").positions(cap=2)
    except pycomin.CapExceededError:
        pass
    else:
        raise AssertionError("cap not enforced")

    print("pycomin smoke test passed")


if __name__ == "__main__":
    main()
