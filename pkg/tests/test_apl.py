import pytest

from rathom.simplicial import FiniteSimplicialSet, boundary_of_simplex, cohomology, point, simplex, sphere, torus, wedge
from rathom.sullivan.apl import AplAlgebra, InconclusiveError, apl_basis, apl_cohomology

SPACES = {
    "point": (point(2), 2),
    "s1": (sphere(1), 2),
    "s2": (sphere(2), 2),
    "torus": (torus(), 2),
    "s1vs1": (wedge(sphere(1), sphere(1)), 1),
    "bd_delta2": (boundary_of_simplex(2), 2),
    "s3": (sphere(3), 3),
}


def test_basis_examples():
    assert len(apl_basis(point(), 0, 0)) == 1
    assert len(apl_basis(point(), 0, 4)) == 1
    assert len(apl_basis(simplex(1), 0, 1)) == 2
    A = AplAlgebra(sphere(1))
    forms = [A.from_vector(v, 1, 2) for v in A.basis(1, 2)]
    assert all(f.is_compatible() for f in forms)
    dim, reps = A.cohomology_at(1, 2)
    assert dim == 1 and reps[0].degree() == 1


@pytest.mark.parametrize("name", sorted(SPACES))
def test_cohomology_matches_simplicial(name):
    X, top = SPACES[name]
    simp = cohomology(X)
    for n in range(top + 1):
        r = apl_cohomology(X, n, 8)
        assert r.status == "stable"
        assert r.value == simp[n] and r.agrees


def test_above_top_dimension_is_zero():
    r = apl_cohomology(sphere(2), 5, 3)
    assert r.status == "stable" and r.value == 0


def test_inconclusive_is_reported():
    r = apl_cohomology(sphere(2), 2, 3)
    assert r.status == "inconclusive" and r.value is None
    assert "inconclusive" in r.format()
    with pytest.raises(InconclusiveError):
        AplAlgebra(sphere(2), d_max=3).cohomology(2)


def test_algebra_operations_stay_compatible():
    A = AplAlgebra(torus())
    ones = [A.from_vector(v, 1, 2) for v in A.basis(1, 2)]
    for a in ones[:4]:
        assert a.d().is_compatible()
        for b in ones[:4]:
            p = a * b
            assert p.is_compatible()
            assert p == -(b * a)


def test_exact_relations_on_forms():
    A = AplAlgebra(sphere(2))
    (z,) = A.cohomology(2).representatives
    assert A.exact_relations([z], 2) == []
    zero_rel = A.exact_relations([z * 0], 2)
    assert len(zero_rel) == 1
    # an exact form: d of a 1-form, with a primitive returned
    f = A.from_vector(A.basis(1, 3).vectors[0], 1, 3)
    (c, prim), = A.exact_relations([f.d()], 2)
    assert (prim.d() - f.d() * c[0]).is_zero()


def test_torus_cup_product_is_nonzero():
    A = AplAlgebra(torus())
    a, b = A.cohomology(1).representatives
    assert A.exact_relations([a * b], 2) == []
    assert A.exact_relations([a * a], 2)


def test_invalid_space_rejected():
    data = simplex(2).to_json()
    top = next(s for s in data["simplices"] if s["dim"] == 2 and not s["degenerate"])
    top["faces"] = [top["faces"][1], top["faces"][0], top["faces"][2]]
    with pytest.raises(ValueError):
        AplAlgebra(FiniteSimplicialSet.from_json(data))
