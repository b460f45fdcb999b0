import pytest

from skeinquant.errors import StateSpaceTooLarge, UnknownCatalogEntry
from skeinquant.jones import (KnotPresentation, colored_jones,
                              colored_jones_catalog, colored_jones_exact,
                              colored_jones_rmatrix, so3_bracket_coefficient)
from skeinquant.laurent import LaurentPoly
from skeinquant.roots import RootContext, quantum_integer

UNKNOT = KnotPresentation.from_catalog("unknot")
TREFOIL = KnotPresentation.from_catalog("trefoil")
FIG8 = KnotPresentation.from_catalog("figure-eight")


def test_catalog_presentations():
    assert TREFOIL.braid.word == (1, 1, 1) and TREFOIL.braid.strands == 2
    assert FIG8.braid.word == (1, -2, 1, -2) and FIG8.braid.strands == 3
    assert TREFOIL.writhe == 3 and FIG8.writhe == 0
    with pytest.raises(UnknownCatalogEntry):
        KnotPresentation.from_catalog("granny")


def test_knots_must_be_single_component():
    with pytest.raises(ValueError):
        KnotPresentation.from_braid((1, 1), 2)  # Hopf link closure


def test_trivial_color_is_one():
    for K in (UNKNOT, TREFOIL, FIG8):
        assert colored_jones_exact(K, 1) == LaurentPoly.one()


@pytest.mark.parametrize("n", (1, 2, 3, 4))
def test_unknot_normalization(n):
    assert colored_jones_exact(UNKNOT, n) == LaurentPoly.one()
    ctx = RootContext(6)
    assert colored_jones_rmatrix(UNKNOT, n, ctx) == pytest.approx(1.0, abs=1e-12)
    assert colored_jones_catalog("unknot", n, ctx) == pytest.approx(1.0, abs=1e-14)


def test_figure_eight_jones_polynomial():
    assert colored_jones_exact(FIG8, 2) == LaurentPoly({-2: 1, -1: -1, 0: 1, 1: -1, 2: 1})


def test_trefoil_jones_polynomial():
    # golden value under the fixed chirality convention
    assert colored_jones_exact(TREFOIL, 2) == LaurentPoly({1: 1, 3: 1, 4: -1})


def test_figure_eight_palindromic():
    for n in (2, 3):
        p = colored_jones_exact(FIG8, n)
        assert p == p.mirrored()


def test_backend_agreement_grid():
    for r in range(3, 9):
        ctx = RootContext(r)
        for K in (TREFOIL, FIG8):
            for n in (1, 2, 3):
                exact = colored_jones_exact(K, n).eval_at(ctx.t_value)
                rmat = colored_jones_rmatrix(K, n, ctx)
                cat = colored_jones_catalog(K.name, n, ctx)
                assert abs(exact - rmat) < 1e-9
                assert abs(exact - cat) < 1e-9
                assert abs(rmat - cat) < 1e-9


def test_writhe_invariance_across_presentations():
    # same knot, different writhe: the framing correction must cancel
    stabilized = KnotPresentation.from_braid((1, 1, 1, 2), 3)  # writhe 4
    conjugated = KnotPresentation.from_braid((1, 1, 1, 1, 2, -1), 3)  # writhe 4
    ctx = RootContext(5)
    for n in (1, 2, 3):
        base = colored_jones_exact(TREFOIL, n)
        assert colored_jones_exact(stabilized, n) == base
        assert colored_jones_exact(conjugated, n) == base
        assert abs(colored_jones_rmatrix(stabilized, n, ctx)
                   - base.eval_at(ctx.t_value)) < 1e-9


def test_mirror_has_equal_modulus():
    mirror = KnotPresentation.from_braid((-1, -1, -1), 2)
    for r in (3, 5):
        ctx = RootContext(r)
        for n in (2, 3):
            a = colored_jones_exact(TREFOIL, n).eval_at(ctx.t_value)
            b = colored_jones_exact(mirror, n).eval_at(ctx.t_value)
            assert abs(abs(a) - abs(b)) < 1e-12


def test_quantum_integer_reflection_symmetry():
    # |[2r+1-n]| = |[n]| exactly at the evaluation root
    for r in (3, 6, 10):
        ctx = RootContext(r)
        for n in range(1, r + 1):
            assert abs(abs(quantum_integer(2 * r + 1 - n, ctx))
                       - abs(quantum_integer(n, ctx))) < 1e-12


def test_rmatrix_state_guard():
    ctx = RootContext(20)
    wide = KnotPresentation.from_braid((1, 2, 3, 4, 5, 6), 7)
    with pytest.raises(StateSpaceTooLarge):
        colored_jones_rmatrix(wide, 6, ctx)


def test_catalog_unknown():
    ctx = RootContext(4)
    with pytest.raises(UnknownCatalogEntry):
        colored_jones_catalog("granny", 2, ctx)


def test_so3_bracket_coefficient():
    ctx = RootContext(3)
    # color zero always evaluates to 1
    for K in (UNKNOT, TREFOIL, FIG8):
        assert so3_bracket_coefficient(K, 0, ctx) == pytest.approx(1.0, abs=1e-12)
    # unknot gives the signed quantum integer
    for n in range(0, 3):
        val = so3_bracket_coefficient(UNKNOT, n, ctx)
        expect = (-1) ** n * quantum_integer(n + 1, ctx)
        assert val == pytest.approx(expect, abs=1e-12)
    # modulus identity against an independently evaluated Jones value
    for n in (1, 2):
        coef = so3_bracket_coefficient(FIG8, n, ctx)
        jval = colored_jones_exact(FIG8, n + 1).eval_at(ctx.t_value)
        assert abs(abs(coef) - abs(quantum_integer(n + 1, ctx) * jval)) < 1e-12
    with pytest.raises(ValueError):
        so3_bracket_coefficient(FIG8, 3, ctx)


def test_dispatch_backends():
    ctx = RootContext(4)
    assert colored_jones(FIG8, 2, ctx).backend == "catalog"
    custom = KnotPresentation.from_braid((1, 1, 1), 2)
    assert colored_jones(custom, 2, ctx).backend == "rmatrix"
    assert colored_jones(custom, 2, ctx, backend="exact").backend == "exact"
    vals = [colored_jones(custom, 2, ctx, backend=b).value
            for b in ("exact", "rmatrix")]
    assert abs(vals[0] - vals[1]) < 1e-10
