import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from xmodcat.catgroup import Mor2G, boundary, compose, mor_of, tensor
from xmodcat.errors import BoundaryViolation, MixedStructures, NotAdjacent
from xmodcat.quintet import (
    Quintet,
    compose_h,
    compose_h_face_alt,
    compose_v,
    embed_morphism,
    enumerate_squares,
    evaluate_grid,
    extract_morphism,
    h_identity,
    invert_square,
    make_grid,
    make_square,
    random_grid,
    random_square,
    square_from_edges,
    v_identity,
)


class TestConstruction:
    def test_boundary_law_enforced(self, xm1):
        # over the trivial boundary every face closes on edges with
        # bottom*right*top^-1*left^-1 = e; (0,0,1,0) does not close
        with pytest.raises(BoundaryViolation) as exc:
            make_square(xm1, 0, 0, 1, 0, 1)
        assert exc.value.witness == (0, 0, 1, 0, 1)

    def test_out_of_range_edges_rejected(self, xm1):
        with pytest.raises(BoundaryViolation):
            make_square(xm1, 9, 0, 0, 0, 0)
        with pytest.raises(BoundaryViolation):
            make_square(xm1, 0, 0, 0, 0, 9)

    def test_square_from_edges_forces_the_bottom(self, all_xms):
        for _, xm in all_xms:
            for sq in enumerate_squares(xm):
                g = xm.g
                word = g.prod(sq.bottom, sq.right, g.inverse[sq.top], g.inverse[sq.left])
                assert xm.bnd(sq.face) == word

    def test_square_count(self, xm1, xm3, xm4):
        assert len(enumerate_squares(xm1)) == 2 * 2 * 2 * 3
        assert len(enumerate_squares(xm3)) == 2
        assert len(enumerate_squares(xm4)) == 4 ** 3 * 4

    def test_mixed_structures_rejected(self, xm1, xm3):
        a = h_identity(xm1, 0)
        b = h_identity(xm3, 0)
        with pytest.raises(MixedStructures):
            compose_h(a, b)


class TestWorkedValues:
    def test_horizontal_pasting(self, xm1):
        a = make_square(xm1, 1, 0, 1, 0, 1)
        b = make_square(xm1, 1, 0, 1, 0, 2)
        out = compose_h(a, b)
        assert (out.left, out.top, out.right, out.bottom, out.face) == (1, 0, 1, 0, 0)

    def test_vertical_pasting(self, xm1):
        upper = make_square(xm1, 1, 0, 1, 0, 1)
        lower = make_square(xm1, 1, 0, 1, 0, 2)
        out = compose_v(upper, lower)
        assert (out.left, out.top, out.right, out.bottom, out.face) == (0, 0, 0, 0, 1)

    def test_horizontal_inverse_value(self, xm1):
        sq = make_square(xm1, 1, 0, 1, 0, 1)
        inv = invert_square(sq, "h")
        assert (inv.left, inv.top, inv.right, inv.bottom, inv.face) == (1, 0, 1, 0, 2)


class TestPastingLaws:
    def test_face_formulas_agree_exhaustively(self, xm1, xm3):
        for xm in (xm1, xm3):
            sqs = enumerate_squares(xm)
            for a in sqs:
                for b in sqs:
                    if a.right != b.left:
                        continue
                    assert compose_h(a, b).face == compose_h_face_alt(a, b)

    def test_identity_squares(self, all_xms):
        for _, xm in all_xms:
            for sq in enumerate_squares(xm):
                assert compose_h(h_identity(xm, sq.left), sq) == sq
                assert compose_h(sq, h_identity(xm, sq.right)) == sq
                assert compose_v(v_identity(xm, sq.top), sq) == sq
                assert compose_v(sq, v_identity(xm, sq.bottom)) == sq

    def test_inverse_squares(self, all_xms):
        for _, xm in all_xms:
            for sq in enumerate_squares(xm):
                hi = invert_square(sq, "horizontal")
                assert compose_h(sq, hi) == h_identity(xm, sq.left)
                assert compose_h(hi, sq) == h_identity(xm, sq.right)
                vi = invert_square(sq, "vertical")
                assert compose_v(sq, vi) == v_identity(xm, sq.top)
                assert compose_v(vi, sq) == v_identity(xm, sq.bottom)

    def test_unknown_axis(self, xm1):
        with pytest.raises(ValueError):
            invert_square(h_identity(xm1, 0), "diagonal")

    def test_horizontal_associativity(self, xm1):
        sqs = enumerate_squares(xm1)
        for a in sqs:
            for b in sqs:
                if a.right != b.left:
                    continue
                for c in sqs:
                    if b.right != c.left:
                        continue
                    assert compose_h(compose_h(a, b), c) == compose_h(a, compose_h(b, c))

    def test_vertical_associativity(self, xm1):
        sqs = enumerate_squares(xm1)
        for a in sqs:
            for b in sqs:
                if a.bottom != b.top:
                    continue
                for c in sqs:
                    if b.bottom != c.top:
                        continue
                    assert compose_v(compose_v(a, b), c) == compose_v(a, compose_v(b, c))

    def test_adjacency_enforced(self, xm4):
        a = square_from_edges(xm4, 0, 0, 1, 0)
        b = square_from_edges(xm4, 2, 0, 0, 0)
        with pytest.raises(NotAdjacent):
            compose_h(a, b)
        c = square_from_edges(xm4, 0, 1, 0, 0)
        d = square_from_edges(xm4, 0, 2, 0, 0)
        if c.bottom != d.top:
            with pytest.raises(NotAdjacent):
                compose_v(c, d)


class TestInterchange:
    def test_exhaustive_2x2_on_small_fixtures(self, xm1, xm3):
        # free parameters of an adjacency-valid 2x2 grid: all four faces,
        # left/top/right of the top-left square, top/right of the top-right,
        # left/right of the bottom-left, right of the bottom-right
        for xm in (xm1, xm3):
            ng, nh = xm.g.order, xm.h.order
            count = 0
            for l0, t0, r0, e0 in itertools.product(range(ng), range(ng), range(ng), range(nh)):
                s0 = square_from_edges(xm, l0, t0, r0, e0)
                for t1, r1, e1 in itertools.product(range(ng), range(ng), range(nh)):
                    s1 = square_from_edges(xm, s0.right, t1, r1, e1)
                    for l2, r2, e2 in itertools.product(range(ng), range(ng), range(nh)):
                        s2 = square_from_edges(xm, l2, s0.bottom, r2, e2)
                        for r3, e3 in itertools.product(range(ng), range(nh)):
                            s3 = square_from_edges(xm, s2.right, s1.bottom, r3, e3)
                            grid = make_grid([[s0, s1], [s2, s3]])
                            assert evaluate_grid(grid, "rows") == evaluate_grid(grid, "columns")
                            count += 1
            assert count == ng ** 8 * nh ** 4

    def test_sampled_grids_on_larger_fixtures(self, xm2, xm4):
        rng = random.Random(20260815)
        for xm in (xm2, xm4):
            for _ in range(300):
                rows = rng.randrange(1, 4)
                cols = rng.randrange(1, 4)
                grid = random_grid(xm, rows, cols, rng)
                assert evaluate_grid(grid, "rows") == evaluate_grid(grid, "columns")

    def test_grid_shape_and_adjacency_errors(self, xm4):
        a = square_from_edges(xm4, 0, 0, 1, 0)
        b = square_from_edges(xm4, 2, 0, 0, 0)
        with pytest.raises(NotAdjacent) as exc:
            make_grid([[a, b]])
        assert "(0,0)|(0,1)" in str(exc.value)
        assert a.bottom != a.top  # so stacking a on itself must fail
        with pytest.raises(NotAdjacent) as exc:
            make_grid([[a], [a]])
        assert "(0,0)/(1,0)" in str(exc.value)
        with pytest.raises(NotAdjacent):
            make_grid([[a, a], [a]])
        with pytest.raises(NotAdjacent):
            make_grid([])

    def test_unknown_evaluation_order(self, xm1):
        grid = make_grid([[h_identity(xm1, 0)]])
        with pytest.raises(ValueError):
            evaluate_grid(grid, "spiral")

    def test_random_helpers_are_deterministic(self, xm2):
        g1 = random_grid(xm2, 3, 3, random.Random(5))
        g2 = random_grid(xm2, 3, 3, random.Random(5))
        assert g1 == g2
        s1 = random_square(xm2, random.Random(5))
        s2 = random_square(xm2, random.Random(5))
        assert s1 == s2


@settings(max_examples=150, deadline=None)
@given(data=st.data())
def test_face_formulas_agree_sampled(data, xm2):
    rng = random.Random(data.draw(st.integers(0, 2 ** 32 - 1)))
    a = random_square(xm2, rng)
    b = square_from_edges(
        xm2,
        a.right,
        rng.randrange(xm2.g.order),
        rng.randrange(xm2.g.order),
        rng.randrange(xm2.h.order),
    )
    assert compose_h(a, b).face == compose_h_face_alt(a, b)


class TestMorphismEmbedding:
    def test_round_trip(self, all_xms):
        for _, xm in all_xms:
            for i in range(xm.npairs):
                m = mor_of(xm, i)
                sq = embed_morphism(m)
                assert extract_morphism(sq) == m

    def test_extract_requires_identity_top_and_bottom(self, xm4):
        sq = square_from_edges(xm4, 0, 1, 0, 0)
        with pytest.raises(BoundaryViolation):
            extract_morphism(sq)

    def test_pasting_realises_composition(self, all_xms):
        # embedded morphisms sit side by side exactly when they stack as
        # 2-group morphisms, and compose_h computes that composite
        for _, xm in all_xms:
            for i in range(xm.npairs):
                m1 = mor_of(xm, i)
                for j in range(xm.npairs):
                    m2 = mor_of(xm, j)
                    a, b = embed_morphism(m1), embed_morphism(m2)
                    if a.right == b.left:
                        assert extract_morphism(compose_h(a, b)) == compose(m2, m1)
                    else:
                        assert boundary(m1)[1] != m2.g

    def test_transposed_embedding_realises_both_operations(self, xm1, xm2):
        # squares with identity left/right edges: vertical pasting is
        # 2-group composition and horizontal pasting is the tensor
        for xm in (xm1, xm2):
            e = xm.g.identity

            def embed_flat(m):
                return make_square(
                    xm, e, m.g, e, xm.g.table[xm.bnd(m.eta)][m.g], m.eta
                )

            for i in range(xm.npairs):
                m1 = mor_of(xm, i)
                for j in range(xm.npairs):
                    m2 = mor_of(xm, j)
                    a, b = embed_flat(m1), embed_flat(m2)
                    # tensor via side-by-side pasting
                    t = compose_h(a, b)
                    mt = tensor(m1, m2)
                    assert (t.top, t.face) == (mt.g, mt.eta)
                    # composition via stacking when boundaries match
                    if a.bottom == b.top:
                        v = compose_v(a, b)
                        mc = compose(m2, m1)
                        assert (v.top, v.face) == (mc.g, mc.eta)
