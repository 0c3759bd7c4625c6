import itertools

import pytest

from xmodcat.action import (
    WeakActionData,
    adjoint_action,
    check_compositor_coherence,
    functor_of,
    identity_compositor,
    make_strict_action,
    nat_component,
    nat_trans_of,
    trivial_strict_action,
    validate_strict_action,
)
from xmodcat.catgroup import mor_of, underlying_category
from xmodcat.errors import MalformedTable
from xmodcat.fincat import (
    category_from_tables,
    terminal_category,
    validate_functor,
    validate_nat_trans,
)
from xmodcat.groups import symmetric
from xmodcat.suites import five_square_strip


class TestStrictActions:
    def test_adjoint_validates_on_all_fixtures(self, adjoints):
        for name, act in adjoints:
            rep = validate_strict_action(act)
            assert rep.ok, f"{name}: {rep.violations[:3]}"
            assert rep.checked > 0

    def test_trivial_action_validates(self, all_xms):
        for _, xm in all_xms:
            act = trivial_strict_action(xm, terminal_category())
            assert validate_strict_action(act).ok

    def test_trivial_action_on_larger_category(self, xm1, xm2):
        act = trivial_strict_action(xm1, underlying_category(xm2))
        assert validate_strict_action(act).ok

    def test_adjoint_object_action_is_conjugation(self, adjoints):
        for _, act in adjoints:
            g = act.xm.g
            for gamma in g.elements():
                for x in g.elements():
                    assert act.on_obj(gamma, x) == g.conj(gamma, x)

    def test_adjoint_morphism_formula_against_permutations(self, xm2):
        # gamma = e, chi = (12) acting on the morphism ((123), e): the new
        # label is chi * ((123) |> chi^-1), worked out with raw permutation
        # composition rather than the library's tables
        act = adjoint_action(xm2)
        s3 = xm2.g
        perms = sorted(itertools.permutations(range(3)))
        index = {p: i for i, p in enumerate(perms)}

        def mul(p, q):  # p after q
            return tuple(p[q[x]] for x in range(3))

        def inv(p):
            return tuple(sorted(range(3), key=lambda x: p[x]))

        chi = index[(1, 0, 2)]  # (12)
        gg = index[(1, 2, 0)]  # (123)
        f = xm2.pair_index(gg, s3.identity)
        out = mor_of(xm2, act.on_mor_pair(s3.identity, chi, f))
        p_chi, p_g = (1, 0, 2), (1, 2, 0)
        want = mul(p_chi, mul(p_g, mul(inv(p_chi), inv(p_g))))
        assert out.g == gg  # e |> g = g
        assert perms[out.eta] == want

    def test_translations_are_functors(self, adjoints):
        for _, act in adjoints:
            for gamma in act.xm.g.elements():
                assert validate_functor(functor_of(act, gamma)).ok

    def test_pairs_are_natural_transformations(self, adjoints):
        for _, act in adjoints:
            for gamma in act.xm.g.elements():
                for chi in act.xm.h.elements():
                    assert validate_nat_trans(nat_trans_of(act, gamma, chi)).ok

    def test_on_mor_is_the_identity_label_pair(self, adjoints):
        for _, act in adjoints:
            e_h = act.xm.h.identity
            for gamma in act.xm.g.elements():
                for f in act.category.morphisms():
                    assert act.on_mor(gamma, f) == act.on_mor_pair(gamma, e_h, f)

    def test_table_shape_errors(self, xm1):
        c = underlying_category(xm1)
        good_obj = [[x for x in c.objects()]] * 2
        good_mor = [[f for f in c.morphisms()]] * 6
        with pytest.raises(MalformedTable):
            make_strict_action(xm1, c, good_obj[:1], good_mor)
        with pytest.raises(MalformedTable):
            make_strict_action(xm1, c, good_obj, good_mor[:3])
        with pytest.raises(MalformedTable):
            make_strict_action(xm1, c, [[9, 9], [9, 9]], good_mor)


def mutate_mor(act, pair, f, value):
    act_mor = [list(r) for r in act.act_mor]
    act_mor[pair][f] = value
    return make_strict_action(act.xm, act.category, act.act_obj, act_mor)


class TestLawDiagnostics:
    def test_corrupted_unit_row_trips_unit_morphism(self, xm1):
        act = adjoint_action(xm1)
        e_pair = xm1.pair_index(0, 0)
        bad = mutate_mor(act, e_pair, 0, 1)
        rep = validate_strict_action(bad)
        assert rep.count("unit-morphism") == 1

    def test_corrupted_object_row_trips_object_laws(self, xm4):
        act = adjoint_action(xm4)
        act_obj = [list(r) for r in act.act_obj]
        act_obj[1][0], act_obj[1][1] = act_obj[1][1], act_obj[1][0]
        bad = make_strict_action(xm4, act.category, act_obj, act.act_mor)
        rep = validate_strict_action(bad)
        assert rep.count("object-associativity") > 0
        assert rep.count("pair-typing") > 0 or rep.count("endofunctor-typing") > 0

    def test_corrupted_pair_row_trips_functoriality(self, xm1):
        act = adjoint_action(xm1)
        bad = mutate_mor(act, xm1.pair_index(1, 1), 2, 5)
        rep = validate_strict_action(bad)
        assert not rep.ok
        laws = {v.law for v in rep.violations}
        assert laws & {
            "pair-functoriality",
            "pair-typing",
            "component-stacking",
            "whisker-agreement",
            "transformation-naturality",
        }

    def test_every_violation_carries_a_witness(self, xm1):
        act = adjoint_action(xm1)
        bad = mutate_mor(act, xm1.pair_index(1, 0), 0, 3)
        rep = validate_strict_action(bad)
        assert not rep.ok
        for v in rep.violations:
            assert isinstance(v.witness, tuple) and v.witness


class TestFiveSquareOracle:
    def test_strip_agrees_with_the_action_everywhere(self, xm1):
        act = adjoint_action(xm1)
        for gamma in xm1.g.elements():
            for chi in xm1.h.elements():
                for f in range(act.category.n_morphisms):
                    out = five_square_strip(act, gamma, chi, f)
                    want = mor_of(xm1, act.on_mor_pair(gamma, chi, f))
                    assert out.left == 0 and out.right == 0
                    assert (out.top, out.face) == (want.g, want.eta)

    def test_strip_agrees_on_samples_of_the_symmetric_fixture(self, xm2):
        import random

        act = adjoint_action(xm2)
        rng = random.Random(6)
        for _ in range(2000):
            gamma = rng.randrange(6)
            chi = rng.randrange(6)
            f = rng.randrange(act.category.n_morphisms)
            out = five_square_strip(act, gamma, chi, f)
            want = mor_of(xm2, act.on_mor_pair(gamma, chi, f))
            assert (out.top, out.face) == (want.g, want.eta)


def one_object_groupoid(group):
    return category_from_tables(
        1,
        [(0, 0)] * group.order,
        [group.identity],
        [(a, b, group.table[a][b]) for a in group.elements() for b in group.elements()],
    )


def with_compositor_entry(act, g1, g2, x, value):
    w = identity_compositor(act)
    comp = [[list(r) for r in plane] for plane in w.compositor]
    comp[g1][g2][x] = value
    return WeakActionData(act, comp)


class TestCompositorCoherence:
    def test_identity_compositor_is_coherent_for_strict_actions(self, adjoints, all_xms):
        for _, act in adjoints:
            assert check_compositor_coherence(identity_compositor(act)).ok
        for _, xm in all_xms:
            act = trivial_strict_action(xm, terminal_category())
            assert check_compositor_coherence(identity_compositor(act)).ok

    def test_compositor_shape_checked(self, xm1):
        act = adjoint_action(xm1)
        with pytest.raises(MalformedTable):
            WeakActionData(act, [[[0]]])

    def test_pentagon_break_on_inversion_fixture(self, xm1):
        # replace the (1,1) plane with the non-identity endomorphisms (x, 1);
        # typing, units and naturality all survive but the two pentagon
        # rewrites pick up different twists
        act = adjoint_action(xm1)
        w = identity_compositor(act)
        comp = [[list(r) for r in plane] for plane in w.compositor]
        for x in act.category.objects():
            comp[1][1][x] = xm1.pair_index(x, 1)
        rep = check_compositor_coherence(WeakActionData(act, comp))
        laws = {v.law for v in rep.violations}
        assert laws == {"pentagon"}
        witnesses = {v.witness for v in rep.violations}
        assert (1, 1, 1, 0) in witnesses and (1, 1, 1, 1) in witnesses

    def test_pentagon_break_single_entry(self, xm1):
        act = adjoint_action(xm1)
        w = with_compositor_entry(act, 1, 1, 0, xm1.pair_index(0, 1))
        rep = check_compositor_coherence(w)
        assert rep.count("pentagon") > 0
        assert all(v.law == "pentagon" for v in rep.violations)
        assert any(v.witness[3] == 0 for v in rep.violations)

    def test_unit_triangle_break(self, xm3):
        act = adjoint_action(xm3)
        w = with_compositor_entry(act, 0, 0, 0, 1)
        rep = check_compositor_coherence(w)
        assert rep.count("unit-triangle") == 2  # both unit orders hit the entry
        assert all(v.witness == (0, 0, 0) for v in rep.violations if v.law == "unit-triangle")

    def test_typing_break_on_symmetric_fixture(self, xm2):
        act = adjoint_action(xm2)
        w = with_compositor_entry(act, 1, 1, 0, xm2.pair_index(1, 0))
        rep = check_compositor_coherence(w)
        assert rep.count("compositor-typing") == 1
        assert [v.witness for v in rep.violations if v.law == "compositor-typing"] == [(1, 1, 0)]

    def test_typing_break_on_cyclic_fixture(self, xm4):
        act = adjoint_action(xm4)
        w = with_compositor_entry(act, 1, 1, 0, xm4.pair_index(0, 1))
        rep = check_compositor_coherence(w)
        assert rep.count("compositor-typing") == 1

    def test_naturality_break_over_a_noncommutative_groupoid(self, xm1, s3):
        # a trivial action on the one-object groupoid built from S3: every
        # entry is an endomorphism, so a non-central choice breaks exactly
        # naturality (plus the pentagons it feeds)
        act = trivial_strict_action(xm1, one_object_groupoid(s3))
        assert validate_strict_action(act).ok
        w = with_compositor_entry(act, 1, 1, 0, s3.names.index("(12)"))
        rep = check_compositor_coherence(w)
        assert rep.count("compositor-naturality") > 0
        f = next(v.witness[2] for v in rep.violations if v.law == "compositor-naturality")
        i12 = s3.names.index("(12)")
        assert s3.mul(i12, f) != s3.mul(f, i12)

    def test_pentagon_witnesses_recompute(self, xm1):
        # every reported quadruple really distinguishes the two rewrites
        act = adjoint_action(xm1)
        w = with_compositor_entry(act, 1, 1, 1, xm1.pair_index(1, 2))
        rep = check_compositor_coherence(w)
        c = act.category
        g = xm1.g
        for v in rep.violations:
            if v.law != "pentagon":
                continue
            f1, g1, h1, x = v.witness
            lhs = c.comp.get(
                (w.compositor[g.table[f1][g1]][h1][x], w.compositor[f1][g1][act.act_obj[h1][x]])
            )
            rhs = c.comp.get(
                (w.compositor[f1][g.table[g1][h1]][x], act.on_mor(f1, w.compositor[g1][h1][x]))
            )
            assert lhs != rhs or lhs is None
