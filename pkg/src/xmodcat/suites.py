"""Named verification suites over one strict action.

Each suite checks a family of laws and returns one LawLine per law, in a
fixed order, so two runs with the same inputs and seed produce identical
output. Exhaustive enumeration is used whenever the instance space fits in
`max_exhaustive`; otherwise `samples` seeded random instances are drawn.

The XMODCAT_THREADS environment variable sizes a thread pool across suites;
results are still emitted in the fixed suite order.
"""

from __future__ import annotations

import os
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import product

from . import catgroup
from .action import (
    StrictAction,
    check_compositor_coherence,
    identity_compositor,
    nat_component,
    validate_strict_action,
)
from .catgroup import Mor2G, mor_of
from .errors import XmodcatError
from .quintet import (
    compose_h,
    compose_h_face_alt,
    compose_v,
    embed_morphism,
    enumerate_squares,
    evaluate_grid,
    h_identity,
    invert,
    make_grid,
    random_grid,
    square_from_edges,
    v_identity,
)
from .groups import validate_automorphism_action, validate_homomorphism
from .report import Report
from .transform import (
    build_transformation_double,
    horizontal_2category,
    nested_inclusions,
    verify_double_category,
    verify_transpose,
    vertical_2category,
)
from .xmod import validate_crossed_module


@dataclass(frozen=True)
class LawLine:
    suite: str
    law: str
    status: str  # "pass" | "fail" | "skip"
    checked: int
    violations: int = 0
    witness: tuple | None = None
    detail: str = ""

    def to_obj(self) -> dict:
        out = {
            "suite": self.suite,
            "law": self.law,
            "status": self.status,
            "checked": self.checked,
        }
        if self.violations:
            out["violations"] = self.violations
        if self.witness is not None:
            out["witness"] = list(self.witness)
        if self.detail:
            out["detail"] = self.detail
        return out


def law_lines(suite: str, rep: Report, laws: list[str]) -> list[LawLine]:
    """One line per law; `checked` is the owning suite's total instance count."""
    out = []
    for law in laws:
        hits = [v for v in rep.violations if v.law == law]
        if hits:
            out.append(
                LawLine(
                    suite, law, "fail", rep.checked, len(hits),
                    hits[0].witness, hits[0].detail,
                )
            )
        else:
            out.append(LawLine(suite, law, "pass", rep.checked))
    # anything the report recorded under a law name not in the fixed list
    extra = [v for v in rep.violations if v.law not in laws]
    for law in sorted({v.law for v in extra}):
        hits = [v for v in extra if v.law == law]
        out.append(
            LawLine(suite, law, "fail", rep.checked, len(hits), hits[0].witness)
        )
    return out


def skip_lines(suite: str, laws: list[str], why: str) -> list[LawLine]:
    return [LawLine(suite, law, "skip", 0, detail=why) for law in laws]


# --- crossed module ---------------------------------------------------------

XMOD_LAWS = [
    "homomorphism", "bijective", "respects-product", "unit", "composition",
    "equivariance", "peiffer",
]


def suite_xmod(act, samples, seed, max_exhaustive) -> list[LawLine]:
    xm = act.xm
    rep_h = validate_homomorphism(xm.boundary)
    rep_a = validate_automorphism_action(xm.action)
    out = law_lines("xmod", rep_h, ["homomorphism"])
    out += law_lines("xmod", rep_a, ["bijective", "respects-product", "unit", "composition"])
    if rep_h.ok and rep_a.ok:
        out += law_lines("xmod", validate_crossed_module(xm), ["equivariance", "peiffer"])
    else:
        out += skip_lines("xmod", ["equivariance", "peiffer"], "components invalid")
    return out


# --- categorical group ------------------------------------------------------

CATGROUP_LAWS = [
    "tensor-typing", "interchange", "tensor-inverse", "compose-inverse",
    "eckmann-hilton",
]


def suite_catgroup(act, samples, seed, max_exhaustive) -> list[LawLine]:
    xm = act.xm
    g, h = xm.g, xm.h
    rep = Report()
    mors = [Mor2G(xm, gg, eta) for gg in g.elements() for eta in h.elements()]

    for m1 in mors:
        for m2 in mors:
            rep.tick()
            t = catgroup.tensor(m1, m2)
            s1, t1 = catgroup.boundary(m1)
            s2, t2 = catgroup.boundary(m2)
            s, t_ = catgroup.boundary(t)
            if s != g.table[s1][s2] or t_ != g.table[t1][t2]:
                rep.add("tensor-typing", (m1.g, m1.eta, m2.g, m2.eta))

    # (m2 . m1) x (n2 . n1) == (m2 x n2) . (m1 x n1) on composable columns
    for m1 in mors:
        for c2 in h.elements():
            m2 = Mor2G(xm, catgroup.boundary(m1)[1], c2)
            m21 = catgroup.compose(m2, m1)
            for n1 in mors:
                for d2 in h.elements():
                    n2 = Mor2G(xm, catgroup.boundary(n1)[1], d2)
                    rep.tick()
                    lhs = catgroup.tensor(m21, catgroup.compose(n2, n1))
                    rhs = catgroup.compose(
                        catgroup.tensor(m2, n2), catgroup.tensor(m1, n1)
                    )
                    if lhs != rhs:
                        rep.add(
                            "interchange",
                            (m1.g, m1.eta, c2, n1.g, n1.eta, d2),
                        )

    e_mor = catgroup.identity_morphism(xm, g.identity)
    for m in mors:
        rep.tick(2)
        mi = catgroup.invert(m, "tensor")
        if catgroup.tensor(m, mi) != e_mor or catgroup.tensor(mi, m) != e_mor:
            rep.add("tensor-inverse", (m.g, m.eta))
        mc = catgroup.invert(m, "compose")
        s, t = catgroup.boundary(m)
        if (
            catgroup.compose(mc, m) != catgroup.identity_morphism(xm, s)
            or catgroup.compose(m, mc) != catgroup.identity_morphism(xm, t)
        ):
            rep.add("compose-inverse", (m.g, m.eta))

    kernel = [chi for chi in h.elements() if xm.bnd(chi) == g.identity]
    for a in kernel:
        for b in kernel:
            rep.tick()
            ma, mb = Mor2G(xm, g.identity, a), Mor2G(xm, g.identity, b)
            tab = catgroup.tensor(ma, mb)
            if (
                tab != catgroup.tensor(mb, ma)
                or tab.eta != h.table[a][b]
                or h.table[a][b] != h.table[b][a]
            ):
                rep.add("eckmann-hilton", (a, b))

    return law_lines("catgroup", rep, CATGROUP_LAWS)


# --- quintet squares --------------------------------------------------------

QUINTET_LAWS = [
    "face-formulas-agree", "h-inverse", "v-inverse", "h-identity", "v-identity",
    "grid-interchange", "embed-compose",
]


def suite_quintet(act, samples, seed, max_exhaustive) -> list[LawLine]:
    xm = act.xm
    g, h = xm.g, xm.h
    rep = Report()
    squares = enumerate_squares(xm)
    by_left: dict[int, list] = {}
    for sq in squares:
        by_left.setdefault(sq.left, []).append(sq)

    for a in squares:
        for b in by_left[a.right]:
            rep.tick()
            if compose_h(a, b).face != compose_h_face_alt(a, b):
                rep.add("face-formulas-agree", a.edges() + (a.face,) + (b.top, b.right, b.face))

    for sq in squares:
        rep.tick(4)
        w = sq.edges() + (sq.face,)
        ih = invert(sq, "h")
        if (
            compose_h(sq, ih) != h_identity(xm, sq.left)
            or compose_h(ih, sq) != h_identity(xm, sq.right)
        ):
            rep.add("h-inverse", w)
        iv = invert(sq, "v")
        if (
            compose_v(sq, iv) != v_identity(xm, sq.top)
            or compose_v(iv, sq) != v_identity(xm, sq.bottom)
        ):
            rep.add("v-inverse", w)
        if (
            compose_h(h_identity(xm, sq.left), sq) != sq
            or compose_h(sq, h_identity(xm, sq.right)) != sq
        ):
            rep.add("h-identity", w)
        if (
            compose_v(v_identity(xm, sq.top), sq) != sq
            or compose_v(sq, v_identity(xm, sq.bottom)) != sq
        ):
            rep.add("v-identity", w)

    # interchange: every (or sampled) 2x2 grid evaluates the same by rows
    # and by columns
    def check_grid(grid) -> None:
        rep.tick()
        if evaluate_grid(grid, "rows") != evaluate_grid(grid, "columns"):
            rep.add(
                "grid-interchange",
                tuple((s.edges() + (s.face,)) for row in grid.cells for s in row),
            )

    total = g.order**8 * h.order**4
    if total <= max_exhaustive:
        gs, hs = range(g.order), range(h.order)
        for l0, t0, r0, e0 in product(gs, gs, gs, hs):
            a = square_from_edges(xm, l0, t0, r0, e0)
            for t1, r1, e1 in product(gs, gs, hs):
                b = square_from_edges(xm, a.right, t1, r1, e1)
                for l2, r2, e2 in product(gs, gs, hs):
                    c = square_from_edges(xm, l2, a.bottom, r2, e2)
                    for r3, e3 in product(gs, hs):
                        d = square_from_edges(xm, c.right, b.bottom, r3, e3)
                        check_grid(make_grid([[a, b], [c, d]]))
    else:
        rng = random.Random(seed)
        for _ in range(samples):
            check_grid(random_grid(xm, 2, 2, rng))

    # embedding as squares respects categorical-group composition
    for gg in g.elements():
        for eta in h.elements():
            m1 = Mor2G(xm, gg, eta)
            for eta2 in h.elements():
                rep.tick()
                m2 = Mor2G(xm, catgroup.boundary(m1)[1], eta2)
                lhs = compose_h(embed_morphism(m1), embed_morphism(m2))
                if lhs != embed_morphism(catgroup.compose(m2, m1)):
                    rep.add("embed-compose", (gg, eta, eta2))

    return law_lines("quintet", rep, QUINTET_LAWS)


# --- strict action, both presentations --------------------------------------

ACTION_LAWS = [
    "endofunctor-typing", "endofunctor-identities", "endofunctor-composition",
    "transformation-component-typing", "transformation-naturality",
    "component-stacking", "unit-component", "translation-composition",
    "component-product", "pair-typing", "pair-functoriality", "pair-identity",
    "object-associativity", "morphism-associativity", "unit-object",
    "unit-morphism", "whisker-agreement",
]


def suite_action(act, samples, seed, max_exhaustive) -> list[LawLine]:
    return law_lines("action", validate_strict_action(act), ACTION_LAWS)


# --- adjoint oracle: morphism action as a five-square row -------------------

ADJOINT_LAWS = ["five-square-strip"]


def five_square_strip(act: StrictAction, gamma: int, chi: int, f: int):
    """Fold the width-5 witness row for (gamma, chi) acting on morphism f.

    The row has identity left/right edges throughout; its tops read
    e, gamma, src(f), gamma^-1, e and its faces read chi, 1, face(f), 1,
    chi^-1. The horizontal composite's top edge and face must be the source
    and face of the image morphism.
    """
    xm = act.xm
    g, h = xm.g, xm.h
    e = g.identity
    m = mor_of(xm, f)
    gg, eta = m.g, m.eta
    ig = g.inverse[gamma]
    strip = [
        square_from_edges(xm, e, e, e, chi),
        square_from_edges(xm, e, gamma, e, h.identity),
        square_from_edges(xm, e, gg, e, eta),
        square_from_edges(xm, e, ig, e, h.identity),
        square_from_edges(xm, e, e, e, h.inverse[chi]),
    ]
    out = strip[0]
    for sq in strip[1:]:
        out = compose_h(out, sq)
    return out


def suite_adjoint_oracle(act, samples, seed, max_exhaustive) -> list[LawLine]:
    if not act.is_adjoint:
        return skip_lines("adjoint-oracle", ADJOINT_LAWS, "action was not built as adjoint")
    xm = act.xm
    g, h = xm.g, xm.h
    rep = Report()
    n_mor = act.category.n_morphisms

    def check(gamma: int, chi: int, f: int) -> None:
        rep.tick()
        out = five_square_strip(act, gamma, chi, f)
        want = mor_of(xm, act.on_mor_pair(gamma, chi, f))
        want_g, want_eta = want.g, want.eta
        if (
            out.left != g.identity
            or out.right != g.identity
            or out.top != want_g
            or out.face != want_eta
        ):
            rep.add("five-square-strip", (gamma, chi, f))

    total = g.order * h.order * n_mor
    if total <= max_exhaustive:
        for gamma in g.elements():
            for chi in h.elements():
                for f in range(n_mor):
                    check(gamma, chi, f)
    else:
        rng = random.Random(seed)
        for _ in range(samples):
            check(rng.randrange(g.order), rng.randrange(h.order), rng.randrange(n_mor))
    return law_lines("adjoint-oracle", rep, ADJOINT_LAWS)


# --- transformation double category ------------------------------------------

DOUBLE_LAWS = [
    "pair-target", "h-unit", "v-unit", "h-boundary", "v-boundary",
    "h-assoc", "v-assoc", "interchange", "six-composites",
]


def suite_double(act, samples, seed, max_exhaustive) -> list[LawLine]:
    d = build_transformation_double(act, validate=False)
    rep = verify_double_category(
        d, samples=samples, seed=seed, max_exhaustive=max_exhaustive
    )
    return law_lines("double", rep, DOUBLE_LAWS)


TRANSPOSE_LAWS = [
    "obj-bijection", "obj-endpoints", "obj-composition", "obj-identity",
    "mor-bijection", "mor-endpoints", "mor-composition", "mor-identity",
    "mor-inverse",
]


def suite_transpose(act, samples, seed, max_exhaustive) -> list[LawLine]:
    d = build_transformation_double(act, validate=False)
    return law_lines("transpose", verify_transpose(d), TRANSPOSE_LAWS)


NESTED_LAWS = [
    "first-injective", "first-typing", "first-composition", "first-identities",
    "second-typing", "second-composition", "second-identities", "first-full",
    "second-fullness",
]


def suite_nested(act, samples, seed, max_exhaustive) -> list[LawLine]:
    d = build_transformation_double(act, validate=False)
    inc = nested_inclusions(d)
    rep = inc.report
    # the middle inclusion widens the acting group by H: it stays full only
    # when H is trivial
    expect_full = act.xm.h.order == 1
    rep.tick()
    if inc.second_full != expect_full:
        rep.add(
            "second-fullness",
            (act.xm.h.order,),
            f"second_full={inc.second_full}, expected {expect_full}",
        )
    return law_lines("nested", rep, NESTED_LAWS)


# --- degenerate-square 2-categories ------------------------------------------

H2_LAWS = ["kernel-central", "h2-identity", "h2-stacking"]


def suite_h2cat(act, samples, seed, max_exhaustive) -> list[LawLine]:
    xm = act.xm
    h = xm.h
    d = build_transformation_double(act, validate=False)
    two = horizontal_2category(d)
    rep = Report()
    for chi in two.kernel:
        for b in h.elements():
            rep.tick()
            if h.table[chi][b] != h.table[b][chi]:
                rep.add("kernel-central", (chi, b))
    for f, cells in two.cells.items():
        lookup = dict(cells)
        rep.tick()
        if lookup.get(h.identity) != f:
            rep.add("h2-identity", (f,))
        for c1, f1 in cells:
            for c2, f2 in two.cells[f1]:
                rep.tick()
                if lookup.get(two.stack(h.table, c1, c2)) != f2:
                    rep.add("h2-stacking", (f, c1, c2))
    return law_lines("h2cat", rep, H2_LAWS)


V2_LAWS = ["v2-identity-cell", "v2-stacking", "v2-inverse"]


def suite_v2cat(act, samples, seed, max_exhaustive) -> list[LawLine]:
    xm = act.xm
    g, h = xm.g, xm.h
    d = build_transformation_double(act, validate=False)
    two = vertical_2category(d)
    rep = Report()
    for (gamma, x), cells in two.cells.items():
        labels = dict(cells)
        rep.tick()
        if h.identity not in labels:
            rep.add("v2-identity-cell", (gamma, x))
        for chi, tg in cells:
            rep.tick()
            ich = h.inverse[chi]
            if ich not in dict(two.cells[(tg, x)]):
                rep.add("v2-inverse", (gamma, x, chi))
            for chi2, _ in two.cells[(tg, x)]:
                rep.tick()
                if h.table[chi2][chi] not in labels:
                    rep.add("v2-stacking", (gamma, x, chi, chi2))
    return law_lines("v2cat", rep, V2_LAWS)


# --- coherence of the identity compositor ------------------------------------

PENTAGON_LAWS = [
    "compositor-typing", "compositor-invertible", "compositor-naturality",
    "unit-triangle", "pentagon",
]


def suite_pentagon(act, samples, seed, max_exhaustive) -> list[LawLine]:
    rep = check_compositor_coherence(identity_compositor(act))
    return law_lines("pentagon", rep, PENTAGON_LAWS)


# --- registry ----------------------------------------------------------------

SUITES: list[tuple[str, object]] = [
    ("xmod", suite_xmod),
    ("catgroup", suite_catgroup),
    ("quintet", suite_quintet),
    ("action", suite_action),
    ("adjoint-oracle", suite_adjoint_oracle),
    ("double", suite_double),
    ("transpose", suite_transpose),
    ("nested", suite_nested),
    ("h2cat", suite_h2cat),
    ("v2cat", suite_v2cat),
    ("pentagon", suite_pentagon),
]

SUITE_LAW_LISTS = {
    "xmod": XMOD_LAWS,
    "catgroup": CATGROUP_LAWS,
    "quintet": QUINTET_LAWS,
    "action": ACTION_LAWS,
    "adjoint-oracle": ADJOINT_LAWS,
    "double": DOUBLE_LAWS,
    "transpose": TRANSPOSE_LAWS,
    "nested": NESTED_LAWS,
    "h2cat": H2_LAWS,
    "v2cat": V2_LAWS,
    "pentagon": PENTAGON_LAWS,
}


def _guarded(name, fn, act, samples, seed, max_exhaustive) -> list[LawLine]:
    try:
        return fn(act, samples, seed, max_exhaustive)
    except (XmodcatError, RuntimeError, KeyError, IndexError) as exc:
        return [
            LawLine(name, f"{name}-error", "fail", 0, 1, None, f"{type(exc).__name__}: {exc}")
        ]


def thread_count() -> int:
    raw = os.environ.get("XMODCAT_THREADS", "").strip()
    if not raw:
        return 1
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def run_all(
    act: StrictAction,
    samples: int = 100_000,
    seed: int = 0,
    max_exhaustive: int = 10_000_000,
    only: list[str] | None = None,
) -> list[LawLine]:
    """Run every suite (or the named subset) in the registry order."""
    chosen = [(n, f) for n, f in SUITES if only is None or n in only]
    workers = thread_count()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            batches = list(
                pool.map(
                    lambda nf: _guarded(nf[0], nf[1], act, samples, seed, max_exhaustive),
                    chosen,
                )
            )
    else:
        batches = [
            _guarded(n, f, act, samples, seed, max_exhaustive) for n, f in chosen
        ]
    return [line for batch in batches for line in batch]
