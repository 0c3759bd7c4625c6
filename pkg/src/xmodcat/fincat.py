"""Finite categories given by dense index tables.

Objects are 0..n_objects-1, morphisms 0..n_morphisms-1 with src/tgt arrays.
comp[(g, f)] is the composite "g after f" and is defined exactly when
src[g] == tgt[f]; the checked constructor rejects anything partial, ill-typed,
non-associative or non-unital.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    IdentityLawViolation,
    MalformedTable,
    MixedStructures,
    NonAssociative,
    NotComposable,
    TypeMismatch,
)
from .report import DEFAULT_CAP, Report


class FiniteCategory:
    def __init__(self, n_objects, src, tgt, identity, comp):
        self.n_objects = n_objects
        self.src = tuple(src)
        self.tgt = tuple(tgt)
        self.identity = tuple(identity)
        self.comp = dict(comp)

    @property
    def n_morphisms(self) -> int:
        return len(self.src)

    def objects(self) -> range:
        return range(self.n_objects)

    def morphisms(self) -> range:
        return range(len(self.src))

    def compose(self, g: int, f: int) -> int:
        """g after f; raises NotComposable on a source/target mismatch."""
        try:
            return self.comp[(g, f)]
        except KeyError:
            raise NotComposable(
                f"tgt of morphism {f} is {self.tgt[f]}, src of {g} is {self.src[g]}"
            ) from None

    def hom(self, x: int, y: int) -> list[int]:
        return [f for f in self.morphisms() if self.src[f] == x and self.tgt[f] == y]

    def is_identity(self, f: int) -> bool:
        return self.identity[self.src[f]] == f

    def composable_pairs(self):
        by_src: dict[int, list[int]] = {}
        for g in self.morphisms():
            by_src.setdefault(self.src[g], []).append(g)
        for f in self.morphisms():
            for g in by_src.get(self.tgt[f], ()):
                yield g, f

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FiniteCategory)
            and self.n_objects == other.n_objects
            and self.src == other.src
            and self.tgt == other.tgt
            and self.identity == other.identity
            and self.comp == other.comp
        )

    def __repr__(self) -> str:
        return f"FiniteCategory({self.n_objects} objects, {self.n_morphisms} morphisms)"


def category_from_tables(n_objects, morphisms, identity, comp) -> FiniteCategory:
    """Checked constructor.

    morphisms: sequence of (src, tgt) pairs; comp: sequence of (g, f, g_after_f).
    """
    src = tuple(s for s, _ in morphisms)
    tgt = tuple(t for _, t in morphisms)
    n_mor = len(src)
    if n_objects < 0:
        raise MalformedTable("negative object count")
    for f in range(n_mor):
        if not (0 <= src[f] < n_objects and 0 <= tgt[f] < n_objects):
            raise MalformedTable(f"morphism {f} has endpoints out of range")
    identity = tuple(identity)
    if len(identity) != n_objects:
        raise MalformedTable("identity table length must equal object count")
    for x, i in enumerate(identity):
        if not 0 <= i < n_mor:
            raise MalformedTable(f"identity[{x}] out of range")
        if src[i] != x or tgt[i] != x:
            raise TypeMismatch(f"identity[{x}] = {i} is not an endomorphism of {x}")

    table: dict[tuple[int, int], int] = {}
    for g, f, r in comp:
        if not (0 <= g < n_mor and 0 <= f < n_mor and 0 <= r < n_mor):
            raise MalformedTable(f"composition entry ({g},{f},{r}) out of range")
        if (g, f) in table and table[(g, f)] != r:
            raise MalformedTable(f"conflicting entries for composite ({g},{f})")
        table[(g, f)] = r

    for (g, f), r in table.items():
        if src[g] != tgt[f]:
            raise TypeMismatch(f"composite ({g},{f}) defined but not composable")
        if src[r] != src[f] or tgt[r] != tgt[g]:
            raise TypeMismatch(f"composite ({g},{f}) = {r} has wrong endpoints")
    for f in range(n_mor):
        for g in range(n_mor):
            if src[g] == tgt[f] and (g, f) not in table:
                raise TypeMismatch(f"missing composite for composable pair ({g},{f})")

    for f in range(n_mor):
        if table[(identity[tgt[f]], f)] != f:
            raise IdentityLawViolation(f"id after {f} is not {f}")
        if table[(f, identity[src[f]])] != f:
            raise IdentityLawViolation(f"{f} after id is not {f}")

    by_src: dict[int, list[int]] = {}
    for g in range(n_mor):
        by_src.setdefault(src[g], []).append(g)
    for f in range(n_mor):
        for g in by_src.get(tgt[f], ()):
            gf = table[(g, f)]
            for h in by_src.get(tgt[g], ()):
                if table[(h, gf)] != table[(table[(h, g)], f)]:
                    raise NonAssociative(h, g, f)

    return FiniteCategory(n_objects, src, tgt, identity, table)


def terminal_category() -> FiniteCategory:
    return FiniteCategory(1, (0,), (0,), (0,), {(0, 0): 0})


@dataclass(frozen=True, eq=False)
class Functor:
    source: FiniteCategory
    target: FiniteCategory
    obj_map: tuple[int, ...]
    mor_map: tuple[int, ...]

    def on_obj(self, x: int) -> int:
        return self.obj_map[x]

    def on_mor(self, f: int) -> int:
        return self.mor_map[f]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Functor)
            and self.obj_map == other.obj_map
            and self.mor_map == other.mor_map
            and self.source == other.source
            and self.target == other.target
        )


def identity_functor(c: FiniteCategory) -> Functor:
    return Functor(c, c, tuple(c.objects()), tuple(c.morphisms()))


def functor_compose(g: Functor, f: Functor) -> Functor:
    """g after f."""
    if f.target != g.source:
        raise MixedStructures("functors not composable")
    return Functor(
        f.source,
        g.target,
        tuple(g.obj_map[x] for x in f.obj_map),
        tuple(g.mor_map[m] for m in f.mor_map),
    )


def validate_functor(fun: Functor, cap: int = DEFAULT_CAP) -> Report:
    rep = Report(cap=cap)
    c, d = fun.source, fun.target
    if len(fun.obj_map) != c.n_objects or len(fun.mor_map) != c.n_morphisms:
        raise MalformedTable("functor tables have the wrong lengths")
    for f in c.morphisms():
        rep.tick()
        ff = fun.mor_map[f]
        if d.src[ff] != fun.obj_map[c.src[f]] or d.tgt[ff] != fun.obj_map[c.tgt[f]]:
            rep.add("typing", (f,))
    for x in c.objects():
        rep.tick()
        if fun.mor_map[c.identity[x]] != d.identity[fun.obj_map[x]]:
            rep.add("identities", (x,))
    for g, f in c.composable_pairs():
        rep.tick()
        lhs = fun.mor_map[c.comp[(g, f)]]
        rhs = d.comp.get((fun.mor_map[g], fun.mor_map[f]))
        if lhs != rhs:
            rep.add("composition", (g, f))
    return rep


@dataclass(frozen=True, eq=False)
class NatTrans:
    """Components indexed by objects of the shared source category."""

    source: Functor
    target: Functor
    components: tuple[int, ...]

    def at(self, x: int) -> int:
        return self.components[x]


def validate_nat_trans(t: NatTrans, cap: int = DEFAULT_CAP) -> Report:
    if t.source.source != t.target.source or t.source.target != t.target.target:
        raise MixedStructures("natural transformation needs parallel functors")
    rep = Report(cap=cap)
    c, d = t.source.source, t.source.target
    for x in c.objects():
        rep.tick()
        a = t.components[x]
        if d.src[a] != t.source.obj_map[x] or d.tgt[a] != t.target.obj_map[x]:
            rep.add("component-typing", (x,))
    if not rep.ok:
        return rep
    for f in c.morphisms():
        rep.tick()
        x, y = c.src[f], c.tgt[f]
        lhs = d.comp.get((t.components[y], t.source.mor_map[f]))
        rhs = d.comp.get((t.target.mor_map[f], t.components[x]))
        if lhs is None or lhs != rhs:
            rep.add("naturality", (f,))
    return rep
