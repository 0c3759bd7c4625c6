"""The transformation double category of a group acting on itself.

Takes the symmetric group S3 as an identity crossed module, lets it act on
its own underlying category by conjugation, builds the transformation
double category, checks every law, and reads off the conjugacy classes
from the transpose groupoid view.

Run:  python3 demos/conjugation_double_category.py
"""

from xmodcat.action import adjoint_action, validate_strict_action
from xmodcat.transform import (
    build_transformation_double,
    connected_components,
    nested_inclusions,
    transpose_views,
    verify_double_category,
    verify_transpose,
)
from xmodcat.xmod import xm_sym3


def main():
    xm = xm_sym3()
    act = adjoint_action(xm)
    rep = validate_strict_action(act)
    print(f"conjugation action valid: {rep.ok} ({rep.checked} instances)")

    d = build_transformation_double(act, validate=False)
    print(f"double category: {d.n_objects} objects, {d.n_horizontal} horizontal "
          f"morphisms, {d.n_vertical} vertical morphisms, {d.n_squares} squares")

    rep = verify_double_category(d, samples=5000, seed=1)
    print(f"double category laws: {'all pass' if rep.ok else rep.violations[:3]}"
          f" ({rep.checked} instances)")

    # swapping the two directions gives two ordinary groupoids
    rep = verify_transpose(d)
    print(f"transpose views verify: {rep.ok}")
    views = transpose_views(d)
    comps = connected_components(views.obj_groupoid)
    names = xm.g.names
    classes = sorted(sorted(names[x] for x in c) for c in comps)
    print(f"object-view components (= conjugacy classes of S3): {classes}")

    incl = nested_inclusions(d)
    print(f"nested sub-double-categories: first inclusion full={incl.first_full}, "
          f"second full={incl.second_full}")


if __name__ == "__main__":
    main()
