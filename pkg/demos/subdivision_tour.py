"""Two subdivisions, their sizes, and how the second one respects unfolding.

Run with:  python3 demos/subdivision_tour.py
"""

from unfolder.complexes import as_pseudo, is_simplicial
from unfolder.diagnostics import balanced_coloring, euler_characteristic
from unfolder.gallery import boundary_simplex, doubled_triangle_sphere, starred_triangle
from unfolder.projectivities import projectivity_group
from unfolder.subdivisions import (
    antiprism_facet_shapes,
    antiprismatic,
    barycentric,
    crumpling_group_pair,
    crumpling_map,
    unfold_commutes_with_antiprismatic,
)


def main() -> None:
    K = boundary_simplex(3)

    print("Barycentric: every chain of faces becomes a facet.")
    b = barycentric(K)
    print(f"  {len(K.facets)} facets -> {len(b.result.facets)},")
    print(f"  balanced afterwards: {balanced_coloring(b.result) is not None}")
    print(f"  group collapses to order "
          f"{projectivity_group(b.result).group.order}")

    print()
    print("Anti-prismatic: pieces per facet follow the ordered-partition counts")
    counts = [len(antiprism_facet_shapes(d)) for d in range(1, 5)]
    print(f"  dimensions 1..4 -> {counts} pieces per facet")
    a = antiprismatic(K)
    print(f"  here: {len(K.facets)} x {counts[1]} = {len(a.result.facets)} facets,")
    print(f"  Euler characteristic kept: {euler_characteristic(a.result)}")
    print(f"  group kept: order {projectivity_group(a.result).group.order}")

    print()
    print("It even makes non-simplicial inputs simplicial:")
    P = doubled_triangle_sphere()
    ok, witness = is_simplicial(P)
    print(f"  two triangles glued along their whole boundary: simplicial? {ok}")
    rec = antiprismatic(P)
    ok, witness = is_simplicial(as_pseudo(rec.result))
    print(f"  after subdividing: simplicial? {ok}")

    print()
    print("The vertex map back to the source induces the group correspondence:")
    T = starred_triangle()
    rec = antiprismatic(T)
    mapping = crumpling_map(rec)
    image = sorted(set(mapping.values()))
    print(f"  {len(mapping)} subdivision vertices -> source vertices {image}")
    lifted, ground = crumpling_group_pair(rec)
    print(f"  group upstairs order {lifted.order}, downstairs order {ground.order}")

    print()
    print("Subdividing first and unfolding second lands in the same place:")
    for mode in ("complete", "partial"):
        w = unfold_commutes_with_antiprismatic(T, mode=mode)
        print(f"  {mode}: isomorphism found? {w is not None}")


if __name__ == "__main__":
    main()
