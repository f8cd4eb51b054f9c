"""Projectivities: vertex bijections carried along walks in the dual graph.

Crossing one gluing matches ridge vertices through the gluing bijection and
the two opposite vertices with each other.  Composing those steps along a
closed walk based at a fixed facet permutes that facet's vertex labels; all
such permutations form the group of projectivities of the complex.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import (
    Complex,
    FacetPath,
    StarView,
    dual_graph,
    facet_count_of,
    gluings_of,
    perspectivity,
    star_of_class,
)
from .errors import DegenerateMap, InvalidPath, NotAFacet, NotStronglyConnected
from .permutations import (
    Perm,
    PermutationGroup,
    perm_compose,
    perm_identity,
    perm_inverse,
)


def path_projectivity(x: Complex, path: FacetPath) -> Perm:
    """Vertex bijection V(start) -> V(end) along a facet path."""
    g = perm_identity(x.dim + 1)
    cur = path.start
    for gid in path.steps:
        step = perspectivity(x, cur, gid)
        g = perm_compose(g, step)
        cur = gluings_of(x)[gid].other(cur)
    return g


def loop_projectivity(x: Complex, loop: FacetPath) -> Perm:
    seq = loop.facet_sequence(x)
    if seq[0] != seq[-1]:
        raise InvalidPath(f"walk ends at facet {seq[-1]}, not back at {seq[0]}")
    return path_projectivity(x, loop)


@dataclass(frozen=True)
class ProjectivityGroup:
    """Group of projectivities based at one facet, with its spanning data.

    `transports[f]` is the projectivity along the breadth-first tree path
    from the base to facet f; generators come from the non-tree gluings.
    """

    base: int
    group: PermutationGroup
    transports: tuple[Perm, ...]
    tree_gluings: tuple[int, ...]
    reached: tuple[int, ...]  # facets in BFS order

    def transport_to(self, facet: int) -> Perm:
        if not 0 <= facet < len(self.transports):
            raise NotAFacet(f"no facet {facet}")
        p = self.transports[facet]
        if p is None:
            raise NotStronglyConnected(f"facet {facet} is not reachable from {self.base}")
        return p

    @property
    def order(self) -> int:
        return self.group.order


def projectivity_group(
    x: Complex, base: int = 0, restrict_to_component: bool = False
) -> ProjectivityGroup:
    """Breadth-first generators for the projectivity group at `base`.

    The dual graph must be connected unless `restrict_to_component` is set,
    in which case only the component of `base` contributes.
    """
    n = facet_count_of(x)
    if not 0 <= base < n:
        raise InvalidPath(f"no facet {base}")
    adj = dual_graph(x).adjacency()
    ident = perm_identity(x.dim + 1)
    transports: list[Perm | None] = [None] * n
    transports[base] = ident
    order: list[int] = [base]
    tree: list[int] = []
    non_tree: list[tuple[int, int]] = []  # (gluing id, facet reached first)
    head = 0
    while head < len(order):
        f = order[head]
        head += 1
        for gid, w in adj[f]:
            if transports[w] is None:
                transports[w] = perm_compose(transports[f], perspectivity(x, f, gid))
                tree.append(gid)
                order.append(w)
            elif gid not in tree and all(g != gid for g, _ in non_tree):
                non_tree.append((gid, f))
    if len(order) < n and not restrict_to_component:
        missing = sorted(set(range(n)) - set(order))
        raise NotStronglyConnected(f"facets {missing} are not reachable from {base}")
    gens: list[tuple[Perm, str]] = []
    for gid, f in non_tree:
        g = gluings_of(x)[gid]
        w = g.other(f)
        loop = perm_compose(
            perm_compose(transports[f], perspectivity(x, f, gid)),
            perm_inverse(transports[w]),
        )
        gens.append((loop, f"gluing {gid}"))
    group = PermutationGroup.generated(gens, x.dim + 1)
    return ProjectivityGroup(
        base=base,
        group=group,
        transports=tuple(transports),
        tree_gluings=tuple(tree),
        reached=tuple(order),
    )


@dataclass(frozen=True)
class StarGroup:
    """Projectivities around one face class, based at a star facet."""

    star: StarView
    base_parent_facet: int
    group: PermutationGroup

    @property
    def order(self) -> int:
        return self.group.order


def star_group(x: Complex, cid: int, base_parent_facet: int | None = None) -> StarGroup:
    """Group of projectivities of the star of a face class.

    Walks stay inside the star (every crossed ridge contains the class), so
    each element fixes the class representative of the base facet pointwise.
    If the star's dual graph is disconnected, only the base's component acts.
    """
    star = star_of_class(x, cid)
    if base_parent_facet is None:
        base_parent_facet = star.parent_facets[0]
    base = star.star_index(base_parent_facet)
    pg = projectivity_group(star.complex, base=base, restrict_to_component=True)
    rep = star.rep_in[base]
    for p in pg.group.elements:
        for v in rep:
            assert p[v] == v, "a star projectivity moved its own class"
    return StarGroup(star=star, base_parent_facet=base_parent_facet, group=pg.group)


def odd_generated_subgroup(x: Complex, base: int = 0) -> PermutationGroup:
    """Subgroup generated by loops around the odd codimension-2 faces.

    Each odd face class contributes the generators of its star group,
    conjugated back to the base facet along the spanning-tree transport.
    """
    from .diagnostics import odd_subcomplex  # import cycle with diagnostics

    odd = odd_subcomplex(x).odd_faces
    pg = projectivity_group(x, base)
    gens: list[tuple[Perm, str]] = []
    for cid in odd:
        sg = star_group(x, cid)
        t = pg.transport_to(sg.base_parent_facet)
        t_inv = perm_inverse(t)
        for p, _tag in sg.group.generators:
            elt = perm_compose(perm_compose(t, p), t_inv)
            gens.append((elt, f"around class {cid}"))
    sub = PermutationGroup.generated(gens, x.dim + 1)
    assert sub.is_subgroup_of(pg.group), "odd loop escaped the projectivity group"
    return sub


def induced_homomorphism_check(
    K,
    L,
    vertex_map: dict[int, int],
    base_k: int = 0,
    base_l: int | None = None,
) -> bool:
    """Check that a non-degenerate map embeds one projectivity group in another.

    `vertex_map` must send every facet of K onto a facet of L without
    collapsing vertices.  Conjugating by the induced label bijection of the
    base facets must send each element into the target group; distinctness
    and the multiplication table are verified explicitly.
    """
    d = K.dim
    if L.dim != d:
        raise DegenerateMap(f"dimensions differ: {d} vs {L.dim}")
    for f in K.facets:
        image = [vertex_map[v] for v in f]
        if len(set(image)) != d + 1:
            raise DegenerateMap(f"facet {f} collapses under the vertex map")
        if tuple(sorted(image)) not in L.facets:
            raise DegenerateMap(f"facet {f} does not land on a facet")
    image_base = tuple(sorted(vertex_map[v] for v in K.facets[base_k]))
    if base_l is None:
        base_l = L.facet_id(image_base)
    elif L.facets[base_l] != image_base:
        raise DegenerateMap("base facet does not map onto the chosen target facet")
    verts_k = K.facets[base_k]
    verts_l = L.facets[base_l]
    phi = tuple(verts_l.index(vertex_map[v]) for v in verts_k)
    phi_inv = perm_inverse(phi)
    gk = projectivity_group(K, base_k).group
    gl = projectivity_group(L, base_l).group

    def push(g: Perm) -> Perm:
        return perm_compose(perm_compose(phi_inv, g), phi)

    images = {g: push(g) for g in gk.elements}
    if len(set(images.values())) != gk.order:
        return False
    if any(h not in gl for h in images.values()):
        return False
    for g1 in gk.elements:
        for g2 in gk.elements:
            if images[perm_compose(g1, g2)] != perm_compose(images[g1], images[g2]):
                return False
    return True
