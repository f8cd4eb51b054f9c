"""Subdivision operators: barycentric, stellar, anti-prismatic.

The anti-prismatic subdivision is built from its abstract description:
vertices are pairs (face class, vertex class of that face); a set of d+1
distinct pairs spans a facet when the faces form a nested chain (repetitions
allowed) and a pair's vertex avoids every strictly smaller face in the chain.
Admissibility is local to one facet copy, so the facet shapes are enumerated
once per dimension and instantiated per copy with global class ids.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from itertools import permutations as all_permutations

from .complexes import AbstractComplex, Complex, classes_of, facet_count_of
from .errors import BadParameter, Mismatch, NotAFacet
from .permutations import Perm, PermutationGroup
from .projectivities import projectivity_group

LocalPair = tuple[tuple[int, ...], int]  # (sorted local subset, local vertex)


@lru_cache(maxsize=None)
def antiprism_facet_shapes(dim: int) -> tuple[tuple[LocalPair, ...], ...]:
    """All facets of the anti-prismatic subdivision of one standard simplex.

    Each shape is a sorted tuple of d+1 distinct (subset, vertex) pairs;
    subsets grow along the tuple and equal subsets carry increasing vertices,
    so every facet appears exactly once.
    """
    d = dim
    full = tuple(range(d + 1))
    subsets = [
        tuple(s) for k in range(1, d + 2) for s in combinations(full, k)
    ]
    shapes: list[tuple[LocalPair, ...]] = []

    def extend(pairs: list[LocalPair], tau: tuple[int, ...] | None) -> None:
        if len(pairs) == d + 1:
            shapes.append(tuple(pairs))
            return
        for nxt in subsets:
            if tau is not None:
                if len(nxt) < len(tau) or not set(tau) <= set(nxt):
                    continue
            smaller = [t for t, _w in pairs if set(t) < set(nxt)]
            for w in nxt:
                if nxt == tau and w <= pairs[-1][1]:
                    continue
                if any(w in t for t in smaller):
                    continue
                pairs.append((nxt, w))
                extend(pairs, nxt)
                pairs.pop()

    extend([], None)
    return tuple(shapes)


@dataclass
class SubdivisionRecord:
    """A subdivision together with its vertex and facet provenance.

    vertex_provenance: result vertex -> originating face class id for the
    barycentric case, (face class id, vertex class id) for the anti-prismatic
    case.  facet_provenance: result facet -> (source facet copy, shape index).
    """

    kind: str
    source: Complex
    result: AbstractComplex
    vertex_provenance: dict
    facet_provenance: tuple[tuple[int, int], ...]

    def central_shape_index(self) -> int:
        if self.kind != "antiprismatic":
            raise BadParameter(f"no central facets in a {self.kind} subdivision")
        shapes = antiprism_facet_shapes(self.source.dim)
        full = tuple(range(self.source.dim + 1))
        want = tuple((full, w) for w in full)
        return shapes.index(want)

    def facet_of_copy(self, copy: int, shape_index: int) -> int:
        return self.facet_provenance.index((copy, shape_index))

    def central_facet(self, copy: int) -> int:
        return self.facet_of_copy(copy, self.central_shape_index())


def barycentric(x: Complex) -> SubdivisionRecord:
    """Facets are the maximal flags of face classes within each facet copy.

    A flag corresponds to an ordering of the copy's local vertices; its k-th
    member is the class of the first k+1 of them.  Vertex ids of the result
    are the face class ids themselves.
    """
    d = x.dim
    classes = classes_of(x)
    orderings = tuple(all_permutations(range(d + 1)))
    raw: list[tuple[int, ...]] = []
    provenance: list[tuple[int, int]] = []
    for f in range(facet_count_of(x)):
        for k, ordering in enumerate(orderings):
            flag = tuple(
                classes.class_of((f, tuple(sorted(ordering[: i + 1]))))
                for i in range(d + 1)
            )
            raw.append(tuple(sorted(flag)))
            provenance.append((f, k))
    result = AbstractComplex.from_facets(raw)
    if result.facet_count != len(raw):
        raise Mismatch("flag facets collided; face classes are inconsistent")
    where = {facet: provenance[i] for i, facet in enumerate(raw)}
    facet_prov = tuple(where[facet] for facet in result.facets)
    vertex_prov = {cid: cid for facet in result.facets for cid in facet}
    return SubdivisionRecord("barycentric", x, result, vertex_prov, facet_prov)


def stellar(K: AbstractComplex, facet: int) -> AbstractComplex:
    """Replace one facet by the cone over its boundary from a new vertex."""
    if not 0 <= facet < K.facet_count:
        raise NotAFacet(f"no facet {facet}")
    apex = max(K.vertices()) + 1
    target = K.facets[facet]
    out = [f for i, f in enumerate(K.facets) if i != facet]
    for v in target:
        out.append(tuple(sorted([w for w in target if w != v] + [apex])))
    return AbstractComplex.from_facets(out)


def antiprismatic(x: Complex) -> SubdivisionRecord:
    """Subdivision on (face class, vertex class) pairs.

    Every facet of the result contains a pair whose face is the full facet
    class of its copy, so facets never collide across copies; the facet count
    is always (number of shapes) x (number of copies).
    """
    d = x.dim
    classes = classes_of(x)
    shapes = antiprism_facet_shapes(d)
    pair_set: set[tuple[int, int]] = set()
    per_copy: list[list[tuple[tuple[int, int], ...]]] = []
    for f in range(facet_count_of(x)):
        rows: list[tuple[tuple[int, int], ...]] = []
        for shape in shapes:
            pairs = tuple(
                (classes.class_of((f, tau)), classes.class_of((f, (w,))))
                for tau, w in shape
            )
            rows.append(pairs)
            pair_set.update(pairs)
        per_copy.append(rows)
    vertex_id = {pair: i for i, pair in enumerate(sorted(pair_set))}
    raw: list[tuple[int, ...]] = []
    provenance: list[tuple[int, int]] = []
    for f, rows in enumerate(per_copy):
        for k, pairs in enumerate(rows):
            raw.append(tuple(sorted(vertex_id[p] for p in pairs)))
            provenance.append((f, k))
    result = AbstractComplex.from_facets(raw)
    if result.facet_count != len(raw):
        raise Mismatch("pair facets collided; this contradicts the subdivision law")
    where = {facet: provenance[i] for i, facet in enumerate(raw)}
    facet_prov = tuple(where[facet] for facet in result.facets)
    vertex_prov = {i: pair for pair, i in vertex_id.items()}
    return SubdivisionRecord("antiprismatic", x, result, vertex_prov, facet_prov)


def crumpling_map(rec: SubdivisionRecord) -> dict[int, int]:
    """Vertex map of the subdivision onto its source: (face, vertex) -> vertex.

    Values are vertices of an abstract source, vertex class ids otherwise."""
    if rec.kind != "antiprismatic":
        raise BadParameter("the crumpling map belongs to the anti-prismatic subdivision")
    keys = classes_of(rec.source).face_keys
    if keys is not None:
        return {v: keys[pair[1]][0] for v, pair in rec.vertex_provenance.items()}
    return {v: pair[1] for v, pair in rec.vertex_provenance.items()}


def crumpling_group_pair(
    rec: SubdivisionRecord, base: int = 0
) -> tuple[PermutationGroup, PermutationGroup]:
    """Projectivity groups of subdivision and source, on the source's labels.

    The subdivision group is computed at the central facet of the base copy
    and transported through the crumpling identification of its vertices, so
    the two groups act on the same label set and can be compared directly.
    """
    x = rec.source
    d = x.dim
    classes = classes_of(x)
    central = rec.central_facet(base)
    sub_pg = projectivity_group(rec.result, base=central)
    base_pg = projectivity_group(x, base=base)

    facet_verts = rec.result.facets[central]
    mu: list[int] = []
    for vid in facet_verts:
        _tau_class, w_class = rec.vertex_provenance[vid]
        f, (l,) = next(r for r in classes.members[w_class] if r[0] == base)
        mu.append(l)
    transported = []
    for g in sub_pg.group.sorted_elements():
        h = [0] * (d + 1)
        for pos in range(d + 1):
            h[mu[pos]] = mu[g[pos]]
        transported.append(tuple(h))
    lifted = PermutationGroup(
        degree=d + 1,
        elements=frozenset(transported),
        generators=tuple((p, "transported") for p in transported),
    )
    return lifted, base_pg.group


def iterate(op, x: Complex, n: int) -> Complex:
    """Apply a subdivision operator n times; accepts records or complexes."""
    if n < 0:
        raise BadParameter("iteration count must be >= 0")
    cur = x
    for _ in range(n):
        out = op(cur)
        cur = out.result if isinstance(out, SubdivisionRecord) else out
    return cur


def unfold_commutes_with_antiprismatic(x: Complex, base: int = 0, mode: str = "complete"):
    """Witness that unfolding then subdividing equals subdividing then
    unfolding, compatibly with the two projections onto the subdivided base.

    Returns the isomorphism witness or None.  The left side unfolds the
    subdivision; the right side subdivides the unfolding, and each of its
    facets is matched to the base subdivision facet with the same shape in
    the projected copy, with the vertex alignment read off shape-wise.
    """
    from .diagnostics import ProjectionConstraint, isomorphic
    from .unfoldings import complete_unfolding, partial_unfolding

    if mode not in ("complete", "partial"):
        raise BadParameter(f"unknown mode {mode!r}")
    rec = antiprismatic(x)
    if mode == "complete":
        left = complete_unfolding(rec.result)
        up = complete_unfolding(x, base)
    else:
        left = partial_unfolding(rec.result)
        up = partial_unfolding(x)
    rec_up = antiprismatic(up.total)

    d = x.dim
    shapes = antiprism_facet_shapes(d)
    cls_up = classes_of(up.total)
    cls_dn = classes_of(x)
    vid_up = {pair: v for v, pair in rec_up.vertex_provenance.items()}
    vid_dn = {pair: v for v, pair in rec.vertex_provenance.items()}
    down_index = {pv: i for i, pv in enumerate(rec.facet_provenance)}

    targets: list[int] = []
    lmaps: list[Perm] = []
    for j in range(rec_up.result.facet_count):
        F, s = rec_up.facet_provenance[j]
        pF = up.projection[F]
        t = down_index[(pF, s)]
        jv = rec_up.result.facets[j]
        tv = rec.result.facets[t]
        lam = [0] * (d + 1)
        for tau, w in shapes[s]:
            uvid = vid_up[(cls_up.class_of((F, tau)), cls_up.class_of((F, (w,))))]
            dvid = vid_dn[(cls_dn.class_of((pF, tau)), cls_dn.class_of((pF, (w,))))]
            lam[jv.index(uvid)] = tv.index(dvid)
        targets.append(t)
        lmaps.append(tuple(lam))

    want = ProjectionConstraint.identity_on(left.projection, d + 1)
    have = ProjectionConstraint(tuple(targets), tuple(lmaps))
    return isomorphic(left.total, rec_up.result, constraints=(want, have))
