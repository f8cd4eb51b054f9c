"""Pure simplicial and pseudo-simplicial complexes.

Two sibling representations share one computational substrate:

* `AbstractComplex` -- a finite pure complex given by its facet list; faces
  are vertex sets, so the face structure is read off directly.
* `PseudoComplex` -- a disjoint union of facet copies, each a d-simplex with
  local vertex labels 0..d, glued pairwise along ridges by explicit vertex
  bijections.  Lower-dimensional identifications are *generated* by the ridge
  gluings: two subfaces are the same face of the quotient exactly when a chain
  of gluings carries one onto the other.  Within a single copy no two distinct
  subfaces may become identified.

The ridge-generated closure is the right notion for unfoldings (which are
built by gluing simplex copies along ridges and nothing else).  Embedding an
`AbstractComplex` via `as_pseudo` is faithful precisely when every face of
codimension > 1 has a connected link; the library therefore keeps the vertex
set structure of abstract complexes intact internally instead of routing
everything through `as_pseudo`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .errors import (
    BadGluing,
    DegenerateFacet,
    InvalidPath,
    MixedDimension,
    NotAFace,
    NotAFacet,
    NotSimplicial,
    SelfIdentification,
)
from .permutations import Perm

FaceRef = tuple[int, tuple[int, ...]]  # (facet copy id, sorted local vertex tuple)


@lru_cache(maxsize=None)
def nonempty_subsets(n: int) -> tuple[tuple[int, ...], ...]:
    """All non-empty subsets of {0..n-1}, ordered by (cardinality, lex)."""
    out: list[tuple[int, ...]] = []
    for k in range(1, n + 1):
        out.extend(combinations(range(n), k))
    return tuple(out)


class _UnionFind:
    __slots__ = ("parent", "rank")

    def __init__(self, n: int) -> None:
        self.parent = list(range(n))
        self.rank = [0] * n

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return
        if self.rank[ra] < self.rank[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        if self.rank[ra] == self.rank[rb]:
            self.rank[ra] += 1


@dataclass(frozen=True)
class Gluing:
    """One ridge-to-ridge identification between two distinct facet copies.

    `mapping[i]` is the local vertex of `facet_b` matched with `ridge_a[i]`.
    """

    facet_a: int
    ridge_a: tuple[int, ...]
    facet_b: int
    ridge_b: tuple[int, ...]
    mapping: tuple[int, ...]

    def validate(self, dim: int, facet_count: int) -> None:
        d = dim
        if self.facet_a == self.facet_b:
            raise BadGluing("a facet copy cannot be glued to itself")
        for f in (self.facet_a, self.facet_b):
            if not 0 <= f < facet_count:
                raise BadGluing(f"facet id {f} out of range")
        for ridge in (self.ridge_a, self.ridge_b):
            if len(ridge) != d or sorted(set(ridge)) != list(ridge):
                raise BadGluing(f"ridge {ridge} is not a sorted {d}-subset")
            if any(not 0 <= v <= d for v in ridge):
                raise BadGluing(f"ridge {ridge} has local labels outside 0..{d}")
        if sorted(self.mapping) != list(self.ridge_b):
            raise BadGluing("mapping is not a bijection onto ridge_b")

    def touches(self, facet: int) -> bool:
        return facet in (self.facet_a, self.facet_b)

    def other(self, facet: int) -> int:
        if facet == self.facet_a:
            return self.facet_b
        if facet == self.facet_b:
            return self.facet_a
        raise InvalidPath(f"gluing does not touch facet {facet}")


class FaceClasses:
    """Face structure of a complex, indexed by class ids.

    Classes are ordered by (cardinality, smallest member reference), which
    makes ids deterministic for a fixed input.
    """

    __slots__ = ("dim", "facet_count", "members", "class_by_ref", "cards", "face_keys")

    def __init__(
        self,
        dim: int,
        facet_count: int,
        members: tuple[tuple[FaceRef, ...], ...],
        face_keys: tuple[tuple[int, ...], ...] | None,
    ) -> None:
        self.dim = dim
        self.facet_count = facet_count
        self.members = members
        self.class_by_ref = {ref: cid for cid, refs in enumerate(members) for ref in refs}
        self.cards = tuple(len(refs[0][1]) for refs in members)
        self.face_keys = face_keys  # global vertex tuples when built from an AbstractComplex

    @staticmethod
    def from_abstract(facets: tuple[tuple[int, ...], ...], dim: int) -> "FaceClasses":
        by_face: dict[tuple[int, ...], list[FaceRef]] = {}
        for f, verts in enumerate(facets):
            for sub in nonempty_subsets(dim + 1):
                face = tuple(verts[l] for l in sub)
                by_face.setdefault(face, []).append((f, sub))
        ordered = sorted(by_face.items(), key=lambda kv: (len(kv[0]), min(kv[1])))
        members = tuple(tuple(sorted(refs)) for _face, refs in ordered)
        keys = tuple(face for face, _refs in ordered)
        return FaceClasses(dim, len(facets), members, keys)

    @staticmethod
    def from_glued(dim: int, facet_count: int, gluings: tuple[Gluing, ...]) -> "FaceClasses":
        subs = nonempty_subsets(dim + 1)
        per = len(subs)
        sub_index = {s: i for i, s in enumerate(subs)}
        uf = _UnionFind(facet_count * per)

        def idx(f: int, s: tuple[int, ...]) -> int:
            return f * per + sub_index[s]

        for g in gluings:
            positions = range(len(g.ridge_a))
            for k in range(1, len(g.ridge_a) + 1):
                for pos in combinations(positions, k):
                    sa = tuple(g.ridge_a[p] for p in pos)
                    sb = tuple(sorted(g.mapping[p] for p in pos))
                    uf.union(idx(g.facet_a, sa), idx(g.facet_b, sb))

        groups: dict[int, list[FaceRef]] = {}
        for f in range(facet_count):
            for s in subs:
                groups.setdefault(uf.find(idx(f, s)), []).append((f, s))
        for refs in groups.values():
            seen_facets: set[int] = set()
            for f, _s in refs:
                if f in seen_facets:
                    pair = sorted(r for r in refs if r[0] == f)[:2]
                    raise SelfIdentification(
                        f"faces {pair[0]} and {pair[1]} of one copy are identified"
                    )
                seen_facets.add(f)
        ordered = sorted(groups.values(), key=lambda refs: (len(refs[0][1]), min(refs)))
        members = tuple(tuple(sorted(refs)) for refs in ordered)
        return FaceClasses(dim, facet_count, members, None)

    @property
    def count(self) -> int:
        return len(self.members)

    def class_of(self, ref: FaceRef) -> int:
        return self.class_by_ref[ref]

    def classes_of_card(self, card: int) -> list[int]:
        return [cid for cid in range(self.count) if self.cards[cid] == card]

    def counts_by_dim(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for card in self.cards:
            out[card - 1] = out.get(card - 1, 0) + 1
        return out

    def vertex_classes_of(self, cid: int) -> tuple[int, ...]:
        """Sorted class ids of the vertices of class `cid`."""
        f, sub = self.members[cid][0]
        return tuple(sorted(self.class_of((f, (l,))) for l in sub))

    def contains(self, small: int, large: int) -> bool:
        """True when some copy exhibits `small` as a subface of `large`."""
        small_refs = {(f, s) for f, s in self.members[small]}
        for f, s in self.members[large]:
            sset = set(s)
            for fs, ss in small_refs:
                if fs == f and set(ss) <= sset:
                    return True
        return False


@dataclass(frozen=True)
class AbstractComplex:
    """A finite pure simplicial complex, stored as sorted facet tuples."""

    dim: int
    facets: tuple[tuple[int, ...], ...]

    @staticmethod
    def from_facets(facets) -> "AbstractComplex":
        cleaned: list[tuple[int, ...]] = []
        for f in facets:
            t = tuple(sorted(f))
            if len(set(t)) != len(t):
                raise DegenerateFacet(f"facet {f} repeats a vertex")
            cleaned.append(t)
        if not cleaned:
            raise MixedDimension("a complex needs at least one facet")
        sizes = {len(t) for t in cleaned}
        if len(sizes) != 1:
            raise MixedDimension(f"facet sizes differ: {sorted(sizes)}")
        uniq = tuple(sorted(set(cleaned)))
        return AbstractComplex(dim=len(uniq[0]) - 1, facets=uniq)

    @property
    def facet_count(self) -> int:
        return len(self.facets)

    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted({v for f in self.facets for v in f}))

    def faces(self, k: int) -> tuple[tuple[int, ...], ...]:
        """All k-dimensional faces, sorted."""
        out: set[tuple[int, ...]] = set()
        for f in self.facets:
            out.update(combinations(f, k + 1))
        return tuple(sorted(out))

    def face_count_vector(self) -> tuple[int, ...]:
        return tuple(len(self.faces(k)) for k in range(self.dim + 1))

    def has_face(self, verts) -> bool:
        t = set(verts)
        return any(t <= set(f) for f in self.facets)

    def facet_id(self, verts) -> int:
        t = tuple(sorted(verts))
        try:
            return self.facets.index(t)
        except ValueError:
            raise NotAFacet(f"{t} is not a facet") from None

    def classes(self) -> FaceClasses:
        cached = _abstract_class_cache.get(id(self))
        if cached is None:
            cached = FaceClasses.from_abstract(self.facets, self.dim)
            _abstract_class_cache[id(self)] = (self, cached)
            return cached
        keeper, classes = cached
        assert keeper is self
        return classes

    def derived_gluings(self) -> tuple[Gluing, ...]:
        """One gluing per pair of facets sharing a ridge (identity on globals)."""
        cached = _abstract_gluing_cache.get(id(self))
        if cached is not None and cached[0] is self:
            return cached[1]
        d = self.dim
        out: list[Gluing] = []
        by_ridge: dict[tuple[int, ...], list[int]] = {}
        for i, f in enumerate(self.facets):
            for ridge in combinations(f, d):
                by_ridge.setdefault(ridge, []).append(i)
        pairs: list[tuple[int, int, tuple[int, ...]]] = []
        for ridge, holders in by_ridge.items():
            for i, j in combinations(holders, 2):
                pairs.append((i, j, ridge))
        pairs.sort()
        for i, j, ridge in pairs:
            fa, fb = self.facets[i], self.facets[j]
            ra = tuple(fa.index(v) for v in ridge)
            mapping = tuple(fb.index(v) for v in ridge)
            rb = tuple(sorted(mapping))
            out.append(Gluing(i, ra, j, rb, mapping))
        result = tuple(out)
        _abstract_gluing_cache[id(self)] = (self, result)
        return result


# id-keyed caches; the complex itself is kept alive inside the value so the
# id cannot be recycled while the entry is in use.
_abstract_class_cache: dict[int, tuple[AbstractComplex, FaceClasses]] = {}
_abstract_gluing_cache: dict[int, tuple[AbstractComplex, tuple[Gluing, ...]]] = {}
_pseudo_class_cache: dict[int, tuple["PseudoComplex", FaceClasses]] = {}


@dataclass(frozen=True)
class PseudoComplex:
    """Facet copies glued along ridges; faces live in the generated quotient."""

    dim: int
    facet_count: int
    gluings: tuple[Gluing, ...]

    def __post_init__(self) -> None:
        if self.facet_count < 1:
            raise BadGluing("a pseudo-complex needs at least one facet copy")
        for g in self.gluings:
            g.validate(self.dim, self.facet_count)

    def classes(self) -> FaceClasses:
        cached = _pseudo_class_cache.get(id(self))
        if cached is None:
            built = FaceClasses.from_glued(self.dim, self.facet_count, self.gluings)
            _pseudo_class_cache[id(self)] = (self, built)
            return built
        keeper, classes = cached
        assert keeper is self
        return classes


Complex = AbstractComplex | PseudoComplex


def gluings_of(x: Complex) -> tuple[Gluing, ...]:
    return x.gluings if isinstance(x, PseudoComplex) else x.derived_gluings()


def classes_of(x: Complex) -> FaceClasses:
    return x.classes()


def facet_count_of(x: Complex) -> int:
    return x.facet_count


def as_pseudo(K: AbstractComplex) -> PseudoComplex:
    """Embed an abstract complex as a ridge-glued pseudo-complex.

    The embedding is faithful (face classes biject with faces) exactly when
    every face of codimension > 1 has a connected link; a complex that fails
    that condition acquires split faces, mirroring what its unfolding does.
    """
    return PseudoComplex(K.dim, K.facet_count, K.derived_gluings())


def is_simplicial(P: PseudoComplex) -> tuple[bool, tuple[int, int] | None]:
    """Check that face classes are determined by their vertex classes.

    Returns (True, None) or (False, (cid_a, cid_b)) where the two classes
    are distinct faces with identical vertex class sets.
    """
    classes = P.classes()
    seen: dict[tuple[int, ...], int] = {}
    for cid in range(classes.count):
        key = classes.vertex_classes_of(cid)
        if key in seen:
            return False, (seen[key], cid)
        seen[key] = cid
    return True, None


def to_abstract(P: PseudoComplex) -> AbstractComplex:
    K, _facet_map, _vmap = to_abstract_with_maps(P)
    return K


def to_abstract_with_maps(
    P: PseudoComplex,
) -> tuple[AbstractComplex, tuple[int, ...], dict[int, int]]:
    """Abstract view of a simplicial pseudo-complex.

    Returns (K, facet_map, vertex_class_to_id) where facet_map[i] is the
    facet index in K of copy i, and vertex classes are numbered 0..V-1 in
    class-id order.
    """
    ok, witness = is_simplicial(P)
    if not ok:
        raise NotSimplicial(f"face classes {witness} share a vertex set")
    classes = P.classes()
    vertex_ids: dict[int, int] = {}
    for cid in classes.classes_of_card(1):
        vertex_ids[cid] = len(vertex_ids)
    facet_tuples: list[tuple[int, ...]] = []
    for f in range(P.facet_count):
        verts = tuple(
            sorted(vertex_ids[classes.class_of((f, (l,)))] for l in range(P.dim + 1))
        )
        facet_tuples.append(verts)
    K = AbstractComplex.from_facets(facet_tuples)
    facet_map = tuple(K.facets.index(t) for t in facet_tuples)
    return K, facet_map, vertex_ids


def link(K: AbstractComplex, face) -> AbstractComplex:
    """Link of a face in an abstract complex: facets are `facet - face`."""
    t = tuple(sorted(face))
    if not K.has_face(t):
        raise NotAFace(f"{t} is not a face")
    fs = set(t)
    out = [tuple(v for v in f if v not in fs) for f in K.facets if fs <= set(f)]
    if out and not out[0]:
        # link of a facet: the (-1)-dimensional empty complex
        return AbstractComplex(dim=-1, facets=((),))
    return AbstractComplex.from_facets(out)


@dataclass(frozen=True)
class DualGraph:
    """Facet adjacency; one edge per gluing (pseudo) or shared ridge (abstract)."""

    node_count: int
    edges: tuple[tuple[int, int], ...]  # (facet_a, facet_b), index = gluing id

    def adjacency(self) -> dict[int, list[tuple[int, int]]]:
        """node -> sorted list of (edge id, neighbour)."""
        adj: dict[int, list[tuple[int, int]]] = {v: [] for v in range(self.node_count)}
        for eid, (a, b) in enumerate(self.edges):
            adj[a].append((eid, b))
            adj[b].append((eid, a))
        for v in adj:
            adj[v].sort()
        return adj

    def is_connected(self) -> bool:
        if self.node_count == 0:
            return True
        adj = self.adjacency()
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for _eid, w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.node_count

    def components(self) -> list[tuple[int, ...]]:
        adj = self.adjacency()
        seen: set[int] = set()
        comps: list[tuple[int, ...]] = []
        for start in range(self.node_count):
            if start in seen:
                continue
            comp = {start}
            stack = [start]
            while stack:
                v = stack.pop()
                for _eid, w in adj[v]:
                    if w not in comp:
                        comp.add(w)
                        stack.append(w)
            seen |= comp
            comps.append(tuple(sorted(comp)))
        return comps


def dual_graph(x: Complex) -> DualGraph:
    gl = gluings_of(x)
    return DualGraph(facet_count_of(x), tuple((g.facet_a, g.facet_b) for g in gl))


def perspectivity(x: Complex, facet: int, gluing_id: int) -> Perm:
    """Vertex bijection V(facet) -> V(other) through one gluing.

    Ridge vertices follow the gluing's bijection; the two opposite vertices
    are matched with each other.
    """
    gl = gluings_of(x)
    if not 0 <= gluing_id < len(gl):
        raise InvalidPath(f"no gluing {gluing_id}")
    g = gl[gluing_id]
    d = x.dim
    out = [-1] * (d + 1)
    if facet == g.facet_a:
        for i, v in enumerate(g.ridge_a):
            out[v] = g.mapping[i]
        opp_src = next(v for v in range(d + 1) if v not in g.ridge_a)
        opp_dst = next(v for v in range(d + 1) if v not in g.ridge_b)
    elif facet == g.facet_b:
        for i, v in enumerate(g.ridge_a):
            out[g.mapping[i]] = v
        opp_src = next(v for v in range(d + 1) if v not in g.ridge_b)
        opp_dst = next(v for v in range(d + 1) if v not in g.ridge_a)
    else:
        raise InvalidPath(f"gluing {gluing_id} does not touch facet {facet}")
    out[opp_src] = opp_dst
    return tuple(out)


@dataclass(frozen=True)
class FacetPath:
    """A walk in the dual graph: a start facet and a sequence of gluing ids."""

    start: int
    steps: tuple[int, ...]

    def facet_sequence(self, x: Complex) -> tuple[int, ...]:
        gl = gluings_of(x)
        seq = [self.start]
        cur = self.start
        for gid in self.steps:
            if not 0 <= gid < len(gl):
                raise InvalidPath(f"no gluing {gid}")
            cur = gl[gid].other(cur)
            seq.append(cur)
        return tuple(seq)

    @property
    def length(self) -> int:
        return len(self.steps)

    def reversed(self, x: Complex) -> "FacetPath":
        end = self.facet_sequence(x)[-1]
        return FacetPath(end, tuple(reversed(self.steps)))


def path_from_facets(x: Complex, facet_ids) -> FacetPath:
    """Build a FacetPath from consecutive facet ids (unique gluing required)."""
    ids = list(facet_ids)
    if not ids:
        raise InvalidPath("empty facet sequence")
    gl = gluings_of(x)
    steps: list[int] = []
    for a, b in zip(ids, ids[1:]):
        hits = [
            gid
            for gid, g in enumerate(gl)
            if (g.facet_a, g.facet_b) in ((a, b), (b, a))
        ]
        if not hits:
            raise InvalidPath(f"facets {a} and {b} share no gluing")
        if len(hits) > 1:
            raise InvalidPath(f"facets {a} and {b} share several gluings; give gluing ids")
        steps.append(hits[0])
    return FacetPath(ids[0], tuple(steps))


@dataclass(frozen=True)
class StarView:
    """The facet copies around one face class, with the gluings fixing it.

    A gluing fixes the class when its ridge contains the class member of the
    facet on either side; any ridge shared by two copies of the star contains
    the class automatically, so this keeps the full dual structure around it.
    Local vertex labels are unchanged; only facet ids are re-indexed.
    """

    class_id: int
    parent_facets: tuple[int, ...]  # sorted parent copy ids; index = star facet id
    parent_gluings: tuple[int, ...]  # parent gluing ids kept, in id order
    complex: PseudoComplex
    rep_in: tuple[tuple[int, ...], ...]  # star facet id -> local vertex tuple of class

    def star_index(self, parent_facet: int) -> int:
        return self.parent_facets.index(parent_facet)


def star_of_class(x: Complex, cid: int) -> StarView:
    classes = classes_of(x)
    members = classes.members[cid]
    facet_ids = tuple(sorted({f for f, _s in members}))
    rep_by_facet = {f: s for f, s in members}
    index = {f: i for i, f in enumerate(facet_ids)}
    kept: list[int] = []
    sub_gluings: list[Gluing] = []
    for gid, g in enumerate(gluings_of(x)):
        rep = rep_by_facet.get(g.facet_a)
        if rep is None or not set(rep) <= set(g.ridge_a):
            continue
        kept.append(gid)
        sub_gluings.append(
            Gluing(index[g.facet_a], g.ridge_a, index[g.facet_b], g.ridge_b, g.mapping)
        )
    star = PseudoComplex(x.dim, len(facet_ids), tuple(sub_gluings))
    reps = tuple(rep_by_facet[f] for f in facet_ids)
    return StarView(cid, facet_ids, tuple(kept), star, reps)


def link_of_class(x: Complex, cid: int) -> tuple[PseudoComplex, StarView]:
    """Link of a face class, as the pseudo-complex generated by its star.

    Facet copy i of the link sits inside star facet i; its local labels are
    the complement of the class representative, in increasing order.
    """
    star = star_of_class(x, cid)
    d = x.dim
    card = len(star.rep_in[0])
    if card > d:
        raise NotAFace("a facet class has an empty link")
    comp = []
    comp_index = []
    for rep in star.rep_in:
        c = tuple(v for v in range(d + 1) if v not in rep)
        comp.append(c)
        comp_index.append({v: i for i, v in enumerate(c)})
    link_gluings: list[Gluing] = []
    for g in star.complex.gluings:
        rep_a = set(star.rep_in[g.facet_a])
        ia, ib = comp_index[g.facet_a], comp_index[g.facet_b]
        ra, mapping = [], []
        for pos, v in enumerate(g.ridge_a):
            if v in rep_a:
                continue
            ra.append(ia[v])
            mapping.append(ib[g.mapping[pos]])
        rb = tuple(sorted(mapping))
        link_gluings.append(
            Gluing(g.facet_a, tuple(ra), g.facet_b, rb, tuple(mapping))
        )
    lk = PseudoComplex(d - card, len(star.parent_facets), tuple(link_gluings))
    return lk, star


def is_connected_complex(x: Complex) -> bool:
    """Connectivity through shared faces (vertex classes suffice)."""
    n = facet_count_of(x)
    if n == 1:
        return True
    classes = classes_of(x)
    uf = _UnionFind(n)
    for cid in classes.classes_of_card(1):
        refs = classes.members[cid]
        first = refs[0][0]
        for f, _s in refs[1:]:
            uf.union(first, f)
    root = uf.find(0)
    return all(uf.find(f) == root for f in range(n))
