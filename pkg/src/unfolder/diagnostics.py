"""Structural predicates: connectivity, balancedness, odd faces, manifold
checks, Euler characteristic, mod-2 boundary solving, isomorphism search."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations as all_permutations

import numpy as np

from .complexes import (
    AbstractComplex,
    Complex,
    FaceClasses,
    classes_of,
    dual_graph,
    facet_count_of,
    gluings_of,
    link_of_class,
    nonempty_subsets,
    perspectivity,
)
from .errors import (
    BadParameter,
    DimensionMismatch,
    NotAFace,
    NotLocallyStronglyConnected,
    NotStronglyConnected,
)
from .permutations import Perm, perm_compose, perm_identity, perm_inverse, perm_sign
from .projectivities import projectivity_group


def is_strongly_connected(x: Complex) -> bool:
    return dual_graph(x).is_connected()


def is_locally_strongly_connected(x: Complex) -> tuple[bool, int | None]:
    """Every face star must be strongly connected.

    Stars of ridges and facets always are, so only faces of codimension > 1
    are checked.  Returns (ok, witness class id of the first bad star).
    """
    d = x.dim
    classes = classes_of(x)
    for cid in range(classes.count):
        if classes.cards[cid] > d - 1:
            continue
        lk, _star = link_of_class(x, cid)
        if not dual_graph(lk).is_connected():
            return False, cid
    return True, None


def balanced_coloring(x: Complex, base: int = 0) -> dict[int, int] | None:
    """Proper (d+1)-coloring of vertex classes, or None.

    The base facet is colored by its local labels; colors propagate over a
    spanning tree of the dual graph and every gluing is then checked.  The
    success direction is cross-checked against triviality of the group of
    projectivities.
    """
    n = facet_count_of(x)
    d = x.dim
    adj = dual_graph(x).adjacency()
    ident = perm_identity(d + 1)
    coloring: list[Perm | None] = [None] * n
    coloring[base] = ident
    queue = [base]
    head = 0
    while head < len(queue):
        f = queue[head]
        head += 1
        for gid, w in adj[f]:
            if coloring[w] is None:
                step = perspectivity(x, f, gid)
                coloring[w] = perm_compose(perm_inverse(step), coloring[f])
                queue.append(w)
    if len(queue) < n:
        missing = sorted(f for f in range(n) if coloring[f] is None)
        raise NotStronglyConnected(f"facets {missing} are not reachable from {base}")
    ok = True
    for g in gluings_of(x):
        ca, cb = coloring[g.facet_a], coloring[g.facet_b]
        for i, v in enumerate(g.ridge_a):
            if ca[v] != cb[g.mapping[i]]:
                ok = False
                break
        if not ok:
            break
    if not ok:
        return None
    # a vertex class must wear one color even where no gluing ties its
    # references together (pinched complexes fail exactly here)
    classes = classes_of(x)
    out: dict[int, int] = {}
    for cid in classes.classes_of_card(1):
        seen = {coloring[f][l] for f, (l,) in classes.members[cid]}
        if len(seen) > 1:
            return None
        out[cid] = seen.pop()
    assert projectivity_group(x, base).group.is_trivial, (
        "coloring found although projectivities act non-trivially"
    )
    return out


def link_graph_is_bipartite(x: Complex, cid: int) -> bool:
    """Two-colorability of the link graph of a codimension-2 face class.

    Parallel edges form 2-cycles, which are even; loops cannot occur because
    no copy identifies two of its own faces.
    """
    lk, _star = link_of_class(x, cid)
    assert lk.dim == 1, "link graph needs a codimension-2 class"
    lkc = lk.classes()
    adj: dict[int, list[int]] = {}
    for i in range(lk.facet_count):
        a = lkc.class_of((i, (0,)))
        b = lkc.class_of((i, (1,)))
        assert a != b, "loop in a link graph"
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    color: dict[int, int] = {}
    for start in sorted(adj):
        if start in color:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in color:
                    color[w] = 1 - color[v]
                    stack.append(w)
                elif color[w] == color[v]:
                    return False
    return True


@dataclass(frozen=True)
class OddSubcomplex:
    """Codimension-2 face classes with non-bipartite link graphs.

    `as_complex` collects the odd faces plus all their subfaces on vertex
    class ids (original vertex ids for abstract input); None when empty.
    """

    odd_faces: tuple[int, ...]
    as_complex: AbstractComplex | None

    @property
    def is_empty(self) -> bool:
        return not self.odd_faces


def odd_subcomplex(x: Complex) -> OddSubcomplex:
    ok, witness = is_locally_strongly_connected(x)
    if not ok:
        raise NotLocallyStronglyConnected(f"star of face class {witness} is disconnected")
    d = x.dim
    classes = classes_of(x)
    odd = tuple(
        cid
        for cid in classes.classes_of_card(d - 1)
        if not link_graph_is_bipartite(x, cid)
    )
    if not odd:
        return OddSubcomplex(odd, None)
    if classes.face_keys is not None:
        facets = [classes.face_keys[cid] for cid in odd]
    else:
        facets = [classes.vertex_classes_of(cid) for cid in odd]
    return OddSubcomplex(odd, AbstractComplex.from_facets(facets))


def is_pseudo_manifold(x: Complex) -> str:
    """Ridge-degree census: 'closed', 'with-boundary', or 'no'."""
    classes = classes_of(x)
    degrees = [len(classes.members[cid]) for cid in classes.classes_of_card(x.dim)]
    if any(k > 2 for k in degrees):
        return "no"
    return "closed" if all(k == 2 for k in degrees) else "with-boundary"


def _crossing_sign(x: Complex, gid: int) -> int:
    g = gluings_of(x)[gid]
    d = x.dim
    opp_a = next(v for v in range(d + 1) if v not in g.ridge_a)
    opp_b = next(v for v in range(d + 1) if v not in g.ridge_b)
    order = tuple(g.ridge_b.index(m) for m in g.mapping)
    return -((-1) ** opp_a) * perm_sign(order) * ((-1) ** opp_b)


def orientable(x: Complex) -> bool:
    """Propagate facet orientations; True when all loops close with sign +1."""
    n = facet_count_of(x)
    adj = dual_graph(x).adjacency()
    sign: list[int] = [0] * n
    for start in range(n):
        if sign[start]:
            continue
        sign[start] = 1
        stack = [start]
        while stack:
            f = stack.pop()
            for gid, w in adj[f]:
                s = sign[f] * _crossing_sign(x, gid)
                if sign[w] == 0:
                    sign[w] = s
                    stack.append(w)
                elif sign[w] != s:
                    return False
    return True


def euler_characteristic(x: Complex) -> int:
    counts = classes_of(x).counts_by_dim()
    return sum((-1) ** k * c for k, c in counts.items())


def _gf2_solve(rows: np.ndarray, rhs: np.ndarray) -> np.ndarray | None:
    """One solution of rows @ x = rhs over GF(2), or None."""
    m, n = rows.shape
    M = np.concatenate([rows % 2, (rhs % 2)[:, None]], axis=1).astype(np.uint8)
    pivots: list[tuple[int, int]] = []
    r = 0
    for c in range(n):
        hit = None
        for i in range(r, m):
            if M[i, c]:
                hit = i
                break
        if hit is None:
            continue
        M[[r, hit]] = M[[hit, r]]
        for i in range(m):
            if i != r and M[i, c]:
                M[i] ^= M[r]
        pivots.append((r, c))
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if M[i, -1]:
            return None
    x = np.zeros(n, dtype=np.uint8)
    for row, col in pivots:
        x[col] = M[row, -1]
    return x


def mod2_boundary_check(
    K: AbstractComplex, L
) -> tuple[bool, tuple[tuple[int, ...], ...] | None]:
    """Is L the mod-2 boundary of some set Q of codimension-1 faces of K?

    L is a collection of codimension-2 faces (or an AbstractComplex whose
    facets are such). Returns (True, Q) with a witness chain, or (False, None).
    """
    d = K.dim
    if isinstance(L, AbstractComplex):
        wanted = set(L.facets)
    else:
        wanted = {tuple(sorted(f)) for f in L}
    codim2 = K.faces(d - 2)
    ridges = K.faces(d - 1)
    for f in wanted:
        if len(f) != d - 1:
            raise DimensionMismatch(f"{f} is not a codimension-2 face")
        if f not in codim2:
            raise NotAFace(f"{f} is not a face")
    index2 = {f: i for i, f in enumerate(codim2)}
    A = np.zeros((len(codim2), len(ridges)), dtype=np.uint8)
    for j, rho in enumerate(ridges):
        for k in range(len(rho)):
            sub = rho[:k] + rho[k + 1 :]
            A[index2[sub], j] = 1
    b = np.zeros(len(codim2), dtype=np.uint8)
    for f in wanted:
        b[index2[f]] = 1
    solution = _gf2_solve(A, b)
    if solution is None:
        return False, None
    chain = tuple(ridges[j] for j in range(len(ridges)) if solution[j])
    return True, chain


@dataclass(frozen=True)
class ProjectionConstraint:
    """A simplicial projection onto a common target, facet-wise.

    `targets[f]` is the target facet under facet f; `local_maps[f]` carries
    f's local labels to the target's.
    """

    targets: tuple[int, ...]
    local_maps: tuple[Perm, ...]

    @staticmethod
    def identity_on(targets: tuple[int, ...], width: int) -> "ProjectionConstraint":
        ident = perm_identity(width)
        return ProjectionConstraint(targets, tuple(ident for _ in targets))


@dataclass(frozen=True)
class IsoWitness:
    """A complex isomorphism: facet bijection plus per-facet vertex maps."""

    facet_map: tuple[int, ...]
    vertex_maps: tuple[Perm, ...]

    def vertex_bijection(
        self, p: Complex, q: Complex
    ) -> dict[tuple[int, ...], tuple[int, ...]] | dict[int, int]:
        """Induced map on vertices (abstract inputs) or vertex classes."""
        cp, cq = classes_of(p), classes_of(q)
        out: dict = {}
        for cid in cp.classes_of_card(1):
            f, (l,) = cp.members[cid][0]
            image = cq.class_of((self.facet_map[f], (self.vertex_maps[f][l],)))
            if cp.face_keys is not None and cq.face_keys is not None:
                out[cp.face_keys[cid][0]] = cq.face_keys[image][0]
            else:
                out[cid] = image
        return out


def _facet_fingerprints(classes: FaceClasses, dim: int) -> list[tuple[int, ...]]:
    subs = nonempty_subsets(dim + 1)
    out = []
    for f in range(classes.facet_count):
        sizes = sorted(
            (len(s), len(classes.members[classes.class_of((f, s))])) for s in subs
        )
        out.append(tuple(v for pair in sizes for v in pair))
    return out


def isomorphic(
    p: Complex,
    q: Complex,
    constraints: tuple[ProjectionConstraint, ProjectionConstraint] | None = None,
) -> IsoWitness | None:
    """Backtracking search for a face-structure isomorphism.

    Facet correspondences are pruned by per-facet class-size fingerprints;
    when projection constraints are given, the facet image must project to
    the same target and the vertex map is forced by the two local maps.
    """
    if p.dim != q.dim:
        return None
    n = facet_count_of(p)
    if n != facet_count_of(q):
        return None
    d = p.dim
    cp, cq = classes_of(p), classes_of(q)
    if sorted(zip(cp.cards, map(len, cp.members))) != sorted(
        zip(cq.cards, map(len, cq.members))
    ):
        return None
    subs = nonempty_subsets(d + 1)
    fp = _facet_fingerprints(cp, d)
    fq = _facet_fingerprints(cq, d)
    if sorted(fp) != sorted(fq):
        return None

    order: list[int] = []
    seen = [False] * n
    adj = dual_graph(p).adjacency()
    for root in range(n):
        if seen[root]:
            continue
        seen[root] = True
        queue = [root]
        head = 0
        while head < len(queue):
            f = queue[head]
            head += 1
            order.append(f)
            for _gid, w in adj[f]:
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)

    lambdas = tuple(all_permutations(range(d + 1)))

    def candidates(f: int, used: list[bool]):
        for t in range(n):
            if used[t] or fq[t] != fp[f]:
                continue
            if constraints is not None:
                want, have = constraints[0], constraints[1]
                if have.targets[t] != want.targets[f]:
                    continue
                lam = perm_compose(want.local_maps[f], perm_inverse(have.local_maps[t]))
                yield t, lam
            else:
                for lam in lambdas:
                    yield t, lam

    facet_map = [-1] * n
    vertex_maps: list[Perm | None] = [None] * n
    used = [False] * n
    class_map: dict[int, int] = {}
    class_rev: dict[int, int] = {}

    def try_assign(f: int, t: int, lam: Perm) -> list[tuple[int, int]] | None:
        added: list[tuple[int, int]] = []
        for s in subs:
            a = cp.class_of((f, s))
            image = tuple(sorted(lam[v] for v in s))
            b = cq.class_of((t, image))
            have = class_map.get(a)
            if have is not None:
                if have != b:
                    break
                continue
            if class_rev.get(b) is not None:
                break
            if len(cp.members[a]) != len(cq.members[b]):
                break
            class_map[a] = b
            class_rev[b] = a
            added.append((a, b))
        else:
            return added
        for a, b in added:
            del class_map[a]
            del class_rev[b]
        return None

    stack: list = []
    depth = 0
    iterator = candidates(order[0], used)
    while True:
        f = order[depth]
        advanced = False
        for t, lam in iterator:
            trail = try_assign(f, t, lam)
            if trail is None:
                continue
            facet_map[f] = t
            vertex_maps[f] = lam
            used[t] = True
            stack.append((iterator, t, trail))
            depth += 1
            if depth == n:
                return IsoWitness(tuple(facet_map), tuple(vertex_maps))
            iterator = candidates(order[depth], used)
            advanced = True
            break
        if advanced:
            continue
        if not stack:
            return None
        iterator, t, trail = stack.pop()
        depth -= 1
        facet_map[order[depth]] = -1
        vertex_maps[order[depth]] = None
        used[t] = False
        for a, b in trail:
            del class_map[a]
            del class_rev[b]


def is_nice(x: Complex, assume_high_dim: bool | None = None) -> bool:
    """Locally strongly connected with simply connected codim > 2 links.

    Decidable here for dim <= 3: the only codimension-3 faces are vertices,
    whose links must be spheres (closed, connected, Euler 2) or disks
    (boundary, connected, Euler 1).  Higher dimensions need the caller's
    assertion via `assume_high_dim`.
    """
    ok, _w = is_locally_strongly_connected(x)
    if not ok:
        return False
    d = x.dim
    if d <= 2:
        return True
    if d > 3:
        if assume_high_dim is None:
            raise BadParameter(
                "simple connectivity of links is undecided for dim > 3; "
                "pass assume_high_dim"
            )
        return assume_high_dim
    classes = classes_of(x)
    for cid in classes.classes_of_card(1):
        lk, _star = link_of_class(x, cid)
        status = is_pseudo_manifold(lk)
        chi = euler_characteristic(lk)
        if status == "closed" and chi == 2:
            continue
        if status == "with-boundary" and chi == 1:
            continue
        return False
    return True
