"""Permutations on {0..n-1} and tiny permutation groups.

A permutation is a plain tuple `p` of length n with p[i] = image of i.
Projectivities compose left to right (apply the first path segment first),
so `perm_compose(p, q)` means "p, then q".

Groups here are tiny (order at most (d+1)! with d <= 3 in practice), so the
closure is computed by saturation and the full element set is kept.
"""

from __future__ import annotations

from dataclasses import dataclass, field

Perm = tuple[int, ...]


def perm_identity(n: int) -> Perm:
    return tuple(range(n))


def perm_compose(p: Perm, q: Perm) -> Perm:
    """Apply p first, then q."""
    return tuple(q[p[i]] for i in range(len(p)))


def perm_inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


def perm_sign(p: Perm) -> int:
    """+1 for even permutations, -1 for odd ones."""
    seen = [False] * len(p)
    sign = 1
    for i in range(len(p)):
        if seen[i]:
            continue
        j = i
        length = 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def perm_is_transposition(p: Perm) -> bool:
    moved = [i for i in range(len(p)) if p[i] != i]
    return len(moved) == 2 and p[moved[0]] == moved[1] and p[moved[1]] == moved[0]


def perm_cycle_string(p: Perm) -> str:
    """Cycle notation, fixed points suppressed; identity prints as 'id'."""
    seen = [False] * len(p)
    parts: list[str] = []
    for i in range(len(p)):
        if seen[i] or p[i] == i:
            seen[i] = True
            continue
        cyc = [i]
        seen[i] = True
        j = p[i]
        while j != i:
            cyc.append(j)
            seen[j] = True
            j = p[j]
        parts.append("(" + " ".join(str(c) for c in cyc) + ")")
    return "".join(parts) if parts else "id"


def closure(generators: list[Perm], degree: int) -> frozenset[Perm]:
    """Multiply-and-saturate closure of the generated subgroup."""
    ident = perm_identity(degree)
    elems: set[Perm] = {ident}
    frontier = [ident]
    gens = [g for g in generators if g != ident]
    while frontier:
        nxt: list[Perm] = []
        for e in frontier:
            for g in gens:
                h = perm_compose(e, g)
                if h not in elems:
                    elems.add(h)
                    nxt.append(h)
        frontier = nxt
    return frozenset(elems)


@dataclass(frozen=True)
class PermutationGroup:
    """A concrete subgroup of Sym({0..degree-1}) with tagged generators."""

    degree: int
    elements: frozenset[Perm]
    generators: tuple[tuple[Perm, str], ...] = field(default=())

    @staticmethod
    def generated(gens: list[tuple[Perm, str]], degree: int) -> "PermutationGroup":
        elems = closure([g for g, _tag in gens], degree)
        return PermutationGroup(degree, elems, tuple(gens))

    @staticmethod
    def trivial(degree: int) -> "PermutationGroup":
        return PermutationGroup(degree, frozenset({perm_identity(degree)}))

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def is_trivial(self) -> bool:
        return self.order == 1

    def __contains__(self, p: Perm) -> bool:
        return p in self.elements

    def sorted_elements(self) -> list[Perm]:
        return sorted(self.elements)

    def orbits(self) -> list[tuple[int, ...]]:
        """Orbit partition of {0..degree-1}, each orbit sorted, orbits by min."""
        remaining = set(range(self.degree))
        out: list[tuple[int, ...]] = []
        while remaining:
            start = min(remaining)
            orbit = {start}
            frontier = [start]
            while frontier:
                x = frontier.pop()
                for p in self.elements:
                    y = p[x]
                    if y not in orbit:
                        orbit.add(y)
                        frontier.append(y)
            out.append(tuple(sorted(orbit)))
            remaining -= orbit
        return out

    def orbit_partition(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self.orbits())

    def is_subgroup_of(self, other: "PermutationGroup") -> bool:
        return self.degree == other.degree and self.elements <= other.elements

    def conjugate_onto(self, other: "PermutationGroup") -> Perm | None:
        """Search c with c^-1 * self * c == other (as element sets)."""
        if self.degree != other.degree or self.order != other.order:
            return None
        import itertools

        for c in itertools.permutations(range(self.degree)):
            ci = perm_inverse(c)
            image = {perm_compose(perm_compose(ci, p), c) for p in self.elements}
            if image == set(other.elements):
                return tuple(c)
        return None
