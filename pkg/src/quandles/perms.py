"""Permutations of {0..n-1} as image tuples, plus fully enumerated groups of them.

Groups at this scale (a few thousand elements on at most a few dozen points)
are enumerated by breadth-first closure; nothing here needs strong generating
sets.
"""

from __future__ import annotations

import math

Perm = tuple[int, ...]


class ClosureLimitError(RuntimeError):
    """Closure grew past the configured element cap."""


def identity_perm(degree: int) -> Perm:
    return tuple(range(degree))


def is_perm(images, degree: int) -> bool:
    """True if `images` lists every index in {0..degree-1} exactly once."""
    return len(images) == degree and sorted(images) == list(range(degree))


def compose(p: Perm, q: Perm) -> Perm:
    """p after q: the permutation i -> p[q[i]]."""
    if len(p) != len(q):
        raise ValueError(f"degree mismatch: {len(p)} vs {len(q)}")
    return tuple(p[i] for i in q)


def inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def cycle_lengths(p: Perm) -> tuple[int, ...]:
    """Sorted cycle lengths of p, fixed points included."""
    seen = [False] * len(p)
    lengths = []
    for i in range(len(p)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths))


def perm_order(p: Perm) -> int:
    return math.lcm(*cycle_lengths(p))


class PermutationGroup:
    """A finite permutation group with its generating set and full element list.

    `elements` is closed under composition and inversion, contains the
    identity, and is sorted lexicographically so that equal groups always
    enumerate identically.
    """

    __slots__ = ("degree", "generators", "elements", "_members")

    def __init__(self, degree: int, generators, elements):
        self.degree = degree
        self.generators = tuple(tuple(g) for g in generators)
        self.elements = tuple(tuple(e) for e in elements)
        self._members = frozenset(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, p) -> bool:
        return tuple(p) in self._members

    def __repr__(self) -> str:
        return f"PermutationGroup(degree={self.degree}, order={len(self.elements)})"


def closure(generators, cap: int | None = None) -> PermutationGroup:
    """Generate the group spanned by `generators` by breadth-first products.

    `cap` bounds the number of elements and defaults to degree!, the largest
    possible order; exceeding it raises ClosureLimitError.
    """
    gens = [tuple(g) for g in generators]
    if not gens:
        raise ValueError("at least one generator is required")
    degree = len(gens[0])
    for g in gens:
        if not is_perm(g, degree):
            raise ValueError(f"not a permutation of degree {degree}: {g}")
    if cap is None:
        cap = math.factorial(degree)
    unique_gens = list(dict.fromkeys(gens))
    ident = identity_perm(degree)
    elements = {ident}
    frontier = [ident]
    while frontier:
        new = []
        for h in frontier:
            for g in unique_gens:
                p = compose(g, h)
                if p not in elements:
                    elements.add(p)
                    if len(elements) > cap:
                        raise ClosureLimitError(
                            f"closure exceeded cap of {cap} elements"
                        )
                    new.append(p)
        frontier = new
    return PermutationGroup(degree, gens, sorted(elements))


def orbit(generators, point: int) -> set[int]:
    """Smallest generator-stable set of points containing `point`."""
    gens = [tuple(g) for g in generators]
    if gens and not 0 <= point < len(gens[0]):
        raise ValueError(f"point {point} out of range for degree {len(gens[0])}")
    seen = {point}
    stack = [point]
    while stack:
        x = stack.pop()
        for g in gens:
            y = g[x]
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


def is_transitive(group: PermutationGroup) -> bool:
    return len(orbit(group.generators, 0)) == group.degree


def is_abelian(group: PermutationGroup) -> bool:
    # Generators commuting pairwise is enough: they generate everything.
    gens = list(dict.fromkeys(group.generators))
    for i, g in enumerate(gens):
        for h in gens[i + 1 :]:
            if compose(g, h) != compose(h, g):
                return False
    return True


def stabilizer(group: PermutationGroup, point: int) -> PermutationGroup:
    """Subgroup of elements fixing `point`, with its full element set as generators."""
    if not 0 <= point < group.degree:
        raise ValueError(f"point {point} out of range for degree {group.degree}")
    fixed = tuple(p for p in group.elements if p[point] == point)
    return PermutationGroup(group.degree, fixed, fixed)


def group_to_obj(group: PermutationGroup) -> dict:
    """JSON form: permutations as image arrays, groups by their generators."""
    return {
        "degree": group.degree,
        "generators": [list(g) for g in group.generators],
    }


def group_from_obj(obj) -> PermutationGroup:
    if not isinstance(obj, dict) or "degree" not in obj or "generators" not in obj:
        raise ValueError("expected an object with 'degree' and 'generators'")
    degree = obj["degree"]
    gens = [tuple(g) for g in obj["generators"]]
    for g in gens:
        if not is_perm(g, degree):
            raise ValueError(f"not a permutation of degree {degree}: {g}")
    if not gens:
        gens = [identity_perm(degree)]
    return closure(gens)
