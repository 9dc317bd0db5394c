"""Shared constructions for the test suite."""

from itertools import permutations

from quandles import Quandle, dihedral_quandle, direct_product, trivial_quandle


def affine_quandle(n: int, t: int) -> Quandle:
    """Z_n with s_x(y) = t*y + (1-t)*x; a quandle whenever gcd(t, n) = 1."""
    return Quandle(
        [[(t * y + (1 - t) * x) % n for y in range(n)] for x in range(n)]
    )


def affine5() -> Quandle:
    """The order-5 quandle s_x(y) = -x + 2y: connected but not flat."""
    return affine_quandle(5, 2)


def pinned_point_quandle() -> Quandle:
    """Dihedral quandle on {0,1,2} next to a point 3 fixed by every symmetry.

    Valid, but not homogeneous: no automorphism can move 3 into the
    dihedral part.
    """
    return Quandle([[0, 2, 1, 3], [2, 1, 0, 3], [1, 0, 2, 3], [0, 1, 2, 3]])


def brute_force_automorphisms(X: Quandle) -> list[tuple[int, ...]]:
    """All automorphisms by scanning every one of the n! bijections."""
    n, t = X.n, X.table
    return sorted(
        p
        for p in permutations(range(n))
        if all(p[t[x][y]] == t[p[x]][p[y]] for x in range(n) for y in range(n))
    )


def small_corpus() -> list[Quandle]:
    """Assorted small quandles exercising every predicate combination."""
    quandles = [trivial_quandle(n) for n in (1, 2, 3, 4)]
    quandles += [dihedral_quandle(n) for n in range(1, 9)]
    quandles.append(direct_product(dihedral_quandle(3), dihedral_quandle(5)))
    quandles.append(direct_product(dihedral_quandle(3), trivial_quandle(2)))
    quandles.append(affine5())
    quandles.append(pinned_point_quandle())
    return quandles
