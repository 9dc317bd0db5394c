"""Symmetry groups of a quandle and the predicates built on them.

inner_group is generated by the rows; displacement_group by all row pairs
s_x . s_y.  Connectivity is computed from both (they provably agree, and the
implementation refuses to continue if they ever do not); flatness is
commutativity of the displacement group.
"""

from __future__ import annotations

from functools import lru_cache

from .core import Quandle
from .isomorphism import automorphism_group
from .perms import (
    PermutationGroup,
    closure,
    compose,
    identity_perm,
    is_abelian,
    is_transitive,
)


@lru_cache(maxsize=None)
def inner_group(X: Quandle) -> PermutationGroup:
    """Group generated by the symmetries s_x (the rows of the table)."""
    return closure(X.table)


@lru_cache(maxsize=None)
def displacement_group(X: Quandle) -> PermutationGroup:
    """Group generated by all compositions s_x . s_y."""
    rows = X.table
    gens = list(dict.fromkeys(compose(rx, ry) for rx in rows for ry in rows))
    return closure(gens)


def is_connected(X: Quandle) -> bool:
    """True iff the inner group acts transitively.

    The displacement group is transitive exactly when the inner group is;
    both are computed and compared as a built-in self-test.
    """
    inner = is_transitive(inner_group(X))
    displaced = is_transitive(displacement_group(X))
    if inner != displaced:
        raise RuntimeError(
            "internal inconsistency: inner and displacement transitivity "
            f"disagree ({inner} vs {displaced}) on {X!r}"
        )
    return inner


def is_flat(X: Quandle) -> bool:
    """True iff the displacement group is commutative."""
    return is_abelian(displacement_group(X))


def is_involutive(X: Quandle) -> bool:
    """True iff every symmetry squares to the identity."""
    ident = identity_perm(X.n)
    return all(compose(row, row) == ident for row in X.table)


def is_homogeneous(X: Quandle) -> bool:
    """True iff the automorphism group acts transitively."""
    return is_transitive(automorphism_group(X))


def analyze(X: Quandle) -> dict:
    """Full predicate report, in the shape used by the CLI."""
    return {
        "n": X.n,
        "connected": is_connected(X),
        "flat": is_flat(X),
        "involutive": is_involutive(X),
        "homogeneous": is_homogeneous(X),
        "inn_order": len(inner_group(X)),
        "dis_order": len(displacement_group(X)),
    }
