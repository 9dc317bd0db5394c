"""Finite groups as multiplication tables, and quandle triplets (G, K, sigma).

A triplet is a finite group G, a subgroup K, and a group automorphism sigma
fixing K pointwise.  It defines a quandle on the left cosets G/K:

    s_[g]([h]) = [g * sigma(g^-1 * h)]

Every homogeneous quandle arises this way; connected quandles arise with G the
displacement group, K the stabilizer of a basepoint, and sigma conjugation by
the symmetry there.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .analysis import displacement_group
from .core import Quandle, validate_quandle
from .isomorphism import is_homomorphism
from .perms import PermutationGroup, compose, inverse, is_perm, orbit


class FiniteGroup:
    """A finite group given by its m x m multiplication table.

    The identity and inverse maps are derived on construction; the public
    constructor also checks associativity exhaustively.  Internal builders
    (cyclic, direct, from_permutations) produce tables that are associative
    by construction and skip that pass.
    """

    __slots__ = ("order", "mul", "identity", "inv")

    def __init__(self, mul, *, _trusted: bool = False):
        rows = tuple(tuple(row) for row in mul)
        m = len(rows)
        if m == 0:
            raise ValueError("empty multiplication table")
        for i, row in enumerate(rows):
            if len(row) != m:
                raise ValueError(f"row {i} has {len(row)} entries, expected {m}")
            for j, v in enumerate(row):
                if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < m:
                    raise ValueError(f"entry [{i}][{j}] = {v!r} out of range 0..{m - 1}")
        identity = None
        for e in range(m):
            if all(rows[e][g] == g and rows[g][e] == g for g in range(m)):
                identity = e
                break
        if identity is None:
            raise ValueError("table has no identity element")
        inv = [None] * m
        for g in range(m):
            for h in range(m):
                if rows[g][h] == identity and rows[h][g] == identity:
                    inv[g] = h
                    break
            if inv[g] is None:
                raise ValueError(f"element {g} has no inverse")
        if not _trusted:
            for a in range(m):
                for b in range(m):
                    ab = rows[a][b]
                    for c in range(m):
                        if rows[ab][c] != rows[a][rows[b][c]]:
                            raise ValueError(
                                f"not associative at ({a},{b},{c})"
                            )
        object.__setattr__(self, "order", m)
        object.__setattr__(self, "mul", rows)
        object.__setattr__(self, "identity", identity)
        object.__setattr__(self, "inv", tuple(inv))

    def __setattr__(self, name, value):
        raise AttributeError("FiniteGroup is immutable")

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteGroup) and self.mul == other.mul

    def __hash__(self) -> int:
        return hash(self.mul)

    def __repr__(self) -> str:
        return f"FiniteGroup(order={self.order})"

    @classmethod
    def cyclic(cls, n: int) -> "FiniteGroup":
        if n < 1:
            raise ValueError("group order must be positive")
        return cls(
            tuple(tuple((i + j) % n for j in range(n)) for i in range(n)),
            _trusted=True,
        )

    @classmethod
    def direct(cls, G: "FiniteGroup", H: "FiniteGroup") -> "FiniteGroup":
        """Product group on pairs flattened row-major: (a, b) -> a*|H| + b."""
        m = H.order
        gm, hm = G.mul, H.mul
        table = []
        for a in range(G.order):
            for b in range(m):
                ga, hb = gm[a], hm[b]
                table.append(
                    tuple(ga[c] * m + hb[d] for c in range(G.order) for d in range(m))
                )
        return cls(table, _trusted=True)

    @classmethod
    def from_permutations(cls, perms) -> "FiniteGroup":
        """Abstract table of a permutation group, elements sorted lexicographically.

        The same element set always yields the identical table.
        """
        elements = sorted(tuple(p) for p in perms)
        index = {p: i for i, p in enumerate(elements)}
        if len(index) != len(elements):
            raise ValueError("duplicate permutations")
        table = []
        for p in elements:
            row = []
            for q in elements:
                r = compose(p, q)
                if r not in index:
                    raise ValueError("permutation set is not closed under composition")
                row.append(index[r])
            table.append(tuple(row))
        return cls(table, _trusted=True)


def element_order(G: FiniteGroup, g: int) -> int:
    order = 1
    x = g
    while x != G.identity:
        x = G.mul[x][g]
        order += 1
    return order


def is_abelian_group(G: FiniteGroup) -> bool:
    m = G.mul
    return all(
        m[a][b] == m[b][a] for a in range(G.order) for b in range(a + 1, G.order)
    )


def is_subgroup(G: FiniteGroup, indices) -> bool:
    sub = set(indices)
    if not sub or not sub <= set(range(G.order)):
        return False
    if G.identity not in sub:
        return False
    return all(
        G.mul[a][b] in sub for a in sub for b in sub
    ) and all(G.inv[a] in sub for a in sub)


def is_group_automorphism(G: FiniteGroup, mapping) -> bool:
    m = tuple(mapping)
    if not is_perm(m, G.order):
        return False
    mul = G.mul
    return all(
        m[mul[a][b]] == mul[m[a]][m[b]]
        for a in range(G.order)
        for b in range(G.order)
    )


def negation_map(G: FiniteGroup) -> tuple[int, ...]:
    """g -> g^-1; an automorphism exactly when G is abelian."""
    return G.inv


def fix_set(sigma, G: FiniteGroup) -> tuple[int, ...]:
    """Indices fixed by sigma, ascending."""
    m = tuple(sigma)
    if len(m) != G.order:
        raise ValueError(f"map has length {len(m)}, expected {G.order}")
    return tuple(g for g in range(G.order) if m[g] == g)


class TripletViolation(NamedTuple):
    kind: str  # "subgroup" | "automorphism" | "fixed-subgroup"
    witness: tuple[int, ...]


def validate_triplet(G: FiniteGroup, subgroup, sigma) -> list[TripletViolation]:
    """Axiom-level verdict for (G, K, sigma); structural nonsense raises instead."""
    K = tuple(subgroup)
    sig = tuple(sigma)
    if len(set(K)) != len(K) or not all(
        isinstance(k, int) and 0 <= k < G.order for k in K
    ):
        raise ValueError("subgroup must be a set of element indices")
    if len(sig) != G.order or not all(
        isinstance(v, int) and 0 <= v < G.order for v in sig
    ):
        raise ValueError("sigma must map each element index to an element index")
    violations = []
    if not is_subgroup(G, K):
        violations.append(TripletViolation("subgroup", K))
    if not is_group_automorphism(G, sig):
        violations.append(TripletViolation("automorphism", sig))
    else:
        fixed = set(fix_set(sig, G))
        for k in K:
            if k not in fixed:
                violations.append(TripletViolation("fixed-subgroup", (k,)))
    return violations


class InvalidTripletError(ValueError):
    def __init__(self, violations):
        self.violations = list(violations)
        detail = ", ".join(v.kind for v in self.violations)
        super().__init__(f"not a quandle triplet: {detail}")


@dataclass(frozen=True)
class QuandleTriplet:
    """A validated (G, K, sigma); constructing one re-checks the axioms."""

    group: FiniteGroup
    subgroup: tuple[int, ...]
    sigma: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "subgroup", tuple(sorted(self.subgroup)))
        object.__setattr__(self, "sigma", tuple(self.sigma))
        violations = validate_triplet(self.group, self.subgroup, self.sigma)
        if violations:
            raise InvalidTripletError(violations)


def abelian_negation_triplet(factors) -> QuandleTriplet:
    """(Z_q1 x ... x Z_qk, {0}, negation); with no factors, the one-element triplet."""
    G = FiniteGroup.cyclic(1)
    for q in factors:
        G = FiniteGroup.direct(G, FiniteGroup.cyclic(q))
    return QuandleTriplet(G, (G.identity,), negation_map(G))


class CosetQuandle(NamedTuple):
    quandle: Quandle
    representatives: tuple[int, ...]


def quandle_from_triplet(triplet: QuandleTriplet) -> CosetQuandle:
    """The quandle on G/K with s_[g]([h]) = [g * sigma(g^-1 * h)].

    Cosets are labeled by their smallest member and listed in ascending order
    of that representative.  The output table is re-validated against the
    axioms rather than trusted.
    """
    G = triplet.group
    mul, inv, sig = G.mul, G.inv, triplet.sigma
    coset_of = [-1] * G.order
    reps = []
    for g in range(G.order):
        if coset_of[g] == -1:
            idx = len(reps)
            reps.append(g)
            for k in triplet.subgroup:
                coset_of[mul[g][k]] = idx
    table = [
        [coset_of[mul[g][sig[mul[inv[g]][h]]]] for h in reps] for g in reps
    ]
    violations = validate_quandle(table)
    if violations:  # pragma: no cover - labeling bug guard
        raise RuntimeError(f"coset table violates quandle axioms: {violations[:3]}")
    return CosetQuandle(Quandle(table), tuple(reps))


@dataclass(frozen=True)
class DerivedTriplet:
    """Triplet extracted from a quandle and a group of its automorphisms.

    `elements` lists the permutations in abstract-index order; `witness`, when
    present, maps the coset quandle of `triplet` onto the original quandle by
    [g] -> g(basepoint).
    """

    triplet: QuandleTriplet
    elements: tuple[tuple[int, ...], ...]
    basepoint: int
    witness: tuple[int, ...] | None


def triplet_from_quandle(
    X: Quandle,
    basepoint: int = 0,
    group: PermutationGroup | None = None,
    *,
    with_witness: bool = True,
) -> DerivedTriplet:
    """Derive (G, G_x, conjugation-by-s_x) from a symmetry-stable group G.

    `group` defaults to the displacement group.  Every element is verified to
    be a quandle automorphism and the conjugation s_x g s_x^-1 is verified to
    land back in the group.  When the group acts transitively the returned
    witness is checked to be an isomorphism from the coset quandle onto X;
    requesting a witness from an intransitive group is an error.
    """
    if group is None:
        group = displacement_group(X)
    if group.degree != X.n:
        raise ValueError(f"group degree {group.degree} does not match |X| = {X.n}")
    if not 0 <= basepoint < X.n:
        raise ValueError(f"basepoint {basepoint} out of range")
    xt = X.table
    for p in group.elements:
        for x in range(X.n):
            px, rx = p[x], xt[x]
            for y in range(X.n):
                if p[rx[y]] != xt[px][p[y]]:
                    raise ValueError(
                        f"group element {p} is not a quandle automorphism"
                    )
    sx = xt[basepoint]
    sx_inv = inverse(sx)
    # Abstract indices follow lexicographic element order, matching
    # FiniteGroup.from_permutations, so equal groups yield identical tables.
    elements = tuple(sorted(group.elements))
    index = {p: i for i, p in enumerate(elements)}
    sigma = []
    for p in elements:
        conj = compose(sx, compose(p, sx_inv))
        if conj not in index:
            raise ValueError(
                "conjugation by the basepoint symmetry does not stabilize the group"
            )
        sigma.append(index[conj])
    G = FiniteGroup.from_permutations(elements)
    K = tuple(i for i, p in enumerate(elements) if p[basepoint] == basepoint)
    triplet = QuandleTriplet(G, K, tuple(sigma))
    witness = None
    if with_witness:
        if len(orbit(group.generators, basepoint)) != X.n:
            raise ValueError(
                "group does not act transitively: no isomorphism witness exists"
            )
        coset = quandle_from_triplet(triplet)
        witness = tuple(elements[g][basepoint] for g in coset.representatives)
        if len(set(witness)) != X.n or not is_homomorphism(
            witness, coset.quandle, X
        ):  # pragma: no cover - construction bug guard
            raise RuntimeError("derived coset map failed to be an isomorphism")
    return DerivedTriplet(triplet, elements, basepoint, witness)


def triplet_product(T1: QuandleTriplet, T2: QuandleTriplet) -> QuandleTriplet:
    """Componentwise triplet on the product group, indices flattened row-major."""
    G = FiniteGroup.direct(T1.group, T2.group)
    m2 = T2.group.order
    subgroup = tuple(
        sorted(a * m2 + b for a in T1.subgroup for b in T2.subgroup)
    )
    sigma = tuple(
        T1.sigma[a] * m2 + T2.sigma[b]
        for a in range(T1.group.order)
        for b in range(m2)
    )
    return QuandleTriplet(G, subgroup, sigma)


def phi_map(triplet: QuandleTriplet) -> tuple[tuple[int, ...], bool]:
    """The endomorphism g -> g * sigma(g^-1) and whether it is surjective.

    Requires the trivial subgroup, a commutative group, and involutive sigma;
    under those hypotheses surjectivity decides connectivity of the coset
    quandle.
    """
    G = triplet.group
    if triplet.subgroup != (G.identity,):
        raise ValueError("phi requires the trivial subgroup")
    if not is_abelian_group(G):
        raise ValueError("phi requires a commutative group")
    sig = triplet.sigma
    if any(sig[sig[g]] != g for g in range(G.order)):
        raise ValueError("phi requires an involutive automorphism")
    phi = tuple(G.mul[g][sig[G.inv[g]]] for g in range(G.order))
    return phi, len(set(phi)) == G.order


# ---------------------------------------------------------------------------
# Serialization.  Full form: {"order": m, "mul": [[...]], "K": [...],
# "sigma": [...]}.  Abelian shorthand: {"cyclic_factors": [q1, ...],
# "K": "trivial", "sigma": "negation"}.
# ---------------------------------------------------------------------------


def triplet_to_obj(triplet: QuandleTriplet) -> dict:
    return {
        "order": triplet.group.order,
        "mul": [list(row) for row in triplet.group.mul],
        "K": list(triplet.subgroup),
        "sigma": list(triplet.sigma),
    }


def parse_triplet(obj) -> QuandleTriplet:
    if not isinstance(obj, dict):
        raise ValueError("expected a JSON object describing a triplet")
    if "cyclic_factors" in obj:
        factors = obj["cyclic_factors"]
        if not isinstance(factors, list) or not all(
            isinstance(q, int) and q >= 1 for q in factors
        ):
            raise ValueError("'cyclic_factors' must be a list of positive integers")
        if obj.get("K", "trivial") != "trivial":
            raise ValueError("shorthand triplets only support K = \"trivial\"")
        if obj.get("sigma", "negation") != "negation":
            raise ValueError("shorthand triplets only support sigma = \"negation\"")
        return abelian_negation_triplet(factors)
    for key in ("mul", "K", "sigma"):
        if key not in obj:
            raise ValueError(f"missing key {key!r}")
    G = FiniteGroup(obj["mul"])
    if "order" in obj and obj["order"] != G.order:
        raise ValueError(f"'order' is {obj['order']} but table has {G.order} rows")
    violations = validate_triplet(G, obj["K"], obj["sigma"])
    if violations:
        raise InvalidTripletError(violations)
    return QuandleTriplet(G, tuple(obj["K"]), tuple(obj["sigma"]))
