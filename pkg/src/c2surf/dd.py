"""The double Dickson invariant of involutions in an isometry group over GF(2).

For an involution s on a bilinear space, D(s) is the rank of s + Id, and
alpha(s) is the rank of the linear functional v |-> b(v, s v), restricted to
the hyperplane orthogonal to Omega when the dimension is odd.  On EVO spaces
every involution has a mirror companion m(s): v |-> s(v) + b(v, v) Omega; the
4-tuple DD(s) = [D(s), alpha(s), D(ms), alpha(ms)] classifies involutions up
to conjugacy within the isometry group.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Tuple

from .bilinear import (
    BilinearSpace,
    FormKind,
    Involution,
    enumerate_isometries,
    omega_vector,
)
from .f2 import F2Matrix, F2Vector


@dataclass(frozen=True, slots=True)
class DDTuple:
    """The conjugacy invariant [d, alpha, d_tilde, alpha_tilde]."""

    d: int
    alpha: int
    d_tilde: int
    alpha_tilde: int

    def as_tuple(self) -> Tuple[int, int, int, int]:
        return (self.d, self.alpha, self.d_tilde, self.alpha_tilde)

    def __repr__(self) -> str:
        return f"[{self.d},{self.alpha},{self.d_tilde},{self.alpha_tilde}]"


def d_invariant(inv: Involution) -> int:
    """Rank of M + Id over GF(2)."""
    n = inv.space.dim
    return (inv.matrix + F2Matrix.identity(n)).rank()


def _pairing_functional(inv: Involution) -> F2Vector:
    """The linear functional v |-> b(v, M v), packed as diag(G M)."""
    gm = inv.space.gram @ inv.matrix
    return gm.diag()


def alpha_invariant(inv: Involution) -> int:
    """Rank of v |-> b(v, Mv); on odd-dimensional spaces restricted to Omega-perp.

    The functional vanishes on the orthogonal complement of Omega exactly when
    it is a multiple of the functional v |-> b(v, Omega), i.e. of diag(G).
    """
    f = _pairing_functional(inv)
    if inv.space.dim % 2 == 0:
        return 0 if f.is_zero() else 1
    dg = inv.space.gram.diag()
    return 0 if f.bits in (0, dg.bits) else 1


def mirror(inv: Involution) -> Involution:
    """The companion involution v |-> M v + b(v, v) Omega on EVO spaces.

    On orthonormal grams this flips every matrix entry; SYMP and ODDO
    involutions are their own mirrors.
    """
    if inv.space.kind != FormKind.EVO:
        return inv
    omega = omega_vector(inv.space)
    dg = inv.space.gram.diag()
    rows = tuple(
        inv.matrix.rows[i] ^ (dg.bits if (omega.bits >> i) & 1 else 0)
        for i in range(inv.space.dim)
    )
    return Involution(inv.space, F2Matrix(rows, inv.space.dim))


def dd(inv: Involution) -> DDTuple:
    """The full invariant [D, alpha, D(mirror), alpha(mirror)]."""
    m = mirror(inv)
    return DDTuple(d_invariant(inv), alpha_invariant(inv), d_invariant(m), alpha_invariant(m))


def dd_direct_sum(sym_part: DDTuple, r: int) -> DDTuple:
    """Invariant of (symplectic involution) + (r disjoint swaps of an orthonormal basis).

    The swap block alone has D = r and alpha = 0, and its mirror drops the
    rank by one exactly when r is odd; the symplectic summand contributes its
    own D and alpha unchanged.
    """
    if sym_part.d_tilde != sym_part.d or sym_part.alpha_tilde != sym_part.alpha:
        raise ValueError("first summand must carry symplectic bookkeeping (d~=d, a~=a)")
    if r < 1:
        raise ValueError("need at least one swap block (r=0 keeps the space symplectic)")
    d, a = sym_part.d, sym_part.alpha
    if r % 2:
        return DDTuple(d + r, a, d + r - 1, 1)
    return DDTuple(d + r, a, d + r, 1)


def block_swap_involution(space: BilinearSpace) -> Involution:
    """Pairwise swap of orthonormal basis vectors on an even orthogonal space."""
    n = space.dim
    if n % 2 or space.kind != FormKind.EVO:
        raise ValueError("block swaps live on even-dimensional orthogonal spaces")
    perm = []
    for i in range(0, n, 2):
        perm += [i + 1, i]
    return Involution(space, F2Matrix.permutation(perm))


def involutions_in(space: BilinearSpace, bound: int = 6) -> Tuple[Involution, ...]:
    """Every involution in the isometry group, by exhaustive filtering."""
    ident = F2Matrix.identity(space.dim)
    return tuple(
        Involution(space, m)
        for m in enumerate_isometries(space, bound=bound)
        if m @ m == ident
    )


def conjugacy_oracle(a: Involution, b: Involution, bound: int = 6) -> bool:
    """Whether some isometry P satisfies P^-1 a P = b, by exhaustive search."""
    if a.space.gram != b.space.gram:
        raise ValueError("involutions live on different spaces")
    target = b.matrix
    for p in enumerate_isometries(a.space, bound=bound):
        if a.matrix @ p == p @ target:
            return True
    return False


def _transvection_generators(space: BilinearSpace) -> List[F2Matrix]:
    """All transvections v |-> v + b(v,u) u for isotropic u; generate Sp(2g, 2)."""
    n = space.dim
    gens = []
    for ubits in range(1, 1 << n):
        u = F2Vector(ubits, n)
        if space.pairing(u, u):
            continue
        cols = []
        for j in range(n):
            e = F2Vector.basis(n, j)
            cols.append(e.bits ^ (ubits if space.pairing(e, u) else 0))
        gens.append(F2Matrix.from_cols(cols, n))
    return gens


def _orthonormal_generators(n: int) -> List[F2Matrix]:
    """Adjacent transpositions, plus the 4x4 complement-of-identity block for n >= 4."""
    gens = [F2Matrix.identity(n)] if n == 1 else []
    for i in range(n - 1):
        perm = list(range(n))
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
        gens.append(F2Matrix.permutation(perm))
    if n >= 4:
        rows = []
        for i in range(n):
            if i < 4:
                rows.append((0b1111 ^ (1 << i)))
            else:
                rows.append(1 << i)
        gens.append(F2Matrix(tuple(rows), n))
    return gens


def isometry_generators(space: BilinearSpace, bound: int = 6) -> List[F2Matrix]:
    """A generating set of the isometry group for the two standard grams.

    Orthonormal grams use permutations plus the complement-of-identity block;
    standard symplectic grams use the full set of transvections.  Any other
    gram falls back to the exhaustively enumerated group.
    """
    n = space.dim
    if space.gram == F2Matrix.identity(n):
        return _orthonormal_generators(n)
    if space.kind == FormKind.SYMP and _is_standard_symplectic(space.gram):
        return _transvection_generators(space)
    return list(enumerate_isometries(space, bound=bound))


def _is_standard_symplectic(gram: F2Matrix) -> bool:
    n = gram.ncols
    if n % 2:
        return False
    expected = []
    for i in range(0, n, 2):
        expected += [1 << (i + 1), 1 << i]
    return gram.rows == tuple(expected)


def conjugacy_classes(space: BilinearSpace, bound: int = 6) -> List[List[Involution]]:
    """Partition of all involutions into conjugacy classes.

    Classes are the orbits of conjugation; closing each orbit under a
    generating set of the isometry group is an exhaustive search over the
    class without materializing every conjugator.
    """
    invs = involutions_in(space, bound=bound)
    gens = isometry_generators(space, bound=bound)
    gen_pairs = [(g, g.inverse()) for g in gens]
    remaining = {inv.matrix for inv in invs}
    classes: List[List[Involution]] = []
    while remaining:
        seed = next(iter(remaining))
        orbit = {seed}
        frontier = [seed]
        while frontier:
            nxt = []
            for m in frontier:
                for g, ginv in gen_pairs:
                    conj = ginv @ m @ g
                    if conj not in orbit:
                        orbit.add(conj)
                        nxt.append(conj)
            frontier = nxt
        if not orbit <= remaining:
            raise AssertionError("conjugation left the involution set")
        remaining -= orbit
        classes.append([Involution(space, m) for m in sorted(orbit, key=lambda m: m.rows)])
    return classes


def dd_classifies(space: BilinearSpace, bound: int = 6) -> bool:
    """Whether DD equality matches conjugacy for every pair of involutions."""
    classes = conjugacy_classes(space, bound=bound)
    values: Dict[Tuple[int, int, int, int], int] = {}
    for idx, cls in enumerate(classes):
        vals = {dd(inv).as_tuple() for inv in cls}
        if len(vals) != 1:
            return False
        val = vals.pop()
        if val in values:
            return False
        values[val] = idx
    return True


__all__ = [
    "DDTuple",
    "d_invariant",
    "alpha_invariant",
    "mirror",
    "dd",
    "dd_direct_sum",
    "block_swap_involution",
    "involutions_in",
    "conjugacy_oracle",
    "conjugacy_classes",
    "isometry_generators",
    "dd_classifies",
]
