"""Nondegenerate symmetric bilinear spaces over GF(2) and their involutions.

A space is symplectic (SYMP) when every vector is isotropic, and otherwise
orthogonal of odd (ODDO) or even (EVO) dimension.  Each space carries a
distinguished vector Omega with b(v, Omega) = b(v, v) for all v; it is zero
exactly in the symplectic case and is fixed by every isometry.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Tuple

from .f2 import F2Matrix, F2Vector, block_diag, isometries, solve


class FormKind(enum.Enum):
    SYMP = "SYMP"
    ODDO = "ODDO"
    EVO = "EVO"


class NotAnIsometry(ValueError):
    """Matrix does not preserve the bilinear form."""


class NotOrderTwo(ValueError):
    """Matrix does not square to the identity."""


@dataclass(frozen=True, slots=True)
class BilinearSpace:
    """A nondegenerate symmetric gram matrix over GF(2)."""

    gram: F2Matrix

    def __post_init__(self) -> None:
        if not self.gram.is_symmetric():
            raise ValueError("gram matrix must be symmetric")
        if self.gram.rank() != self.gram.ncols:
            raise ValueError("gram matrix must be invertible (nondegenerate form)")

    @property
    def dim(self) -> int:
        return self.gram.ncols

    @property
    def kind(self) -> FormKind:
        return classify_space(self)

    def pairing(self, v: F2Vector, w: F2Vector) -> int:
        return v.dot(self.gram.mul_vec(w))


def classify_space(space: BilinearSpace) -> FormKind:
    """SYMP when all diagonal gram entries vanish, else ODDO/EVO by parity."""
    if space.gram.diag().is_zero():
        return FormKind.SYMP
    return FormKind.ODDO if space.dim % 2 else FormKind.EVO


def omega_vector(space: BilinearSpace) -> F2Vector:
    """The unique Omega with b(v, Omega) = b(v, v) for all v; solves G x = diag(G)."""
    if space.dim == 0:
        return F2Vector.zero(0)
    return solve(space.gram, space.gram.diag())


def standard_space(kind: str, dim: int) -> BilinearSpace:
    """Identity gram ('orthogonal') or hyperbolic-block gram ('symplectic')."""
    if kind == "orthogonal":
        return BilinearSpace(F2Matrix.identity(dim))
    if kind == "symplectic":
        if dim % 2:
            raise ValueError("symplectic spaces have even dimension")
        block = F2Matrix.from_rows([[0, 1], [1, 0]])
        gram = F2Matrix((), 0)
        for _ in range(dim // 2):
            gram = block_diag(gram, block)
        return BilinearSpace(gram)
    raise ValueError(f"unknown form kind {kind!r}")


@dataclass(frozen=True, slots=True)
class Involution:
    """An isometry of order at most two on a bilinear space."""

    space: BilinearSpace
    matrix: F2Matrix

    def __post_init__(self) -> None:
        n = self.space.dim
        if self.matrix.shape != (n, n):
            raise ValueError(f"matrix shape {self.matrix.shape} != space dim {n}")
        g = self.space.gram
        if self.matrix.transpose() @ g @ self.matrix != g:
            raise NotAnIsometry("matrix is not an isometry of the form")
        if self.matrix @ self.matrix != F2Matrix.identity(n):
            raise NotOrderTwo("matrix does not square to the identity")

    def conjugate(self, p: F2Matrix) -> "Involution":
        """The involution p^-1 M p for an isometry p of the same space."""
        return Involution(self.space, p.inverse() @ self.matrix @ p)


def make_involution(space: BilinearSpace, matrix: F2Matrix) -> Involution:
    """Validated involution; raises NotAnIsometry or NotOrderTwo accordingly."""
    return Involution(space, matrix)


def identity_involution(space: BilinearSpace) -> Involution:
    return Involution(space, F2Matrix.identity(space.dim))


def enumerate_isometries(space: BilinearSpace, bound: int = 6) -> Tuple[F2Matrix, ...]:
    """All matrices preserving the gram exactly; refuses above the dimension bound."""
    return isometries(space.gram, bound=bound)


__all__ = [
    "FormKind",
    "NotAnIsometry",
    "NotOrderTwo",
    "BilinearSpace",
    "classify_space",
    "omega_vector",
    "standard_space",
    "Involution",
    "make_involution",
    "identity_involution",
    "enumerate_isometries",
]
