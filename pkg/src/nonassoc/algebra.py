"""Finite-dimensional algebras over Q given by structure constants.

An algebra of dimension n is the tensor c[i][j][k] with
e_i * e_j = sum_k c[i][j][k] e_k; products of arbitrary elements extend
bilinearly.  No axiom (associativity, commutativity, ...) is assumed at
construction; predicates verify axioms exactly and cache the result.

All types are immutable after construction: caches are write-once and safe
to share across workers.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional, Sequence

from .errors import (
    DependentBasisError,
    DimensionMismatchError,
    DuplicateEntryError,
    SpanNotClosedError,
)
from .linalg import SpanSolver
from .scalars import Scalar, as_scalar, canonical
from .verdicts import Verdict, Witness


@dataclass(frozen=True)
class Element:
    """Coordinate vector relative to the ordered basis of one algebra."""

    coords: tuple[Scalar, ...]

    @staticmethod
    def from_iterable(values: Iterable) -> "Element":
        return Element(tuple(as_scalar(v) for v in values))

    @staticmethod
    def zero(dim: int) -> "Element":
        return Element((0,) * dim)

    @staticmethod
    def basis_vector(dim: int, i: int) -> "Element":
        if not 0 <= i < dim:
            raise IndexError(f"basis index {i} out of range for dimension {dim}")
        return Element(tuple(1 if j == i else 0 for j in range(dim)))

    def __len__(self) -> int:
        return len(self.coords)

    def __getitem__(self, i: int) -> Scalar:
        return self.coords[i]

    def __iter__(self):
        return iter(self.coords)

    def __add__(self, other: "Element") -> "Element":
        if len(self.coords) != len(other.coords):
            raise DimensionMismatchError("element dimensions differ")
        out = []
        for a, b in zip(self.coords, other.coords):
            s = a + b
            out.append(s if type(s) is int else canonical(s))
        return Element(tuple(out))

    def __sub__(self, other: "Element") -> "Element":
        if len(self.coords) != len(other.coords):
            raise DimensionMismatchError("element dimensions differ")
        out = []
        for a, b in zip(self.coords, other.coords):
            s = a - b
            out.append(s if type(s) is int else canonical(s))
        return Element(tuple(out))

    def __neg__(self) -> "Element":
        return Element(tuple(canonical(-a) for a in self.coords))

    def __rmul__(self, scalar) -> "Element":
        s = as_scalar(scalar)
        return Element(tuple(canonical(s * a) for a in self.coords))

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coords)


@dataclass(frozen=True, eq=False)
class Algebra:
    """dim, structure constants, basis labels, and write-once axiom caches."""

    dim: int
    sc: tuple  # sc[i][j] = tuple of dim scalars
    basis_labels: tuple[str, ...] = ()
    meta: dict = field(default_factory=dict, repr=False)
    _verdict_cache: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dimension must be positive")
        if not self.basis_labels:
            object.__setattr__(
                self, "basis_labels", tuple(f"e{i + 1}" for i in range(self.dim))
            )
        if len(self.basis_labels) != self.dim:
            raise DimensionMismatchError("label count differs from dimension")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Algebra)
            and self.dim == other.dim
            and self.sc == other.sc
        )

    def __hash__(self) -> int:
        return hash((self.dim, self.sc))

    @cached_property
    def sparse_rows(self) -> tuple:
        """sparse_rows[i][j] = tuple of (k, c[i][j][k]) over nonzero entries."""
        return tuple(
            tuple(
                tuple((k, v) for k, v in enumerate(self.sc[i][j]) if v != 0)
                for j in range(self.dim)
            )
            for i in range(self.dim)
        )

    def basis_product(self, i: int, j: int) -> Element:
        return Element(self.sc[i][j])

    def product(self, x: Element, y: Element) -> Element:
        xc, yc = x.coords, y.coords
        if len(xc) != self.dim or len(yc) != self.dim:
            raise DimensionMismatchError(
                f"elements of length {len(xc)}/{len(yc)} "
                f"in algebra of dimension {self.dim}"
            )
        rows = self.sparse_rows
        acc = [0] * self.dim
        for i, xi in enumerate(xc):
            if not xi:
                continue
            row = rows[i]
            for j, yj in enumerate(yc):
                if not yj:
                    continue
                entries = row[j]
                if not entries:
                    continue
                c = xi * yj
                for k, v in entries:
                    acc[k] = acc[k] + (c if v == 1 else c * v)
        return Element(tuple(a if type(a) is int else canonical(a) for a in acc))

    def zero(self) -> Element:
        return Element.zero(self.dim)

    def basis_vector(self, i: int) -> Element:
        return Element.basis_vector(self.dim, i)

    def basis(self) -> list[Element]:
        return [self.basis_vector(i) for i in range(self.dim)]

    @property
    def associative(self) -> Optional[bool]:
        v = self._verdict_cache.get("associative")
        return None if v is None else v.passed

    @property
    def commutative(self) -> Optional[bool]:
        v = self._verdict_cache.get("commutative")
        return None if v is None else v.passed


@dataclass(frozen=True, eq=False)
class Embedding:
    """A subalgebra's basis inside an ambient algebra, with coordinate maps.

    ``to_sub``/``to_ambient`` are the two directions of the change of basis;
    ``residual`` measures failure to lie in the span (exact, zero iff inside).
    """

    ambient: Algebra
    basis: tuple[Element, ...]
    _solver: SpanSolver = field(repr=False)

    @staticmethod
    def build(ambient: Algebra, basis: Sequence[Element]) -> "Embedding":
        if not basis:
            raise DependentBasisError("basis must be nonempty")
        for b in basis:
            if len(b.coords) != ambient.dim:
                raise DimensionMismatchError("basis element has wrong ambient dimension")
        solver = SpanSolver([list(b.coords) for b in basis])
        if not solver.independent:
            raise DependentBasisError("basis elements are linearly dependent")
        return Embedding(ambient, tuple(basis), solver)

    @property
    def sub_dim(self) -> int:
        return len(self.basis)

    def to_ambient(self, x: Element) -> Element:
        if len(x.coords) != self.sub_dim:
            raise DimensionMismatchError("subalgebra coordinates of wrong length")
        acc = Element.zero(self.ambient.dim)
        for c, b in zip(x.coords, self.basis):
            if c != 0:
                acc = acc + c * b
        return acc

    def to_sub(self, v: Element) -> Optional[Element]:
        """Coordinates of an ambient element in the subalgebra basis, or None."""
        coeffs = self._solver.coordinates(list(v.coords))
        if coeffs is None:
            return None
        return Element(tuple(canonical(c) for c in coeffs))

    def residual(self, v: Element) -> Element:
        return Element(tuple(self._solver.residual(list(v.coords))))

    def contains(self, v: Element) -> bool:
        return self.residual(v).is_zero()


def make_algebra(
    dim: int,
    sc_entries: Iterable[tuple],
    basis_labels: Sequence[str] = (),
    meta: dict | None = None,
) -> Algebra:
    """Build an algebra from a sparse list of (i, j, k, scalar) entries.

    Unlisted triples are zero; duplicate (i, j, k) entries are rejected.
    """
    if dim < 1:
        raise ValueError("dimension must be positive")
    dense = [[[0] * dim for _ in range(dim)] for _ in range(dim)]
    seen = set()
    for i, j, k, value in sc_entries:
        if not (0 <= i < dim and 0 <= j < dim and 0 <= k < dim):
            raise IndexError(f"structure constant index ({i},{j},{k}) out of range")
        if (i, j, k) in seen:
            raise DuplicateEntryError(f"duplicate structure constant ({i},{j},{k})")
        seen.add((i, j, k))
        dense[i][j][k] = as_scalar(value)
    sc = tuple(tuple(tuple(dense[i][j]) for j in range(dim)) for i in range(dim))
    return Algebra(dim, sc, tuple(basis_labels), meta or {})


def algebra_from_products(
    dim: int,
    products: Sequence[Sequence[Sequence[Scalar]]],
    basis_labels: Sequence[str] = (),
    meta: dict | None = None,
) -> Algebra:
    """Build an algebra from the dense table products[i][j] = coords of e_i e_j."""
    sc = tuple(
        tuple(tuple(canonical(as_scalar(v)) for v in products[i][j]) for j in range(dim))
        for i in range(dim)
    )
    return Algebra(dim, sc, tuple(basis_labels), meta or {})


def matrix_algebra(n: int) -> Algebra:
    """Full matrix algebra M_n, basis E_ij ordered row-major, E_ij E_kl = d_jk E_il."""
    if n < 1:
        raise ValueError("matrix size must be positive")
    dim = n * n
    entries = []
    for i in range(n):
        for j in range(n):
            for l in range(n):
                # E_ij * E_jl = E_il
                entries.append((i * n + j, j * n + l, i * n + l, 1))
    labels = tuple(f"E{i + 1}{j + 1}" for i in range(n) for j in range(n))
    return make_algebra(dim, entries, labels, {"kind": "matrix", "n": n})


def matrix_unit(n: int, i: int, j: int) -> Element:
    """The basis element E_ij of matrix_algebra(n), 0-based indices."""
    if not (0 <= i < n and 0 <= j < n):
        raise IndexError("matrix unit index out of range")
    return Element.basis_vector(n * n, i * n + j)


def element_from_matrix(rows: Sequence[Sequence]) -> Element:
    """Flatten a square matrix (row-major) into matrix-algebra coordinates."""
    n = len(rows)
    for r in rows:
        if len(r) != n:
            raise DimensionMismatchError("matrix is not square")
    return Element.from_iterable(v for row in rows for v in row)


def matrix_identity_element(n: int) -> Element:
    return element_from_matrix([[1 if i == j else 0 for j in range(n)] for i in range(n)])


def multiply(algebra: Algebra, x: Element, y: Element) -> Element:
    """Bilinear product of two elements: (x y)_k = sum_ij x_i y_j c[i][j][k]."""
    return algebra.product(x, y)


def induce_subalgebra(
    ambient: Algebra, basis: Sequence[Element], basis_labels: Sequence[str] = ()
) -> tuple[Algebra, Embedding]:
    """Structure constants of the span of ``basis`` inside ``ambient``.

    Fails if the basis is dependent or the span is not closed under the
    ambient product; closure failures report the offending pair and the
    residual outside the span.
    """
    emb = Embedding.build(ambient, basis)
    k = emb.sub_dim
    products = [[None] * k for _ in range(k)]
    for i in range(k):
        for j in range(k):
            p = ambient.product(basis[i], basis[j])
            coords = emb.to_sub(p)
            if coords is None:
                raise SpanNotClosedError(i, j, tuple(emb.residual(p).coords))
            products[i][j] = coords.coords
    sub = algebra_from_products(
        k, products, basis_labels, meta={"kind": "subalgebra", "ambient_dim": ambient.dim}
    )
    return sub, emb


def _pair_witness(a: Algebra, i: int, j: int, lhs: Element, rhs: Element) -> Witness:
    return Witness((i, j), (a.basis_vector(i), a.basis_vector(j)), lhs, rhs)


def is_associative(a: Algebra) -> Verdict:
    """(e_i e_j) e_k == e_i (e_j e_k) on all basis triples; exact by trilinearity."""
    cached = a._verdict_cache.get("associative")
    if cached is not None:
        return cached
    verdict = Verdict.ok()
    done = False
    for i, j, k in itertools.product(range(a.dim), repeat=3):
        left = a.product(a.basis_product(i, j), a.basis_vector(k))
        right = a.product(a.basis_vector(i), a.basis_product(j, k))
        if left != right:
            w = Witness(
                (i, j, k),
                (a.basis_vector(i), a.basis_vector(j), a.basis_vector(k)),
                left,
                right,
            )
            verdict = Verdict.fail(w)
            done = True
            break
    if not done:
        verdict = Verdict.ok()
    a._verdict_cache["associative"] = verdict
    return verdict


def is_commutative(a: Algebra) -> Verdict:
    """e_i e_j == e_j e_i on all basis pairs; exact by bilinearity."""
    cached = a._verdict_cache.get("commutative")
    if cached is not None:
        return cached
    verdict = Verdict.ok()
    for i in range(a.dim):
        for j in range(i + 1, a.dim):
            left = a.basis_product(i, j)
            right = a.basis_product(j, i)
            if left != right:
                verdict = Verdict.fail(_pair_witness(a, i, j, left, right))
                break
        if not verdict:
            break
    a._verdict_cache["commutative"] = verdict
    return verdict
