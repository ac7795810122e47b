"""Derived products: build a new algebra from an algebra and an operator.

Each catalogued construction replaces the product of a source algebra by a
bilinear expression in the old product and a linear operator R (or a
derivation D).  The result is materialized as a fresh structure-constant
tensor so that the identity engine and the serializer treat derived and
primary algebras uniformly; provenance is recorded in ``meta``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .algebra import Algebra, algebra_from_products, make_algebra
from .errors import DimensionMismatchError, MalformedPropertyError
from .operators import LinearOperator
from .scalars import Scalar, as_scalar


# name -> (needs_operator, needs_param_a, product function)
# The product function receives (mul, R, a, x, y) and returns an Element,
# where mul is the source algebra's product and R the operator (None when
# the construction does not use one).
_CatalogEntry = tuple[bool, bool, Callable]


def _commutator(mul, r, a, x, y):
    return mul(x, y) - mul(y, x)


def _lie_endo(mul, r, a, x, y):
    return mul(x, r(y)) - mul(y, r(x))


def _lie_endo_alt(mul, r, a, x, y):
    return mul(r(x), y) - mul(r(y), x)


def _jordan_plus(mul, r, a, x, y):
    return mul(x, y) + mul(y, x)


def _jordan_endo_left(mul, r, a, x, y):
    return mul(r(x), y)


def _jordan_endo_right(mul, r, a, x, y):
    return mul(x, r(y))


def _jordan_endo_both(mul, r, a, x, y):
    return mul(r(x), r(y))


def _leibniz_comm(mul, r, a, x, y):
    return mul(r(x), y) - mul(y, r(x))


def _leibniz_endo(mul, r, a, x, y):
    return mul(r(x), y) - mul(r(y), r(x))


def _prelie_endo(mul, r, a, x, y):
    return mul(r(x), r(y)) - mul(y, r(x))


def _prelie_endo_alt(mul, r, a, x, y):
    return mul(r(x), y) - mul(r(y), r(x))


def _prelie_diff(mul, r, a, x, y):
    return mul(r(x), y)


def _novikov_affine(mul, r, a, x, y):
    return mul(x, r(y)) + a * mul(x, y)


def _prelie_rb1(mul, r, a, x, y):
    return mul(r(x), y) - mul(y, r(x)) - mul(x, y)


def _flexible_avg(mul, r, a, x, y):
    return r(mul(x, y))


CATALOG: dict[str, _CatalogEntry] = {
    "commutator": (False, False, _commutator),
    "lie_endo": (True, False, _lie_endo),
    "lie_endo_alt": (True, False, _lie_endo_alt),
    "jordan_plus": (False, False, _jordan_plus),
    "jordan_endo_left": (True, False, _jordan_endo_left),
    "jordan_endo_right": (True, False, _jordan_endo_right),
    "jordan_endo_both": (True, False, _jordan_endo_both),
    "leibniz_comm": (True, False, _leibniz_comm),
    "leibniz_endo": (True, False, _leibniz_endo),
    "prelie_endo": (True, False, _prelie_endo),
    "prelie_endo_alt": (True, False, _prelie_endo_alt),
    "prelie_diff": (True, False, _prelie_diff),
    "novikov_affine": (True, True, _novikov_affine),
    "prelie_rb1": (True, False, _prelie_rb1),
    "flexible_avg": (True, False, _flexible_avg),
}


@dataclass(frozen=True)
class ConstructionSpec:
    """A catalog name plus its parameters (only novikov_affine takes one)."""

    name: str
    a: Optional[Scalar] = None

    def __post_init__(self):
        if self.name not in CATALOG:
            raise MalformedPropertyError(f"unknown construction {self.name!r}")
        _, needs_a, _ = CATALOG[self.name]
        if needs_a and self.a is None:
            raise MalformedPropertyError(f"{self.name} requires parameter a")
        if not needs_a and self.a is not None:
            raise MalformedPropertyError(f"{self.name} takes no parameter")


def construction(name: str, a=None) -> ConstructionSpec:
    return ConstructionSpec(name, None if a is None else as_scalar(a))


def derive(
    source: Algebra, operator: Optional[LinearOperator], spec: ConstructionSpec
) -> Algebra:
    """Materialize the derived product as a new structure-constant tensor."""
    needs_r, _, fn = CATALOG[spec.name]
    if needs_r and operator is None:
        raise MalformedPropertyError(f"construction {spec.name} requires an operator")
    if operator is not None and operator.dim != source.dim:
        raise DimensionMismatchError("operator dimension differs from algebra")
    mul = source.product
    r = operator.apply if operator is not None else None
    a = spec.a
    n = source.dim
    products = [
        [fn(mul, r, a, source.basis_vector(i), source.basis_vector(j)).coords for j in range(n)]
        for i in range(n)
    ]
    from .serial import algebra_content_hash, operator_content_hash

    meta = {
        "construction": spec.name,
        "source": algebra_content_hash(source),
    }
    if operator is not None:
        meta["operator"] = operator_content_hash(operator)
    if spec.a is not None:
        meta["a"] = spec.a
    return algebra_from_products(n, products, source.basis_labels, meta)


def hadamard_algebra(rows: int, cols: int) -> Algebra:
    """rows x cols matrices under entrywise multiplication.

    Basis = matrix units ordered row-major; E_ij o E_kl = d_ik d_jl E_ij.
    Commutative, associative, and unital with the all-ones matrix as identity.
    """
    if rows < 1 or cols < 1:
        raise ValueError("shape must be positive")
    dim = rows * cols
    entries = [(i, i, i, 1) for i in range(dim)]
    labels = tuple(f"E{r + 1}{c + 1}" for r in range(rows) for c in range(cols))
    return make_algebra(dim, entries, labels, {"kind": "hadamard", "shape": (rows, cols)})
