"""Search for distinguished ambient elements u.

The side conditions (right identity, right annihilator, centralizing,
stabilizing) are linear in u and are solved exactly as one big rational
system, yielding an affine solution space.  The quadratic condition
(u^2 = u, -u, 0, gamma u, or -lam u - beta unit) is then resolved either by
substituting explicit grid points into the affine parametrization, or by
pinning all but one parameter and solving the remaining single-variable
quadratic over Q.  Irrational roots are reported existentially, never as
approximate values.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

from .algebra import Algebra, Element, Embedding
from .errors import MalformedPropertyError, SearchStrategyError
from .linalg import solve_affine
from .scalars import Scalar, as_scalar, canonical, exact_div, format_scalar, rational_sqrt
from .verdicts import Verdict, Witness

_LINEAR_KINDS = ("right_identity", "right_annihilator", "centralize", "stabilize")
_QUAD_KINDS = ("idempotent", "skew_idempotent", "nilpotent2", "rb_weighted", "scaled")


@dataclass(frozen=True)
class LinearConstraint:
    """One linear side condition on u, relative to a subalgebra embedding.

    - ``right_identity``     x u = x for every subalgebra basis element x
    - ``right_annihilator``  x u = 0
    - ``centralize``         x u = u x
    - ``stabilize``          u x lies in the subalgebra span
    """

    kind: str
    embedding: Embedding

    def __post_init__(self):
        if self.kind not in _LINEAR_KINDS:
            raise MalformedPropertyError(f"unknown linear constraint {self.kind!r}")


@dataclass(frozen=True)
class QuadraticConstraint:
    """The quadratic condition on u: what u^2 must equal.

    - ``idempotent``       u^2 = u
    - ``skew_idempotent``  u^2 = -u
    - ``nilpotent2``       u^2 = 0
    - ``scaled``           u^2 = gamma u
    - ``rb_weighted``      u^2 = -lam u - beta unit   (unit an ambient element)
    """

    kind: str
    lam: Optional[Scalar] = None
    beta: Optional[Scalar] = None
    gamma: Optional[Scalar] = None
    unit: Optional[Element] = None

    def __post_init__(self):
        if self.kind not in _QUAD_KINDS:
            raise MalformedPropertyError(f"unknown quadratic constraint {self.kind!r}")
        needs = {
            "rb_weighted": ("lam", "beta", "unit"),
            "scaled": ("gamma",),
        }.get(self.kind, ())
        for name in ("lam", "beta", "gamma", "unit"):
            value = getattr(self, name)
            if name in needs and value is None:
                raise MalformedPropertyError(f"{self.kind} requires {name}")
            if name not in needs and value is not None:
                raise MalformedPropertyError(f"{self.kind} takes no {name}")

    def label(self) -> str:
        if self.kind == "scaled":
            return f"scaled({format_scalar(self.gamma)})"
        if self.kind == "rb_weighted":
            return f"rb_weighted({format_scalar(self.lam)},{format_scalar(self.beta)})"
        return self.kind

    def linear_part(self, u: Element) -> Element:
        """L(u) with the residual written as u^2 + L(u) + K."""
        if self.kind == "idempotent":
            return -u
        if self.kind == "skew_idempotent":
            return u
        if self.kind == "nilpotent2":
            return 0 * u
        if self.kind == "scaled":
            return (-self.gamma) * u
        return self.lam * u

    def constant_part(self, dim: int) -> Element:
        if self.kind == "rb_weighted":
            return self.beta * self.unit
        return Element.zero(dim)

    def residual(self, ambient: Algebra, u: Element) -> Element:
        """u^2 + L(u) + K; zero iff the constraint holds."""
        return ambient.product(u, u) + self.linear_part(u) + self.constant_part(ambient.dim)


def idempotent() -> QuadraticConstraint:
    return QuadraticConstraint("idempotent")


def skew_idempotent() -> QuadraticConstraint:
    return QuadraticConstraint("skew_idempotent")


def nilpotent2() -> QuadraticConstraint:
    return QuadraticConstraint("nilpotent2")


def scaled(gamma) -> QuadraticConstraint:
    return QuadraticConstraint("scaled", gamma=as_scalar(gamma))


def rb_weighted(lam, beta, unit: Element) -> QuadraticConstraint:
    return QuadraticConstraint(
        "rb_weighted", lam=as_scalar(lam), beta=as_scalar(beta), unit=unit
    )


@dataclass(frozen=True)
class AffineSpace:
    """offset + span(directions) inside the ambient coordinate space.

    ``offset`` is None for an empty (inconsistent) solution set.
    """

    ambient_dim: int
    offset: Optional[Element]
    directions: tuple[Element, ...] = ()

    @property
    def is_empty(self) -> bool:
        return self.offset is None

    @property
    def dimension(self) -> int:
        if self.is_empty:
            raise SearchStrategyError("empty affine space has no dimension")
        return len(self.directions)

    def point(self, coefficients: Sequence) -> Element:
        if self.is_empty:
            raise SearchStrategyError("cannot sample from an empty affine space")
        if len(coefficients) != len(self.directions):
            raise SearchStrategyError(
                f"expected {len(self.directions)} coefficients, got {len(coefficients)}"
            )
        acc = self.offset
        for c, d in zip(coefficients, self.directions):
            s = as_scalar(c)
            if s != 0:
                acc = acc + s * d
        return acc


def _left_mul_columns(ambient: Algebra, x: Element) -> list[list[Scalar]]:
    """Columns of u -> x*u as a matrix in the ambient coordinates of u."""
    return [
        list(ambient.product(x, ambient.basis_vector(j)).coords)
        for j in range(ambient.dim)
    ]


def _right_mul_columns(ambient: Algebra, x: Element) -> list[list[Scalar]]:
    """Columns of u -> u*x."""
    return [
        list(ambient.product(ambient.basis_vector(j), x).coords)
        for j in range(ambient.dim)
    ]


def solve_linear(ambient: Algebra, constraints: Sequence[LinearConstraint]) -> AffineSpace:
    """The full affine space of u satisfying every linear constraint."""
    if not constraints:
        raise MalformedPropertyError("at least one linear constraint is required")
    for c in constraints:
        if c.embedding.ambient != ambient:
            raise MalformedPropertyError("constraint embedding does not live in ambient")
    n = ambient.dim
    rows: list[list[Scalar]] = []
    rhs: list[Scalar] = []
    for c in constraints:
        for b in c.embedding.basis:
            if c.kind == "right_identity":
                cols = _left_mul_columns(ambient, b)
                for k in range(n):
                    rows.append([cols[j][k] for j in range(n)])
                    rhs.append(b.coords[k])
            elif c.kind == "right_annihilator":
                cols = _left_mul_columns(ambient, b)
                for k in range(n):
                    rows.append([cols[j][k] for j in range(n)])
                    rhs.append(0)
            elif c.kind == "centralize":
                left = _left_mul_columns(ambient, b)
                right = _right_mul_columns(ambient, b)
                for k in range(n):
                    rows.append(
                        [canonical(left[j][k] - right[j][k]) for j in range(n)]
                    )
                    rhs.append(0)
            else:  # stabilize: residual(u * b) == 0
                cols = _right_mul_columns(ambient, b)
                res_cols = [
                    list(
                        c.embedding.residual(Element(tuple(cols[j]))).coords
                    )
                    for j in range(n)
                ]
                for k in range(n):
                    rows.append([res_cols[j][k] for j in range(n)])
                    rhs.append(0)
    particular, homogeneous = solve_affine(rows, rhs)
    if particular is None:
        return AffineSpace(n, None)
    return AffineSpace(
        n,
        Element(tuple(canonical(v) for v in particular)),
        tuple(Element(tuple(canonical(v) for v in h)) for h in homogeneous),
    )


@dataclass(frozen=True)
class GridStrategy:
    """Substitute each coefficient tuple into the affine parametrization."""

    points: tuple[tuple[Scalar, ...], ...]

    @staticmethod
    def of(points: Sequence[Sequence]) -> "GridStrategy":
        return GridStrategy(tuple(tuple(as_scalar(v) for v in p) for p in points))


@dataclass(frozen=True)
class UnivariateStrategy:
    """Pin all but at most one free direction and solve the quadratic exactly.

    ``pins`` maps direction indices to rational values; the single unpinned
    direction (when there is one) becomes the variable of the quadratic.
    """

    pins: tuple[tuple[int, Scalar], ...]

    @staticmethod
    def of(pins: Mapping[int, object]) -> "UnivariateStrategy":
        return UnivariateStrategy(
            tuple(sorted((int(i), as_scalar(v)) for i, v in pins.items()))
        )


@dataclass(frozen=True)
class SearchResult(Sequence):
    """Elements found, plus human-readable notes (e.g. irrational-root reports)."""

    elements: tuple[Element, ...]
    notes: tuple[str, ...] = ()

    def __len__(self) -> int:
        return len(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    def __iter__(self):
        return iter(self.elements)


def _quadratic_rational_roots(q2: Scalar, q1: Scalar, q0: Scalar):
    """Rational roots of q2 t^2 + q1 t + q0 plus an irrationality note."""
    if q2 == 0:
        if q1 == 0:
            return [], None  # constant; no roots (caller excludes the all-zero poly)
        return [canonical(exact_div(-q0, q1))], None
    disc = canonical(q1 * q1 - 4 * q2 * q0)
    if disc < 0:
        return [], None
    root = rational_sqrt(disc)
    if root is None:
        return [], (
            "the quadratic has real roots but they are irrational; "
            "no rational solutions exist along this line"
        )
    if root == 0:
        return [canonical(exact_div(-q1, 2 * q2))], None
    return [
        canonical(exact_div(-q1 + root, 2 * q2)),
        canonical(exact_div(-q1 - root, 2 * q2)),
    ], None


def find_special(
    ambient: Algebra,
    lin: Sequence[LinearConstraint],
    quad: QuadraticConstraint,
    strategy,
) -> SearchResult:
    """All elements satisfying the linear constraints plus the quadratic one.

    The grid strategy tests each supplied coefficient tuple exactly; the
    univariate strategy solves the single-variable quadratic over Q and
    reports irrational roots existentially instead of fabricating values.
    """
    space = solve_linear(ambient, lin)
    if space.is_empty:
        return SearchResult((), ("the linear constraints are inconsistent",))
    found: list[Element] = []
    notes: list[str] = []

    def consider(u: Element):
        if quad.residual(ambient, u).is_zero() and u not in found:
            found.append(u)

    if isinstance(strategy, GridStrategy):
        for p in strategy.points:
            consider(space.point(p))
    elif isinstance(strategy, UnivariateStrategy):
        pins = dict(strategy.pins)
        free = [i for i in range(len(space.directions)) if i not in pins]
        if len(free) > 1:
            raise SearchStrategyError(
                f"univariate strategy needs <= 1 unpinned direction, got {len(free)}"
            )
        if any(i < 0 or i >= len(space.directions) for i in pins):
            raise SearchStrategyError("pin index out of range")
        base = space.point(
            [pins.get(i, 0) for i in range(len(space.directions))]
        )
        if not free:
            consider(base)
        else:
            d = space.directions[free[0]]
            # residual(base + t d) = Q2 t^2 + Q1 t + Q0 coordinatewise
            q0 = quad.residual(ambient, base)
            q1 = (
                ambient.product(base, d)
                + ambient.product(d, base)
                + quad.linear_part(d)
            )
            q2 = ambient.product(d, d)
            coeff_triples = [
                (q2.coords[k], q1.coords[k], q0.coords[k])
                for k in range(ambient.dim)
            ]
            nonzero = [t for t in coeff_triples if t != (0, 0, 0)]
            if not nonzero:
                raise SearchStrategyError(
                    "every value of the free parameter satisfies the quadratic "
                    "constraint; the solution family is infinite, use the grid strategy"
                )
            roots, note = _quadratic_rational_roots(*nonzero[0])
            if note:
                notes.append(note)
            for t in roots:
                consider(base + t * d)
    else:
        raise SearchStrategyError(f"unknown strategy {strategy!r}")
    return SearchResult(tuple(found), tuple(notes))


def verify_element(
    emb: Embedding,
    u: Element,
    lin: Sequence[LinearConstraint] = (),
    quad: Optional[QuadraticConstraint] = None,
) -> list[tuple[str, Verdict]]:
    """Itemized exact pass/fail of each constraint at a concrete u."""
    ambient = emb.ambient
    results: list[tuple[str, Verdict]] = []
    for c in lin:
        verdict = Verdict.ok()
        for idx, b in enumerate(c.embedding.basis):
            if c.kind == "right_identity":
                lhs, rhs = ambient.product(b, u), b
            elif c.kind == "right_annihilator":
                lhs, rhs = ambient.product(b, u), ambient.zero()
            elif c.kind == "centralize":
                lhs, rhs = ambient.product(b, u), ambient.product(u, b)
            else:  # stabilize
                img = ambient.product(u, b)
                lhs, rhs = c.embedding.residual(img), ambient.zero()
            if lhs != rhs:
                verdict = Verdict.fail(Witness((idx,), (b, u), lhs, rhs))
                break
        results.append((c.kind, verdict))
    if quad is not None:
        res = quad.residual(emb.ambient, u)
        if res.is_zero():
            results.append((quad.label(), Verdict.ok()))
        else:
            usq = emb.ambient.product(u, u)
            target = usq - res
            results.append(
                (quad.label(), Verdict.fail(Witness((), (u,), usq, target)))
            )
    return results
