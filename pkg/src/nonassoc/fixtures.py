"""Catalog of worked matrix examples with expected verdicts.

Each fixture bundles an ambient matrix algebra, a subalgebra basis, a
(possibly parametrized) distinguished element u, the derived algebras built
from the induced operator R(x) = u x, and the expected verdict of every
check.  Running a fixture re-derives everything from scratch and compares
against the expectations, so the catalog doubles as the regression suite
and the documentation spine.

Check labels:

- ``element:KIND`` or ``element:KIND(args)`` - side conditions on u itself
  (right_identity, right_annihilator, centralize, stabilize, idempotent,
  skew_idempotent, nilpotent2, scaled(g), rb_weighted(lam,beta)).
- ``operator[ALG]:PROP`` - an operator identity checked on the named
  algebra (e.g. ``operator[plus]:endomorphism``).
- ``identity[ALG]:NAME`` - a polynomial identity of the named algebra.
- ``custom:NAME(args)`` - structural checks (solution-space dimension,
  null-product detection, the mirrored weight-0 Rota-Baxter reading).

Argument values may reference fixture parameters as ``@name`` so that a
parametric certification can vary them together with u.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Mapping, Optional, Sequence

from .algebra import (
    Algebra,
    Element,
    Embedding,
    element_from_matrix,
    induce_subalgebra,
    matrix_algebra,
    matrix_identity_element,
)
from .constructions import construction, derive, hadamard_algebra
from .errors import GridError, NonassocError, UnknownFixtureError
from .identities import ParamSpec, ParametricVerdict, certify_parametric, check_identity
from .operators import (
    LinearOperator,
    OperatorProperty,
    check_operator_property,
    left_multiplication_operator,
)
from .scalars import Scalar, as_scalar, canonical, exact_div
from .search import (
    LinearConstraint,
    QuadraticConstraint,
    solve_linear,
    verify_element,
)
from .verdicts import Verdict, Witness

_LINEAR_KINDS = {"right_identity", "right_annihilator", "centralize", "stabilize"}
_QUAD_KINDS = {"idempotent", "skew_idempotent", "nilpotent2", "scaled", "rb_weighted"}


@dataclass(frozen=True)
class ExpectedRow:
    check: str
    expect: bool


@dataclass(frozen=True)
class NegativeControl:
    """A documented perturbation that must flip the targeted verdict."""

    perturb: str  # "u+E11" or "R+I"
    target: str   # row label whose verdict must flip


@dataclass(frozen=True)
class FixtureBundle:
    name: str
    description: str
    ambient_n: int
    basis_fn: Callable[[Mapping[str, Scalar]], tuple]
    u_fn: Callable[[Mapping[str, Scalar]], tuple]
    params: tuple[ParamSpec, ...]
    sample_point: dict
    plan: tuple[tuple, ...]
    rows: tuple[ExpectedRow, ...]
    certified_rows: tuple[str, ...]
    negative_control: NegativeControl
    notes: tuple[str, ...] = ()


@dataclass(frozen=True)
class Materialized:
    """A fixture instantiated at a concrete parameter point."""

    bundle: FixtureBundle
    point: dict
    ambient: Algebra
    embedding: Embedding
    u: Element
    operator: LinearOperator
    algebras: dict


@dataclass(frozen=True)
class RowResult:
    check: str
    expected: bool
    verdict: Verdict

    @property
    def matched(self) -> bool:
        return self.verdict.passed == self.expected


@dataclass(frozen=True)
class Report:
    fixture: str
    rows: tuple[RowResult, ...]

    @property
    def passed(self) -> bool:
        return all(r.matched for r in self.rows)


@dataclass(frozen=True)
class NegativeControlResult:
    fixture: str
    perturb: str
    target: str
    original: Verdict
    perturbed: Verdict

    @property
    def flipped(self) -> bool:
        return self.original.passed != self.perturbed.passed


# ---------------------------------------------------------------------------
# Bundle construction helpers
# ---------------------------------------------------------------------------

def _static(matrices) -> Callable:
    fixed = tuple(tuple(tuple(as_scalar(v) for v in row) for row in m) for m in matrices)

    def fn(point):
        return fixed

    return fn


def _static_u(matrix) -> Callable:
    fixed = tuple(tuple(as_scalar(v) for v in row) for row in matrix)

    def fn(point):
        return fixed

    return fn


# Subalgebra of M3 with every row a multiple of a fixed vector v:
# basis e_i puts v in row i.  Right multiplication acts columnwise, so the
# span is a left ideal and any u stabilizes it.
def _row_family_basis(v):
    return [
        [list(v), [0, 0, 0], [0, 0, 0]],
        [[0, 0, 0], list(v), [0, 0, 0]],
        [[0, 0, 0], [0, 0, 0], list(v)],
    ]


_ROW110 = _row_family_basis((1, 1, 0))


def _f1_u(p):
    a, b, c, e, f, g = (p["a"], p["b"], p["c"], p["e"], p["f"], p["g"])
    return (
        (a, b, c),
        (canonical(1 - a), canonical(1 - b), canonical(-c)),
        (e, f, g),
    )


def _f1b_u(p):
    b = p["b"]
    return (
        (1, b, b),
        (0, canonical(1 - b), canonical(-b)),
        (0, canonical(b - 1), b),
    )


def _f6_u(p):
    a, b, c, e, f, g = (p["a"], p["b"], p["c"], p["e"], p["f"], p["g"])
    return (
        (a, b, c),
        (canonical(-a), canonical(-b), canonical(-c)),
        (e, f, g),
    )


def _f7_basis(p):
    # rank-1 matrix (a, b, 1)^T (n, p, q) with b=n=p=1, a=-beta, q=beta-1,
    # which enforces x u = 0 for the companion u below.
    beta = p["beta"]
    a = canonical(-beta)
    q = canonical(beta - 1)
    col = (a, 1, 1)
    row = (1, 1, q)
    return (tuple(tuple(canonical(ci * rj) for rj in row) for ci in col),)


def _f7_u(p):
    beta, lam = p["beta"], p["lam"]
    a = canonical(-beta)
    col = (a, 1, 1)
    row = (1, beta, canonical(lam * beta))
    return tuple(tuple(canonical(ci * rj) for rj in row) for ci in col)


def _f9_u(p):
    x, y = p["x"], p["y"]
    return (
        (canonical(x * y), canonical(-x * x)),
        (canonical(y * y), canonical(-x * y)),
    )


def _f10_u(p):
    x, y = p["x"], p["y"]
    return (
        (x, y),
        (exact_div(-x * x - x, y), canonical(-x - 1)),
    )


def _f11_u(p):
    x, y, lam, beta = p["x"], p["y"], p["lam"], p["beta"]
    return (
        (x, y),
        (exact_div(-x * x - lam * x - beta, y), canonical(-x - lam)),
    )


def _rows(*pairs) -> tuple[ExpectedRow, ...]:
    return tuple(ExpectedRow(check, expect) for check, expect in pairs)


_AXIS8 = tuple(range(8))
_AXIS5 = tuple(range(5))
_AXIS012 = (0, 1, 2)


def _build_catalog() -> dict[str, FixtureBundle]:
    bundles: list[FixtureBundle] = []

    # -- F1: six-parameter right-identity family on the row-span subalgebra.
    bundles.append(FixtureBundle(
        name="F1",
        description="right-identity family on the 3-dim subalgebra with rows "
                    "proportional to (1,1,0); induced operator is multiplicative",
        ambient_n=3,
        basis_fn=_static(_ROW110),
        u_fn=_f1_u,
        params=tuple(
            ParamSpec(n, 2, _AXIS012) for n in ("a", "b", "c", "e", "f", "g")
        ),
        sample_point={"a": 2, "b": 3, "c": 5, "e": 7, "f": 11, "g": 13},
        plan=(("A", "induced"), ("lie", "derive", "A", "lie_endo", None)),
        rows=_rows(
            ("element:right_identity", True),
            ("element:stabilize", True),
            ("identity[A]:associativity", True),
            ("operator[A]:endomorphism", True),
            # generic members of the family are not idempotent; only the
            # u^2 = u slice (fixture F1b) is
            ("operator[A]:idempotent_op", False),
            ("identity[lie]:antisymmetry", True),
            # the bracket has the form psi(y) x - psi(x) y for a linear
            # functional psi, which satisfies the Jacobi identity for any
            # operator, idempotent or not
            ("identity[lie]:jacobi", True),
            ("custom:null_product(lie)", False),
            ("custom:lin_dim(right_identity+stabilize,6)", True),
        ),
        certified_rows=(
            "element:right_identity",
            "element:stabilize",
            "operator[A]:endomorphism",
            "identity[lie]:antisymmetry",
            "identity[lie]:jacobi",
        ),
        negative_control=NegativeControl("R+I", "operator[A]:endomorphism"),
    ))

    # -- F1b: the idempotent one-parameter slice; the derived bracket is Lie.
    bundles.append(FixtureBundle(
        name="F1b",
        description="idempotent right-identity slice u(b); operator is a "
                    "multiplicative projection and both derived brackets are Lie",
        ambient_n=3,
        basis_fn=_static(_ROW110),
        u_fn=_f1b_u,
        params=(ParamSpec("b", 2, _AXIS8),),
        sample_point={"b": 2},
        plan=(
            ("A", "induced"),
            ("lie", "derive", "A", "lie_endo", None),
            ("lie_alt", "derive", "A", "lie_endo_alt", None),
        ),
        rows=_rows(
            ("element:right_identity", True),
            ("element:stabilize", True),
            ("element:idempotent", True),
            ("operator[A]:endomorphism", True),
            ("operator[A]:idempotent_op", True),
            ("identity[lie]:antisymmetry", True),
            ("identity[lie]:jacobi", True),
            ("identity[lie_alt]:antisymmetry", True),
            ("identity[lie_alt]:jacobi", True),
            ("custom:null_product(lie)", False),
            ("custom:null_product(lie_alt)", False),
        ),
        certified_rows=(
            "element:right_identity",
            "element:stabilize",
            "element:idempotent",
            "operator[A]:endomorphism",
            "operator[A]:idempotent_op",
            "identity[lie]:antisymmetry",
            "identity[lie]:jacobi",
            "identity[lie_alt]:antisymmetry",
            "identity[lie_alt]:jacobi",
        ),
        negative_control=NegativeControl("R+I", "operator[A]:endomorphism"),
    ))

    # -- F2: involutive right identity (a permutation) on a 6-dim subalgebra.
    bundles.append(FixtureBundle(
        name="F2",
        description="permutation right identity with u^2 = I on the 6-dim "
                    "subalgebra with equal second and third columns",
        ambient_n=3,
        basis_fn=_static([
            [[1, 0, 0], [0, 0, 0], [0, 0, 0]],   # x
            [[0, 1, 1], [0, 0, 0], [0, 0, 0]],   # y
            [[0, 0, 0], [1, 0, 0], [0, 0, 0]],   # w
            [[0, 0, 0], [0, 1, 1], [0, 0, 0]],   # k
            [[0, 0, 0], [0, 0, 0], [1, 0, 0]],   # m
            [[0, 0, 0], [0, 0, 0], [0, 1, 1]],   # n
        ]),
        u_fn=_static_u([[1, 0, 0], [0, 0, 1], [0, 1, 0]]),
        params=(),
        sample_point={},
        plan=(("A", "induced"), ("lie", "derive", "A", "lie_endo", None)),
        rows=_rows(
            ("element:right_identity", True),
            ("element:stabilize", True),
            ("element:rb_weighted(0,-1)", True),   # u^2 = I
            ("operator[A]:endomorphism", True),
            ("operator[A]:involution_op", True),
            ("operator[A]:idempotent_op", False),
            # the involution also happens to yield a Lie bracket here, even
            # though R^2 = R fails; recorded as a known answer
            ("identity[lie]:jacobi", True),
            ("custom:null_product(lie)", False),
        ),
        certified_rows=(),
        negative_control=NegativeControl("R+I", "operator[A]:involution_op"),
    ))

    # -- F3: rank-one idempotent right identity; symmetrized product is Jordan.
    _ROW1M11 = _row_family_basis((1, -1, 1))
    bundles.append(FixtureBundle(
        name="F3",
        description="idempotent right identity on the subalgebra with rows "
                    "proportional to (1,-1,1); the symmetrized product and both "
                    "operator-twisted products are Jordan",
        ambient_n=3,
        basis_fn=_static(_ROW1M11),
        u_fn=_static_u([[1, -1, 1], [1, -1, 1], [1, -1, 1]]),
        params=(),
        sample_point={},
        plan=(
            ("A", "induced"),
            ("plus", "derive", "A", "jordan_plus", None),
            ("jordan1", "derive", "plus", "jordan_endo_both", None),
            ("jordan2", "derive", "jordan1", "jordan_endo_left", None),
        ),
        rows=_rows(
            ("element:idempotent", True),
            ("element:right_identity", True),
            ("element:stabilize", True),
            ("identity[A]:associativity", True),
            ("identity[plus]:commutativity", True),
            ("identity[plus]:associativity", False),
            ("operator[A]:endomorphism", True),
            ("operator[plus]:endomorphism", True),
            ("operator[plus]:idempotent_op", True),
            ("identity[plus]:jordan_main", True),
            ("identity[plus]:jordan_flex", True),
            ("identity[jordan1]:jordan_main", True),
            ("identity[jordan1]:jordan_flex", True),
            ("identity[jordan2]:jordan_main", True),
            ("identity[jordan2]:jordan_flex", True),
            ("custom:null_product(plus)", False),
            ("custom:null_product(jordan1)", False),
            ("custom:null_product(jordan2)", False),
        ),
        certified_rows=(),
        negative_control=NegativeControl("u+E11", "element:idempotent"),
    ))

    # -- F3b: the F1b slice, symmetrized; operator-squared product is Jordan.
    bundles.append(FixtureBundle(
        name="F3b",
        description="symmetrized product on the (1,1,0) row subalgebra with the "
                    "u(b) operator; x o y = R(x) R(y) under the symmetrized "
                    "product satisfies both Jordan identities",
        ambient_n=3,
        basis_fn=_static(_ROW110),
        u_fn=_f1b_u,
        params=(ParamSpec("b", 2, (0, 1, 2, 3)),),
        sample_point={"b": 2},
        plan=(
            ("A", "induced"),
            ("plus", "derive", "A", "jordan_plus", None),
            ("jordan1", "derive", "plus", "jordan_endo_both", None),
        ),
        rows=_rows(
            ("identity[plus]:commutativity", True),
            ("identity[plus]:jordan_main", True),
            ("identity[plus]:jordan_flex", True),
            ("operator[plus]:endomorphism", True),
            ("operator[plus]:idempotent_op", True),
            ("identity[jordan1]:jordan_main", True),
            ("identity[jordan1]:jordan_flex", True),
            ("custom:null_product(jordan1)", False),
        ),
        certified_rows=(
            "identity[plus]:jordan_main",
            "operator[plus]:endomorphism",
            "operator[plus]:idempotent_op",
            "identity[jordan1]:jordan_main",
            "identity[jordan1]:jordan_flex",
        ),
        negative_control=NegativeControl("R+I", "operator[plus]:endomorphism"),
    ))

    # -- F4: idempotent right identity; twisted brackets are left Leibniz.
    _ROWM111 = _row_family_basis((-1, 1, 1))
    bundles.append(FixtureBundle(
        name="F4",
        description="idempotent right identity on the subalgebra with rows "
                    "proportional to (-1,1,1); both twisted brackets satisfy "
                    "the left Leibniz identity",
        ambient_n=3,
        basis_fn=_static(_ROWM111),
        u_fn=_static_u([[-1, 1, 1], [-1, 1, 1], [-1, 1, 1]]),
        params=(),
        sample_point={},
        plan=(
            ("A", "induced"),
            ("leib", "derive", "A", "leibniz_endo", None),
            ("leibc", "derive", "A", "leibniz_comm", None),
        ),
        rows=_rows(
            ("element:idempotent", True),
            ("element:right_identity", True),
            ("element:stabilize", True),
            ("operator[A]:endomorphism", True),
            ("operator[A]:idempotent_op", True),
            # this R makes R(x) y - R(y) R(x) vanish identically, so the
            # bracket is Leibniz (and antisymmetric) vacuously
            ("identity[leib]:left_leibniz", True),
            ("identity[leib]:antisymmetry", True),
            ("custom:null_product(leib)", True),
            # the commutator-style bracket R(x) y - y R(x) is nonzero and is
            # where the Leibniz content lives; it is not antisymmetric
            ("identity[leibc]:left_leibniz", True),
            ("identity[leibc]:antisymmetry", False),
            ("custom:null_product(leibc)", False),
        ),
        certified_rows=(),
        negative_control=NegativeControl("u+E11", "element:idempotent"),
        notes=(
            "with this operator the bracket R(x) y - R(y) R(x) is identically "
            "zero, so its Leibniz rows pass vacuously; the commutator-style "
            "bracket carries the non-vacuous Leibniz structure",
        ),
    ))

    # -- F5: entrywise-product plane; usual-product projection u induces a
    #        multiplicative idempotent operator and a pre-Lie product.
    bundles.append(FixtureBundle(
        name="F5",
        description="first-column plane under the entrywise product with the "
                    "operator induced (via the usual product) by the idempotent "
                    "diag(1,0); the twisted products are left pre-Lie",
        ambient_n=2,
        basis_fn=_static([
            [[1, 0], [0, 0]],
            [[0, 0], [1, 0]],
        ]),
        u_fn=_static_u([[1, 0], [0, 0]]),
        params=(),
        sample_point={},
        plan=(
            ("A", "hadamard", 2, 1),
            ("prelie", "derive", "A", "prelie_endo", None),
            ("prelie_alt", "derive", "A", "prelie_endo_alt", None),
        ),
        rows=_rows(
            ("element:idempotent", True),
            ("element:right_identity", True),
            ("element:stabilize", True),
            ("identity[A]:commutativity", True),
            ("identity[A]:associativity", True),
            ("operator[A]:endomorphism", True),
            ("operator[A]:idempotent_op", True),
            ("identity[prelie]:left_prelie", True),
            ("identity[prelie_alt]:left_prelie", True),
            ("custom:null_product(A)", False),
            ("custom:null_product(prelie)", True),
            ("custom:null_product(prelie_alt)", True),
        ),
        certified_rows=(),
        negative_control=NegativeControl("R+I", "operator[A]:endomorphism"),
        notes=(
            "the element conditions use the usual matrix product of the ambient, "
            "while the operator and identity rows use the entrywise product",
            "both twisted products vanish identically on this plane (R(x) and x "
            "agree in the surviving entry), so the pre-Lie rows pass vacuously "
            "and the operator rows carry the content",
        ),
    ))

    # -- F6: right-annihilator family; the induced operator is a derivation.
    bundles.append(FixtureBundle(
        name="F6",
        description="six-parameter right-annihilator family on the (1,1,0) row "
                    "subalgebra; left multiplication by u satisfies the Leibniz "
                    "product rule",
        ambient_n=3,
        basis_fn=_static(_ROW110),
        u_fn=_f6_u,
        params=tuple(
            ParamSpec(n, 2, _AXIS012) for n in ("a", "b", "c", "e", "f", "g")
        ),
        sample_point={"a": 2, "b": 3, "c": 5, "e": 7, "f": 11, "g": 13},
        plan=(("A", "induced"),),
        rows=_rows(
            ("element:right_annihilator", True),
            ("element:stabilize", True),
            ("operator[A]:derivation", True),
            ("operator[A]:endomorphism", False),
            ("custom:null_product(A)", False),
            ("custom:lin_dim(right_annihilator+stabilize,6)", True),
        ),
        certified_rows=(
            "element:right_annihilator",
            "element:stabilize",
            "operator[A]:derivation",
        ),
        negative_control=NegativeControl("u+E11", "element:right_annihilator"),
    ))

    # -- F7: rank-one line annihilated from the right; null product, scaled
    #        operator.  The quadratic and operator rows are the informative
    #        ones; the derived pre-Lie product is vacuously pre-Lie.
    bundles.append(FixtureBundle(
        name="F7",
        description="one-dimensional rank-one subalgebra with x u = 0; the "
                    "subalgebra product vanishes identically and u acts as the "
                    "scalar lam*beta, so R^2 = (lam*beta) R",
        ambient_n=3,
        basis_fn=_f7_basis,
        u_fn=_f7_u,
        params=(
            ParamSpec("beta", 8, tuple(range(9))),
            ParamSpec("lam", 3, (0, 1, 2, 3)),
        ),
        sample_point={"beta": 2, "lam": 3},
        plan=(
            ("A", "induced"),
            ("prelie", "derive", "A", "prelie_diff", None),
        ),
        rows=_rows(
            ("element:right_annihilator", True),
            ("element:stabilize", True),
            ("element:scaled(6)", True),            # gamma = lam*beta at the sample point
            ("operator[A]:derivation", True),
            ("operator[A]:scaled_idempotent_op(6)", True),
            ("operator[A]:scaled_involution_op(36)", True),
            ("custom:null_product(A)", True),
            ("identity[A]:associativity", True),
            ("identity[A]:commutativity", True),
            ("identity[prelie]:left_prelie", True),
        ),
        certified_rows=(
            "element:right_annihilator",
            "element:stabilize",
            "operator[A]:derivation",
        ),
        negative_control=NegativeControl("u+E11", "element:scaled(6)"),
        notes=(
            "the subalgebra product is identically zero, so every identity row "
            "passes vacuously; the element and operator rows carry the content, "
            "and the negative control targets them",
        ),
    ))

    # -- F8: central idempotent; averaging operator, flexible twisted product.
    bundles.append(FixtureBundle(
        name="F8",
        description="central idempotent diag(1,1,0) inside a commutative 3-dim "
                    "subalgebra; the induced operator is left averaging and "
                    "multiplicative, and x o y = R(x y) is flexible",
        ambient_n=3,
        basis_fn=_static([
            [[1, 0, 0], [0, 1, 0], [0, 0, 0]],
            [[0, 1, 0], [0, 0, 0], [0, 0, 0]],
            [[0, 0, 0], [0, 0, 0], [0, 0, 1]],
        ]),
        u_fn=_static_u([[1, 0, 0], [0, 1, 0], [0, 0, 0]]),
        params=(),
        sample_point={},
        plan=(
            ("A", "induced"),
            ("flex", "derive", "A", "flexible_avg", None),
            ("lie", "derive", "A", "lie_endo", None),
        ),
        rows=_rows(
            ("element:idempotent", True),
            ("element:centralize", True),
            ("element:stabilize", True),
            ("operator[A]:left_averaging", True),
            ("operator[A]:endomorphism", True),
            ("operator[A]:idempotent_op", True),
            ("identity[A]:associativity", True),
            ("identity[A]:commutativity", True),
            ("identity[A]:flexible", True),
            ("identity[flex]:flexible", True),
            ("custom:null_product(flex)", False),
            # commutativity of A makes x R(y) - y R(x) vanish identically,
            # so the bracket rows hold vacuously; the averaged product is
            # the non-vacuous part
            ("identity[lie]:antisymmetry", True),
            ("identity[lie]:jacobi", True),
            ("identity[lie]:flexible", True),
            ("custom:null_product(lie)", True),
        ),
        certified_rows=(),
        negative_control=NegativeControl("u+E11", "element:idempotent"),
        notes=(
            "the subalgebra is commutative and u is central, so the derived "
            "bracket vanishes identically; x o y = R(x y) is the nonzero "
            "derived product",
        ),
    ))

    # -- F9: square-zero u on the zero-first-column plane; weight-0
    #        Rota-Baxter operator.  Both readings of the weight-0 identity
    #        (x R(y) versus y R(x) inside R) hold on this family because
    #        det u = 0 makes R kill the difference.
    _COLUMN_PLANE = [
        [[0, 1], [0, 0]],
        [[0, 0], [0, 1]],
    ]
    bundles.append(FixtureBundle(
        name="F9",
        description="rank-one square-zero family u(x,y) acting on the plane of "
                    "matrices with zero first column; the induced operator is "
                    "Rota-Baxter of weight 0 under both argument orders",
        ambient_n=2,
        basis_fn=_static(_COLUMN_PLANE),
        u_fn=_f9_u,
        params=(
            ParamSpec("x", 4, _AXIS5),
            ParamSpec("y", 4, _AXIS5),
        ),
        sample_point={"x": 1, "y": 1},
        plan=(("A", "induced"),),
        rows=_rows(
            ("element:nilpotent2", True),
            ("element:stabilize", True),
            ("operator[A]:rota_baxter(0)", True),
            ("custom:rota_baxter0_mirrored(A)", True),
            ("custom:null_product(A)", False),
        ),
        certified_rows=(
            "element:nilpotent2",
            "element:stabilize",
            "operator[A]:rota_baxter(0)",
            "custom:rota_baxter0_mirrored(A)",
        ),
        negative_control=NegativeControl("R+I", "operator[A]:rota_baxter(0)"),
    ))

    # -- F10: skew-idempotent family; weight-1 Rota-Baxter operator.
    bundles.append(FixtureBundle(
        name="F10",
        description="skew-idempotent family u(x,y) (u^2 = -u, y nonzero) acting "
                    "on the zero-first-column plane; the induced operator is "
                    "Rota-Baxter of weight 1",
        ambient_n=2,
        basis_fn=_static(_COLUMN_PLANE),
        u_fn=_f10_u,
        params=(
            ParamSpec("x", 4, _AXIS5),
            ParamSpec("y", 4, (1, 2, 3, 4, 5), exclude=(0,)),
        ),
        sample_point={"x": 0, "y": 1},
        plan=(("A", "induced"),),
        rows=_rows(
            ("element:skew_idempotent", True),
            ("element:stabilize", True),
            ("operator[A]:rota_baxter(1)", True),
            ("custom:null_product(A)", False),
        ),
        certified_rows=(
            "element:skew_idempotent",
            "element:stabilize",
            "operator[A]:rota_baxter(1)",
        ),
        negative_control=NegativeControl("R+I", "operator[A]:rota_baxter(1)"),
    ))

    # -- F11: trace -lam, determinant beta family; weighted Rota-Baxter.
    bundles.append(FixtureBundle(
        name="F11",
        description="family u(x,y,lam,beta) with u^2 = -lam u - beta I (y "
                    "nonzero) acting on the zero-first-column plane; the induced "
                    "operator satisfies the weight-(lam,beta) Rota-Baxter identity",
        ambient_n=2,
        basis_fn=_static(_COLUMN_PLANE),
        u_fn=_f11_u,
        params=(
            ParamSpec("x", 4, _AXIS5),
            ParamSpec("y", 4, (1, 2, 3, 4, 5), exclude=(0,)),
            ParamSpec("lam", 3, (0, 1, 2, 3)),
            ParamSpec("beta", 3, (0, 1, 2, 3)),
        ),
        sample_point={"x": 0, "y": 1, "lam": 1, "beta": 2},
        plan=(("A", "induced"),),
        rows=_rows(
            ("element:rb_weighted(@lam,@beta)", True),
            ("element:stabilize", True),
            ("operator[A]:rota_baxter_weighted(@lam,@beta)", True),
            ("custom:null_product(A)", False),
        ),
        certified_rows=(
            "element:rb_weighted(@lam,@beta)",
            "element:stabilize",
            "operator[A]:rota_baxter_weighted(@lam,@beta)",
        ),
        negative_control=NegativeControl(
            "R+I", "operator[A]:rota_baxter_weighted(@lam,@beta)"
        ),
    ))

    order = ["F1", "F1b", "F2", "F3", "F3b", "F4", "F5",
             "F6", "F7", "F8", "F9", "F10", "F11"]
    by_name = {b.name: b for b in bundles}
    return {name: by_name[name] for name in order}


_CATALOG: dict[str, FixtureBundle] = _build_catalog()


def list_fixtures() -> list[str]:
    """The fixture names, in catalog order (stable across runs)."""
    return list(_CATALOG)


def load_fixture(name: str) -> FixtureBundle:
    try:
        return _CATALOG[name]
    except KeyError:
        raise UnknownFixtureError(f"unknown fixture {name!r}") from None


# ---------------------------------------------------------------------------
# Materialization
# ---------------------------------------------------------------------------

_AMBIENT_CACHE: dict[int, Algebra] = {}
_EMB_CACHE: dict = {}


def _ambient(n: int) -> Algebra:
    if n not in _AMBIENT_CACHE:
        _AMBIENT_CACHE[n] = matrix_algebra(n)
    return _AMBIENT_CACHE[n]


def materialize(bundle: FixtureBundle, point: Optional[Mapping] = None) -> Materialized:
    pt = dict(bundle.sample_point)
    if point:
        for k, v in point.items():
            if k not in pt:
                raise NonassocError(f"fixture {bundle.name} has no parameter {k!r}")
            pt[k] = as_scalar(v)
    for p in bundle.params:
        if pt[p.name] in p.exclude:
            raise GridError(
                f"parameter {p.name} = {pt[p.name]} is excluded for fixture {bundle.name}"
            )
    ambient = _ambient(bundle.ambient_n)
    basis_matrices = bundle.basis_fn(pt)
    basis = tuple(element_from_matrix(m) for m in basis_matrices)
    cache_key = (bundle.name, basis)
    if cache_key in _EMB_CACHE:
        induced, emb = _EMB_CACHE[cache_key]
    else:
        induced, emb = induce_subalgebra(ambient, basis)
        _EMB_CACHE[cache_key] = (induced, emb)
    u = element_from_matrix(bundle.u_fn(pt))
    operator = left_multiplication_operator(emb, u)
    algebras = _apply_plan(bundle.plan, induced, operator)
    return Materialized(bundle, pt, ambient, emb, u, operator, algebras)


def _apply_plan(plan, induced: Algebra, operator: LinearOperator) -> dict:
    algebras: dict[str, Algebra] = {}
    for step in plan:
        if step[0] == "A":
            if step[1] == "induced":
                algebras["A"] = induced
            elif step[1] == "hadamard":
                algebras["A"] = hadamard_algebra(step[2], step[3])
            else:
                raise NonassocError(f"unknown base algebra step {step!r}")
        else:
            name, verb, source, cons_name, a = step
            if verb != "derive":
                raise NonassocError(f"unknown plan step {step!r}")
            algebras[name] = derive(algebras[source], operator, construction(cons_name, a))
    return algebras


# ---------------------------------------------------------------------------
# Row evaluation
# ---------------------------------------------------------------------------

_LABEL_RE = re.compile(
    r"^(element|operator|identity|custom)(?:\[([^\]]+)\])?:([a-z0-9_]+)(?:\(([^)]*)\))?$"
)


def _resolve_args(raw: Optional[str], point: Mapping) -> list:
    if not raw:
        return []
    out = []
    for piece in raw.split(","):
        piece = piece.strip()
        if piece.startswith("@"):
            name = piece[1:]
            if name not in point:
                raise NonassocError(f"label references unknown parameter {name!r}")
            out.append(point[name])
        else:
            out.append(piece)
    return out


def _operator_property_from_label(kind: str, args: list) -> OperatorProperty:
    scalars = [as_scalar(a) for a in args]
    if kind in ("endomorphism", "idempotent_op", "involution_op",
                "derivation", "left_averaging"):
        if scalars:
            raise NonassocError(f"{kind} takes no arguments")
        return OperatorProperty(kind)
    if kind in ("scaled_idempotent_op", "scaled_involution_op"):
        (alpha,) = scalars
        return OperatorProperty(kind, alpha=alpha)
    if kind == "rota_baxter":
        (lam,) = scalars
        return OperatorProperty(kind, lam=lam)
    if kind == "rota_baxter_weighted":
        lam, beta = scalars
        return OperatorProperty(kind, lam=lam, beta=beta)
    raise NonassocError(f"unknown operator property {kind!r}")


def _quad_from_label(kind: str, args: list, ambient_n: int) -> QuadraticConstraint:
    scalars = [as_scalar(a) for a in args]
    if kind in ("idempotent", "skew_idempotent", "nilpotent2"):
        if scalars:
            raise NonassocError(f"{kind} takes no arguments")
        return QuadraticConstraint(kind)
    if kind == "scaled":
        (gamma,) = scalars
        return QuadraticConstraint(kind, gamma=gamma)
    if kind == "rb_weighted":
        lam, beta = scalars
        return QuadraticConstraint(
            kind, lam=lam, beta=beta, unit=matrix_identity_element(ambient_n)
        )
    raise NonassocError(f"unknown quadratic constraint {kind!r}")


def _custom_lin_dim(m: Materialized, args: list) -> Verdict:
    kinds_raw, expected_raw = args
    kinds = str(kinds_raw).split("+")
    constraints = [LinearConstraint(k, m.embedding) for k in kinds]
    space = solve_linear(m.ambient, constraints)
    actual = -1 if space.is_empty else space.dimension
    expected = int(str(expected_raw))
    if actual == expected:
        return Verdict.ok()
    return Verdict.fail(Witness((), (), actual, expected))


def _custom_null_product(m: Materialized, args: list) -> Verdict:
    (alg_name,) = args
    a = m.algebras[str(alg_name)]
    for i in range(a.dim):
        for j in range(a.dim):
            prod = a.basis_product(i, j)
            if not prod.is_zero():
                return Verdict.fail(
                    Witness((i, j), (a.basis_vector(i), a.basis_vector(j)),
                            prod, a.zero())
                )
    return Verdict.ok()


def _custom_rb0_mirrored(m: Materialized, args: list) -> Verdict:
    """R(R(x) y + y R(x)) == R(x) R(y) on basis pairs (mirrored second term)."""
    (alg_name,) = args
    a = m.algebras[str(alg_name)]
    r = m.operator
    for i in range(a.dim):
        x = a.basis_vector(i)
        rx = r.apply(x)
        for j in range(a.dim):
            y = a.basis_vector(j)
            lhs = r.apply(a.product(rx, y) + a.product(y, rx))
            rhs = a.product(rx, r.apply(y))
            if lhs != rhs:
                return Verdict.fail(Witness((i, j), (x, y), lhs, rhs))
    return Verdict.ok()


_CUSTOM_CHECKS = {
    "lin_dim": _custom_lin_dim,
    "null_product": _custom_null_product,
    "rota_baxter0_mirrored": _custom_rb0_mirrored,
}


def run_row(m: Materialized, label: str, operator: Optional[LinearOperator] = None,
            u: Optional[Element] = None) -> Verdict:
    """Evaluate one check label against a materialized fixture.

    ``operator``/``u`` override the fixture's own (used by negative controls).
    """
    match = _LABEL_RE.match(label)
    if not match:
        raise NonassocError(f"malformed check label {label!r}")
    family, alg_name, kind, raw_args = match.groups()
    args = _resolve_args(raw_args, m.point)
    op = operator if operator is not None else m.operator
    uu = u if u is not None else m.u
    if family == "element":
        if kind in _LINEAR_KINDS:
            results = verify_element(
                m.embedding, uu, [LinearConstraint(kind, m.embedding)], None
            )
        elif kind in _QUAD_KINDS:
            quad = _quad_from_label(kind, args, m.bundle.ambient_n)
            results = verify_element(m.embedding, uu, [], quad)
        else:
            raise NonassocError(f"unknown element constraint {kind!r}")
        return results[0][1]
    if family == "operator":
        prop = _operator_property_from_label(kind, args)
        return check_operator_property(m.algebras[alg_name], op, prop)
    if family == "identity":
        if args:
            raise NonassocError("identity rows take no arguments")
        return check_identity(m.algebras[alg_name], kind)
    if family == "custom":
        if kind not in _CUSTOM_CHECKS:
            raise NonassocError(f"unknown custom check {kind!r}")
        return _CUSTOM_CHECKS[kind](m, args)
    raise NonassocError(f"unknown check family {family!r}")


def verify_fixture(
    name: str,
    expectations: Optional[Sequence[ExpectedRow]] = None,
    point: Optional[Mapping] = None,
) -> Report:
    """Run every expected-verdict row of a fixture; mismatches are reported, not thrown."""
    bundle = load_fixture(name)
    m = materialize(bundle, point)
    rows = tuple(expectations) if expectations is not None else bundle.rows
    results = tuple(RowResult(r.check, r.expect, run_row(m, r.check)) for r in rows)
    return Report(name, results)


# ---------------------------------------------------------------------------
# Parametric certification and negative controls
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class _BundleFamily:
    bundle: FixtureBundle

    @property
    def params(self):
        return self.bundle.params

    def instantiate(self, point: Mapping) -> Materialized:
        return materialize(self.bundle, point)


def fixture_family(name: str) -> _BundleFamily:
    return _BundleFamily(load_fixture(name))


def certify_row(
    name: str,
    label: str,
    axes: Optional[Mapping[str, Sequence[Scalar]]] = None,
) -> ParametricVerdict:
    """Certify one fixture row over the (default or given) parameter grid.

    A pass certifies the row for all rational parameter values away from
    the excluded ones, by polynomial identity testing against the declared
    degree bounds.
    """
    bundle = load_fixture(name)
    if label not in {r.check for r in bundle.rows}:
        raise NonassocError(f"fixture {name} has no row {label!r}")
    family = _BundleFamily(bundle)
    return certify_parametric(family, lambda m: run_row(m, label), axes)


def check_negative_control(name: str) -> NegativeControlResult:
    """Apply the fixture's documented perturbation; the target verdict must flip."""
    bundle = load_fixture(name)
    m = materialize(bundle)
    original = run_row(m, bundle.negative_control.target)
    perturb = bundle.negative_control.perturb
    if perturb == "R+I":
        perturbed_op = m.operator + LinearOperator.identity(m.operator.dim)
        perturbed = run_row(m, bundle.negative_control.target, operator=perturbed_op)
    elif perturb == "u+E11":
        bumped = m.u + m.ambient.basis_vector(0)  # ambient E11 is basis index 0
        target = bundle.negative_control.target
        if target.startswith("element:"):
            perturbed = run_row(m, target, u=bumped)
        else:
            perturbed_op = left_multiplication_operator(m.embedding, bumped)
            perturbed = run_row(m, target, operator=perturbed_op, u=bumped)
    else:
        raise NonassocError(f"unknown perturbation {perturb!r}")
    return NegativeControlResult(
        name, perturb, bundle.negative_control.target, original, perturbed
    )
