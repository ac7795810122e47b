"""Exact verification of polynomial identities for bilinear products.

A named identity is a formal equation between sums of product words in a
few variables, homogeneous of known degree in each variable.  Identities
that are multilinear (degree 1 in every variable) vanish identically iff
they vanish on basis tuples.  For the others we polarize: each variable of
degree d is split into d fresh slots and the symmetrized multilinear
component is checked on basis tuples.  Over a field of characteristic 0
(here Q) the original identity holds for all elements iff the polarized
multilinear form vanishes on all basis tuples, so basis-tuple checking is a
proof, not a sample.

Words are nested pairs over slot numbers; evaluation works on sparse
coordinate dictionaries with memoization of shared subtrees, which keeps
the n^4 enumeration for the degree-(3,1) identity cheap even at dim 16.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Callable, Mapping, Optional, Sequence

from .algebra import Algebra, Element
from .errors import GridError, NonassocError
from .scalars import Scalar, canonical, format_scalar
from .verdicts import Verdict, Witness

# A word is a slot index (leaf) or a pair (left, right).
Word = object
SignedWord = tuple[int, Word]


@dataclass(frozen=True)
class Identity:
    """A formal identity lhs == rhs with declared multidegree per variable."""

    name: str
    variables: tuple[str, ...]
    multidegree: tuple[int, ...]
    lhs: tuple[SignedWord, ...]
    rhs: tuple[SignedWord, ...]


def _word_var_counts(word: Word, arity: int) -> list[int]:
    counts = [0] * arity
    stack = [word]
    while stack:
        w = stack.pop()
        if isinstance(w, int):
            counts[w] += 1
        else:
            stack.extend(w)
    return counts


# Variable slots in each identity's words are numbered by position in
# ``variables``; e.g. for ("x", "y", "z"): x=0, y=1, z=2.
IDENTITIES: dict[str, Identity] = {}


def _register(name, variables, multidegree, lhs, rhs):
    ident = Identity(name, variables, multidegree, tuple(lhs), tuple(rhs))
    arity = len(variables)
    for sign, word in ident.lhs + ident.rhs:
        if _word_var_counts(word, arity) != list(multidegree):
            raise AssertionError(f"identity {name} is not homogeneous")
    IDENTITIES[name] = ident


_register(
    "antisymmetry", ("x", "y"), (1, 1),
    lhs=[(1, (0, 1))],
    rhs=[(-1, (1, 0))],
)
_register(
    "commutativity", ("x", "y"), (1, 1),
    lhs=[(1, (0, 1))],
    rhs=[(1, (1, 0))],
)
_register(
    "associativity", ("x", "y", "z"), (1, 1, 1),
    lhs=[(1, ((0, 1), 2))],
    rhs=[(1, (0, (1, 2)))],
)
_register(
    "jacobi", ("x", "y", "z"), (1, 1, 1),
    lhs=[(1, (0, (1, 2))), (1, (2, (0, 1))), (1, (1, (2, 0)))],
    rhs=[],
)
_register(
    "left_leibniz", ("x", "y", "z"), (1, 1, 1),
    lhs=[(1, (0, (1, 2)))],
    rhs=[(1, ((0, 1), 2)), (1, (1, (0, 2)))],
)
_register(
    "left_prelie", ("x", "y", "z"), (1, 1, 1),
    lhs=[(1, ((0, 1), 2)), (-1, (0, (1, 2)))],
    rhs=[(1, ((1, 0), 2)), (-1, (1, (0, 2)))],
)
_register(
    "novikov_right_comm", ("x", "y", "z"), (1, 1, 1),
    lhs=[(1, ((0, 1), 2))],
    rhs=[(1, ((0, 2), 1))],
)
_register(
    "flexible", ("x", "y"), (2, 1),
    lhs=[(1, ((0, 1), 0))],
    rhs=[(1, (0, (1, 0)))],
)
# The flexibility half of the two Jordan identities; same formal identity
# as "flexible" but catalogued separately so reports can name both halves.
_register(
    "jordan_flex", ("x", "y"), (2, 1),
    lhs=[(1, ((0, 1), 0))],
    rhs=[(1, (0, (1, 0)))],
)
_register(
    "jordan_main", ("x", "y"), (3, 1),
    lhs=[(1, (((0, 0), 1), 0))],
    rhs=[(1, ((0, 0), (1, 0)))],
)

IDENTITY_NAMES: tuple[str, ...] = tuple(IDENTITIES)


def get_identity(name: str) -> Identity:
    try:
        return IDENTITIES[name]
    except KeyError:
        raise NonassocError(f"unknown identity {name!r}") from None


# ---------------------------------------------------------------------------
# Polarization
# ---------------------------------------------------------------------------

def _substitute(word: Word, slot_for_occurrence: dict[int, list[int]], counters: list[int]) -> Word:
    if isinstance(word, int):
        occ = counters[word]
        counters[word] += 1
        return slot_for_occurrence[word][occ]
    return (
        _substitute(word[0], slot_for_occurrence, counters),
        _substitute(word[1], slot_for_occurrence, counters),
    )


@dataclass(frozen=True)
class PolarizedPlan:
    """Multilinear reduction of an identity.

    ``slots`` is the expanded arity; ``groups`` lists the slot ranges that
    came from one original variable (the polarized form is symmetric in
    each group, so enumeration may be restricted to non-decreasing indices
    within a group without losing witnesses).  ``var_of_slot`` maps each
    slot back to its original variable.
    """

    identity: Identity
    slots: int
    lhs: tuple[SignedWord, ...]
    rhs: tuple[SignedWord, ...]
    groups: tuple[tuple[int, ...], ...]
    var_of_slot: tuple[int, ...]


def _polarize_words(words, multidegree, offsets) -> list[SignedWord]:
    out: list[SignedWord] = []
    arity = len(multidegree)
    for sign, word in words:
        perm_choices = [
            list(itertools.permutations(range(d))) if d > 1 else [tuple(range(d))]
            for d in multidegree
        ]
        for combo in itertools.product(*perm_choices):
            slot_map = {
                v: [offsets[v] + combo[v][o] for o in range(multidegree[v])]
                for v in range(arity)
            }
            counters = [0] * arity
            out.append((sign, _substitute(word, slot_map, counters)))
    return out


_PLAN_CACHE: dict[str, PolarizedPlan] = {}


def polarized_plan(name: str) -> PolarizedPlan:
    if name in _PLAN_CACHE:
        return _PLAN_CACHE[name]
    ident = get_identity(name)
    offsets = []
    total = 0
    for d in ident.multidegree:
        offsets.append(total)
        total += d
    groups = tuple(
        tuple(range(offsets[v], offsets[v] + d))
        for v, d in enumerate(ident.multidegree)
        if d > 1
    )
    var_of_slot = tuple(
        v for v, d in enumerate(ident.multidegree) for _ in range(d)
    )
    plan = PolarizedPlan(
        ident,
        total,
        tuple(_polarize_words(ident.lhs, ident.multidegree, offsets)),
        tuple(_polarize_words(ident.rhs, ident.multidegree, offsets)),
        groups,
        var_of_slot,
    )
    _PLAN_CACHE[name] = plan
    return plan


# ---------------------------------------------------------------------------
# Sparse evaluation of multilinear words at basis tuples
# ---------------------------------------------------------------------------

_LEAVES_CACHE: dict = {}


def _leaves(word: Word) -> tuple[int, ...]:
    try:
        return _LEAVES_CACHE[word]
    except KeyError:
        pass
    if isinstance(word, int):
        result = (word,)
    else:
        result = _leaves(word[0]) + _leaves(word[1])
    _LEAVES_CACHE[word] = result
    return result


def _eval_word_sparse(word, tup, rows, memo, total_slots) -> dict:
    if isinstance(word, int):
        return {tup[word]: 1}
    leaves = _leaves(word)
    key = None
    if len(leaves) < total_slots:
        key = (word, tuple(tup[s] for s in leaves))
        cached = memo.get(key)
        if cached is not None:
            return cached
    left = _eval_word_sparse(word[0], tup, rows, memo, total_slots)
    right = _eval_word_sparse(word[1], tup, rows, memo, total_slots)
    out: dict = {}
    for a, ua in left.items():
        row = rows[a]
        for b, ub in right.items():
            entries = row[b]
            if not entries:
                continue
            c = ua * ub
            for k, v in entries:
                nv = out.get(k, 0) + c * v
                if nv:
                    out[k] = nv
                elif k in out:
                    del out[k]
    if key is not None:
        memo[key] = out
    return out


def _eval_signed_sum(words, tup, rows, memo, total_slots) -> dict:
    acc: dict = {}
    for sign, word in words:
        val = _eval_word_sparse(word, tup, rows, memo, total_slots)
        for k, v in val.items():
            nv = acc.get(k, 0) + (v if sign == 1 else sign * v)
            if nv:
                acc[k] = nv
            elif k in acc:
                del acc[k]
    return acc


def _grouped_tuples(dim: int, slots: int, groups):
    """All slot assignments, non-decreasing within each symmetric group.

    Lexicographic order; by symmetry of the polarized form, the first
    failing tuple found here is also the lexicographically first failing
    tuple over the full enumeration.
    """
    group_of_slot = {}
    for g in groups:
        for pos, s in enumerate(g):
            if pos > 0:
                group_of_slot[s] = g[pos - 1]
    tup = [0] * slots

    def rec(slot: int):
        if slot == slots:
            yield tuple(tup)
            return
        start = tup[group_of_slot[slot]] if slot in group_of_slot else 0
        for i in range(start, dim):
            tup[slot] = i
            yield from rec(slot + 1)

    yield from rec(0)


def _dense(d: dict, dim: int) -> Element:
    return Element(tuple(canonical(d.get(k, 0)) for k in range(dim)))


def check_identity(a: Algebra, name: str) -> Verdict:
    """Exact verdict: does the named identity hold for all elements of ``a``?

    Multilinear identities are checked directly on basis tuples; the others
    through their polarized multilinear form.  A failing verdict carries
    the lexicographically first failing basis tuple.
    """
    plan = polarized_plan(name)
    rows = a.sparse_rows
    memo: dict = {}
    for tup in _grouped_tuples(a.dim, plan.slots, plan.groups):
        lhs = _eval_signed_sum(plan.lhs, tup, rows, memo, plan.slots)
        rhs = _eval_signed_sum(plan.rhs, tup, rows, memo, plan.slots)
        if lhs != rhs:
            inputs = tuple(a.basis_vector(i) for i in tup)
            return Verdict.fail(
                Witness(tup, inputs, _dense(lhs, a.dim), _dense(rhs, a.dim))
            )
    return Verdict.ok()


# ---------------------------------------------------------------------------
# Raw (unpolarized) evaluation, used by the random corroboration harness
# ---------------------------------------------------------------------------

def _eval_word_elements(word: Word, elems: Sequence[Element], a: Algebra) -> Element:
    if isinstance(word, int):
        return elems[word]
    return a.product(
        _eval_word_elements(word[0], elems, a),
        _eval_word_elements(word[1], elems, a),
    )


def evaluate_identity_sides(
    a: Algebra, name: str, elems: Sequence[Element]
) -> tuple[Element, Element]:
    """Raw lhs/rhs of the identity at explicit elements (repeated variables stay repeated)."""
    ident = get_identity(name)
    if len(elems) != len(ident.variables):
        raise NonassocError(
            f"identity {name} takes {len(ident.variables)} elements"
        )

    def side(words):
        acc = a.zero()
        for sign, word in words:
            val = _eval_word_elements(word, elems, a)
            acc = acc + val if sign == 1 else acc + (sign * val)
        return acc

    return side(ident.lhs), side(ident.rhs)


def check_identity_direct(a: Algebra, name: str) -> Verdict:
    """Plain basis-tuple check of the raw identity (sound only for multidegree 1).

    Kept as an independent path so the polarized engine can be
    cross-checked on multilinear identities.
    """
    ident = get_identity(name)
    if any(d != 1 for d in ident.multidegree):
        raise NonassocError(
            f"direct basis checking is only exact for multilinear identities, not {name}"
        )
    arity = len(ident.variables)
    for tup in itertools.product(range(a.dim), repeat=arity):
        elems = tuple(a.basis_vector(i) for i in tup)
        lhs, rhs = evaluate_identity_sides(a, name, elems)
        if lhs != rhs:
            return Verdict.fail(Witness(tup, elems, lhs, rhs))
    return Verdict.ok()


def random_element(a: Algebra, rng: random.Random) -> Element:
    """Element with small rational coordinates (mostly integers, some halves)."""
    from fractions import Fraction

    coords = []
    for _ in range(a.dim):
        num = rng.randint(-6, 6)
        if rng.randrange(4) == 0 and num % 2:
            coords.append(Fraction(num, 2))
        else:
            coords.append(num)
    return Element(tuple(coords))


def check_identity_random(a: Algebra, name: str, trials: int, seed: int) -> Verdict:
    """Evaluate the raw identity at pseudo-random elements; deterministic per seed."""
    if trials < 1:
        raise NonassocError("trials must be >= 1")
    ident = get_identity(name)
    rng = random.Random(seed)
    for _ in range(trials):
        elems = tuple(random_element(a, rng) for _ in ident.variables)
        lhs, rhs = evaluate_identity_sides(a, name, elems)
        if lhs != rhs:
            return Verdict.fail(Witness((), elems, lhs, rhs))
    return Verdict.ok()


# ---------------------------------------------------------------------------
# Parametric certification over product grids
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ParamSpec:
    """Declared behaviour of one rational parameter of a fixture family.

    ``degree`` is the maximum degree of any certified check in this
    parameter (after clearing denominators), declared by the family;
    ``exclude`` lists values where the family is undefined; ``axis`` is the
    default certification axis.
    """

    name: str
    degree: int
    axis: tuple[Scalar, ...]
    exclude: tuple[Scalar, ...] = ()


@dataclass(frozen=True)
class ParametricVerdict:
    """Verdict of a grid certification, with the failing point when any."""

    passed: bool
    failing_point: Optional[dict] = None
    inner: Optional[Verdict] = None
    points_checked: int = 0

    def __bool__(self) -> bool:
        return self.passed


def certify_parametric(
    family,
    check: Callable[[object], Verdict],
    axes: Optional[Mapping[str, Sequence[Scalar]]] = None,
) -> ParametricVerdict:
    """Certify a polynomial check over all rational parameter values.

    ``family`` must expose ``params`` (a sequence of ParamSpec) and
    ``instantiate(point: dict) -> object``; ``check`` maps an instantiated
    family member to a Verdict.  The check is run at every point of the
    product grid ``axes``; since a polynomial of degree d vanishing at d+1
    distinct points in each variable separately vanishes identically, a
    grid with more than ``degree`` distinct values per parameter certifies
    the check for all rational parameter values (off the excluded ones).
    """
    params = list(family.params)
    axis_values: list[list[Scalar]] = []
    for p in params:
        axis = list((axes or {}).get(p.name, p.axis))
        distinct = set(axis)
        if len(distinct) < p.degree + 1:
            raise GridError(
                f"grid for parameter {p.name} has {len(distinct)} distinct values; "
                f"declared degree {p.degree} needs at least {p.degree + 1}"
            )
        bad = distinct.intersection(p.exclude)
        if bad:
            raise GridError(
                f"grid for parameter {p.name} contains excluded values "
                f"{sorted(format_scalar(b) for b in bad)}"
            )
        axis_values.append(axis)
    count = 0
    for combo in itertools.product(*axis_values):
        point = {p.name: v for p, v in zip(params, combo)}
        member = family.instantiate(point)
        verdict = check(member)
        count += 1
        if not verdict:
            return ParametricVerdict(False, point, verdict, count)
    return ParametricVerdict(True, None, None, count)
