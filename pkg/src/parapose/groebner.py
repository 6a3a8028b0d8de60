"""Reduced monic lex Groebner bases via Buchberger's algorithm.

The pair queue uses the normal selection strategy (lex-smallest lcm
first) with the coprime-lcm and chain criteria for pruning.  After the
basis stabilises it is fully inter-reduced and normalised monic, so the
result is the unique reduced basis of the ideal: independent of
generator order, generator scaling and selection details.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .multipoly import (
    MultiPoly,
    N_VARS,
    VAR_NAMES,
    mono_divides,
    mono_lcm,
    mono_mul,
    normal_form,
    s_polynomial,
)

__all__ = [
    "LEX_ORDER_TAG",
    "BuchbergerStats",
    "GroebnerBasis",
    "EliminationView",
    "PairLimitExceeded",
    "buchberger",
    "is_groebner_basis",
    "elimination_basis",
]

LEX_ORDER_TAG = "lex:" + ">".join(VAR_NAMES)

DEFAULT_PAIR_LIMIT = 100_000


class PairLimitExceeded(RuntimeError):
    """Raised when Buchberger exceeds its reduction budget."""

    def __init__(self, limit: int, stats: "BuchbergerStats"):
        super().__init__(
            f"pair reduction limit {limit} exceeded "
            f"(pairs considered: {stats.pairs_considered}, "
            f"reductions: {stats.pairs_reduced}, "
            f"basis elements so far: {stats.elements_added})"
        )
        self.limit = limit
        self.stats = stats


@dataclass
class BuchbergerStats:
    pairs_considered: int = 0
    pairs_reduced: int = 0
    zero_reductions: int = 0
    elements_added: int = 0


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced monic lex basis, elements sorted by descending leading monomial."""

    elements: tuple
    order_tag: str = LEX_ORDER_TAG
    stats: BuchbergerStats | None = field(default=None, compare=False, repr=False)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def elimination(self, level: int) -> "EliminationView":
        return elimination_basis(self, level)


@dataclass(frozen=True)
class EliminationView:
    """The subset G_l of a basis using only the last N_VARS - l variables."""

    level: int
    elements: tuple

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)


def _prepare(generators: Iterable[MultiPoly]):
    polys = []
    for g in generators:
        if g is None or g.is_zero:
            continue
        m = g.monic()
        if m not in polys:
            polys.append(m)
    return polys


def buchberger(
    generators: Iterable[MultiPoly], *, pair_limit: int = DEFAULT_PAIR_LIMIT
) -> GroebnerBasis:
    """Compute the unique reduced monic lex Groebner basis of <generators>.

    Zero generators are ignored; an all-zero input is rejected.  The
    pair budget guards against runaway inputs and raises
    PairLimitExceeded with progress counters when exhausted.
    """
    basis = _prepare(generators)
    if not basis:
        raise ValueError("no nonzero generators")

    stats = BuchbergerStats()
    lead = [p.leading_monomial for p in basis]

    heap: list = []
    for j in range(len(basis)):
        for i in range(j):
            heapq.heappush(heap, (mono_lcm(lead[i], lead[j]), i, j))
    done = set()

    while heap:
        lcm, i, j = heapq.heappop(heap)
        done.add((i, j))
        stats.pairs_considered += 1

        # first criterion: coprime leading monomials reduce to zero
        if lcm == mono_mul(lead[i], lead[j]):
            continue
        # chain criterion: a third element bridging an already-handled pair
        if any(
            k not in (i, j)
            and mono_divides(lead[k], lcm)
            and (min(i, k), max(i, k)) in done
            and (min(j, k), max(j, k)) in done
            for k in range(len(basis))
        ):
            continue

        stats.pairs_reduced += 1
        if stats.pairs_reduced > pair_limit:
            raise PairLimitExceeded(pair_limit, stats)

        remainder = normal_form(s_polynomial(basis[i], basis[j]), basis)
        if remainder.is_zero:
            stats.zero_reductions += 1
            continue

        remainder = remainder.monic()
        basis.append(remainder)
        lead.append(remainder.leading_monomial)
        stats.elements_added += 1
        k = len(basis) - 1
        for t in range(k):
            heapq.heappush(heap, (mono_lcm(lead[t], lead[k]), t, k))

    reduced = _inter_reduce(basis)
    return GroebnerBasis(tuple(reduced), stats=stats)


def _inter_reduce(polys: Sequence[MultiPoly]):
    """Minimalise and tail-reduce to the unique reduced monic basis."""
    # keep only elements whose leading monomial no other element divides
    candidates = sorted((p.monic() for p in polys), key=lambda p: p.leading_monomial)
    minimal: list = []
    for p in candidates:
        if not any(mono_divides(q.leading_monomial, p.leading_monomial) for q in minimal):
            minimal.append(p)

    # tail-reduce each element against all the others until stable
    changed = True
    while changed:
        changed = False
        for idx in range(len(minimal)):
            others = minimal[:idx] + minimal[idx + 1 :]
            if not others:
                continue
            r = normal_form(minimal[idx], others).monic()
            if r != minimal[idx]:
                minimal[idx] = r
                changed = True

    return sorted(minimal, key=lambda p: p.leading_monomial, reverse=True)


def is_groebner_basis(polys: Sequence[MultiPoly]) -> bool:
    """Buchberger criterion: every pairwise S-polynomial reduces to zero."""
    polys = list(polys)
    if not polys or any(p.is_zero for p in polys):
        raise ValueError("basis elements must be nonzero")
    for j in range(len(polys)):
        for i in range(j):
            if not normal_form(s_polynomial(polys[i], polys[j]), polys).is_zero:
                return False
    return True


def elimination_basis(basis: GroebnerBasis, level: int) -> EliminationView:
    """Elements of the basis involving only the last N_VARS - level variables."""
    if not isinstance(level, int) or not 0 <= level <= N_VARS:
        raise ValueError(f"elimination level must be in 0..{N_VARS}, got {level}")
    keep = tuple(
        p for p in basis.elements if all(i >= level for i in p.support())
    )
    return EliminationView(level, keep)
