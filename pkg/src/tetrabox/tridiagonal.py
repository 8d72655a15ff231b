"""Tridiagonal-pair verification.

A tridiagonal pair is an ordered pair of diagonalizable operators A, Astar
such that each acts block-tridiagonally on some ordering of the other's
eigenspaces and the two admit no common invariant subspace. Pairs whose
eigenvalue sequences are arithmetic with common difference 2 are exactly
the generator actions of irreducible Onsager modules, and that equivalence
is checked here with both sides computed independently.

Diagonalizability is decided over Q, the working field of this package:
the minimal polynomial must split into distinct rational linear factors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .classify import ORACLE_GUARD, pair_generates_full_algebra
from .errors import SpectrumError
from .linalg import Matrix, Subspace, eigenspace, minimal_polynomial, rational_roots, subspace_sum
from .onsager import dolan_grady_holds


@dataclass(frozen=True)
class TdpReport:
    """Outcome of the four tridiagonal-pair axioms for one ordered pair."""

    diagonalizable_A: bool
    diagonalizable_Astar: bool
    standard_ordering_A: tuple[Fraction, ...] | None
    standard_ordering_Astar: tuple[Fraction, ...] | None
    irreducible: bool
    verdict: bool


def _rational_spectrum(m: Matrix) -> list[Fraction] | None:
    """Distinct eigenvalues when m is diagonalizable over Q, else None."""
    roots = rational_roots(minimal_polynomial(m))
    if roots is None or any(mult > 1 for mult in roots.values()):
        return None
    return sorted(roots, reverse=True)


def _block_tridiagonal_ordering(
    acting: Matrix, spaces: list[Subspace], ambient: int
) -> bool:
    """Does `acting` map each listed eigenspace into its three neighbors?"""
    zero = Subspace.zero(ambient)
    for i, space in enumerate(spaces):
        below = spaces[i - 1] if i > 0 else zero
        above = spaces[i + 1] if i + 1 < len(spaces) else zero
        window = subspace_sum(subspace_sum(below, space), above)
        for column in space.basis_columns():
            if not window.contains_vector(acting.apply(column)):
                return False
    return True


def _standard_ordering(
    acting: Matrix, diagonal: Matrix, eigenvalues: list[Fraction]
) -> tuple[Fraction, ...] | None:
    """Search the descending eigenvalue ordering and its reverse."""
    spaces = [eigenspace(diagonal, lam) for lam in eigenvalues]
    if _block_tridiagonal_ordering(acting, spaces, diagonal.rows):
        return tuple(eigenvalues)
    if len(eigenvalues) > 1 and _block_tridiagonal_ordering(acting, spaces[::-1], diagonal.rows):
        return tuple(reversed(eigenvalues))
    return None


def verify_tridiagonal_pair(a: Matrix, astar: Matrix, guard: int = ORACLE_GUARD) -> TdpReport:
    """Check all four tridiagonal-pair axioms for (a, astar)."""
    if not (a.is_square and astar.is_square) or a.rows != astar.rows:
        raise ValueError("expected square matrices of equal size")
    spec_a = _rational_spectrum(a)
    spec_s = _rational_spectrum(astar)
    ordering_a = None
    ordering_s = None
    if spec_a is not None:
        ordering_a = _standard_ordering(astar, a, spec_a)
    if spec_s is not None:
        ordering_s = _standard_ordering(a, astar, spec_s)
    irreducible = pair_generates_full_algebra(a, astar, guard=guard)
    verdict = (
        spec_a is not None
        and spec_s is not None
        and ordering_a is not None
        and ordering_s is not None
        and irreducible
    )
    return TdpReport(
        diagonalizable_A=spec_a is not None,
        diagonalizable_Astar=spec_s is not None,
        standard_ordering_A=ordering_a,
        standard_ordering_Astar=ordering_s,
        irreducible=irreducible,
        verdict=verdict,
    )


def _is_arithmetic_step_two(seq: tuple[Fraction, ...]) -> bool:
    return all(seq[i - 1] - seq[i] == 2 for i in range(1, len(seq)))


def eigenvalue_sequences(
    a: Matrix, astar: Matrix, guard: int = ORACLE_GUARD
) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
    """Descending eigenvalue sequence and dual sequence of a tridiagonal pair.

    Raises SpectrumError when either sequence is not arithmetic with common
    difference 2 (a pair outside this package's scope).
    """
    report = verify_tridiagonal_pair(a, astar, guard=guard)
    if not report.verdict:
        raise ValueError("not a tridiagonal pair")
    seq = tuple(sorted(report.standard_ordering_A, reverse=True))
    dual = tuple(sorted(report.standard_ordering_Astar, reverse=True))
    for name, s in (("eigenvalue", seq), ("dual eigenvalue", dual)):
        if not _is_arithmetic_step_two(s):
            raise SpectrumError(f"{name} sequence {tuple(map(str, s))} is not arithmetic with difference 2")
    return seq, dual


def check_onsager_equivalence(a: Matrix, astar: Matrix, guard: int = ORACLE_GUARD) -> bool:
    """Equivalence test: [tridiagonal pair with both sequences arithmetic-2]
    against [both Dolan-Grady relations hold and the pair generates the full
    matrix algebra], the two sides computed independently.
    """
    report = verify_tridiagonal_pair(a, astar, guard=guard)
    side_tdp = (
        report.verdict
        and _is_arithmetic_step_two(tuple(sorted(report.standard_ordering_A, reverse=True)))
        and _is_arithmetic_step_two(tuple(sorted(report.standard_ordering_Astar, reverse=True)))
    )
    side_onsager = dolan_grady_holds(a, astar) and report.irreducible
    return side_tdp == side_onsager
