"""Flags, decompositions and opposite-flag machinery.

A decomposition is an ordered direct-sum splitting V_0, ..., V_d of the
full space; a flag is the increasing chain of its partial sums. Two flags
are opposite when one decomposition induces the first and its inversion the
second; that decomposition is recovered componentwise as F_i "intersect"
G_{d-i}, which is also how opposition is decided here. An Onsager module of
type (0,0) carries four distinguished flags built from the eigenspace
chains of its two generators, one per corner index 0..3.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import OppositionError, SpectrumError, TypeShiftError
from .linalg import Subspace, eigenspace, intersect, subspace_sum
from .onsager import OnsagerModule, module_type


@dataclass(frozen=True)
class Decomposition:
    """Ordered list of nonzero subspaces whose direct sum is the full space."""

    subspaces: tuple[Subspace, ...]

    def __post_init__(self):
        if not self.subspaces:
            raise ValueError("a decomposition needs at least one subspace")
        ambient = self.subspaces[0].ambient_dim
        total = 0
        running = Subspace.zero(ambient)
        for space in self.subspaces:
            if space.ambient_dim != ambient:
                raise ValueError("ambient dimension mismatch")
            if space.is_zero():
                raise ValueError("decomposition subspaces must be nonzero")
            total += space.dim
            running = subspace_sum(running, space)
        if total != ambient or running.dim != ambient:
            raise ValueError("subspaces do not form a direct sum filling the space")

    @property
    def ambient_dim(self) -> int:
        return self.subspaces[0].ambient_dim

    @property
    def diameter(self) -> int:
        return len(self.subspaces) - 1


@dataclass(frozen=True)
class Flag:
    """Strictly increasing chain of subspaces ending at the full space."""

    components: tuple[Subspace, ...]

    def __post_init__(self):
        if not self.components:
            raise ValueError("a flag needs at least one component")
        ambient = self.components[0].ambient_dim
        if self.components[0].is_zero():
            raise ValueError("the first flag component must be nonzero")
        if self.components[-1].dim != ambient:
            raise ValueError("the last flag component must be the full space")
        for prev, cur in zip(self.components, self.components[1:]):
            if cur.ambient_dim != ambient:
                raise ValueError("ambient dimension mismatch")
            if prev.dim >= cur.dim or not cur.contains(prev):
                raise ValueError("flag components must increase strictly")

    @property
    def ambient_dim(self) -> int:
        return self.components[0].ambient_dim

    @property
    def diameter(self) -> int:
        return len(self.components) - 1


def flag_from_decomposition(dec: Decomposition) -> Flag:
    """The flag of partial sums V_0, V_0 + V_1, ..."""
    partial = Subspace.zero(dec.ambient_dim)
    components = []
    for space in dec.subspaces:
        partial = subspace_sum(partial, space)
        components.append(partial)
    return Flag(tuple(components))


def invert_decomposition(dec: Decomposition) -> Decomposition:
    return Decomposition(tuple(reversed(dec.subspaces)))


def _induced_subspaces(f: Flag, g: Flag) -> tuple[Subspace, ...] | str:
    """Componentwise intersections, or a reason string when not opposite."""
    d = f.diameter
    ambient = f.ambient_dim
    pieces = []
    running = Subspace.zero(ambient)
    total = 0
    for i in range(d + 1):
        piece = intersect(f.components[i], g.components[d - i])
        if piece.is_zero():
            return f"component intersection {i} is zero"
        pieces.append(piece)
        total += piece.dim
        running = subspace_sum(running, piece)
    if total != ambient or running.dim != ambient:
        return "component intersections do not sum directly to the full space"
    dec = Decomposition(tuple(pieces))
    if flag_from_decomposition(dec) != f:
        return "partial sums do not reproduce the first flag"
    if flag_from_decomposition(invert_decomposition(dec)) != g:
        return "inverted partial sums do not reproduce the second flag"
    return dec.subspaces


def _require_comparable(f: Flag, g: Flag) -> None:
    if f.ambient_dim != g.ambient_dim:
        raise OppositionError("flags live in different ambient spaces")
    if f.diameter != g.diameter:
        raise OppositionError(f"flag diameters differ ({f.diameter} vs {g.diameter})")


def are_opposite(f: Flag, g: Flag) -> bool:
    """True iff some decomposition induces f and its inversion induces g."""
    _require_comparable(f, g)
    return not isinstance(_induced_subspaces(f, g), str)


def induced_decomposition(f: Flag, g: Flag) -> Decomposition:
    """The unique decomposition inducing the opposite flags f and g."""
    _require_comparable(f, g)
    result = _induced_subspaces(f, g)
    if isinstance(result, str):
        raise OppositionError(f"flags are not opposite: {result}")
    return Decomposition(result)


def generator_eigenspaces(m: OnsagerModule) -> tuple[list[Subspace], list[Subspace], int]:
    """Eigenspace chains of A and Astar ordered by eigenvalue -d, 2-d, ..., d.

    Requires type (0,0); then each generator is diagonalizable with spectrum
    exactly {d-2i} and every listed eigenspace is nonzero.
    """
    d, alpha, alphastar = module_type(m)
    if alpha != 0 or alphastar != 0:
        raise TypeShiftError(f"module has type ({alpha}, {alphastar}), expected (0, 0)")
    chain_a = [eigenspace(m.A, Fraction(2 * i - d)) for i in range(d + 1)]
    chain_s = [eigenspace(m.Astar, Fraction(2 * i - d)) for i in range(d + 1)]
    for chain in (chain_a, chain_s):
        if any(space.is_zero() for space in chain):
            raise SpectrumError("an expected eigenvalue d-2i is missing")
    return chain_a, chain_s, d


def four_flags(m: OnsagerModule) -> tuple[Flag, Flag, Flag, Flag]:
    """The four flags attached to a type-(0,0) module, indexed 0..3.

    Flag 0 accumulates the eigenspaces of A upward from eigenvalue -d,
    flag 1 downward from +d; flags 2 and 3 do the same for Astar.
    """
    chain_a, chain_s, _ = generator_eigenspaces(m)
    up_a = Decomposition(tuple(chain_a))
    up_s = Decomposition(tuple(chain_s))
    return (
        flag_from_decomposition(up_a),
        flag_from_decomposition(invert_decomposition(up_a)),
        flag_from_decomposition(up_s),
        flag_from_decomposition(invert_decomposition(up_s)),
    )
