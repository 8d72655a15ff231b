"""Construction of Onsager-algebra module data from sl2 evaluation data.

An Onsager module is a pair of square matrices (A, Astar) giving the actions
of the two standard generators. Modules are built from weight-basis sl2
representations, turned into evaluation modules A = e + f, Astar = a e + a^-1 f,
and combined by tensor products (Kronecker sums). The diameter d and the
type shift (alpha, alphastar) describe the spectra {d - 2i + alpha} and
{d - 2i + alphastar} of the two generators.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import SpectrumError
from .linalg import Matrix, commutator, kron, minimal_polynomial

Q0 = Fraction(0)
Q1 = Fraction(1)


@dataclass(frozen=True)
class Sl2Triple:
    """Matrices of e, f, h acting on a weight-basis sl2 module."""

    e: Matrix
    f: Matrix
    h: Matrix

    @property
    def dim(self) -> int:
        return self.h.rows

    def brackets_hold(self) -> bool:
        """Exact check of [e,f] = h, [h,e] = 2e, [h,f] = -2f."""
        return (
            commutator(self.e, self.f) == self.h
            and commutator(self.h, self.e) == 2 * self.e
            and commutator(self.h, self.f) == (-2) * self.f
        )


def sl2_irreducible(n: int) -> Sl2Triple:
    """The (n+1)-dimensional irreducible sl2 module in the weight basis.

    Basis v_0, ..., v_n with h v_i = (n-2i) v_i, f v_i = v_{i+1} and
    e v_i = i(n-i+1) v_{i-1}; all entries are integers.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    m = n + 1
    e = [[Q0] * m for _ in range(m)]
    f = [[Q0] * m for _ in range(m)]
    h = [[Q0] * m for _ in range(m)]
    for i in range(m):
        h[i][i] = Fraction(n - 2 * i)
        if i + 1 <= n:
            f[i + 1][i] = Q1
        if i >= 1:
            e[i - 1][i] = Fraction(i * (n - i + 1))
    return Sl2Triple(Matrix.from_rows(e), Matrix.from_rows(f), Matrix.from_rows(h))


@dataclass(frozen=True)
class OnsagerModule:
    """Actions A, Astar of the two standard Onsager generators on Q^dim."""

    dim: int
    A: Matrix
    Astar: Matrix
    diameter: int | None = None
    type_pair: tuple[Fraction, Fraction] | None = None

    def __post_init__(self):
        if not (self.A.is_square and self.Astar.is_square):
            raise ValueError("generator actions must be square matrices")
        if self.A.rows != self.dim or self.Astar.rows != self.dim:
            raise ValueError("generator size does not match module dimension")


@dataclass(frozen=True)
class ModuleSpec:
    """Serializable identity of a module: evaluation factors plus a type shift.

    Each factor (n, a) stands for the (n+1)-dimensional evaluation module
    with nonzero evaluation parameter a; n = 0 gives the trivial factor.
    """

    factors: tuple[tuple[int, Fraction], ...]
    shift: tuple[Fraction, Fraction] = (Q0, Q0)

    def __post_init__(self):
        for n, a in self.factors:
            if n < 0:
                raise ValueError("factor weight must be nonnegative")
            if a == 0:
                raise ValueError("evaluation parameter must be nonzero")

    @classmethod
    def of(cls, factors: Sequence[tuple[int, object]], shift=(0, 0)) -> "ModuleSpec":
        fs = tuple((int(n), Fraction(a)) for n, a in factors)
        return cls(fs, (Fraction(shift[0]), Fraction(shift[1])))

    @property
    def dim(self) -> int:
        d = 1
        for n, _ in self.factors:
            d *= n + 1
        return d

    @property
    def degree_sum(self) -> int:
        return sum(n for n, _ in self.factors)


def evaluation_module(n: int, a) -> OnsagerModule:
    """Evaluation module of dimension n+1: A = e + f, Astar = a e + a^-1 f."""
    a = Fraction(a)
    if a == 0:
        raise ValueError("evaluation parameter must be nonzero")
    triple = sl2_irreducible(n)
    A = triple.e + triple.f
    Astar = a * triple.e + (1 / a) * triple.f
    return OnsagerModule(n + 1, A, Astar, diameter=n, type_pair=(Q0, Q0))


def trivial_module() -> OnsagerModule:
    """The unique one-dimensional module of type (0,0)."""
    return evaluation_module(0, 1)


def kronecker_sum(a: Matrix, b: Matrix) -> Matrix:
    return kron(a, Matrix.identity(b.rows)) + kron(Matrix.identity(a.rows), b)


def tensor(m1: OnsagerModule, m2: OnsagerModule) -> OnsagerModule:
    """Tensor product module: each generator acts as a Kronecker sum."""
    A = kronecker_sum(m1.A, m2.A)
    Astar = kronecker_sum(m1.Astar, m2.Astar)
    diameter = None
    type_pair = None
    if m1.diameter is not None and m2.diameter is not None:
        diameter = m1.diameter + m2.diameter
    if m1.type_pair is not None and m2.type_pair is not None:
        type_pair = (m1.type_pair[0] + m2.type_pair[0], m1.type_pair[1] + m2.type_pair[1])
    return OnsagerModule(m1.dim * m2.dim, A, Astar, diameter=diameter, type_pair=type_pair)


def build_from_spec(spec: ModuleSpec) -> OnsagerModule:
    """Left-fold tensor of the evaluation factors, then apply the type shift."""
    module = None
    for n, a in spec.factors:
        factor = evaluation_module(n, a)
        module = factor if module is None else tensor(module, factor)
    if module is None:
        module = trivial_module()
    alpha, alphastar = spec.shift
    if alpha or alphastar:
        ident = Matrix.identity(module.dim)
        module = OnsagerModule(module.dim, module.A + alpha * ident, module.Astar + alphastar * ident)
    d, a0, a1 = module_type(module)
    return OnsagerModule(module.dim, module.A, module.Astar, diameter=d, type_pair=(a0, a1))


def _arithmetic_spectrum_top(m: Matrix) -> tuple[int, Fraction]:
    """Diameter d and top eigenvalue c of a matrix whose spectrum must be
    {c, c-2, ..., c-2d} with the matrix diagonalizable.

    The minimal polynomial determines both: its degree is d+1 and the sum of
    its roots is (d+1)(c-d). The matrix is diagonalizable exactly when the
    minimal polynomial equals the product of the d+1 distinct linear factors,
    which is verified by direct multiplication.
    """
    poly = minimal_polynomial(m)
    d = len(poly) - 2
    if d < 0:
        raise SpectrumError("scalar spectrum could not be extracted")
    root_sum = -poly[d]
    c = Fraction(root_sum, d + 1) + d
    expected = [Q1]
    for i in range(d + 1):
        lam = c - 2 * i
        expected = [Q0] + expected
        for k in range(len(expected) - 1):
            expected[k] = expected[k] - lam * expected[k + 1]
    if tuple(expected) != poly:
        raise SpectrumError(
            "spectrum is not of the form {c, c-2, ..., c-2d} with the matrix "
            "diagonalizable; not an irreducible Onsager module candidate"
        )
    return d, c


def module_type(m: OnsagerModule) -> tuple[int, Fraction, Fraction]:
    """Diameter d and type (alpha, alphastar) of a module candidate.

    Raises SpectrumError when either generator is not diagonalizable with a
    spectrum of the form {c, c-2, ..., c-2d}, or when the two diameters differ.
    """
    d_a, c_a = _arithmetic_spectrum_top(m.A)
    d_s, c_s = _arithmetic_spectrum_top(m.Astar)
    if d_a != d_s:
        raise SpectrumError(f"generator spectra have different lengths ({d_a + 1} vs {d_s + 1})")
    return d_a, c_a - d_a, c_s - d_s


def normalize_type(m: OnsagerModule) -> OnsagerModule:
    """Shift both generators so the module has type (0,0)."""
    d, alpha, alphastar = module_type(m)
    if alpha == 0 and alphastar == 0:
        return OnsagerModule(m.dim, m.A, m.Astar, diameter=d, type_pair=(Q0, Q0))
    ident = Matrix.identity(m.dim)
    return OnsagerModule(
        m.dim,
        m.A - alpha * ident,
        m.Astar - alphastar * ident,
        diameter=d,
        type_pair=(Q0, Q0),
    )


def dolan_grady_holds(x: Matrix, y: Matrix) -> bool:
    """Exact check of both Dolan-Grady relations for the pair (x, y)."""
    xy = commutator(x, y)
    if commutator(x, commutator(x, xy)) != 4 * xy:
        return False
    yx = -xy
    return commutator(y, commutator(y, yx)) == 4 * yx
