"""Index conventions, Levi-Civita symbols and small dense matrix arithmetic.

Every 6-component object uses the linear order

    (1, 2, 3, [12], [31], [23])

and every conversion from a tensor index to a row/column goes through
:func:`index_position`, so the bivector orientation lives in one place.
Constant operators are held as :class:`GaussMatrix`, an exact Gaussian-integer
matrix; momentum-dependent operators are plain ``complex128`` arrays.
"""
from __future__ import annotations

import enum
import itertools
from typing import Iterable, Sequence, Union

import numpy as np

#: canonical bivector labels, in linear order after the three vector slots
BIVECTORS = ((1, 2), (3, 1), (2, 3))
LABELS = ("1", "2", "3", "[12]", "[31]", "[23]")

Index = Union[int, tuple]


def index_position(idx: Index) -> tuple[int | None, int]:
    """Return the 0-based linear position of ``idx`` and the orientation sign.

    ``idx`` is a vector index ``mu`` in 1..3 or a pair ``(mu, nu)``.  A pair
    opposite to its canonical orientation comes back with sign -1; a repeated
    pair ``(mu, mu)`` has no slot and returns ``(None, 0)``.
    """
    if isinstance(idx, tuple):
        mu, nu = idx
        if mu == nu:
            return None, 0
        for k, (a, b) in enumerate(BIVECTORS):
            if (mu, nu) == (a, b):
                return 3 + k, 1
            if (mu, nu) == (b, a):
                return 3 + k, -1
        raise ValueError(f"invalid bivector index {idx!r}")
    if idx not in (1, 2, 3):
        raise ValueError(f"invalid vector index {idx!r}")
    return idx - 1, 1


def _permutation_sign(mu: int, nu: int, alpha: int) -> int:
    if len({mu, nu, alpha}) < 3:
        return 0
    seq = (mu, nu, alpha)
    inversions = sum(1 for i, j in itertools.combinations(range(3), 2) if seq[i] > seq[j])
    return -1 if inversions % 2 else 1


class LeviCivita(enum.Enum):
    """The two normalisations of the 3-index antisymmetric symbol.

    ``EUCLIDEAN`` has eps_123 = -i (coordinate space and the wave equation);
    ``REAL`` has eps_123 = +1 and equals i times the Euclidean symbol.
    """

    EUCLIDEAN = -1j
    REAL = 1

    def __call__(self, mu: int, nu: int, alpha: int) -> complex:
        return _permutation_sign(mu, nu, alpha) * self.value

    def tensor(self) -> np.ndarray:
        """Dense ``(3, 3, 3)`` array, 0-based."""
        out = np.zeros((3, 3, 3), dtype=complex)
        for a, b, c in itertools.product(range(3), repeat=3):
            out[a, b, c] = self(a + 1, b + 1, c + 1)
        return out


def levi_civita(mu: int, nu: int, alpha: int, convention: LeviCivita = LeviCivita.EUCLIDEAN) -> complex:
    for i in (mu, nu, alpha):
        if i not in (1, 2, 3):
            raise ValueError(f"index {i!r} out of range 1..3")
    return convention(mu, nu, alpha)


EPS_E = LeviCivita.EUCLIDEAN.tensor()
EPS_R = LeviCivita.REAL.tensor()
DELTA = np.eye(3)


def gen_kronecker(pair1: tuple, pair2: tuple) -> int:
    """delta_[mu nu][alpha beta] = d_{mu alpha} d_{nu beta} - d_{mu beta} d_{nu alpha}."""
    (mu, nu), (alpha, beta) = pair1, pair2
    return int(mu == alpha and nu == beta) - int(mu == beta and nu == alpha)


class GaussMatrix:
    """Square matrix over the Gaussian integers, stored as two int64 arrays."""

    __slots__ = ("re", "im")

    def __init__(self, re, im=None):
        re = np.asarray(re, dtype=np.int64)
        im = np.zeros_like(re) if im is None else np.asarray(im, dtype=np.int64)
        if re.shape != im.shape or re.ndim != 2 or re.shape[0] != re.shape[1]:
            raise ValueError("GaussMatrix needs two equal square integer arrays")
        self.re = re
        self.im = im

    @classmethod
    def zeros(cls, n: int) -> "GaussMatrix":
        return cls(np.zeros((n, n), dtype=np.int64))

    @classmethod
    def identity(cls, n: int) -> "GaussMatrix":
        return cls(np.eye(n, dtype=np.int64))

    @classmethod
    def from_complex(cls, a) -> "GaussMatrix":
        a = np.asarray(a, dtype=complex)
        re, im = np.rint(a.real), np.rint(a.imag)
        if np.any(re != a.real) or np.any(im != a.imag):
            raise ValueError("entries are not Gaussian integers")
        return cls(re.astype(np.int64), im.astype(np.int64))

    @property
    def dim(self) -> int:
        return self.re.shape[0]

    @property
    def shape(self) -> tuple:
        return self.re.shape

    def __matmul__(self, other: "GaussMatrix") -> "GaussMatrix":
        if not isinstance(other, GaussMatrix):
            return NotImplemented
        if other.dim != self.dim:
            raise ValueError("dimension mismatch")
        return GaussMatrix(self.re @ other.re - self.im @ other.im,
                           self.re @ other.im + self.im @ other.re)

    def __add__(self, other: "GaussMatrix") -> "GaussMatrix":
        if not isinstance(other, GaussMatrix):
            return NotImplemented
        return GaussMatrix(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GaussMatrix") -> "GaussMatrix":
        if not isinstance(other, GaussMatrix):
            return NotImplemented
        return GaussMatrix(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "GaussMatrix":
        return GaussMatrix(-self.re, -self.im)

    def __mul__(self, c) -> "GaussMatrix":
        c = complex(c)
        a, b = int(c.real), int(c.imag)
        if a != c.real or b != c.imag:
            raise ValueError(f"scalar {c!r} is not a Gaussian integer")
        return GaussMatrix(a * self.re - b * self.im, a * self.im + b * self.re)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, GaussMatrix):
            return NotImplemented
        return np.array_equal(self.re, other.re) and np.array_equal(self.im, other.im)

    __hash__ = None

    def __getitem__(self, key) -> complex:
        return complex(self.re[key], self.im[key])

    def __repr__(self) -> str:
        return f"GaussMatrix({self.to_complex()!r})"

    @property
    def T(self) -> "GaussMatrix":
        return GaussMatrix(self.re.T, self.im.T)

    @property
    def H(self) -> "GaussMatrix":
        """Hermitian adjoint."""
        return GaussMatrix(self.re.T, -self.im.T)

    def halve(self) -> "GaussMatrix":
        """Exact division by 2; raises if any entry is odd."""
        if np.any(self.re % 2) or np.any(self.im % 2):
            raise ValueError("matrix is not divisible by 2")
        return GaussMatrix(self.re // 2, self.im // 2)

    def is_zero(self) -> bool:
        return not (self.re.any() or self.im.any())

    def max_abs(self) -> float:
        return float(np.abs(self.to_complex()).max(initial=0.0))

    def nnz(self) -> int:
        return int(np.count_nonzero((self.re != 0) | (self.im != 0)))

    def to_complex(self) -> np.ndarray:
        return self.re + 1j * self.im

    def to_sympy(self):
        import sympy

        return sympy.Matrix(self.dim, self.dim,
                            lambda r, c: int(self.re[r, c]) + sympy.I * int(self.im[r, c]))


def basis_matrix(M: Index, N: Index, dim: int = 6) -> GaussMatrix:
    """Matrix unit eps^{M,N}: a single 1 at (row M, column N).

    Non-canonical bivector labels pick up their orientation sign, and a
    repeated pair such as ``(2, 2)`` gives the zero matrix.
    """
    out = GaussMatrix.zeros(dim)
    (r, s1), (c, s2) = index_position(M), index_position(N)
    if r is not None and c is not None:
        out.re[r, c] = s1 * s2
    return out


def commutator(a, b):
    return a @ b - b @ a


def matrix_poly_residual(M, factors: Iterable) -> float:
    """Max-abs entry of the ordered product of factors.

    A scalar factor ``c`` stands for ``(M - c*1)`` (so ``0`` is ``M`` itself);
    an array factor is used as given and must match ``M`` in shape.
    """
    exact = isinstance(M, GaussMatrix)
    n = M.dim if exact else np.asarray(M).shape[0]
    if exact:
        acc = GaussMatrix.identity(n)
        for f in factors:
            if isinstance(f, GaussMatrix):
                if f.dim != n:
                    raise ValueError("dimension mismatch")
                acc = acc @ f
            else:
                acc = acc @ (M - GaussMatrix.identity(n) * f)
        return acc.max_abs()
    M = np.asarray(M, dtype=complex)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError("M must be square")
    acc = np.eye(n, dtype=complex)
    eye = np.eye(n)
    for f in factors:
        if np.ndim(f) == 0:
            acc = acc @ (M - f * eye)
        else:
            f = np.asarray(f)
            if f.shape != M.shape:
                raise ValueError("dimension mismatch")
            acc = acc @ f
    return float(np.abs(acc).max(initial=0.0))


def jordan_indices(M: np.ndarray, eigenvalues: Sequence[complex], rtol: float = 1e-8) -> list[int]:
    """Size of the largest Jordan block for each (distinct) eigenvalue.

    Found by watching rank((M - lambda)^k) stabilise; the minimal polynomial
    is prod (x - lambda)^index.  Ranks use a singular-value cut relative to
    the norm of each power.
    """
    M = np.asarray(M, dtype=complex)
    n = M.shape[0]
    out = []
    for lam in eigenvalues:
        shifted = M - lam * np.eye(n)
        power = np.eye(n, dtype=complex)
        prev = n
        k = 0
        while True:
            power = power @ shifted
            rank = _numeric_rank(power, rtol)
            if rank == prev:
                break
            prev = rank
            k += 1
            if k > n:
                break
        out.append(k)
    return out


def _numeric_rank(a: np.ndarray, rtol: float) -> int:
    s = np.linalg.svd(a, compute_uv=False)
    if s.size == 0 or s[0] == 0:
        return 0
    return int(np.sum(s > rtol * max(1.0, s[0])))


def numeric_rank(a: np.ndarray, rtol: float = 1e-9) -> int:
    return _numeric_rank(np.asarray(a, dtype=complex), rtol)
