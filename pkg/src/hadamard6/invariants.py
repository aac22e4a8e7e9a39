"""Spectral and combinatorial invariants.

Characteristic polynomials are computed exactly over Z[zeta_q] by collecting
the Leibniz expansion degree by degree (principal minors), so the whole
pipeline up to root finding is division-free integer arithmetic. The scaled
view absorbs every sqrt(n) power into integer-cyclotomic coefficients, which
makes spectral-function comparison an exact test.
"""

from __future__ import annotations

import cmath
import math
from collections import Counter
from dataclasses import dataclass
from itertools import combinations, permutations

import numpy as np

from .cyclo import CycInt
from .matrices import ButsonMatrix, is_hadamard_exact


class ConvergenceError(RuntimeError):
    """Root iteration failed to reach the requested residual."""


class IndeterminateRankError(RuntimeError):
    """A singular value fell inside the undecidable band around the rank cut."""


@dataclass(frozen=True)
class ExactPoly:
    """Monic det(xI - H) with coefficients in Z[zeta_q], degree 0 upward."""

    q: int
    coeffs: tuple[CycInt, ...]

    def __post_init__(self) -> None:
        if self.coeffs[-1] != 1:
            raise ValueError("characteristic polynomial must be monic")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1


@dataclass(frozen=True)
class ScaledPoly:
    """det(xI - H/sqrt(n)) with the x^k coefficient stored as e_k * n^(-(n-k)/2).

    e_k equals the x^k coefficient of the unscaled polynomial, so equality of
    scaled polynomials is an exact integer-cyclotomic comparison.
    """

    n: int
    q: int
    e: tuple[CycInt, ...]

    def __post_init__(self) -> None:
        if len(self.e) != self.n + 1:
            raise ValueError("need one coefficient per degree 0..n")
        if self.e[-1] != 1:
            raise ValueError("scaled polynomial must be monic")

    def complex_coeffs(self) -> list[complex]:
        n = self.n
        return [ek.embed() * n ** (-(n - k) / 2.0) for k, ek in enumerate(self.e)]

    def evaluate(self, x: complex) -> complex:
        out = 0j
        for c in reversed(self.complex_coeffs()):
            out = out * x + c
        return out


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues with multiplicities; multiplicities sum to the dimension."""

    pairs: tuple[tuple[complex, int], ...]

    @property
    def n(self) -> int:
        return sum(m for _, m in self.pairs)

    def values(self) -> list[complex]:
        return [v for v, m in self.pairs for _ in range(m)]


def _perm_sign(perm: tuple[int, ...]) -> int:
    inversions = sum(
        1 for a in range(len(perm)) for b in range(a + 1, len(perm))
        if perm[a] > perm[b]
    )
    return -1 if inversions & 1 else 1


def charpoly_exact(b: ButsonMatrix) -> ExactPoly:
    """Exact det(xI - B) over Z[zeta_q].

    The x^(n-k) coefficient is (-1)^k times the sum of the k x k principal
    minors; every minor term is a signed root of unity, so the sums accumulate
    in plain integer vectors indexed by exponent.
    """
    n, q, e = b.n, b.q, b.exponents
    if n > 8:
        raise ValueError("exact characteristic polynomial is limited to n <= 8")
    acc = [[0] * q for _ in range(n + 1)]  # acc[k][m]: zeta^m count in the k-minor sum
    acc[0][0] = 1
    for k in range(1, n + 1):
        vec = acc[k]
        for subset in combinations(range(n), k):
            for perm in permutations(range(k)):
                s = 0
                for pos in range(k):
                    s += e[subset[pos]][subset[perm[pos]]]
                vec[s % q] += _perm_sign(perm)
    coeffs = [None] * (n + 1)
    for k in range(n + 1):
        sign = -1 if k & 1 else 1
        coeffs[n - k] = CycInt(q, [sign * v for v in acc[k]])
    return ExactPoly(q, tuple(coeffs))


def scale(p: ExactPoly, n: int) -> ScaledPoly:
    """View of det(xI - H/sqrt(n)); pure bookkeeping, exactly invertible."""
    if p.degree != n:
        raise ValueError(f"polynomial degree {p.degree} does not match n={n}")
    return ScaledPoly(n=n, q=p.q, e=p.coeffs)


def poly_eq(p1: ScaledPoly, p2: ScaledPoly) -> bool:
    """Exact coefficientwise equality, after embedding into a common root order."""
    if p1.n != p2.n:
        raise ValueError("polynomials of different dimension are not comparable")
    if p1.q == p2.q:
        return p1.e == p2.e
    q = math.lcm(p1.q, p2.q)
    return all(a.to_order(q) == b.to_order(q) for a, b in zip(p1.e, p2.e))


def _horner(coeffs: list[complex], x: complex) -> complex:
    out = 0j
    for c in reversed(coeffs):
        out = out * x + c
    return out


def _durand_kerner(coeffs: list[complex], max_iter: int = 1000) -> list[complex]:
    # Simultaneous iteration on the monic polynomial; starting points sit on a
    # circle of radius 1.2 with an irrational angular offset so no iterate
    # coincides with a root or another iterate.
    n = len(coeffs) - 1
    offset = math.sqrt(2.0) / 2.0
    z = [1.2 * cmath.exp(1j * (2.0 * math.pi * k / n + offset)) for k in range(n)]
    for _ in range(max_iter):
        max_step = 0.0
        for i in range(n):
            denom = 1.0 + 0j
            for j in range(n):
                if j != i:
                    denom *= z[i] - z[j]
            step = _horner(coeffs, z[i]) / denom
            z[i] -= step
            max_step = max(max_step, abs(step))
        if max_step < 1e-13:
            break
    return z


def _cluster(points: list[complex], radius: float) -> list[list[complex]]:
    # Single-linkage grouping; fine for a handful of points.
    groups: list[list[complex]] = []
    for p in sorted(points, key=lambda v: (v.real, v.imag)):
        for g in groups:
            if any(abs(p - other) <= radius for other in g):
                g.append(p)
                break
        else:
            groups.append([p])
    return groups


def _poly_derivative(coeffs: list[complex]) -> list[complex]:
    return [k * c for k, c in enumerate(coeffs)][1:]


def _polish_root(coeffs: list[complex], x0: complex, mult: int,
                 trust_radius: float) -> complex:
    # An m-fold root of p is a simple root of the (m-1)-th derivative, where
    # Newton regains quadratic convergence; stalled multiple-root iterates sit
    # O(sqrt(eps)) away, their centroid plus this step lands at O(eps).
    g = list(coeffs)
    for _ in range(mult - 1):
        g = _poly_derivative(g)
    dg = _poly_derivative(g)
    x = x0
    for _ in range(60):
        denom = _horner(dg, x)
        if denom == 0:
            break
        step = _horner(g, x) / denom
        x -= step
        if abs(x - x0) > trust_radius:
            return x0
        if abs(step) < 1e-15:
            break
    return x


def spectrum_numeric(p: ScaledPoly, tol: float = 1e-8,
                     cluster_radius: float = 1e-4) -> Spectrum:
    """Roots of the scaled polynomial, clustered into multiplicities.

    Raises ConvergenceError when a polished representative leaves a residual
    above tol. The radius must cover the stall distance of multiple roots in
    double precision, roughly eps^(1/m) for an m-fold root (5e-6 at m = 3),
    while staying far below the separation of distinct catalog roots (> 0.1).
    """
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    coeffs = p.complex_coeffs()
    raw = _durand_kerner(coeffs)
    pairs = []
    for group in _cluster(raw, cluster_radius):
        centroid = sum(group) / len(group)
        root = _polish_root(coeffs, centroid, len(group), 10.0 * cluster_radius)
        if abs(_horner(coeffs, root)) > tol:
            raise ConvergenceError(
                f"root residual {abs(_horner(coeffs, root)):.3e} exceeds {tol:.3e}"
            )
        pairs.append((root, len(group)))
    pairs.sort(key=lambda vm: (vm[0].real, vm[0].imag))
    for (v1, _), (v2, _) in zip(pairs, pairs[1:]):
        if abs(v1 - v2) <= cluster_radius:
            raise ConvergenceError("cluster representatives are not separated")
    return Spectrum(tuple(pairs))


def spectrum_distance(spec: Spectrum, reference) -> float:
    """Best max per-eigenvalue distance between spec and (value, mult) pairs.

    Matching is optimal over all pairings of the expanded multisets, so
    coincident or conjugate values cannot be mispaired by sort order.
    """
    left = spec.values()
    right = [v for v, m in reference for _ in range(m)]
    if len(left) != len(right):
        raise ValueError("spectra have different total multiplicity")
    best = math.inf
    for perm in permutations(range(len(right))):
        worst = max(abs(left[i] - right[perm[i]]) for i in range(len(left)))
        if worst < best:
            best = worst
    return best


def haagerup_set(b: ButsonMatrix) -> Counter:
    """Multiset of e_ij + e_kl - e_il - e_kj mod q over all index quadruples."""
    e = np.array(b.exponents, dtype=np.int64)
    quad = (e[:, None, :, None] + e[None, :, None, :]
            - e[:, None, None, :] - e[None, :, :, None]) % b.q
    values, counts = np.unique(quad, return_counts=True)
    return Counter({int(v): int(c) for v, c in zip(values, counts)})


def deformation_system(b: ButsonMatrix) -> np.ndarray:
    """Real linear system whose kernel holds first-order Hadamard deformations.

    Unknowns are the n^2 real entries of R (flattened row-major); each ordered
    row pair i < j contributes the real and imaginary parts of
    sum_k H_ik conj(H_jk) (R_ik - R_jk) = 0.
    """
    h = b.to_complex()
    n = b.n
    rows = []
    for i in range(n):
        for j in range(i + 1, n):
            w = h[i] * np.conj(h[j])
            coef = np.zeros(n * n, dtype=np.complex128)
            coef[i * n:(i + 1) * n] += w
            coef[j * n:(j + 1) * n] -= w
            rows.append(coef.real)
            rows.append(coef.imag)
    return np.array(rows)


def rank_from_singular_values(sigmas, tol: float) -> int:
    """Count singular values above the cut, refusing the band (tol, 10*tol).

    Ratios against the largest singular value below tol count as zero; a ratio
    strictly inside the band means the rank cannot be certified.
    """
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    sigmas = np.asarray(sigmas, dtype=np.float64)
    smax = float(np.max(sigmas))
    if smax == 0.0:
        return 0
    ratios = sigmas / smax
    if np.any((ratios > tol) & (ratios < 10.0 * tol)):
        raise IndeterminateRankError(
            "singular values inside the undecidable band; rank is ambiguous"
        )
    return int(np.sum(ratios >= 10.0 * tol))


def defect(b: ButsonMatrix, tol: float = 1e-8) -> int:
    """Isolation certificate: 0 means no first-order deformations beyond phases.

    Rank is decided by singular values; anything in (tol, 10*tol) times the
    largest singular value is refused rather than silently classified.
    """
    if not is_hadamard_exact(b):
        raise ValueError("defect is defined for Hadamard matrices only")
    sigmas = np.linalg.svd(deformation_system(b), compute_uv=False)
    rank = rank_from_singular_values(sigmas, tol)
    n = b.n
    return n * n - rank - (2 * n - 1)


def eig_real_symmetric(m: np.ndarray, tol: float = 1e-10) -> list[float]:
    """Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.

    Sweeps run until the off-diagonal Frobenius norm drops below 1e-12. The
    trace identity and the eigenvector residuals are checked against tol
    before returning; eigenvalues come back sorted ascending.
    """
    a = np.array(m, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("matrix must be square")
    if not np.array_equal(a, a.T):
        raise ValueError("matrix must be exactly symmetric")
    n = a.shape[0]
    trace = float(np.trace(a))
    scale_ref = max(1.0, float(np.max(np.abs(a))))
    v = np.eye(n)
    for _ in range(100):
        off = math.sqrt(2.0 * sum(a[p, q] ** 2 for p in range(n) for q in range(p + 1, n)))
        if off < 1e-12:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                if abs(a[p, q]) <= off * 1e-20:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * a[p, q])
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                rot = np.eye(n)
                rot[p, p] = rot[q, q] = c
                rot[p, q] = s
                rot[q, p] = -s
                a = rot.T @ a @ rot
                v = v @ rot
    else:
        raise ConvergenceError("Jacobi sweeps did not reduce the off-diagonal norm")
    eigs = np.diag(a).copy()
    if abs(float(np.sum(eigs)) - trace) > tol * scale_ref * n:
        raise ConvergenceError("eigenvalue sum drifted away from the trace")
    residual = np.max(np.abs(np.array(m, dtype=np.float64) @ v - v * eigs))
    if residual > tol * scale_ref * n:
        raise ConvergenceError(f"eigenvector residual {residual:.3e} too large")
    return sorted(float(x) for x in eigs)


def closed_form_A2a(a: float) -> list[float]:
    """The published closed-form spectrum of the symmetric family A2(a).

    Evaluated verbatim for comparison reporting only, never as ground truth:
    the first pair is (1 + a + a^2 +- sqrt(a^2 (1 + a^2) + 5)) / sqrt(6), the
    second (+- sqrt(5 a^2 (a-1)^2) + 2 - a(1+a)) / (2 sqrt(6)) doubled.
    """
    if not math.isfinite(a):
        raise ValueError("parameter must be a finite real number")
    s = 1.0 + a + a * a
    r = math.sqrt(a * a * (1.0 + a * a) + 5.0)
    t = 2.0 - a * (1.0 + a)
    u = math.sqrt(5.0 * a * a * (a - 1.0) * (a - 1.0))
    rt6 = math.sqrt(6.0)
    first = [(s + r) / rt6, (s - r) / rt6]
    second_plus = (u + t) / (2.0 * rt6)
    second_minus = (-u + t) / (2.0 * rt6)
    return [first[0], first[1], second_plus, second_plus, second_minus, second_minus]


def _poly3(pairs) -> ScaledPoly:
    return ScaledPoly(6, 3, tuple(CycInt(3, [a, b]) for a, b in pairs))


def _poly4(pairs) -> ScaledPoly:
    return ScaledPoly(6, 4, tuple(CycInt(4, [a, b]) for a, b in pairs))


# Published spectral functions, one e-vector per catalog name, coefficients as
# (integer, zeta-coefficient) pairs for degrees 0..6. These are the reference
# values the computed polynomials are audited against.
REFERENCE_SPECTRAL_FUNCTIONS: dict[str, ScaledPoly] = {
    "A10": _poly3([(-216, 0), (144, 72), (-18, -36), (6, 12), (-3, -6), (-2, 2), (1, 0)]),
    "A20": _poly3([(-216, 0), (-144, -72), (-36, -18), (-6, -12), (3, -3), (2, -2), (1, 0)]),
    "A30": _poly3([(-216, 0), (-72, -144), (36, 18), (6, 12), (-3, 3), (-2, -4), (1, 0)]),
    "A40": _poly3([(-216, 0), (72, 144), (18, -18), (-6, -12), (-6, -3), (2, 4), (1, 0)]),
    "A50": _poly3([(-216, 0), (-72, 72), (-18, 18), (6, 12), (6, 3), (4, 2), (1, 0)]),
    "A60": _poly3([(-216, 0), (72, -72), (18, 36), (-6, -12), (3, 6), (-4, -2), (1, 0)]),
    "A01": _poly3([(-216, 0), (-72, -36), (0, 0), (6, 12), (0, 0), (1, -1), (1, 0)]),
    "A02": _poly3([(-216, 0), (-36, 36), (0, 0), (-6, -12), (0, 0), (2, 1), (1, 0)]),
    "A03": _poly3([(-216, 0), (-72, -36), (0, 0), (6, 12), (0, 0), (1, -1), (1, 0)]),
    "M6": _poly4([(-216, 0), (0, 0), (108, 0), (0, 0), (-18, 0), (0, 0), (1, 0)]),
}

_SQRT2 = math.sqrt(2.0)
_SQRT3 = math.sqrt(3.0)
_SQRT5 = math.sqrt(5.0)

# Published eigenvalue multisets (value, multiplicity) for the scaled matrices.
REFERENCE_SPECTRA: dict[str, tuple[tuple[complex, int], ...]] = {
    "M6": ((-1.0 + 0j, 3), (1.0 + 0j, 3)),
    "M61": (
        (-1.0 + 0j, 2),
        (1.0 + 0j, 2),
        ((1j - _SQRT2) / _SQRT3, 1),
        (-(1j + _SQRT2) / _SQRT3, 1),
    ),
    "A1": (
        (-1.0 + 0j, 1),
        (1.0 + 0j, 1),
        ((_SQRT3 - 1j * _SQRT5) / (2.0 * _SQRT2), 2),
        ((_SQRT3 + 1j * _SQRT5) / (2.0 * _SQRT2), 2),
    ),
}
