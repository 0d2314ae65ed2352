"""Numeric and exact analysis of the matrix families.

Covers determinants in both scalar regimes, definiteness verdicts,
membership of a distance vector in the cone of vectors realizable by
actual point configurations, spectral reconstruction of a configuration
from distances, simplex volumes, and the quadratic / biquadratic / quartic
forms attached to the matrix families.

The numeric regime uses IEEE doubles with a relative tolerance; the exact
regime turns the same questions into exact rational computations whose
answers are certificates.  The regime is chosen by the scalars of the
input, never by implicit conversion.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import exact
from .builders import Matrix, GenericEntryTable, nbody_matrix, reduced_edm, w_matrix
from .core import (
    DimensionMismatch,
    DistanceVector,
    NotEmbeddableError,
    PairSpace,
    PointConfiguration,
    alpha_values,
    distances,
)
from .polys import SparsePoly, poly_det
from .scalars import all_exact

VERDICT_PD = exact.VERDICT_PD
VERDICT_PSD = exact.VERDICT_PSD
VERDICT_INDEFINITE = exact.VERDICT_INDEFINITE

MEMBER_INTERIOR = "interior"
MEMBER_BOUNDARY = "boundary"
MEMBER_OUTSIDE = "outside"


def _rows(matrix) -> list[list]:
    if isinstance(matrix, Matrix):
        return matrix.to_lists()
    return [list(row) for row in matrix]


def _classify(rows) -> str:
    has_poly = any(isinstance(v, SparsePoly) for row in rows for v in row)
    if has_poly:
        return "symbolic"
    if all(all_exact(row) for row in rows):
        return "exact"
    return "numeric"


def determinant(matrix):
    """Determinant in the regime of the entries.

    Polynomial entries use exact symbolic expansion, rational entries use
    fraction-free elimination, and float entries use LU factorization.
    """
    rows = _rows(matrix)
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise DimensionMismatch("determinant requires a square matrix")
    regime = _classify(rows)
    if regime == "symbolic":
        return poly_det(rows)
    if regime == "exact":
        return exact.det(rows)
    if n == 0:
        return 1.0
    return float(np.linalg.det(np.array(rows, dtype=float)))


@dataclass(frozen=True)
class DefinitenessReport:
    """Verdict on a symmetric matrix, with supporting evidence.

    `min_eigenvalue` is a float certificate (informational in the exact
    regime, decisive in the numeric one); `rank` counts positive pivots for
    semidefinite exact matrices and thresholded eigenvalues otherwise.
    """

    verdict: str
    min_eigenvalue: float
    rank: int
    tol: float
    exact_regime: bool

    @property
    def is_positive_definite(self) -> bool:
        return self.verdict == VERDICT_PD

    @property
    def is_positive_semidefinite(self) -> bool:
        return self.verdict in (VERDICT_PD, VERDICT_PSD)


def definiteness(matrix, tol: float = 1e-10) -> DefinitenessReport:
    """Classify a symmetric matrix as PD / PSD / indefinite.

    The exact regime pivots on positive diagonal entries and inspects
    Schur complements, which decides semidefiniteness exactly even for
    singular matrices.  The numeric regime thresholds eigenvalues at
    tol * max(|lambda|, 1).
    """
    rows = _rows(matrix)
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise DimensionMismatch("definiteness requires a square matrix")
    if n == 0:
        return DefinitenessReport(VERDICT_PD, math.inf, 0, tol, True)
    if _classify(rows) == "exact":
        for i in range(n):
            for j in range(i + 1, n):
                if rows[i][j] != rows[j][i]:
                    raise ValueError("matrix is not symmetric")
        verdict, rank = exact.psd_verdict(rows)
        eigs = np.linalg.eigvalsh(np.array([[float(v) for v in r] for r in rows]))
        return DefinitenessReport(verdict, float(eigs[0]), rank, tol, True)
    a = np.array(rows, dtype=float)
    scale = float(np.max(np.abs(a))) if n else 0.0
    if not np.allclose(a, a.T, atol=tol * max(scale, 1.0), rtol=0.0):
        raise ValueError("matrix is not symmetric beyond tolerance")
    a = (a + a.T) / 2.0
    eigs = np.linalg.eigvalsh(a)
    thr = tol * max(float(np.max(np.abs(eigs))), 1.0)
    min_eig = float(eigs[0])
    if min_eig > thr:
        verdict = VERDICT_PD
        rank = n
    elif min_eig >= -thr:
        verdict = VERDICT_PSD
        rank = int(np.count_nonzero(eigs > thr))
    else:
        verdict = VERDICT_INDEFINITE
        rank = int(np.count_nonzero(np.abs(eigs) > thr))
    return DefinitenessReport(verdict, min_eig, rank, tol, False)


def cone_membership(r: DistanceVector, tol: float = 1e-10) -> str:
    """Locate a distance vector relative to the realizable cone.

    The reduced matrix at the last base point is positive definite exactly
    for interior vectors (realizable in no affine subspace of dimension
    n-2), semidefinite on the boundary, and indefinite outside, in which
    case no point configuration realizes r.
    """
    if r.n == 1:
        return MEMBER_INTERIOR
    report = definiteness(reduced_edm(r, r.n - 1), tol)
    if report.verdict == VERDICT_PD:
        return MEMBER_INTERIOR
    if report.verdict == VERDICT_PSD:
        return MEMBER_BOUNDARY
    return MEMBER_OUTSIDE


@dataclass(frozen=True)
class EmbeddingResult:
    """A reconstructed configuration plus the round-trip distance error."""

    config: PointConfiguration
    d: int
    residual: float

    def to_json_dict(self) -> dict:
        doc = self.config.to_json_dict()
        doc["residual"] = self.residual
        return doc


def embed(r: DistanceVector, tol: float = 1e-10) -> EmbeddingResult:
    """Reconstruct points from distances by spectral factorization.

    Factor the reduced matrix M = Q diag(lambda) Q^T, keep the eigenvalues
    above tol * max(|lambda|, 1), and read points off the rows of
    sqrt(lambda/2) Q^T with the last point pinned at the origin.  The
    minimal embedding dimension is the count of retained eigenvalues.
    Distance vectors outside the cone are refused, with the offending
    eigenvalue attached to the error.
    """
    n = r.n
    if n == 1:
        return EmbeddingResult(PointConfiguration([()]), 0, 0.0)
    m = np.array(
        [[float(v) for v in row] for row in reduced_edm(r, n - 1).to_lists()]
    )
    m = (m + m.T) / 2.0
    eigvals, eigvecs = np.linalg.eigh(m)
    thr = tol * max(float(np.max(np.abs(eigvals))), 1.0) if eigvals.size else 0.0
    if eigvals.size and float(eigvals[0]) < -thr:
        raise NotEmbeddableError(
            "distance vector lies outside the realizable cone "
            f"(eigenvalue {float(eigvals[0]):.6g})",
            float(eigvals[0]),
        )
    order = np.argsort(eigvals)[::-1]
    kept = [int(i) for i in order if float(eigvals[i]) > thr]
    d = len(kept)
    diffs = np.zeros((d, n - 1))
    for row, i in enumerate(kept):
        diffs[row] = math.sqrt(float(eigvals[i]) / 2.0) * eigvecs[:, i]
    points = [tuple(float(x) for x in diffs[:, col]) for col in range(n - 1)]
    points.append((0.0,) * d)
    config = PointConfiguration(points)
    back = distances(config)
    scale = max((float(v) for v in r.values), default=0.0)
    if scale == 0.0:
        scale = 1.0
    residual = 0.0
    for p in r.space.pairs:
        err = abs(float(back.get(p.i, p.j)) - float(r.get(p.i, p.j))) / scale
        residual = max(residual, err)
    return EmbeddingResult(config, d, residual)


def simplex_volume_sq(r: DistanceVector, tol: float = 1e-10):
    """Squared (n-1)-volume of the simplex with the given edge lengths.

    Obtained from the bordered squared-distance determinant divided by
    (-1)^n 2^(n-1) ((n-1)!)^2; exact for rational input.  Distance vectors
    outside the realizable cone are refused.
    """
    from .builders import cayley_menger

    if cone_membership(r, tol) == MEMBER_OUTSIDE:
        raise NotEmbeddableError(
            "no simplex realizes this distance vector", math.nan
        )
    n = r.n
    delta = determinant(cayley_menger(r))
    divisor = (-1) ** n * 2 ** (n - 1) * math.factorial(n - 1) ** 2
    if all_exact([delta]):
        value = Fraction(delta, divisor)
        return value.numerator if value.denominator == 1 else value
    return delta / divisor


def edm_quadratic_form(r: DistanceVector, x):
    """x^T D x where D is the squared-distance matrix."""
    x = list(x)
    if len(x) != r.n:
        raise DimensionMismatch("vector length must equal n")
    total = 0
    for p in r.space.pairs:
        total = total + 2 * r.sq(p.i, p.j) * x[p.i] * x[p.j]
    return total


def reduced_quadratic_form(r: DistanceVector, k: int, x):
    """x-hat^T M_k x-hat, dropping coordinate k of x."""
    x = list(x)
    if len(x) != r.n:
        raise DimensionMismatch("vector length must equal n")
    m = reduced_edm(r, k)
    others = [i for i in range(r.n) if i != k]
    total = 0
    for a, i in enumerate(others):
        for b, j in enumerate(others):
            total = total + m[a, b] * x[i] * x[j]
    return total


def mass_quadratic_form(alpha, x):
    """sum_i alpha_i x_i^2."""
    values = alpha_values(alpha)
    x = list(x)
    if len(x) != len(values):
        raise DimensionMismatch("vector length must equal n")
    total = 0
    for a, xi in zip(values, x):
        total = total + a * xi * xi
    return total


def gram_quadratic_form(cfg: PointConfiguration, x):
    """Squared norm of sum_i x_i p_i (the Gram form of the configuration)."""
    x = list(x)
    if len(x) != cfg.n:
        raise DimensionMismatch("vector length must equal n")
    total = 0
    for m in range(cfg.d):
        coord = 0
        for i in range(cfg.n):
            coord = coord + x[i] * cfg.points[i][m]
        total = total + coord * coord
    return total


def pair_products(x, n: int) -> list:
    """The pair-indexed vector (x_i * x_j) over the C(n,2) pairs."""
    x = list(x)
    if len(x) != n:
        raise DimensionMismatch("vector length must equal n")
    return [x[p.i] * x[p.j] for p in PairSpace(n).pairs]


def biquadratic_form(s: GenericEntryTable, t: GenericEntryTable, x, y):
    """Double pair sum of w entries weighted by x_i x_j y_k y_l."""
    if s.n != t.n:
        raise DimensionMismatch("both entry tables must have the same n")
    w = w_matrix(s, t)
    zx = pair_products(x, s.n)
    zy = pair_products(y, s.n)
    total = 0
    for a, row in enumerate(w.data):
        for b, entry in enumerate(row):
            total = total + entry * zx[a] * zy[b]
    return total


def nbody_quartic_form(alpha, r: DistanceVector, x):
    """Quartic pair form z^T B z with z the pair products of x."""
    b = nbody_matrix(alpha, r)
    z = pair_products(x, r.n)
    total = 0
    for a, row in enumerate(b.data):
        for c, entry in enumerate(row):
            total = total + entry * z[a] * z[c]
    return total
