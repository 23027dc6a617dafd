"""Period integrals of hyperelliptic curves and Fermat closed forms.

Hyperelliptic periods are computed over a chain of loops: branch points
are sorted (by real part, then imaginary part) and the loop gamma_j
encircles the consecutive pair (b_j, b_j+1).  The period of
x^(k-1) dx / y over such a loop collapses to twice the segment integral

    2 * int_{b_j}^{b_j+1} x^(k-1) / sqrt(f(x)) dx,

evaluated with Gauss-Chebyshev quadrature after the cosine substitution
x = mid + half*cos(theta), which absorbs the inverse-square-root endpoint
singularities exactly.  The square-root branch is tracked continuously
along each segment from an anchor at the left endpoint.

Each per-segment branch choice flips the orientation of its loop, so the
chain's intersection matrix is tridiagonal with unknown signs on the
off-diagonal.  The signs are recovered from the computed periods
themselves: for the correct intersection matrix E the bilinear identity
P^T E^(-1) P = 0 holds and -(i/2) P^T E^(-1) conj(P) is positive
definite, so a search over the 2^(2g-1) sign patterns picks out E.  A
wrong pattern fails the identity at O(1), far above quadrature error.
The resulting symplectic change of basis then normalizes the table to a
candidate period matrix Omega = B A^(-1).

Fermat periods use the classical closed form: on x^d + y^d = 1 the
integral of x^(r-1) y^(s-d) dx along the path x = t, y = (1-t^d)^(1/d)
from (0,1) to (1,0) equals B(r/d, s/d) / d, and the automorphism
translate (x, y) -> (zeta^a x, zeta^b y) multiplies it by zeta^(a*r+b*s).
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .curves import FermatCurve, HyperellipticCurve
from .errors import (
    DomainError,
    NormalizationError,
    NumericError,
    SingularIntegrandError,
    UnsupportedConfigurationError,
    ValidationError,
)

DEFAULT_NODES = 256
MAX_NODES = 8192
NODE_DOUBLING_TARGET = 1e-10
CONDITION_LIMIT = 1e10
# Residual threshold (relative to the period scale) accepted for the
# bilinear identity when selecting the intersection sign pattern.
BILINEAR_TOL = 1e-6


# ---------------------------------------------------------------------------
# Data types


@dataclass(frozen=True, eq=False)
class RawPeriodTable:
    """2g x g table of unnormalized cycle-by-differential integrals."""

    rows: tuple[str, ...]
    cols: tuple[str, ...]
    entries: np.ndarray
    quadrature_nodes: int
    est_error: float

    def __post_init__(self):
        n_cycles, n_diffs = self.entries.shape
        if n_cycles != 2 * n_diffs:
            raise ValidationError("raw period table must be 2g x g")
        if not (math.isfinite(self.est_error) and self.est_error >= 0):
            raise ValidationError("est_error must be finite and non-negative")

    @property
    def g(self) -> int:
        return self.entries.shape[1]


@dataclass(frozen=True, eq=False)
class HomologyBasis:
    """Chain cycles with their intersection data.

    ``symplectic_transform`` T satisfies T E T^T = [[0, I], [-I, 0]]
    exactly in integer arithmetic, where E is the intersection matrix.
    """

    cycles: tuple[dict, ...]
    intersection_matrix: tuple[tuple[int, ...], ...]
    symplectic_transform: tuple[tuple[int, ...], ...]


@dataclass(frozen=True, eq=False)
class PeriodMatrix:
    g: int
    entries: np.ndarray
    provenance: dict = field(default_factory=dict)


# ---------------------------------------------------------------------------
# Segment quadrature


def _tracked_sqrt(values: np.ndarray) -> np.ndarray:
    """Square root with branch continued along the sample sequence.

    The first sample uses the principal branch; each subsequent sample
    keeps whichever sign is closer to its predecessor.  Samples must be
    dense enough that consecutive principal roots differ by less than a
    quarter turn, which Chebyshev nodes guarantee for the integrands
    used here.
    """
    s = np.sqrt(values.astype(complex))
    if s.size <= 1:
        return s
    d = s[1:] * np.conj(s[:-1])
    flips = np.where(d.real < 0.0, -1.0, 1.0)
    signs = np.concatenate(([1.0], np.cumprod(flips)))
    return s * signs


def _segment_node_data(roots, leading, a, b, N):
    """Quadrature nodes x_n and branch values phi_n for one segment.

    phi is the continuously tracked branch of sqrt(-leading * R(x)) with
    R the polynomial over the roots other than a and b; the anchor at
    x = a uses the principal square root.
    """
    other = list(roots)
    other.remove(a)
    other.remove(b)
    mid = (a + b) / 2.0
    half = (b - a) / 2.0
    theta = (2.0 * np.arange(1, N + 1) - 1.0) * np.pi / (2.0 * N)
    u = np.cos(theta)[::-1]  # ascending from near -1 to near +1
    x = mid + half * u
    sample_x = np.concatenate(([complex(a)], x))
    v = np.full(sample_x.shape, -complex(leading), dtype=complex)
    for e in other:
        v *= sample_x - e
    # + 0j canonicalizes any -0.0 imaginary parts, which would otherwise
    # flip the principal branch cut of the square root
    phi = _tracked_sqrt(v + 0j)[1:]
    return x, phi


def _point_segment_distance(p, a, b) -> float:
    ab = b - a
    denom = abs(ab) ** 2
    if denom == 0.0:
        return abs(p - a)
    t = ((p - a) * np.conj(ab)).real / denom
    t = min(1.0, max(0.0, t))
    return abs(p - (a + t * ab))


def chebyshev_segment_integral(
    poly_roots: Sequence[complex],
    k: int,
    a: complex,
    b: complex,
    N: int,
    leading: complex = 1.0,
) -> complex:
    """int_a^b x^(k-1) / sqrt(f(x)) dx for f with the given roots.

    a and b must themselves be roots with no other root in the interior
    of the segment; the endpoint singularities are absorbed by the
    cosine substitution and the square root uses the principal branch
    continued from x = a.
    """
    if a == b:
        raise DomainError("segment endpoints must differ")
    if k < 1:
        raise DomainError("k must be >= 1")
    if N < 4:
        raise DomainError("N must be >= 4")
    roots = [complex(r) for r in poly_roots]
    a, b = complex(a), complex(b)
    if a not in roots or b not in roots:
        raise DomainError("segment endpoints must be branch points of f")
    scale = max(abs(a - b), 1.0)
    for e in roots:
        if e in (a, b):
            continue
        if _point_segment_distance(e, a, b) < 1e-12 * scale:
            raise SingularIntegrandError(f"branch point {e} lies on the integration segment")
    x, phi = _segment_node_data(roots, complex(leading), a, b, N)
    return complex((np.pi / N) * np.sum(x ** (k - 1) / phi))


# ---------------------------------------------------------------------------
# Chain geometry


def _segments_intersect(p1, p2, p3, p4, eps=1e-12) -> bool:
    """Proper or touching intersection of segments p1p2 and p3p4."""

    def cross(o, u, v):
        return ((u - o) * np.conj(v - o)).imag

    scale = max(abs(p2 - p1), abs(p4 - p3), 1.0)
    d1 = cross(p3, p4, p1)
    d2 = cross(p3, p4, p2)
    d3 = cross(p1, p2, p3)
    d4 = cross(p1, p2, p4)
    if ((d1 > eps * scale and d2 < -eps * scale) or (d1 < -eps * scale and d2 > eps * scale)) and (
        (d3 > eps * scale and d4 < -eps * scale) or (d3 < -eps * scale and d4 > eps * scale)
    ):
        return True

    def on_segment(o, u, p):
        if abs(cross(o, u, p)) > eps * scale:
            return False
        t = ((p - o) * np.conj(u - o)).real / max(abs(u - o) ** 2, eps)
        return -eps <= t <= 1 + eps

    return any(
        on_segment(*args)
        for args in ((p3, p4, p1), (p3, p4, p2), (p1, p2, p3), (p1, p2, p4))
    )


def _chain_segments(curve: HyperellipticCurve):
    """Sorted branch points and the 2g consecutive segments of the chain."""
    pts = sorted(curve.branch_points, key=lambda z: (z.real, z.imag))
    g = curve.genus()
    segs = [(pts[j], pts[j + 1]) for j in range(2 * g)]
    scale = max(abs(p - q) for p, q in segs)
    for p, q in segs:
        for e in pts:
            if e in (p, q):
                continue
            if _point_segment_distance(e, p, q) < 1e-9 * scale:
                raise UnsupportedConfigurationError(
                    "a branch point lies on a chain segment; this branch-point "
                    "configuration is not supported"
                )
    for j in range(len(segs)):
        for l in range(j + 2, len(segs)):
            if _segments_intersect(*segs[j], *segs[l]):
                raise UnsupportedConfigurationError(
                    "non-adjacent chain segments intersect; this branch-point "
                    "configuration is not supported"
                )
    return pts, segs


# ---------------------------------------------------------------------------
# Intersection sign recovery and symplectic reduction


def _tridiagonal_intersection(signs: Sequence[int]) -> list[list[int]]:
    n = len(signs) + 1
    E = [[0] * n for _ in range(n)]
    for j, s in enumerate(signs):
        E[j][j + 1] = s
        E[j + 1][j] = -s
    return E


def _choose_intersection_matrix(P: np.ndarray) -> list[list[int]]:
    """Select the chain intersection signs from the periods themselves.

    For the true intersection matrix E the computed 2g x g period table
    P satisfies P^T E^(-1) P = 0 up to quadrature error, and the
    Hermitian form -(i/2) P^T E^(-1) conj(P) is positive definite.
    """
    n = P.shape[0]
    g = P.shape[1]
    scale = float(np.max(np.abs(P))) ** 2
    best = None
    for code in range(2 ** (n - 1)):
        signs = [1 if (code >> i) & 1 == 0 else -1 for i in range(n - 1)]
        E = np.array(_tridiagonal_intersection(signs), dtype=float)
        Einv = np.linalg.inv(E)
        M = P.T @ Einv @ P
        residual = float(np.max(np.abs(M))) / scale if g > 1 else 0.0
        H = -0.5j * (P.T @ Einv @ np.conj(P))
        H = (H + np.conj(H).T) / 2.0
        min_eig = float(np.linalg.eigvalsh(H)[0])
        if min_eig <= 0.0:
            continue
        if best is None or residual < best[0]:
            best = (residual, signs)
    if best is None:
        raise NumericError("no intersection sign pattern gives a positive period form")
    residual, signs = best
    if residual > BILINEAR_TOL:
        raise NumericError(
            f"bilinear identity residual {residual:.3e} too large; periods unreliable"
        )
    return _tridiagonal_intersection(signs)


def symplectic_transform_from_intersection(E: Sequence[Sequence[int]]) -> list[list[int]]:
    """Integer T with T E T^T = [[0, I], [-I, 0]] for unimodular skew E."""
    n = len(E)
    if n % 2 != 0:
        raise ValidationError("intersection matrix must have even size")
    E = [[int(x) for x in row] for row in E]

    def pair(u, v):
        return sum(u[i] * E[i][j] * v[j] for i in range(n) for j in range(n) if E[i][j])

    remaining = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    alphas, betas = [], []
    while remaining:
        u = remaining.pop(0)
        ds = [pair(u, w) for w in remaining]
        while True:
            nz = [i for i, d in enumerate(ds) if d != 0]
            if not nz:
                raise ValidationError("intersection form is degenerate")
            if len(nz) == 1:
                break
            i = min(nz, key=lambda t: abs(ds[t]))
            for j in nz:
                if j == i:
                    continue
                q = ds[j] // ds[i]
                if q:
                    remaining[j] = [wj - q * wi for wj, wi in zip(remaining[j], remaining[i])]
                    ds[j] -= q * ds[i]
        i = nz[0]
        if abs(ds[i]) != 1:
            raise ValidationError("intersection form is not unimodular")
        v = remaining.pop(i)
        if ds[i] < 0:
            v = [-x for x in v]
        for idx, w in enumerate(remaining):
            cwv = pair(w, v)
            cwu = pair(w, u)
            remaining[idx] = [wi - cwv * ui + cwu * vi for wi, ui, vi in zip(w, u, v)]
        alphas.append(u)
        betas.append(v)
    T = alphas + betas
    g = n // 2
    check = [[pair(T[i], T[j]) for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(n):
            expected = 0
            if j == i + g:
                expected = 1
            elif i == j + g:
                expected = -1
            if check[i][j] != expected:
                raise NumericError("symplectic reduction failed verification")
    return T


# ---------------------------------------------------------------------------
# Hyperelliptic periods


def _chain_period_table(curve: HyperellipticCurve, segs, N: int) -> np.ndarray:
    g = curve.genus()
    roots = list(curve.branch_points)
    P = np.empty((2 * g, g), dtype=complex)
    for j, (a, b) in enumerate(segs):
        x, phi = _segment_node_data(roots, curve.leading_coefficient, a, b, N)
        inv_phi = 1.0 / phi
        for k in range(1, g + 1):
            P[j, k - 1] = 2.0 * (np.pi / N) * np.sum(x ** (k - 1) * inv_phi)
    return P


def hyperelliptic_raw_periods(
    curve: HyperellipticCurve,
    nodes: int = DEFAULT_NODES,
    node_limit: int = MAX_NODES,
    target: float = NODE_DOUBLING_TARGET,
) -> tuple[RawPeriodTable, HomologyBasis]:
    """Raw chain periods of y^2 = f(x), with node-doubling error control.

    The node count doubles until the maximum entry change is below
    ``target`` or ``node_limit`` is reached; the final discrepancy is
    recorded as ``est_error`` either way.
    """
    if nodes < 4:
        raise DomainError("nodes must be >= 4")
    g = curve.genus()
    if g < 1:
        raise DomainError("genus must be >= 1")
    pts, segs = _chain_segments(curve)
    N = nodes
    P = _chain_period_table(curve, segs, N)
    while True:
        P2 = _chain_period_table(curve, segs, 2 * N)
        err = float(np.max(np.abs(P2 - P)))
        N *= 2
        P = P2
        if err <= target or 2 * N > node_limit:
            break
    E = _choose_intersection_matrix(P)
    T = symplectic_transform_from_intersection(E)
    cycles = tuple(
        {
            "segment": [[a.real, a.imag], [b.real, b.imag]],
            "sheet": 1,
        }
        for a, b in segs
    )
    hom = HomologyBasis(
        cycles=cycles,
        intersection_matrix=tuple(tuple(r) for r in E),
        symplectic_transform=tuple(tuple(r) for r in T),
    )
    raw = RawPeriodTable(
        rows=tuple(f"loop_{j}" for j in range(2 * g)),
        cols=tuple(f"x^{k}dx/y" for k in range(g)),
        entries=P,
        quadrature_nodes=N,
        est_error=err,
    )
    return raw, hom


def normalize(raw: RawPeriodTable, hom: HomologyBasis) -> PeriodMatrix:
    """Normalized period matrix Omega = B A^(-1) in the symplectic basis.

    A and B are the alpha- and beta-blocks of the symplectically
    transformed table; Omega is the matrix of beta-periods of the
    differential basis dual to the alpha-cycles.
    """
    g = raw.g
    T = np.array(hom.symplectic_transform, dtype=float)
    if T.shape != (2 * g, 2 * g):
        raise ValidationError("symplectic transform size does not match the table")
    TP = T @ raw.entries
    A = TP[:g]
    B = TP[g:]
    cond = float(np.linalg.cond(A))
    if not math.isfinite(cond) or cond > CONDITION_LIMIT:
        raise NormalizationError(f"A-block condition number {cond:.3e} exceeds {CONDITION_LIMIT:.1e}")
    omega = np.linalg.solve(A.T, B.T).T
    return PeriodMatrix(
        g=g,
        entries=omega,
        provenance={
            "nodes": raw.quadrature_nodes,
            "est_error": raw.est_error,
            "a_block_condition": cond,
        },
    )


# ---------------------------------------------------------------------------
# Beta function and Fermat closed forms


def beta_function(x: float, y: float) -> float:
    """Euler Beta via log-gamma; relative error at the 1e-12 level."""
    if x <= 0 or y <= 0:
        raise DomainError("beta_function requires positive arguments")
    return math.exp(math.lgamma(x) + math.lgamma(y) - math.lgamma(x + y))


def fermat_period_closed_form(d: int, r: int, s: int, a: int, b: int) -> complex:
    """Integral of x^(r-1) y^(s-d) dx over the (a, b) translate of the
    fundamental path on x^d + y^d = 1."""
    magnitude = beta_function(r / d, s / d) / d
    phase = 2.0 * math.pi * ((a * r + b * s) % d) / d
    return magnitude * complex(math.cos(phase), math.sin(phase))


@dataclass(frozen=True, eq=False)
class FermatPeriodTable:
    """Closed-form periods over 2g independent path translates."""

    degree: int
    diff_exponents: tuple[tuple[int, int], ...]
    cycles: tuple[tuple[int, int], ...]
    entries: np.ndarray

    @property
    def g(self) -> int:
        return len(self.diff_exponents)


def fermat_raw_periods(d: int, rank_tol: float = 1e-9) -> FermatPeriodTable:
    """Period table of the degree-d Fermat curve over 2g selected cycles.

    Candidate rows are the d^2 automorphism translates of the fundamental
    path, in lexicographic (a, b) order; a translate is accepted when it
    increases the real rank (complex rows viewed as vectors in R^(2g))
    by more than ``rank_tol`` relative to the row norm, until 2g rows
    are collected.
    """
    if not 4 <= d <= 15:
        raise DomainError("Fermat degree must satisfy 4 <= d <= 15")
    curve = FermatCurve(d)
    exps = curve.diff_exponents
    g = curve.genus_value()
    entries = []
    cycles = []
    ortho: list[np.ndarray] = []
    for a, b in itertools.product(range(d), repeat=2):
        row = np.array(
            [fermat_period_closed_form(d, r, s, a, b) for r, s in exps], dtype=complex
        )
        vec = np.concatenate([row.real, row.imag])
        norm = float(np.linalg.norm(vec))
        resid = vec.copy()
        for q in ortho:
            resid -= np.dot(q, resid) * q
        if float(np.linalg.norm(resid)) > rank_tol * norm:
            ortho.append(resid / np.linalg.norm(resid))
            entries.append(row)
            cycles.append((a, b))
            if len(entries) == 2 * g:
                break
    if len(entries) != 2 * g:
        raise NumericError("could not select 2g independent Fermat cycles")
    return FermatPeriodTable(
        degree=d,
        diff_exponents=exps,
        cycles=tuple(cycles),
        entries=np.array(entries, dtype=complex),
    )


# ---------------------------------------------------------------------------
# Period table files


def table_to_dict(entries: np.ndarray, kind: str, meta: dict) -> dict:
    entries = np.asarray(entries, dtype=complex)
    if kind not in ("raw", "normalized"):
        raise ValidationError("kind must be 'raw' or 'normalized'")
    g = entries.shape[1]
    return {
        "g": int(g),
        "kind": kind,
        "entries": [[[float(z.real), float(z.imag)] for z in row] for row in entries],
        "meta": meta,
    }


def dict_to_table(data: dict) -> tuple[np.ndarray, str, dict]:
    for key in ("g", "kind", "entries"):
        if key not in data:
            raise ValidationError(f"period file missing field {key!r}")
    entries = np.array(
        [[complex(re, im) for re, im in row] for row in data["entries"]], dtype=complex
    )
    if entries.ndim != 2 or entries.shape[1] != int(data["g"]):
        raise ValidationError("period file entries do not match the declared genus")
    return entries, data["kind"], data.get("meta", {})


def save_period_json(path, entries: np.ndarray, kind: str, meta: dict) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(table_to_dict(entries, kind, meta), fh, indent=2, sort_keys=True)
        fh.write("\n")


def load_period_json(path) -> tuple[np.ndarray, str, dict]:
    with open(path, "r", encoding="utf-8") as fh:
        return dict_to_table(json.load(fh))
