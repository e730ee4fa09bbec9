"""Dense linear algebra over a fixed finite-dimensional inner-product space.

Vectors are 1-d numpy arrays expressed in the ambient standard frame, metrics
and (1,1)-tensors are square 2-d arrays. A metric argument of ``None`` means
the identity.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

DROP_TOL = 1e-8
COMPARE_TOL = 1e-9


class FrameError(ValueError):
    """Raised when a frame-level precondition fails."""


def as_vector(v, d: int | None = None) -> np.ndarray:
    arr = np.asarray(v, dtype=float)
    if arr.ndim != 1:
        raise FrameError(f"expected a 1-d vector, got shape {arr.shape}")
    if d is not None and arr.shape[0] != d:
        raise FrameError(f"dimension mismatch: expected {d}, got {arr.shape[0]}")
    return arr


def as_metric(g, d: int | None = None) -> np.ndarray:
    """Validate and return a metric array (identity when ``g`` is None)."""
    if g is None:
        if d is None:
            raise FrameError("dimension needed to build the identity metric")
        return np.eye(d)
    G = np.asarray(g, dtype=float)
    if G.ndim != 2 or G.shape[0] != G.shape[1]:
        raise FrameError(f"metric must be square, got shape {G.shape}")
    if d is not None and G.shape[0] != d:
        raise FrameError(f"metric dimension {G.shape[0]} != {d}")
    scale = max(1.0, float(np.abs(G).max()))
    if np.abs(G - G.T).max() > 1e-12 * scale:
        raise FrameError("metric is not symmetric")
    if np.linalg.eigvalsh(G).min() <= 0:
        raise FrameError("metric is not positive definite")
    return G


def inner(u: np.ndarray, v: np.ndarray, g: np.ndarray | None = None) -> float:
    if g is None:
        return float(u @ v)
    return float(u @ g @ v)


def norm(v: np.ndarray, g: np.ndarray | None = None) -> float:
    return float(np.sqrt(max(inner(v, v, g), 0.0)))


def orthonormalize(vectors: Sequence, g=None, tol: float = DROP_TOL) -> list[np.ndarray]:
    """Gram-Schmidt with one re-orthogonalization pass.

    Vectors whose projected g-norm falls below ``tol`` are dropped; the
    surviving directions keep their order of first appearance.
    """
    if len(vectors) == 0:
        raise FrameError("empty span")
    vs = [as_vector(v) for v in vectors]
    d = vs[0].shape[0]
    if any(v.shape[0] != d for v in vs):
        raise FrameError("vectors have unequal lengths")
    G = as_metric(g, d) if g is not None else None
    basis: list[np.ndarray] = []
    for v in vs:
        w = v.copy()
        for _ in range(2):
            for b in basis:
                w = w - inner(w, b, G) * b
        nw = norm(w, G)
        if nw < tol:
            continue
        basis.append(w / nw)
    return basis


def check_orthonormal(basis: Sequence[np.ndarray], g=None, tol: float = 1e-8) -> None:
    if len(basis) == 0:
        return
    B = np.asarray(basis, dtype=float)
    G = np.eye(B.shape[1]) if g is None else np.asarray(g, dtype=float)
    gram = B @ G @ B.T
    err = np.abs(gram - np.eye(len(basis))).max()
    if err > tol:
        raise FrameError(f"basis is not g-orthonormal (max Gram error {err:.3e})")


def project(v, basis: Sequence, g=None) -> np.ndarray:
    """Orthogonal projection of ``v`` onto the span of a g-orthonormal basis."""
    v = as_vector(v)
    check_orthonormal(basis, g)
    out = np.zeros_like(v)
    for b in basis:
        out = out + inner(v, b, g) * np.asarray(b, dtype=float)
    return out


def projector_matrix(basis: Sequence, g=None) -> np.ndarray:
    """Matrix of :func:`project` acting on column vectors."""
    B = np.asarray(basis, dtype=float)
    if B.size == 0:
        raise FrameError("empty basis")
    G = np.eye(B.shape[1]) if g is None else np.asarray(g, dtype=float)
    return B.T @ B @ G


def symmetric_spectrum(A, basis: Sequence, g=None, tol: float = DROP_TOL):
    """Eigen-decompose the restriction of ``A`` to span(basis).

    Returns a list of ``(eigenvalue, eigenvectors)`` pairs, eigenvalues sorted
    descending and merged when consecutive values differ by at most ``tol``.
    Raises :class:`FrameError` if the restriction is not g-self-adjoint or the
    span is not A-invariant.
    """
    A = np.asarray(A, dtype=float)
    B = np.asarray(basis, dtype=float)
    if B.ndim != 2 or B.shape[0] == 0:
        raise FrameError("empty basis")
    d = B.shape[1]
    G = np.eye(d) if g is None else as_metric(g, d)
    check_orthonormal(B, G)

    AB = (A @ B.T).T  # rows are A b_j
    M = AB @ G @ B.T  # M[j, i] = g(A b_j, b_i)
    M = M.T  # M[i, j] = g(b_i, A b_j)
    leak = AB - M.T @ B
    leak_norm = max(norm(r, G) for r in leak)
    if leak_norm > tol:
        raise FrameError(f"span is not invariant under the operator (residual {leak_norm:.3e})")
    asym = np.abs(M - M.T).max()
    if asym > tol:
        raise FrameError(f"restriction is not self-adjoint (residual {asym:.3e})")

    w, V = np.linalg.eigh(0.5 * (M + M.T))
    order = np.argsort(-w, kind="stable")
    w, V = w[order], V[:, order]

    clusters: list[tuple[float, list[np.ndarray]]] = []
    group = [0]
    for i in range(1, len(w) + 1):
        if i < len(w) and abs(w[i] - w[group[-1]]) <= tol:
            group.append(i)
            continue
        lam = float(np.mean(w[group]))
        vecs = [V[:, j] @ B for j in group]
        clusters.append((lam, vecs))
        group = [i]

    for lam, vecs in clusters:
        for v in vecs:
            r = norm(A @ v - lam * v, G)
            if r > 10 * tol:
                raise FrameError(f"eigen-residual {r:.3e} exceeds {10 * tol:.1e}")
    return clusters


@dataclass
class Sampler:
    """Seeded source of random draws.

    Every draw is a pure function of ``(seed, key, counter)``, so two samplers
    built the same way and queried in the same order agree bit for bit no
    matter which thread runs them. ``spawn`` derives an independent stream
    for a sub-task (e.g. one comparator trial).
    """

    seed: int
    counter: int = 0
    key: tuple = field(default_factory=tuple)

    def _rng(self) -> np.random.Generator:
        ss = np.random.SeedSequence(self.seed, spawn_key=self.key + (self.counter,))
        self.counter += 1
        return np.random.Generator(np.random.PCG64(ss))

    def spawn(self, index: int) -> "Sampler":
        return Sampler(self.seed, 0, self.key + (0x5EED, int(index)))

    def unit_vector(self, d: int) -> np.ndarray:
        rng = self._rng()
        while True:
            v = rng.standard_normal(d)
            nv = np.linalg.norm(v)
            if nv > 1e-6:
                return v / nv

    def scalar(self, lo: float, hi: float) -> float:
        if not lo < hi:
            raise FrameError("scalar sampling requires lo < hi")
        return float(self._rng().uniform(lo, hi))

    def scalars(self, lo: float, hi: float, size: int) -> np.ndarray:
        if not lo < hi:
            raise FrameError("scalar sampling requires lo < hi")
        return self._rng().uniform(lo, hi, size)

    def symmetric_coeffs(self, shape: tuple[int, int, int], scale: float = 1.0) -> np.ndarray:
        """Array ``h[i, j, k]`` symmetric in ``(i, j)``, entries in [-scale, scale]."""
        p, p2, q = shape
        if p != p2:
            raise FrameError("symmetric coefficients need matching first two axes")
        raw = self._rng().uniform(-scale, scale, (p, p, q))
        iu = np.triu_indices(p)
        h = np.zeros_like(raw)
        h[iu[0], iu[1], :] = raw[iu[0], iu[1], :]
        h[iu[1], iu[0], :] = raw[iu[0], iu[1], :]
        return h


def sample(s: Sampler, kind: str, *args):
    """Dispatch helper: ``sample(s, "unit_vector", 5)``, ``sample(s, "scalar", lo, hi)``."""
    if kind == "unit_vector":
        return s.unit_vector(*args)
    if kind == "scalar":
        return s.scalar(*args)
    if kind == "symmetric_coeffs":
        return s.symmetric_coeffs(*args)
    raise FrameError(f"unknown sample kind {kind!r}")
