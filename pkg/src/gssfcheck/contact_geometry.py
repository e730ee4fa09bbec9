"""Almost contact metric structures and the generalized Sasakian-space-form curvature."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .frame_algebra import FrameError, as_metric, as_vector, check_orthonormal, inner, norm, project


@dataclass(frozen=True)
class AlmostContactStructure:
    """(phi, xi, eta, g) on a (2n+1)-dimensional space, in the ambient standard frame.

    eta is not stored separately: it is the g-dual of xi, so ``eta(X) = g(X, xi)``
    holds by construction.
    """

    n: int
    phi: np.ndarray
    xi: np.ndarray
    g: np.ndarray

    def __post_init__(self):
        d = 2 * self.n + 1
        phi = np.asarray(self.phi, dtype=float)
        if phi.shape != (d, d):
            raise FrameError(f"phi must be {d}x{d}, got {phi.shape}")
        object.__setattr__(self, "phi", phi)
        object.__setattr__(self, "xi", as_vector(self.xi, d))
        object.__setattr__(self, "g", as_metric(self.g, d))

    @property
    def dim(self) -> int:
        return 2 * self.n + 1

    @property
    def eta_covector(self) -> np.ndarray:
        return self.g @ self.xi

    def eta(self, X) -> float:
        return float(self.eta_covector @ X)

    def inner(self, X, Y) -> float:
        return inner(X, Y, self.g)

    def apply_phi(self, X) -> np.ndarray:
        return self.phi @ X

    def check_dim(self, *vectors) -> None:
        for v in vectors:
            if np.shape(v) != (self.dim,):
                raise FrameError(f"dimension mismatch: expected ({self.dim},), got {np.shape(v)}")


@dataclass(frozen=True)
class SpaceFormParams:
    f1: float
    f2: float
    f3: float

    def __post_init__(self):
        if not all(np.isfinite([self.f1, self.f2, self.f3])):
            raise ValueError("space-form parameters must be finite")

    @property
    def psi(self) -> float:
        """f1 - f3, the coefficient of the structure derivatives."""
        return self.f1 - self.f3

    def as_tuple(self) -> tuple[float, float, float]:
        return (float(self.f1), float(self.f2), float(self.f3))


def canonical_structure(n: int) -> AlmostContactStructure:
    """Standard model: g = I, xi = e_{2n+1}, phi e_i = e_{n+i}, phi e_{n+i} = -e_i."""
    if n < 1:
        raise ValueError("n must be at least 1")
    d = 2 * n + 1
    phi = np.zeros((d, d))
    for i in range(n):
        phi[n + i, i] = 1.0
        phi[i, n + i] = -1.0
    xi = np.zeros(d)
    xi[-1] = 1.0
    return AlmostContactStructure(n, phi, xi, np.eye(d))


def sasakian_params(c: float) -> SpaceFormParams:
    return SpaceFormParams((c + 3) / 4, (c - 1) / 4, (c - 1) / 4)


@dataclass
class ValidationReport:
    residuals: dict[str, float]
    tol: float
    passed: bool = field(init=False)

    def __post_init__(self):
        self.passed = all(r <= self.tol for r in self.residuals.values())

    @property
    def max_residual(self) -> float:
        return max(self.residuals.values())


def validate(acs: AlmostContactStructure, tol: float = 1e-12) -> ValidationReport:
    """Residuals of the structure identities over all frame vectors and pairs.

    Keys: ``phi_squared`` (phi^2 X = -X + eta(X) xi and phi xi = 0),
    ``eta`` (eta(xi) = 1, eta(phi X) = 0), ``phi_compatible``
    (g(phi X, phi Y) = g(X, Y) - eta(X) eta(Y)), ``phi_skew``
    (g(phi X, Y) = -g(X, phi Y)).
    """
    d = acs.dim
    E = np.eye(d)
    phi, g, xi = acs.phi, acs.g, acs.xi
    eta_cov = acs.eta_covector

    r_sq = max(
        np.abs(phi @ phi @ E[i] - (-E[i] + (eta_cov @ E[i]) * xi)).max() for i in range(d)
    )
    r_sq = max(r_sq, np.abs(phi @ xi).max())
    r_eta = abs(eta_cov @ xi - 1.0)
    r_eta = max(r_eta, max(abs(eta_cov @ (phi @ E[i])) for i in range(d)))
    PtGP = phi.T @ g @ phi
    r_compat = np.abs(PtGP - (g - np.outer(eta_cov, eta_cov))).max()
    r_skew = np.abs(phi.T @ g + g @ phi).max()
    return ValidationReport(
        {
            "phi_squared": float(r_sq),
            "eta": float(r_eta),
            "phi_compatible": float(r_compat),
            "phi_skew": float(r_skew),
        },
        tol,
    )


def basic_blocks(acs: AlmostContactStructure, X, Y, Z) -> dict[str, np.ndarray]:
    """The three tensor blocks multiplying f1, f2, f3 in the space-form curvature."""
    g = acs.inner
    eta = acs.eta
    P = acs.apply_phi
    xi = acs.xi
    PX, PY, PZ = P(X), P(Y), P(Z)
    return {
        "f1_block": g(Y, Z) * X - g(X, Z) * Y,
        "f2_block": g(X, PZ) * PY - g(Y, PZ) * PX + 2.0 * g(X, PY) * PZ,
        "f3_block": eta(X) * eta(Z) * Y
        - eta(Y) * eta(Z) * X
        + g(X, Z) * eta(Y) * xi
        - g(Y, Z) * eta(X) * xi,
    }


def gssf_curvature(acs: AlmostContactStructure, params: SpaceFormParams, X, Y, Z) -> np.ndarray:
    """Curvature R(X, Y)Z of the generalized Sasakian-space-form at the point."""
    X, Y, Z = (np.asarray(v, dtype=float) for v in (X, Y, Z))
    acs.check_dim(X, Y, Z)
    b = basic_blocks(acs, X, Y, Z)
    return params.f1 * b["f1_block"] + params.f2 * b["f2_block"] + params.f3 * b["f3_block"]


def tf_split(acs: AlmostContactStructure, tangent_basis: Sequence, X) -> tuple[np.ndarray, np.ndarray]:
    """Split phi X into its tangential part T X and normal part F X."""
    X = as_vector(X, acs.dim)
    check_orthonormal(tangent_basis, acs.g)
    off = norm(X - project(X, tangent_basis, acs.g), acs.g)
    if off > 1e-8:
        raise FrameError(f"vector is not in the tangent span (residual {off:.3e})")
    PX = acs.apply_phi(X)
    T = project(PX, tangent_basis, acs.g)
    return T, PX - T
