"""Submanifolds tangent to xi: frames, second fundamental forms, Gauss equation,
and the eigen-decomposition of T^2 on the complement of xi.

Frame conventions: ``tangent_frame`` rows are E_1..E_m, E_{m+1} = xi;
``normal_frame`` rows are F_1..F_{2n-m}. Second fundamental form coefficients
``sff[i, j, k]`` give h(E_i, E_j) = sum_k sff[i, j, k] F_k. All indices are
0-based in code.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .connections import ConnectionKind, curvature_closed, deformation
from .contact_geometry import AlmostContactStructure, SpaceFormParams
from .frame_algebra import (
    DROP_TOL,
    FrameError,
    Sampler,
    as_vector,
    norm,
    orthonormalize,
    symmetric_spectrum,
)


class SubmanifoldError(ValueError):
    pass


@dataclass(frozen=True)
class Submanifold:
    acs: AlmostContactStructure
    tangent_frame: np.ndarray
    normal_frame: np.ndarray
    sff: np.ndarray

    @property
    def m(self) -> int:
        return self.tangent_frame.shape[0] - 1

    @property
    def codim(self) -> int:
        return self.normal_frame.shape[0]

    @property
    def frame(self) -> list[np.ndarray]:
        return list(self.tangent_frame)

    @property
    def distribution_frame(self) -> np.ndarray:
        """E_1..E_m, the tangent frame without xi."""
        return self.tangent_frame[:-1]

    def coords(self, X, tol: float = 1e-8) -> np.ndarray:
        """Tangent-frame coordinates of X; raises if X is not tangent."""
        X = as_vector(X, self.acs.dim)
        G = self.acs.g
        a = self.tangent_frame @ G @ X
        off = norm(X - a @ self.tangent_frame, G)
        if off > tol * max(1.0, norm(X, G)):
            raise SubmanifoldError(f"vector is not tangent (normal residual {off:.3e})")
        return a

    def tangent_part(self, V) -> np.ndarray:
        V = np.asarray(V, dtype=float)
        return (self.tangent_frame @ self.acs.g @ V) @ self.tangent_frame

    def normal_part(self, V) -> np.ndarray:
        V = np.asarray(V, dtype=float)
        if self.codim == 0:
            return np.zeros_like(V)
        return (self.normal_frame @ self.acs.g @ V) @ self.normal_frame

    def T(self, X) -> np.ndarray:
        return self.tangent_part(self.acs.apply_phi(X))

    def F(self, X) -> np.ndarray:
        return self.normal_part(self.acs.apply_phi(X))

    def T_matrix(self) -> np.ndarray:
        """Ambient matrix of X -> T X (tangent projection of phi X)."""
        E, G = self.tangent_frame, self.acs.g
        return E.T @ E @ G @ self.acs.phi

    def second_fundamental_form(self, X, Y) -> np.ndarray:
        a, b = self.coords(X), self.coords(Y)
        if self.codim == 0:
            return np.zeros(self.acs.dim)
        return np.einsum("i,j,ijk->k", a, b, self.sff) @ self.normal_frame

    def with_sff(self, sff) -> "Submanifold":
        return build(self.acs, list(self.tangent_frame), sff)


def build(acs: AlmostContactStructure, spanning: Sequence, sff_coeffs=None, tol: float = DROP_TOL) -> Submanifold:
    """Frame a submanifold from spanning vectors (which must contain xi in their span)."""
    spanning = [as_vector(v, acs.dim) for v in spanning]
    if not spanning:
        raise SubmanifoldError("empty span")
    G = acs.g
    span_basis = orthonormalize(spanning, G, tol)
    xi_res = norm(acs.xi - sum(((b @ G @ acs.xi) * b for b in span_basis), np.zeros(acs.dim)), G)
    if xi_res > 1e-8:
        raise SubmanifoldError("xi not tangent")
    ordered = orthonormalize([acs.xi] + spanning, G, tol)
    tangent = np.array(ordered[1:] + ordered[:1])
    if tangent.shape[0] >= acs.dim:
        normal = np.zeros((0, acs.dim))
    else:
        full = orthonormalize(list(tangent) + list(np.eye(acs.dim)), G, tol)
        normal = np.array(full[tangent.shape[0]:])
    p, q = tangent.shape[0], normal.shape[0]
    if sff_coeffs is None:
        sff = np.zeros((p, p, q))
    else:
        sff = np.array(sff_coeffs, dtype=float)
        if sff.shape != (p, p, q):
            raise SubmanifoldError(f"sff shape {sff.shape} does not match ({p}, {p}, {q})")
        if sff.size and np.abs(sff - sff.transpose(1, 0, 2)).max() > 1e-12:
            raise SubmanifoldError("sff coefficients are not symmetric")
    return Submanifold(acs, tangent, normal, sff)


def random_span(acs: AlmostContactStructure, m: int, sampler: Sampler) -> list[np.ndarray]:
    """m random unit vectors orthogonal to xi, orthonormalized, then xi."""
    if not 1 <= m <= acs.dim - 1:
        raise SubmanifoldError(f"m must lie in [1, {acs.dim - 1}]")
    while True:
        vs = []
        for _ in range(m):
            v = sampler.unit_vector(acs.dim)
            vs.append(v - acs.eta(v) * acs.xi)
        basis = orthonormalize(vs, acs.g)
        if len(basis) == m:
            return basis + [acs.xi.copy()]


def random_submanifold(acs: AlmostContactStructure, m: int, sampler: Sampler, sff=None) -> Submanifold:
    return build(acs, random_span(acs, m, sampler), sff)


def shape_operator(sub: Submanifold, k: int) -> np.ndarray:
    """A_k = A_{F_k} as an ambient matrix, with g(A_k E_i, E_j) = sff[i, j, k]."""
    if not 0 <= k < sub.codim:
        raise SubmanifoldError(f"normal index {k} out of range [0, {sub.codim})")
    E = sub.tangent_frame
    return E.T @ sub.sff[:, :, k].T @ E @ sub.acs.g


def deformed_sff(sub: Submanifold, kind, params: SpaceFormParams, X, Y) -> np.ndarray:
    """h(X, Y) plus the normal part of the deformation D(X, Y).

    The tangential part of D belongs to the induced connection. For the
    Schouten-van Kampen and Tanaka-Webster connections the result need not
    be symmetric in (X, Y).
    """
    h = sub.second_fundamental_form(X, Y)
    return h + sub.normal_part(deformation(kind, sub.acs, params, X, Y))


def deformed_sff_coeffs(sub: Submanifold, kind, params: SpaceFormParams) -> np.ndarray:
    """c[i, j, k] = g(h~(E_i, E_j), F_k)."""
    kind = ConnectionKind.parse(kind)
    E, N, G = sub.tangent_frame, sub.normal_frame, sub.acs.g
    p = E.shape[0]
    c = sub.sff.copy()
    if kind is ConnectionKind.LEVI_CIVITA or sub.codim == 0:
        return c
    for i in range(p):
        for j in range(p):
            c[i, j, :] += N @ G @ deformation(kind, sub.acs, params, E[i], E[j])
    return c


def deformed_shape_operator(sub: Submanifold, kind, params: SpaceFormParams, k: int, coeffs=None) -> np.ndarray:
    """A~_k with g(A~_k X, Y) = g(h~(X, Y), F_k)."""
    if not 0 <= k < sub.codim:
        raise SubmanifoldError(f"normal index {k} out of range [0, {sub.codim})")
    c = deformed_sff_coeffs(sub, kind, params) if coeffs is None else coeffs
    E = sub.tangent_frame
    return E.T @ c[:, :, k].T @ E @ sub.acs.g


def mean_curvature(sub: Submanifold, kind, params: SpaceFormParams) -> np.ndarray:
    c = deformed_sff_coeffs(sub, kind, params)
    if sub.codim == 0:
        return np.zeros(sub.acs.dim)
    return (np.einsum("iik->k", c) / (sub.m + 1)) @ sub.normal_frame


def classify_sff(sub: Submanifold, kind, params: SpaceFormParams, tol: float = 1e-9) -> str:
    """'totally_geodesic', 'minimal' or 'generic' for the deformed second fundamental form."""
    c = deformed_sff_coeffs(sub, kind, params)
    if c.size == 0 or np.linalg.norm(c, axis=2).max() <= tol:
        return "totally_geodesic"
    if norm(mean_curvature(sub, kind, params), sub.acs.g) <= tol:
        return "minimal"
    return "generic"


def induced_curvature(sub: Submanifold, kind, params: SpaceFormParams, X, Y, Z, W) -> float:
    """R(X,Y,Z,W) = Rbar(X,Y,Z,W) + g(h~(X,W), h~(Y,Z)) - g(h~(X,Z), h~(Y,W)).

    Rbar is the closed-form ambient curvature of the connection, paired as
    g(Rbar(X,Y)Z, W).
    """
    for v in (X, Y, Z, W):
        sub.coords(v)
    acs = sub.acs
    hh = lambda U, V: deformed_sff(sub, kind, params, U, V)  # noqa: E731
    ambient = acs.inner(curvature_closed(kind, acs, params, X, Y, Z), W)
    return ambient + acs.inner(hh(X, W), hh(Y, Z)) - acs.inner(hh(X, Z), hh(Y, W))


def induced_curvature_tensor(sub: Submanifold, kind, params: SpaceFormParams, coeffs=None) -> np.ndarray:
    """R[i, j, k, l] = induced_curvature(E_i, E_j, E_k, E_l) over the tangent frame."""
    E, acs = sub.tangent_frame, sub.acs
    p = E.shape[0]
    c = deformed_sff_coeffs(sub, kind, params) if coeffs is None else coeffs
    ambient = np.empty((p, p, p, p))
    for i in range(p):
        for j in range(p):
            if i == j:
                ambient[i, j] = 0.0
                continue
            for k in range(p):
                ambient[i, j, k, :] = E @ acs.g @ curvature_closed(kind, acs, params, E[i], E[j], E[k])
    quad = np.einsum("ilq,jkq->ijkl", c, c) - np.einsum("ikq,jlq->ijkl", c, c)
    return ambient + quad


@dataclass(frozen=True)
class Cluster:
    lam: float
    mu: float
    multiplicity: int
    basis: np.ndarray
    kind: str

    def project(self, X, g=None) -> np.ndarray:
        """U^lambda X."""
        X = np.asarray(X, dtype=float)
        G = np.eye(X.shape[0]) if g is None else g
        return (self.basis @ G @ X) @ self.basis


@dataclass
class DistributionSplit:
    clusters: list[Cluster]
    m: int
    g: np.ndarray = field(repr=False, default=None)

    def components(self, X) -> list[np.ndarray]:
        return [c.project(X, self.g) for c in self.clusters]

    @property
    def weighted_dimension(self) -> float:
        """sum over clusters of n(lambda) * lambda^2."""
        return float(sum(c.multiplicity * c.lam**2 for c in self.clusters))


def _classify_mu(mu: float, tol: float) -> str:
    if mu >= 1.0 - tol:
        return "invariant"
    if mu <= tol:
        return "anti_invariant"
    return "slant"


def asi_split(sub: Submanifold, tol: float = DROP_TOL) -> DistributionSplit:
    """Eigenspaces of -T^2 on the complement of xi in the tangent space."""
    D = sub.distribution_frame
    if D.shape[0] == 0:
        return DistributionSplit([], 0, sub.acs.g)
    T = sub.T_matrix()
    try:
        spectrum = symmetric_spectrum(-T @ T, list(D), sub.acs.g, tol)
    except FrameError as exc:
        raise SubmanifoldError(f"T^2 does not restrict to the distribution: {exc}") from exc
    clusters = []
    for mu, vecs in spectrum:
        mu_c = min(max(mu, 0.0), 1.0)
        clusters.append(Cluster(float(np.sqrt(mu_c)), float(mu_c), len(vecs), np.array(vecs), _classify_mu(mu_c, tol)))
    return DistributionSplit(clusters, sub.m, sub.acs.g)


@dataclass
class SlantReport:
    trials: int
    max_residual: float
    tol: float

    @property
    def passed(self) -> bool:
        return self.max_residual <= self.tol


def slant_residual(sub: Submanifold, split: DistributionSplit, X, Y) -> float:
    """|g(TX, TY) - sum_lambda lambda^2 g(U X, U Y)|."""
    g = sub.acs.inner
    lhs = g(sub.T(X), sub.T(Y))
    rhs = sum(c.lam**2 * g(c.project(X, sub.acs.g), c.project(Y, sub.acs.g)) for c in split.clusters)
    return abs(lhs - rhs)


def random_tangent(sub: Submanifold, sampler: Sampler) -> np.ndarray:
    return sampler.unit_vector(sub.m + 1) @ sub.tangent_frame


def verify_slant_identity(sub: Submanifold, split: DistributionSplit, sampler: Sampler, trials: int = 500, tol: float = 1e-10) -> SlantReport:
    worst = 0.0
    for t in range(trials):
        s = sampler.spawn(t)
        X, Y = random_tangent(sub, s), random_tangent(sub, s)
        worst = max(worst, slant_residual(sub, split, X, Y))
    return SlantReport(trials, worst, tol)


def random_minimal_sff(sub: Submanifold, sampler: Sampler, scale: float = 1.0) -> np.ndarray:
    """Symmetric coefficients with every shape operator traceless."""
    p, q = sub.m + 1, sub.codim
    h = sampler.symmetric_coeffs((p, p, q), scale)
    tr = np.einsum("iik->k", h)
    idx = np.arange(p)
    h[idx, idx, :] -= tr / p
    return h
