"""Deformed connections on a generalized Sasakian-space-form.

Each connection is the Levi-Civita connection plus a (1,2)-tensor
``D(X, Y)``. Its curvature is computed two ways: by the general formula for a
connection differing from a torsion-free one by ``D`` (the oracle), and by the
closed forms evaluated term by term (the hypotheses under test).

The space-form functions f1, f2, f3 are treated as constants at the evaluation
point (df = 0), so covariant derivatives of ``D`` carry no derivative-of-f terms.
"""
from __future__ import annotations

import enum
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .contact_geometry import AlmostContactStructure, SpaceFormParams, basic_blocks, gssf_curvature
from .frame_algebra import Sampler, norm

DF_CONVENTION = "df=0: f1, f2, f3 treated as constants at the evaluation point"


class ConnectionKind(enum.Enum):
    LEVI_CIVITA = "levi-civita"
    SEMISYMMETRIC_METRIC = "semisymmetric-metric"
    SEMISYMMETRIC_NON_METRIC = "semisymmetric-non-metric"
    SCHOUTEN_VAN_KAMPEN = "schouten-van-kampen"
    TANAKA_WEBSTER = "tanaka-webster"

    @classmethod
    def parse(cls, value: "str | ConnectionKind") -> "ConnectionKind":
        if isinstance(value, cls):
            return value
        key = str(value).strip().lower().replace("_", "-")
        aliases = {
            "lc": cls.LEVI_CIVITA,
            "ssm": cls.SEMISYMMETRIC_METRIC,
            "ssnm": cls.SEMISYMMETRIC_NON_METRIC,
            "svk": cls.SCHOUTEN_VAN_KAMPEN,
            "tw": cls.TANAKA_WEBSTER,
        }
        if key in aliases:
            return aliases[key]
        return cls(key)


DEFORMED_KINDS = (
    ConnectionKind.SEMISYMMETRIC_METRIC,
    ConnectionKind.SEMISYMMETRIC_NON_METRIC,
    ConnectionKind.SCHOUTEN_VAN_KAMPEN,
    ConnectionKind.TANAKA_WEBSTER,
)

# Printed closed-form curvature per connection (reported as citation data).
CURVATURE_CITATION = {
    ConnectionKind.LEVI_CIVITA: "Eq (1.1)",
    ConnectionKind.SEMISYMMETRIC_METRIC: "Eq (2.11)",
    ConnectionKind.SEMISYMMETRIC_NON_METRIC: "Eq (2.13)",
    ConnectionKind.SCHOUTEN_VAN_KAMPEN: "Eq (2.15)",
    ConnectionKind.TANAKA_WEBSTER: "Eq (2.17)",
}


def structure_derivative_phi(acs: AlmostContactStructure, params: SpaceFormParams, X, Y) -> np.ndarray:
    """(nabla_X phi)(Y) = (f1 - f3)[g(X, Y) xi - eta(Y) X]."""
    return params.psi * (acs.inner(X, Y) * acs.xi - acs.eta(Y) * np.asarray(X, dtype=float))


def structure_derivative_xi(acs: AlmostContactStructure, params: SpaceFormParams, X) -> np.ndarray:
    """nabla_X xi = -(f1 - f3) phi X."""
    return -params.psi * acs.apply_phi(X)


def _derivative_eta(acs, params, X, Y) -> float:
    # (nabla_X eta)(Y) = g(nabla_X xi, Y) since nabla g = 0
    return acs.inner(structure_derivative_xi(acs, params, X), Y)


def deformation(kind, acs: AlmostContactStructure, params: SpaceFormParams, X, Y) -> np.ndarray:
    """D(X, Y): the deformed connection minus Levi-Civita."""
    kind = ConnectionKind.parse(kind)
    X = np.asarray(X, dtype=float)
    Y = np.asarray(Y, dtype=float)
    eta, g, P, xi, psi = acs.eta, acs.inner, acs.apply_phi, acs.xi, params.psi
    if kind is ConnectionKind.LEVI_CIVITA:
        return np.zeros(acs.dim)
    if kind is ConnectionKind.SEMISYMMETRIC_METRIC:
        return eta(Y) * X - g(X, Y) * xi
    if kind is ConnectionKind.SEMISYMMETRIC_NON_METRIC:
        return eta(Y) * X
    PX = P(X)
    svk = psi * eta(Y) * PX - psi * g(PX, Y) * xi
    if kind is ConnectionKind.SCHOUTEN_VAN_KAMPEN:
        return svk
    return eta(X) * P(Y) + svk


def deformation_derivative(kind, acs: AlmostContactStructure, params: SpaceFormParams, X, Y, Z) -> np.ndarray:
    """(nabla_X D)(Y, Z) by the product rule over eta, xi, phi and g."""
    kind = ConnectionKind.parse(kind)
    X, Y, Z = (np.asarray(v, dtype=float) for v in (X, Y, Z))
    eta, g, P, xi, psi = acs.eta, acs.inner, acs.apply_phi, acs.xi, params.psi
    d_eta = lambda U, V: _derivative_eta(acs, params, U, V)  # noqa: E731
    d_xi = lambda U: structure_derivative_xi(acs, params, U)  # noqa: E731
    d_phi = lambda U, V: structure_derivative_phi(acs, params, U, V)  # noqa: E731

    if kind is ConnectionKind.LEVI_CIVITA:
        return np.zeros(acs.dim)
    if kind is ConnectionKind.SEMISYMMETRIC_METRIC:
        return d_eta(X, Z) * Y - g(Y, Z) * d_xi(X)
    if kind is ConnectionKind.SEMISYMMETRIC_NON_METRIC:
        return d_eta(X, Z) * Y
    # psi [eta(Z) phi Y - g(phi Y, Z) xi], psi constant under df = 0
    svk = psi * (
        d_eta(X, Z) * P(Y)
        + eta(Z) * d_phi(X, Y)
        - g(d_phi(X, Y), Z) * xi
        - g(P(Y), Z) * d_xi(X)
    )
    if kind is ConnectionKind.SCHOUTEN_VAN_KAMPEN:
        return svk
    return d_eta(X, Y) * P(Z) + eta(Y) * d_phi(X, Z) + svk


def curvature_oracle(kind, acs: AlmostContactStructure, params: SpaceFormParams, X, Y, Z) -> np.ndarray:
    """R~(X,Y)Z = R(X,Y)Z + (nabla_X D)(Y,Z) - (nabla_Y D)(X,Z) + D(X, D(Y,Z)) - D(Y, D(X,Z))."""
    kind = ConnectionKind.parse(kind)
    R = gssf_curvature(acs, params, X, Y, Z)
    if kind is ConnectionKind.LEVI_CIVITA:
        return R
    D = lambda U, V: deformation(kind, acs, params, U, V)  # noqa: E731
    dD = lambda U, V, W: deformation_derivative(kind, acs, params, U, V, W)  # noqa: E731
    return R + dD(X, Y, Z) - dD(Y, X, Z) + D(X, D(Y, Z)) - D(Y, D(X, Z))


def curvature_terms(kind, acs: AlmostContactStructure, params: SpaceFormParams, X, Y, Z):
    """Closed-form curvature as ``[(label, coefficient, tensor), ...]``.

    The value is ``sum(coefficient * tensor)``; labels name the printed terms.
    """
    kind = ConnectionKind.parse(kind)
    X, Y, Z = (np.asarray(v, dtype=float) for v in (X, Y, Z))
    acs.check_dim(X, Y, Z)
    f1, f2, f3 = params.as_tuple()
    psi = params.psi
    eta, g, P = acs.eta, acs.inner, acs.apply_phi
    b = basic_blocks(acs, X, Y, Z)
    A, B, C = b["f1_block"], b["f2_block"], b["f3_block"]
    A_label = "{g(Y,Z)X - g(X,Z)Y}"
    B_label = "{g(X,phiZ)phiY - g(Y,phiZ)phiX + 2g(X,phiY)phiZ}"
    C_label = "{eta(X)eta(Z)Y - eta(Y)eta(Z)X + g(X,Z)eta(Y)xi - g(Y,Z)eta(X)xi}"

    if kind is ConnectionKind.LEVI_CIVITA:
        return [("f1" + A_label, f1, A), ("f2" + B_label, f2, B), ("f3" + C_label, f3, C)]
    if kind is ConnectionKind.SEMISYMMETRIC_METRIC:
        K = g(X, P(Z)) * Y - g(Y, P(Z)) * X + g(Y, Z) * P(X) - g(X, Z) * P(Y)
        return [
            ("(f1-1)" + A_label, f1 - 1.0, A),
            ("f2" + B_label, f2, B),
            ("(f3-1)" + C_label, f3 - 1.0, C),
            ("(f1-f3){g(X,phiZ)Y - g(Y,phiZ)X + g(Y,Z)phiX - g(X,Z)phiY}", psi, K),
        ]
    if kind is ConnectionKind.SEMISYMMETRIC_NON_METRIC:
        K = g(X, P(Z)) * Y - g(Y, P(Z)) * X
        L = eta(Y) * eta(Z) * X - eta(X) * eta(Z) * Y
        return [
            ("f1" + A_label, f1, A),
            ("f2" + B_label, f2, B),
            ("f3" + C_label, f3, C),
            ("(f1-f3)[g(X,phiZ)Y - g(Y,phiZ)X]", psi, K),
            ("eta(Y)eta(Z)X - eta(X)eta(Z)Y", 1.0, L),
        ]
    K = g(X, P(Z)) * P(Y) - g(Y, P(Z)) * P(X)
    terms = [
        ("f1" + A_label, f1, A),
        ("f2" + B_label, f2, B),
        ("{f3+(f1-f3)^2}" + C_label, f3 + psi**2, C),
        ("(f1-f3)^2{g(X,phiZ)phiY - g(Y,phiZ)phiX}", psi**2, K),
    ]
    if kind is ConnectionKind.TANAKA_WEBSTER:
        terms.append(("2(f1-f3)g(X,phiY)phiZ", 2.0 * psi, g(X, P(Y)) * P(Z)))
    return terms


def curvature_closed(kind, acs: AlmostContactStructure, params: SpaceFormParams, X, Y, Z) -> np.ndarray:
    out = np.zeros(acs.dim)
    for _, coeff, tensor in curvature_terms(kind, acs, params, X, Y, Z):
        out = out + coeff * tensor
    return out


@dataclass
class ComparisonReport:
    kind: ConnectionKind
    trials: int
    max_residual: float
    tol: float
    verdict: str
    witness: dict | None = None
    term_decomposition: list[dict] = field(default_factory=list)
    convention: str = DF_CONVENTION

    @property
    def matched(self) -> bool:
        return self.verdict == "match"

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "trials": self.trials,
            "max_residual": self.max_residual,
            "tol": self.tol,
            "verdict": self.verdict,
            "witness": self.witness,
            "term_decomposition": self.term_decomposition,
            "convention": self.convention,
        }


def map_trials(fn: Callable[[int], object], trials: int, workers: int = 1) -> list:
    """Evaluate ``fn(i)`` for every trial index, in index order regardless of ``workers``."""
    if workers <= 1:
        return [fn(i) for i in range(trials)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, range(trials)))


def decompose_residual(terms_fn, kind, acs, params, sampler: Sampler, samples: int = 12) -> tuple[list[dict], float]:
    """Attribute the closed-minus-oracle residual to the printed terms.

    At fixed parameters, solves for per-term coefficient corrections ``delta``
    with ``sum(delta_t * tensor_t) ~= oracle - closed`` over several random
    argument triples. Returns the corrections and the unexplained residual.
    """
    rows, rhs, labels = [], [], None
    for _ in range(samples):
        X, Y, Z = (sampler.unit_vector(acs.dim) for _ in range(3))
        terms = terms_fn(kind, acs, params, X, Y, Z)
        labels = [t[0] for t in terms]
        closed = sum(c * v for _, c, v in terms)
        rows.append(np.column_stack([v for _, _, v in terms]))
        rhs.append(curvature_oracle(kind, acs, params, X, Y, Z) - closed)
    M = np.vstack(rows)
    r = np.concatenate(rhs)
    delta, *_ = np.linalg.lstsq(M, r, rcond=None)
    unexplained = float(np.linalg.norm(M @ delta - r))
    return [{"term": lab, "coefficient_correction": float(dv)} for lab, dv in zip(labels, delta)], unexplained


def compare_curvature(
    kind,
    acs: AlmostContactStructure,
    sampler: Sampler,
    trials: int,
    param_range: tuple[float, float] = (-2.0, 2.0),
    tol: float = 1e-9,
    terms_fn=curvature_terms,
    workers: int = 1,
    params: SpaceFormParams | None = None,
) -> ComparisonReport:
    """Draw (params, X, Y, Z) per trial and compare closed form against the oracle.

    Passing ``params`` pins the space-form functions instead of drawing them
    from ``param_range``.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    kind = ConnectionKind.parse(kind)
    lo, hi = param_range

    def one(i):
        s = sampler.spawn(i)
        p = SpaceFormParams(*s.scalars(lo, hi, 3)) if params is None else params
        X, Y, Z = (s.unit_vector(acs.dim) for _ in range(3))
        closed = sum(c * v for _, c, v in terms_fn(kind, acs, p, X, Y, Z))
        diff = closed - curvature_oracle(kind, acs, p, X, Y, Z)
        return norm(diff, acs.g), p, (X, Y, Z), diff

    results = map_trials(one, trials, workers)
    max_res = max(r[0] for r in results)
    report = ComparisonReport(kind, trials, float(max_res), tol, "match" if max_res <= tol else "mismatch")
    if report.verdict == "mismatch":
        res, wp, (X, Y, Z), diff = next(r for r in results if r[0] > tol)
        report.witness = {
            "params": list(wp.as_tuple()),
            "X": X.tolist(),
            "Y": Y.tolist(),
            "Z": Z.tolist(),
            "residual": float(res),
            "residual_vector": diff.tolist(),
        }
        decomposition, unexplained = decompose_residual(terms_fn, kind, acs, wp, sampler.spawn(10**9))
        report.term_decomposition = [d for d in decomposition if abs(d["coefficient_correction"]) > tol]
        report.witness["unexplained_residual"] = unexplained
    return report
