"""Ricci tensors and scalar curvatures of submanifolds, per connection.

Two routes are kept apart on purpose:

* ``ricci_direct`` / ``scalar_direct`` contract the induced curvature over the
  tangent frame. These are the ground truth.
* ``ricci_closed`` / ``scalar_closed`` evaluate closed forms, either exactly as
  typeset (``FormVariant.AS_PRINTED``) or as re-derived by contracting the
  ambient closed forms through the Gauss equation (``FormVariant.ORACLE_DERIVED``).

Ricci contraction convention: ``S(X, Y) = sum_i R(E_i, X, Y, E_i)``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from .connections import DEFORMED_KINDS, ConnectionKind
from .contact_geometry import SpaceFormParams, sasakian_params
from .frame_algebra import Sampler
from .submanifolds import (
    DistributionSplit,
    Submanifold,
    SubmanifoldError,
    asi_split,
    classify_sff,
    deformed_sff,
    deformed_sff_coeffs,
    induced_curvature,
    random_tangent,
)

CONTRACTION_CONVENTION = "S(X,Y) = sum_i R(E_i, X, Y, E_i), R(X,Y,Z,W) = g(R(X,Y)Z, W)"


class FormVariant(enum.Enum):
    AS_PRINTED = "as_printed"
    ORACLE_DERIVED = "oracle_derived"


_SECTION = {
    ConnectionKind.SEMISYMMETRIC_METRIC: 3,
    ConnectionKind.SEMISYMMETRIC_NON_METRIC: 4,
    ConnectionKind.SCHOUTEN_VAN_KAMPEN: 5,
    ConnectionKind.TANAKA_WEBSTER: 6,
}


def citation(kind, what: str) -> str:
    """Location label of a printed formula, e.g. ``citation(kind, "general")``."""
    kind = ConnectionKind.parse(kind)
    if kind not in _SECTION:
        return f"Levi-Civita {what} (no printed formula)"
    s = _SECTION[kind]
    return {
        "general": f"Lemma {s}.1, Eq ({s}.1)",
        "asi": f"Lemma {s}.2, Eq ({s}.2)",
        "sasakian": f"Corollary {s}.3, Eq ({s}.3)",
        "scalar": f"Lemma {s}.4, Eq ({s}.4)",
        "theorem_i": f"Theorem {s}.1 (i), Eq ({s}.6)",
        "theorem_ii": f"Theorem {s}.1 (ii)",
        "minimality": f"Eq ({s}.5)",
        "remark": f"Remark after Theorem {s}.1",
    }[what]


class PrintedFormUnavailable(ValueError):
    pass


class TheoremHypothesisError(ValueError):
    pass


# --------------------------------------------------------------------------
# pointwise quantities


@dataclass
class _Pair:
    """Everything the closed forms need at a tangent pair (X, Y)."""

    m: int
    gXY: float
    gTT: float
    ee: float
    gTXY: float
    clusters: list  # [(lam, g(U X, U Y))]
    sff_printed: float
    sff_derived: float


def _pair(sub: Submanifold, kind, params, X, Y, split: DistributionSplit | None, coeffs=None) -> _Pair:
    acs = sub.acs
    x, y = sub.coords(X), sub.coords(Y)
    c = deformed_sff_coeffs(sub, kind, params) if coeffs is None else coeffs
    clusters = []
    if split is not None:
        clusters = [(cl.lam, acs.inner(cl.project(X, acs.g), cl.project(Y, acs.g))) for cl in split.clusters]
    sff_printed = sff_derived = 0.0
    m = sub.m
    for k in range(sub.codim):
        ck = c[:, :, k]
        tr = float(np.trace(ck))
        gAXY = float(x @ ck @ y)
        AX, AY = ck.T @ x, ck.T @ y
        sff_printed += (m + 1) * tr * gAXY - float(AX @ AY)
        sff_derived += tr * gAXY - float(x @ ck @ ck @ y)
    return _Pair(
        m=m,
        gXY=acs.inner(X, Y),
        gTT=acs.inner(sub.T(X), sub.T(Y)),
        ee=acs.eta(X) * acs.eta(Y),
        gTXY=acs.inner(sub.T(X), Y),
        clusters=clusters,
        sff_printed=sff_printed,
        sff_derived=sff_derived,
    )


@dataclass(frozen=True)
class DerivedCoefficients:
    """S(X,Y) = alpha g(X,Y) + beta g(TX,TY) + gamma eta(X)eta(Y) + eps g(TX,Y) + sff terms."""

    alpha: float
    beta: float
    gamma: float
    eps: float


def derived_coefficients(kind, params: SpaceFormParams, m: int) -> DerivedCoefficients:
    """Coefficients obtained by contracting each closed-form curvature over the frame.

    Contraction table used (X, Y tangent, frame of m+1 vectors containing xi):
    the f1-block gives m g(X,Y); the f2-block 3 g(TX,TY); the f3-block
    -g(X,Y) - (m-1) eta(X)eta(Y); the semisymmetric-metric psi-block
    (m-1) g(TX,Y); the non-metric psi-block m g(TX,Y) and its eta-block
    m eta(X)eta(Y); the psi^2 phi-block g(TX,TY); the Tanaka-Webster
    2 psi g(X,phiY)phiZ term 2 psi g(TX,TY).
    """
    kind = ConnectionKind.parse(kind)
    f1, f2, f3 = params.as_tuple()
    psi = params.psi
    if kind is ConnectionKind.LEVI_CIVITA:
        return DerivedCoefficients(m * f1 - f3, 3 * f2, -(m - 1) * f3, 0.0)
    if kind is ConnectionKind.SEMISYMMETRIC_METRIC:
        return DerivedCoefficients(m * (f1 - 1) - (f3 - 1), 3 * f2, -(m - 1) * (f3 - 1), (m - 1) * psi)
    if kind is ConnectionKind.SEMISYMMETRIC_NON_METRIC:
        return DerivedCoefficients(m * f1 - f3, 3 * f2, -(m - 1) * f3 + m, m * psi)
    k3 = f3 + psi**2
    if kind is ConnectionKind.SCHOUTEN_VAN_KAMPEN:
        return DerivedCoefficients(m * f1 - k3, 3 * f2 + psi**2, -(m - 1) * k3, 0.0)
    return DerivedCoefficients(m * f1 - k3, 3 * f2 + 2 * psi + psi**2, -(m - 1) * k3, 0.0)


# --------------------------------------------------------------------------
# direct contractions


def ricci_direct(sub: Submanifold, kind, params: SpaceFormParams, X, Y, convention: str = "first-last") -> float:
    """Frame contraction of the induced curvature.

    ``convention="last-first"`` contracts as sum_i R(X, E_i, E_i, Y) instead;
    it exists for sensitivity checks only.
    """
    sub.coords(X)
    sub.coords(Y)
    if convention == "first-last":
        return float(sum(induced_curvature(sub, kind, params, E, X, Y, E) for E in sub.frame))
    if convention == "last-first":
        return float(sum(induced_curvature(sub, kind, params, X, E, E, Y) for E in sub.frame))
    raise ValueError(f"unknown contraction convention {convention!r}")


def scalar_direct(sub: Submanifold, kind, params: SpaceFormParams) -> float:
    m = sub.m
    if m < 1:
        raise SubmanifoldError("scalar curvature needs m >= 1")
    total = 0.0
    for Ei in sub.frame:
        for Ej in sub.frame:
            total += induced_curvature(sub, kind, params, Ei, Ej, Ej, Ei)
    return total / (m * (m + 1))


# --------------------------------------------------------------------------
# closed forms, term by term


def _ricci_printed_terms(kind, params: SpaceFormParams, q: _Pair, form: str, c: float | None):
    m = q.m
    f1, f2, f3 = params.as_tuple()
    psi = params.psi
    S = ConnectionKind
    terms = []
    if form == "general":
        terms.append(("m f1 g(X,Y)", "ambient", m * f1 * q.gXY))
        if kind in (S.SEMISYMMETRIC_METRIC, S.SEMISYMMETRIC_NON_METRIC):
            terms.append(("3 f2 g(TX,TY)", "ambient", 3 * f2 * q.gTT))
            terms.append(("-(f3-1){g(X,Y) + (m-1) eta(X)eta(Y)}", "ambient", -(f3 - 1) * (q.gXY + (m - 1) * q.ee)))
            if kind is S.SEMISYMMETRIC_METRIC:
                terms.append(("(f1-f3)(m-1) g(TX,Y)", "ambient", psi * (m - 1) * q.gTXY))
            else:
                terms.append(("-m eta(X)eta(Y)", "ambient", -m * q.ee))
                terms.append(("(f1-f3) g(TX,Y)", "ambient", psi * q.gTXY))
        else:
            b = 3 * f2 + psi**2 if kind is S.SCHOUTEN_VAN_KAMPEN else 3 * f2 + 2 * psi + psi**2
            lab = "{3f2+(f1-f3)^2}" if kind is S.SCHOUTEN_VAN_KAMPEN else "{3f2+2(f1-f3)+(f1-f3)^2}"
            terms.append((lab + " g(TX,TY)", "ambient", b * q.gTT))
            terms.append(
                ("-{f3+(f1-f3)^2}{g(X,Y) + (m-1) eta(X)eta(Y)}", "ambient", -(f3 + psi**2) * (q.gXY + (m - 1) * q.ee))
            )
    elif form == "asi":
        if kind is S.SEMISYMMETRIC_METRIC:
            coef = lambda lam: m * f1 + 3 * f2 * lam**2 - f3 + 1  # noqa: E731
            terms.append(("sum_lam (m f1 + 3 f2 lam^2 - f3 + 1) g(U X, U Y)", "ambient", sum(coef(l) * u for l, u in q.clusters)))
            terms.append(("m(f1-f3+1) eta(X)eta(Y)", "ambient", m * (psi + 1) * q.ee))
            terms.append(("(f1-f3)(m-1) g(TX,Y)", "ambient", psi * (m - 1) * q.gTXY))
        elif kind is S.SEMISYMMETRIC_NON_METRIC:
            coef = lambda lam: m * f1 + 3 * f2 * lam**2 - f3 + 1  # noqa: E731
            terms.append(("sum_lam (m f1 + 3 f2 lam^2 - f3 + 1) g(U X, U Y)", "ambient", sum(coef(l) * u for l, u in q.clusters)))
            terms.append(("m(f1-f3) eta(X)eta(Y)", "ambient", m * psi * q.ee))
            terms.append(("(f1-f3) g(TX,Y)", "ambient", psi * q.gTXY))
        else:
            b = 3 * f2 if kind is S.SCHOUTEN_VAN_KAMPEN else 3 * f2 + 2 * psi
            coef = lambda lam: m * f1 + b * lam**2 - f3 + psi**2 * (lam**2 - 1)  # noqa: E731
            lab = "3f2" if kind is S.SCHOUTEN_VAN_KAMPEN else "{3f2+2(f1-f3)}"
            terms.append((f"sum_lam [m f1 + {lab} lam^2 - f3 + (f1-f3)^2 (lam^2-1)] g(U X, U Y)", "ambient", sum(coef(l) * u for l, u in q.clusters)))
            terms.append(("m[f1 - {f3+(f1-f3)^2}] eta(X)eta(Y)", "ambient", m * (f1 - f3 - psi**2) * q.ee))
    elif form == "sasakian":
        if kind in (S.SEMISYMMETRIC_METRIC, S.SEMISYMMETRIC_NON_METRIC):
            coef = lambda lam: ((m - 1 + 3 * lam**2) * c + 3 * (m - lam**2) + 5) / 4  # noqa: E731
            terms.append(("[((m-1+3 lam^2)c + 3(m-lam^2) + 5)/4] g(U X, U Y)", "ambient", sum(coef(l) * u for l, u in q.clusters)))
            if kind is S.SEMISYMMETRIC_METRIC:
                terms.append(("(m-1) g(TX,Y)", "ambient", (m - 1) * q.gTXY))
            else:
                terms.append(("g(TX,Y)", "ambient", q.gTXY))
        else:
            if kind is S.SCHOUTEN_VAN_KAMPEN:
                coef = lambda lam: ((m - 1 + 3 * lam**2) * c + 3 * (m - 1) + lam**2) / 4  # noqa: E731
                lab = "[((m-1+3 lam^2)c + 3(m-1) + lam^2)/4] g(U X, U Y)"
            else:
                coef = lambda lam: ((m - 1 + 3 * lam**2) * c + 3 * (m - 1 + 3 * lam**2)) / 4  # noqa: E731
                lab = "[((m-1+3 lam^2)c + 3(m-1+3 lam^2))/4] g(U X, U Y)"
            terms.append((lab, "ambient", sum(coef(l) * u for l, u in q.clusters)))
            terms.append(("2m eta(X)eta(Y)", "ambient", 2 * m * q.ee))
    else:
        raise ValueError(f"unknown form {form!r}")
    terms.append(("sum_k {(m+1)(trace A_k) g(A_k X, Y) - g(A_k X, A_k Y)}", "sff", q.sff_printed))
    return terms


def _ricci_derived_terms(kind, params: SpaceFormParams, q: _Pair, form: str):
    dc = derived_coefficients(kind, params, q.m)
    terms = []
    if form == "general":
        terms += [
            ("alpha g(X,Y)", "ambient", dc.alpha * q.gXY),
            ("beta g(TX,TY)", "ambient", dc.beta * q.gTT),
            ("gamma eta(X)eta(Y)", "ambient", dc.gamma * q.ee),
        ]
    else:
        terms += [
            ("sum_lam (alpha + beta lam^2) g(U X, U Y)", "ambient", sum((dc.alpha + dc.beta * l**2) * u for l, u in q.clusters)),
            ("(alpha + gamma) eta(X)eta(Y)", "ambient", (dc.alpha + dc.gamma) * q.ee),
        ]
    terms.append(("eps g(TX,Y)", "ambient", dc.eps * q.gTXY))
    terms.append(("sum_k {(trace A_k) g(A_k X, Y) - g(A_k A_k X, Y)}", "sff", q.sff_derived))
    return terms


def _check_sasakian(params: SpaceFormParams, c: float | None) -> SpaceFormParams:
    if c is None:
        raise ValueError("sasakian form needs the constant c")
    expected = sasakian_params(c)
    if not np.allclose(params.as_tuple(), expected.as_tuple(), atol=1e-12, rtol=0):
        raise ValueError(f"params {params.as_tuple()} are not the Sasakian substitution for c={c}")
    return expected


def ricci_closed_terms(
    sub: Submanifold,
    kind,
    params: SpaceFormParams,
    X,
    Y,
    form: str = "general",
    variant: FormVariant = FormVariant.ORACLE_DERIVED,
    split: DistributionSplit | None = None,
    c: float | None = None,
    coeffs=None,
):
    """Closed-form Ricci value as ``[(label, block, value), ...]``; block is 'ambient' or 'sff'."""
    kind = ConnectionKind.parse(kind)
    variant = FormVariant(variant)
    if form in ("asi", "sasakian") and split is None:
        raise ValueError(f"form {form!r} requires a distribution split")
    if form == "sasakian":
        _check_sasakian(params, c)
    q = _pair(sub, kind, params, X, Y, split, coeffs)
    if variant is FormVariant.AS_PRINTED:
        if kind not in DEFORMED_KINDS:
            raise PrintedFormUnavailable(f"no printed Ricci formula for {kind.value}")
        return _ricci_printed_terms(kind, params, q, form, c)
    return _ricci_derived_terms(kind, params, q, "general" if form == "general" else "asi")


def ricci_closed(sub, kind, params, X, Y, form="general", variant=FormVariant.ORACLE_DERIVED, split=None, c=None, coeffs=None) -> float:
    return float(sum(v for _, _, v in ricci_closed_terms(sub, kind, params, X, Y, form, variant, split, c, coeffs)))


def _scalar_sff(sub: Submanifold, c: np.ndarray) -> tuple[float, float, float]:
    """((m+1)^2 |H|^2, |h|^2, sum_ij g(h(E_i,E_j), h(E_j,E_i)))."""
    if sub.codim == 0:
        return 0.0, 0.0, 0.0
    trace = np.einsum("iik->k", c)
    return float(trace @ trace), float(np.sum(c * c)), float(np.einsum("ijk,jik->", c, c))


def scalar_closed_terms(sub: Submanifold, kind, params: SpaceFormParams, split: DistributionSplit, variant=FormVariant.ORACLE_DERIVED, coeffs=None):
    kind = ConnectionKind.parse(kind)
    variant = FormVariant(variant)
    if split is None:
        raise ValueError("scalar closed form requires a distribution split")
    m = sub.m
    norm_ = 1.0 / (m * (m + 1))
    c = deformed_sff_coeffs(sub, kind, params) if coeffs is None else coeffs
    H2, h2, h_pair = _scalar_sff(sub, c)
    wdim = split.weighted_dimension
    f1, f2, f3 = params.as_tuple()
    psi = params.psi
    S = ConnectionKind
    if variant is FormVariant.ORACLE_DERIVED:
        dc = derived_coefficients(kind, params, m)
        return [
            ("[alpha(m+1) + beta sum n(lam) lam^2 + gamma] / (m(m+1))", "ambient", norm_ * (dc.alpha * (m + 1) + dc.beta * wdim + dc.gamma)),
            ("[(m+1)^2 |H|^2 - sum_ij g(h(E_i,E_j), h(E_j,E_i))] / (m(m+1))", "sff", norm_ * (H2 - h_pair)),
        ]
    if kind not in DEFORMED_KINDS:
        raise PrintedFormUnavailable(f"no printed scalar formula for {kind.value}")
    if kind is S.SEMISYMMETRIC_METRIC:
        return [
            ("f1 + {3f2 sum n(lam) lam^2 - 2m f3 + 2m} / (m(m+1))", "ambient", f1 + norm_ * (3 * f2 * wdim - 2 * m * f3 + 2 * m)),
            ("(m+1)^2 |H|^2 - |h|^2", "sff", H2 - h2),
        ]
    if kind is S.SEMISYMMETRIC_NON_METRIC:
        return [
            ("f1 + {3f2 sum n(lam) lam^2 - 2m f3 + m} / (m(m+1))", "ambient", f1 + norm_ * (3 * f2 * wdim - 2 * m * f3 + m)),
            ("(m+1)^2 |H|^2 - |h|^2", "sff", H2 - h2),
        ]
    b = 3 * f2 + psi**2 if kind is S.SCHOUTEN_VAN_KAMPEN else 3 * f2 + 2 * psi + psi**2
    lab = "{3f2+(f1-f3)^2}" if kind is S.SCHOUTEN_VAN_KAMPEN else "{3f2+2(f1-f3)+(f1-f3)^2}"
    return [
        (f"f1 + [{lab} sum n(lam) lam^2 - 2m{{f3+(f1-f3)^2}}] / (m(m+1))", "ambient", f1 + norm_ * (b * wdim - 2 * m * (f3 + psi**2))),
        ("[(m+1)^2 |H|^2 - |h|^2] / (m(m+1))", "sff", norm_ * (H2 - h2)),
    ]


def scalar_closed(sub, kind, params, split, variant=FormVariant.ORACLE_DERIVED, coeffs=None) -> float:
    return float(sum(v for _, _, v in scalar_closed_terms(sub, kind, params, split, variant, coeffs)))


def _block(terms, block: str) -> float:
    return float(sum(v for _, b, v in terms if b == block))


def theorem_ricci_bound(sub, kind, params, split, X, variant=FormVariant.ORACLE_DERIVED) -> float:
    """Right side of inequality (i): the ambient block of the asi Ricci form at (X, X)."""
    return _block(ricci_closed_terms(sub, kind, params, X, X, "asi", variant, split), "ambient")


def theorem_scalar_bound(sub, kind, params, split, variant=FormVariant.ORACLE_DERIVED) -> float:
    """Right side of inequality (ii): the ambient block of the scalar form."""
    return _block(scalar_closed_terms(sub, kind, params, split, variant), "ambient")


# --------------------------------------------------------------------------
# theorem checks


def _variants_for(kind) -> list[FormVariant]:
    if ConnectionKind.parse(kind) in DEFORMED_KINDS:
        return [FormVariant.AS_PRINTED, FormVariant.ORACLE_DERIVED]
    return [FormVariant.ORACLE_DERIVED]


def shape_operator_squares(sub: Submanifold, coeffs: np.ndarray, X) -> tuple[float, float]:
    """(sum_k g(A_k X, A_k X), sum_k g(A_k A_k X, X)) for the deformed shape operators.

    The two agree when every A_k is self-adjoint; the second is the quantity
    the Gauss equation actually produces.
    """
    x = sub.coords(X)
    sq = pair = 0.0
    for k in range(sub.codim):
        ck = coeffs[:, :, k]
        AX = ck.T @ x
        sq += float(AX @ AX)
        pair += float(x @ ck @ ck @ x)
    return sq, pair


def minimality_terms(sub: Submanifold, kind, params, coeffs: np.ndarray, X) -> tuple[float, float]:
    """(sum_k (trace A_k) g(A_k X, X), (m+1) g(h(X,X), H))."""
    x = sub.coords(X)
    lhs = sum(float(np.trace(coeffs[:, :, k]) * (x @ coeffs[:, :, k] @ x)) for k in range(sub.codim))
    hXX = deformed_sff(sub, kind, params, X, X)
    H = (np.einsum("iik->k", coeffs) / (sub.m + 1)) @ sub.normal_frame if sub.codim else np.zeros(sub.acs.dim)
    return lhs, (sub.m + 1) * sub.acs.inner(hXX, H)


@dataclass
class TheoremReport:
    kind: ConnectionKind
    trials: int
    min_slack_i: dict[str, float] = field(default_factory=dict)
    slack_ii: dict[str, float] = field(default_factory=dict)
    max_slack_vs_squares: float = 0.0
    max_slack_vs_gauss_pairing: float = 0.0
    max_minimality_residual: float = 0.0
    witness: dict | None = None
    tol: float = 1e-9

    def holds_i(self, variant: FormVariant, tol: float = 1e-10) -> bool:
        return self.min_slack_i[variant.value] >= -tol

    def holds_ii(self, variant: FormVariant, tol: float = 1e-10) -> bool:
        return self.slack_ii[variant.value] >= -tol


def theorem_inequalities(sub, kind, params, split, sampler: Sampler, trials: int = 20, tol: float = 1e-9) -> TheoremReport:
    """Check inequalities (i) and (ii) on a minimal submanifold.

    Slack means right side minus left side, so a true inequality has slack >= 0.
    """
    kind = ConnectionKind.parse(kind)
    if classify_sff(sub, kind, params, tol) == "generic":
        raise TheoremHypothesisError("theorem hypothesis violated: submanifold is not minimal")
    coeffs = deformed_sff_coeffs(sub, kind, params)
    variants = _variants_for(kind)
    rep = TheoremReport(kind, trials, {v.value: np.inf for v in variants}, {}, tol=tol)
    for t in range(trials):
        X = random_tangent(sub, sampler.spawn(t))
        S = ricci_direct(sub, kind, params, X, X)
        for v in variants:
            slack = theorem_ricci_bound(sub, kind, params, split, X, v) - S
            if slack < rep.min_slack_i[v.value]:
                rep.min_slack_i[v.value] = float(slack)
                if v is FormVariant.ORACLE_DERIVED:
                    rep.witness = {"X": X.tolist(), "ricci": S, "slack": float(slack)}
            if v is FormVariant.ORACLE_DERIVED:
                sq, pair = shape_operator_squares(sub, coeffs, X)
                rep.max_slack_vs_squares = max(rep.max_slack_vs_squares, abs(slack - sq))
                rep.max_slack_vs_gauss_pairing = max(rep.max_slack_vs_gauss_pairing, abs(slack - pair))
        lhs, rhs = minimality_terms(sub, kind, params, coeffs, X)
        rep.max_minimality_residual = max(rep.max_minimality_residual, abs(lhs), abs(rhs), abs(lhs - rhs))
    tau = scalar_direct(sub, kind, params)
    for v in variants:
        rep.slack_ii[v.value] = float(theorem_scalar_bound(sub, kind, params, split, v) - tau)
    return rep


@dataclass
class EqualityReport:
    kind: ConnectionKind
    max_gap_i: float
    gap_ii: float
    tol: float
    printed_gaps_i: list[float] = field(default_factory=list)
    printed_gap_ii: float | None = None

    @property
    def passed(self) -> bool:
        return self.max_gap_i <= self.tol and abs(self.gap_ii) <= self.tol


def equality_check(sub, kind, params, split, sampler: Sampler | None = None, tol: float = 1e-10, random_vectors: int = 20) -> EqualityReport:
    """Equality in (i) and (ii) against the re-derived bounds on a totally geodesic submanifold."""
    kind = ConnectionKind.parse(kind)
    if classify_sff(sub, kind, params, tol) != "totally_geodesic":
        raise TheoremHypothesisError("equality case needs a totally geodesic submanifold")
    vectors = list(sub.frame)
    if sampler is not None:
        vectors += [random_tangent(sub, sampler.spawn(t)) for t in range(random_vectors)]
    gaps, printed = [], []
    for X in vectors:
        S = ricci_direct(sub, kind, params, X, X)
        gaps.append(abs(S - theorem_ricci_bound(sub, kind, params, split, X)))
        if kind in DEFORMED_KINDS:
            printed.append(theorem_ricci_bound(sub, kind, params, split, X, FormVariant.AS_PRINTED) - S)
    tau = scalar_direct(sub, kind, params)
    rep = EqualityReport(kind, max(gaps), tau - theorem_scalar_bound(sub, kind, params, split), tol, printed)
    if kind in DEFORMED_KINDS:
        rep.printed_gap_ii = theorem_scalar_bound(sub, kind, params, split, FormVariant.AS_PRINTED) - tau
    return rep


def split_for(sub: Submanifold) -> DistributionSplit:
    return asi_split(sub)
