"""Operator means, scalar function registry, and spectrum utilities.

Two closed families of scalar functions drive the inequality catalog:

* operator-monotone *decreasing* functions on (0, inf):
  ``inv`` (1/t), ``inv_pow:s`` (t^-s, 0 < s <= 1), ``shifted_inv:c``
  (1/(t+c), c > 0);
* *increasing convex* functions on [0, inf) with h(0) = 0:
  ``pow:p`` (t^p, p >= 1) and ``expm1`` (e^t - 1).

Pairs (f, g) with f(t) g(t) = t for the Cauchy-Schwarz-type bounds:
``sqrt`` (f = g = sqrt) and ``pow:nu`` (f = t^(1-nu), g = t^nu).

The registry is closed: anything else raises InvalidSpecError, so
campaign configurations stay reproducible across versions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Callable

import numpy as np

from .errors import (
    HypothesisViolatedError,
    InvalidSpecError,
    NotIsometryError,
    NotPositiveDefiniteError,
)
from .matrixcore import apply_fn, as_cmatrix, herm_eigen, op_norm

__all__ = [
    "ScalarFn",
    "get_fn",
    "get_pair",
    "list_fns",
    "eval_fn",
    "psd_pow",
    "MeanKind",
    "mean",
    "kantorovich",
    "SpectrumBounds",
    "spectrum_bounds",
    "compress",
    "require_pd",
]

PD_TOL = 1e-10
ISO_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class ScalarFn:
    """A registered scalar function together with its calculus metadata.

    ``kind`` is "decreasing" (operator monotone decreasing) or
    "increasing" (increasing convex, h(0) = 0).  ``strict_lo`` marks a
    pole at the lower domain edge, in which case the spectrum must stay
    strictly above it.
    """

    name: str
    kind: str
    domain: tuple[float, float]
    fn: Callable[[np.ndarray], np.ndarray]
    strict_lo: bool = False
    params: tuple[float, ...] = field(default=())

    def __call__(self, t):
        arr = np.asarray(t, dtype=float)
        out = np.asarray(self.fn(arr), dtype=float)
        return float(out) if np.isscalar(t) or arr.ndim == 0 else out


def _fn_inv() -> ScalarFn:
    return ScalarFn("inv", "decreasing", (0.0, np.inf), lambda t: 1.0 / t,
                    strict_lo=True)


def _fn_inv_pow(s: float) -> ScalarFn:
    if not 0.0 < s <= 1.0:
        raise InvalidSpecError(f"inv_pow exponent must lie in (0, 1], got {s}")
    return ScalarFn(f"inv_pow:{s:g}", "decreasing", (0.0, np.inf),
                    lambda t, s=s: t ** (-s), strict_lo=True, params=(s,))


def _fn_shifted_inv(c: float) -> ScalarFn:
    if not c > 0.0:
        raise InvalidSpecError(f"shifted_inv offset must be positive, got {c}")
    return ScalarFn(f"shifted_inv:{c:g}", "decreasing", (0.0, np.inf),
                    lambda t, c=c: 1.0 / (t + c), params=(c,))


def _fn_pow(p: float) -> ScalarFn:
    if not p >= 1.0:
        raise InvalidSpecError(f"pow exponent must be >= 1, got {p}")
    return ScalarFn(f"pow:{p:g}", "increasing", (0.0, np.inf),
                    lambda t, p=p: t ** p, params=(p,))


def _fn_expm1() -> ScalarFn:
    return ScalarFn("expm1", "increasing", (0.0, np.inf), np.expm1)


_BUILDERS = {
    "inv": (_fn_inv, 0),
    "inv_pow": (_fn_inv_pow, 1),
    "shifted_inv": (_fn_shifted_inv, 1),
    "pow": (_fn_pow, 1),
    "expm1": (_fn_expm1, 0),
}


def _parse_spec(spec: str) -> tuple[str, list[float]]:
    parts = spec.split(":")
    head, rest = parts[0], parts[1:]
    try:
        args = [float(p) for p in rest]
    except ValueError as exc:
        raise InvalidSpecError(f"bad parameter in {spec!r}") from exc
    return head, args


def get_fn(spec) -> ScalarFn:
    """Resolve a scalar function from its registry string.

    Accepts "inv", "inv_pow:s", "shifted_inv:c", "pow:p", "expm1", or an
    existing ScalarFn (returned as-is).
    """
    if isinstance(spec, ScalarFn):
        return spec
    head, args = _parse_spec(str(spec))
    if head not in _BUILDERS:
        raise InvalidSpecError(
            f"unknown scalar function {head!r}; known: {sorted(_BUILDERS)}"
        )
    builder, arity = _BUILDERS[head]
    if len(args) != arity:
        raise InvalidSpecError(
            f"{head} takes {arity} parameter(s), got {len(args)}"
        )
    return builder(*args)


def get_pair(spec) -> tuple[ScalarFn, ScalarFn]:
    """Resolve a Schwarz pair (f, g) with f(t) g(t) = t.

    "sqrt" gives f = g = sqrt(t); "pow:nu" with 0 < nu < 1 gives
    f = t^(1-nu), g = t^nu.
    """
    head, args = _parse_spec(str(spec))
    if head == "sqrt":
        if args:
            raise InvalidSpecError("sqrt pair takes no parameters")
        f = ScalarFn("sqrt.f", "pair", (0.0, np.inf), np.sqrt)
        return f, ScalarFn("sqrt.g", "pair", (0.0, np.inf), np.sqrt)
    if head == "pow":
        if len(args) != 1:
            raise InvalidSpecError("pow pair takes exactly one parameter")
        nu = args[0]
        if not 0.0 < nu < 1.0:
            raise InvalidSpecError(f"pair exponent must lie in (0, 1), got {nu}")
        f = ScalarFn(f"pow_pair.f:{nu:g}", "pair", (0.0, np.inf),
                     lambda t, e=1.0 - nu: t ** e, params=(1.0 - nu,))
        g = ScalarFn(f"pow_pair.g:{nu:g}", "pair", (0.0, np.inf),
                     lambda t, e=nu: t ** e, params=(nu,))
        return f, g
    raise InvalidSpecError(f"unknown pair {spec!r}; known: sqrt, pow:nu")


def list_fns() -> list[str]:
    """Names of the registered scalar function templates."""
    return sorted(_BUILDERS)


def eval_fn(spec, h) -> np.ndarray:
    """Apply a registered scalar function to a Hermitian matrix.

    Strict lower edges (inv-type poles) demand a strictly positive
    spectrum; NotPositiveDefiniteError is raised otherwise.  Soft edges
    follow the clamp-within-tolerance rule of `matrixcore.apply_fn`.
    """
    f = get_fn(spec)
    h = as_cmatrix(h, "H")
    if f.strict_lo and h.size:
        e = herm_eigen(h)
        if e.eigenvalues[0] <= f.domain[0]:
            raise NotPositiveDefiniteError(
                f"{f.name} needs spectrum > {f.domain[0]:g}, "
                f"min eigenvalue is {e.eigenvalues[0]:.6g}"
            )
        return e.compose(np.asarray(f.fn(e.eigenvalues), dtype=float))
    return apply_fn(h, f.fn, domain=f.domain, name=f.name)


def psd_pow(p, s: float) -> np.ndarray:
    """Power P^s of a positive-semidefinite matrix.

    Negative round-off eigenvalues are clipped to zero first.  Negative
    exponents additionally require positive definiteness.
    """
    p = as_cmatrix(p, "P")
    e = herm_eigen(p, tol=1e-8)
    w = np.clip(e.eigenvalues, 0.0, None)
    if s < 0:
        if w.size and w[0] <= PD_TOL * max(1.0, float(w[-1])):
            raise NotPositiveDefiniteError(
                "negative power of a singular PSD matrix"
            )
    return e.compose(w ** s)


def require_pd(p, name: str = "P") -> np.ndarray:
    """Validate positive definiteness: min eig > 1e-10 * max(1, ||P||)."""
    p = as_cmatrix(p, name)
    e = herm_eigen(p)
    if e.eigenvalues.size == 0:
        return p
    thr = PD_TOL * max(1.0, float(np.max(np.abs(e.eigenvalues))))
    if e.eigenvalues[0] <= thr:
        raise NotPositiveDefiniteError(
            f"{name} is not positive definite "
            f"(min eigenvalue {e.eigenvalues[0]:.6g})"
        )
    return p


class MeanKind(str, Enum):
    """The three operator means handled by `mean`."""

    ARITH = "arith"
    GEOM = "geom"
    HARM = "harm"


def mean(a, b, kind=MeanKind.ARITH, nu: float = 0.5) -> np.ndarray:
    """Weighted operator mean of two positive definite matrices.

    kind="arith": (1-nu) A + nu B
    kind="harm" : ((1-nu) A^-1 + nu B^-1)^-1
    kind="geom" : A^(1/2) (A^(-1/2) B A^(-1/2))^nu A^(1/2)

    nu must lie in [0, 1].  The harmonic and geometric means require
    both operands positive definite; the arithmetic mean accepts any
    Hermitian pair.
    """
    try:
        kind = MeanKind(kind)
    except ValueError:
        raise InvalidSpecError(
            f"unknown mean {kind!r}; known: arith, geom, harm"
        ) from None
    if not 0.0 <= nu <= 1.0:
        raise InvalidSpecError(f"mean weight must lie in [0, 1], got {nu}")
    a = as_cmatrix(a, "A")
    b = as_cmatrix(b, "B")
    if a.shape != b.shape:
        raise InvalidSpecError(f"mean operands differ in shape: {a.shape} vs {b.shape}")

    if kind is MeanKind.ARITH:
        return (1.0 - nu) * a + nu * b

    require_pd(a, "A")
    require_pd(b, "B")
    if kind is MeanKind.HARM:
        inv_mix = (1.0 - nu) * psd_pow(a, -1.0) + nu * psd_pow(b, -1.0)
        return psd_pow(inv_mix, -1.0)

    # geometric
    a_half = psd_pow(a, 0.5)
    a_negh = psd_pow(a, -0.5)
    core = psd_pow(a_negh @ b @ a_negh, nu)
    return a_half @ core @ a_half


def kantorovich(m: float, big_m: float) -> float:
    """Kantorovich constant (M + m)^2 / (4 m M) for 0 < m <= M."""
    m = float(m)
    big_m = float(big_m)
    if not (0.0 < m <= big_m):
        raise InvalidSpecError(
            f"need 0 < m <= M, got m={m:g}, M={big_m:g}"
        )
    return (big_m + m) ** 2 / (4.0 * m * big_m)


@dataclass(frozen=True)
class SpectrumBounds:
    """Tight two-sided spectral bounds m I <= X <= M I over a family."""

    m: float
    M: float

    @property
    def kantorovich(self) -> float:
        return kantorovich(self.m, self.M)


def spectrum_bounds(mats) -> SpectrumBounds:
    """Joint spectral bounds of one or more Hermitian matrices.

    Returns the smallest eigenvalue across the family as ``m`` and the
    largest as ``M``; these are the tightest constants with
    m I <= X <= M I for every member X.
    """
    if isinstance(mats, np.ndarray) and mats.ndim == 2:
        mats = [mats]
    lows, highs = [], []
    for x in mats:
        e = herm_eigen(x)
        if e.eigenvalues.size == 0:
            continue
        lows.append(float(e.eigenvalues[0]))
        highs.append(float(e.eigenvalues[-1]))
    if not lows:
        raise HypothesisViolatedError("spectrum_bounds of an empty family")
    return SpectrumBounds(min(lows), max(highs))


def compress(a, v) -> np.ndarray:
    """Compression V* A V by an isometry V (columns orthonormal).

    Raises NotIsometryError when ||V*V - I|| exceeds 1e-10 * k.
    """
    a = as_cmatrix(a, "A")
    v = as_cmatrix(v, "V")
    if v.shape[0] != a.shape[0] or a.shape[0] != a.shape[1]:
        raise NotIsometryError(
            f"A {a.shape} and V {v.shape} are not conformable"
        )
    k = v.shape[1]
    dev = op_norm(v.conj().T @ v - np.eye(k))
    if dev > ISO_TOL * max(1, k):
        raise NotIsometryError(f"V*V deviates from identity by {dev:.3e}")
    return v.conj().T @ a @ v
