"""Jacobi-operator spectra and certified index/nullity for model submanifolds.

Each model family below is a compact minimal submanifold of a Berger
sphere whose Jacobi operator diagonalises against the exact Laplace
spectra of :mod:`bergersphere.spectra`.  Mode values are exact rationals
in tau^2 wherever the closed forms are rational, so the sign of every
mode - and hence index and nullity - is decided exactly.  The one
irrational family (the gradient-pair modes of the totally real spheres)
carries a float value together with an exactly decided sign.

``enumerate_index`` drives any family through its mode generator with a
truncation certificate: a monotone lower bound proving that all modes
beyond the scanned range are strictly positive.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .geometry import BergerParam, GeometryDomainError
from . import spectra

ZERO_BAND = 1e-12


class TruncationError(RuntimeError):
    """No certified truncation exists within the configured limits."""


# ---------------------------------------------------------------------------
# Model descriptions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TotallyGeodesicBergerSphere:
    """S^{2m+1}_tau inside S^{2n+1}_tau by padding with zeros."""

    n: int
    m: int

    def __post_init__(self):
        if not (0 <= self.m <= self.n):
            raise GeometryDomainError("need 0 <= m <= n")

    @property
    def dimension(self) -> int:
        return 2 * self.m + 1

    def label(self) -> str:
        return f"tg-berger(n={self.n},m={self.m})"


@dataclass(frozen=True)
class CircleCover:
    """The closed geodesic z -> (z^s, 0, ..., 0), an s-fold covered circle."""

    n: int
    s: int

    def __post_init__(self):
        if self.n < 1 or self.s < 1:
            raise GeometryDomainError("need n >= 1 and s >= 1")

    @property
    def dimension(self) -> int:
        return 1

    def label(self) -> str:
        return f"circle(n={self.n},s={self.s})"


@dataclass(frozen=True)
class VeroneseRP3:
    """The embedded real projective 3-space over the quadratic curve in CP^2."""

    @property
    def n(self) -> int:
        return 2

    @property
    def dimension(self) -> int:
        return 3

    def label(self) -> str:
        return "veronese-rp3"


@dataclass(frozen=True)
class VeroneseS3:
    """The 2-1 immersed 3-sphere covering the embedded projective space."""

    @property
    def n(self) -> int:
        return 2

    @property
    def dimension(self) -> int:
        return 3

    def label(self) -> str:
        return "veronese-s3"


@dataclass(frozen=True)
class TotallyRealSphere:
    """The totally geodesic real d-sphere with normal Killing field."""

    n: int
    d: int

    def __post_init__(self):
        if not (1 <= self.d <= self.n):
            raise GeometryDomainError("need 1 <= d <= n")

    @property
    def dimension(self) -> int:
        return self.d

    def label(self) -> str:
        return f"totally-real(n={self.n},d={self.d})"


@dataclass(frozen=True)
class CliffordHypersurface:
    """Minimal product S^{2m1+1}(r1) x S^{2m2+1}(r2) inside S^{2n+1}_tau.

    Both factor dimensions are odd by construction; that is exactly the
    condition for the product to sit inside the Berger sphere with
    tangential Killing field.
    """

    m1: int
    m2: int

    def __post_init__(self):
        if self.m1 < 0 or self.m2 < 0:
            raise GeometryDomainError("need m1, m2 >= 0")

    @property
    def n(self) -> int:
        return self.m1 + self.m2 + 1

    @property
    def dimension(self) -> int:
        return 2 * self.n

    def label(self) -> str:
        return f"clifford(m1={self.m1},m2={self.m2})"


ModelSubmanifold = Union[TotallyGeodesicBergerSphere, CircleCover, VeroneseRP3,
                         VeroneseS3, TotallyRealSphere, CliffordHypersurface]


# ---------------------------------------------------------------------------
# Modes and reports
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class JacobiMode:
    """One eigenvalue of a Jacobi operator.

    ``value`` is an exact Fraction whenever the closed form is rational
    in tau^2, otherwise a float whose sign was decided exactly and stored
    in ``sign`` (-1, 0, +1; None means indeterminate and taints nullity).
    """

    family: str
    labels: tuple[int, ...]
    value: Union[Fraction, float]
    multiplicity: int
    sign: Optional[int] = None

    def __post_init__(self):
        if self.multiplicity < 1:
            raise GeometryDomainError("emitted modes must have multiplicity >= 1")
        if isinstance(self.value, int):
            object.__setattr__(self, "value", Fraction(self.value))
        if isinstance(self.value, Fraction):
            object.__setattr__(self, "sign", (self.value > 0) - (self.value < 0))
        elif self.sign is None and abs(self.value) > ZERO_BAND:
            object.__setattr__(self, "sign", 1 if self.value > 0 else -1)

    @property
    def value_float(self) -> float:
        return float(self.value)


@dataclass(frozen=True)
class IndexReport:
    """Certified index/nullity of a Jacobi operator."""

    index: int
    nullity: int
    nonpositive_modes: tuple[JacobiMode, ...]
    truncation_k: int
    certificate: str
    index_is_lower_bound: bool = False
    nullity_is_lower_bound: bool = False
    warnings: tuple[str, ...] = ()


def _collect_report(modes, truncation_k, certificate,
                    index_is_lower_bound=False, nullity_is_lower_bound=False) -> IndexReport:
    index = 0
    nullity = 0
    warnings = []
    for mode in modes:
        if mode.sign is None:
            warnings.append(
                f"mode {mode.family}{mode.labels} has value {mode.value!r} within "
                f"{ZERO_BAND} of zero but no exact sign; nullity left unclaimed")
        elif mode.sign < 0:
            index += mode.multiplicity
        elif mode.sign == 0:
            nullity += mode.multiplicity
    nonpos = tuple(sorted((m for m in modes if m.sign is not None and m.sign <= 0),
                          key=lambda m: (m.value_float, m.family, m.labels)))
    return IndexReport(index, nullity, nonpos, truncation_k, certificate,
                       index_is_lower_bound, nullity_is_lower_bound, tuple(warnings))


# ---------------------------------------------------------------------------
# Totally geodesic Berger spheres S^{2m+1}_tau in S^{2n+1}_tau
# ---------------------------------------------------------------------------


def tg_berger_modes(n: int, m: int, tau, k_max: int = 2) -> list[JacobiMode]:
    """Jacobi modes of the totally geodesic Berger sphere.

    Per complex normal slot the eigenvalues are

        rho = (2m+1+k)(k-1) + ((1-tau^2)/tau^2) (k-2p +- 1)^2,

    with multiplicity dim V(mu_{k,p}) of the small sphere per sign branch
    (the branches merge, doubling the multiplicity, when k = 2p).  The
    n - m slots carry identical spectra, so multiplicities are aggregated
    by the slot count.
    """
    if not (0 <= m < n):
        raise GeometryDomainError("need 0 <= m < n")
    param = BergerParam.coerce(tau)
    slots = n - m
    t = param.vertical_ratio
    modes = []
    for k in range(k_max + 1):
        base = (2 * m + 1 + k) * (k - 1)
        for p in range(k // 2 + 1):
            mult = spectra.berger_multiplicity(m, k, p)
            if mult == 0:
                continue
            q = k - 2 * p
            if q == 0:
                value = Fraction(base) + t
                modes.append(JacobiMode("normal-slot", (k, p, 0), value, 2 * mult * slots))
            else:
                for s in (1, -1):
                    value = Fraction(base) + t * (q + s) ** 2
                    modes.append(JacobiMode("normal-slot", (k, p, s), value, mult * slots))
    modes.sort(key=lambda mo: (mo.value_float, mo.labels))
    return modes


def tg_berger_index_nullity(n: int, m: int, tau) -> IndexReport:
    """Closed-form index/nullity of the totally geodesic Berger sphere.

    Index: 0 for tau^2 <= 1/(2m+2), else 2(n-m).
    Nullity: 2(n-m)(m+1) generically, 2(n-m)(m+2) at tau^2 = 1/(2m+2),
    4(n-m)(m+1) at tau^2 = 1.
    """
    if not (0 <= m < n):
        raise GeometryDomainError("need 0 <= m < n")
    param = BergerParam.coerce(tau)
    slots = n - m
    threshold = Fraction(1, 2 * (m + 1))
    if param.tau_sq <= threshold:
        index = 0
    else:
        index = 2 * slots
    if param.tau_sq == 1:
        nullity = 4 * slots * (m + 1)
    elif param.tau_sq == threshold:
        nullity = 2 * slots * (m + 2)
    else:
        nullity = 2 * slots * (m + 1)

    modes = []
    k0_value = 1 / param.tau_sq - (2 * m + 2)
    if k0_value <= 0:
        modes.append(JacobiMode("normal-slot", (0, 0, 0), k0_value, 2 * slots))
    modes.append(JacobiMode("normal-slot", (1, 0, -1), Fraction(0), (2 * m + 2) * slots))
    plus_value = 4 * param.vertical_ratio
    if plus_value == 0:
        modes.append(JacobiMode("normal-slot", (1, 0, 1), plus_value, (2 * m + 2) * slots))
    cert = ("piecewise table in tau^2; branch thresholds 1/(2m+2) and 1, "
            "modes with k >= 2 are strictly positive")
    report = _collect_report(modes, 1, cert)
    if (report.index, report.nullity) != (index, nullity):
        raise AssertionError("closed-form table disagrees with its own mode list")
    return report


# ---------------------------------------------------------------------------
# Covered circles z -> (z^s, 0, ..., 0)
# ---------------------------------------------------------------------------


def circle_modes(s: int, tau, k_max: int, slots: int = 1) -> list[JacobiMode]:
    """Jacobi modes of the s-fold covered circle, per complex normal slot.

    rho_(+-)(k) = (k^2/s^2 - 1) + ((1-tau^2)/tau^2) (k/s +- 1)^2, k >= 0,
    each with multiplicity 2 per slot (the circle eigenspaces are
    two-dimensional for k >= 1 and the k = 0 branches merge).
    """
    if s < 1:
        raise GeometryDomainError("need s >= 1")
    param = BergerParam.coerce(tau)
    t = param.vertical_ratio
    modes = []
    for k in range(k_max + 1):
        base = Fraction(k * k, s * s) - 1
        if k == 0:
            modes.append(JacobiMode("circle", (0, 0), base + t, 2 * slots))
            continue
        for sgn in (1, -1):
            value = base + t * (Fraction(k, s) + sgn) ** 2
            modes.append(JacobiMode("circle", (k, sgn), value, 2 * slots))
    modes.sort(key=lambda mo: (mo.value_float, mo.labels))
    return modes


def circle_stability(s: int, tau) -> bool:
    """The covered circle is stable exactly when tau^2 <= 1/(2s)."""
    if s < 1:
        raise GeometryDomainError("need s >= 1")
    return BergerParam.coerce(tau).tau_sq <= Fraction(1, 2 * s)


# ---------------------------------------------------------------------------
# The quadratic-curve models in S^5_tau
# ---------------------------------------------------------------------------


def veronese_modes(tau, k_max: int = 4, quotient: bool = True) -> list[JacobiMode]:
    """Jacobi modes of the quadratic-curve circle bundles in S^5_tau.

    rho_(+-)(k,p) = (1 + k(2+k))/2 + (k-2p +- 4)^2/(4 tau^2) - 8
                    - (k-2p +- 1)^2 / 2,

    with multiplicity dim V(mu_{k,p}) of the 3-sphere per branch, doubled
    and merged when k = 2p.  The embedded projective model keeps the even
    k only; the 2-1 covering 3-sphere keeps all k.
    """
    param = BergerParam.coerce(tau)
    modes = []
    for k in range(k_max + 1):
        if quotient and k % 2 == 1:
            continue
        half_shell = Fraction(1 + k * (2 + k), 2) - 8
        for p in range(k // 2 + 1):
            mult = spectra.berger_multiplicity(1, k, p)
            q = k - 2 * p
            if q == 0:
                value = half_shell + Fraction(16, 4) / param.tau_sq - Fraction(1, 2)
                modes.append(JacobiMode("bundle-pair", (k, p, 0), value, 2 * mult))
            else:
                for s in (1, -1):
                    value = (half_shell
                             + Fraction((q + 4 * s) ** 2, 4) / param.tau_sq
                             - Fraction((q + s) ** 2, 2))
                    modes.append(JacobiMode("bundle-pair", (k, p, s), value, mult))
    modes.sort(key=lambda mo: (mo.value_float, mo.labels))
    return modes


def veronese_index_nullity(tau, quotient: bool = True) -> IndexReport:
    """Index/nullity of the quadratic-curve models by exact enumeration.

    Modes with k >= 5 satisfy rho >= (k^2 - 16)/4 > 0, so scanning
    k <= 4 is complete.  For the covering 3-sphere above 1/4 the table
    entries are only bounded below, and the report says so.
    """
    param = BergerParam.coerce(tau)
    modes = veronese_modes(param, k_max=4, quotient=quotient)
    cert = "modes with k >= 5 satisfy rho >= (k^2-16)/4 > 0 since tau^2 <= 1"
    index_lb = (not quotient) and param.tau_sq > Fraction(1, 4)
    nullity_lb = (not quotient) and param.tau_sq not in (
        Fraction(1), Fraction(1, 4), Fraction(1, 8))
    return _collect_report(modes, 4, cert,
                           index_is_lower_bound=index_lb,
                           nullity_is_lower_bound=nullity_lb)


# ---------------------------------------------------------------------------
# Totally real (round) spheres S^d with normal Killing field
# ---------------------------------------------------------------------------


def _round_sphere_eig(d: int, k: int) -> int:
    return k * (d + k - 1)


def totally_real_sphere_modes(n: int, d: int, tau, k_max: int = 3) -> list[JacobiMode]:
    """Jacobi modes of the totally geodesic real d-sphere, three families.

    * ``constant-normal``: the Laplacian shifted by d acting along each of
      the 2(n-d) constant normal directions; values lambda_k - d.
    * ``gradient-pair``: the coupled gradient/function operator; values
      lambda_k - c - sqrt(c^2 + 4 tau^2 lambda_k) with c = d+1-2 tau^2 for
      k >= 1, whose sign is the exact sign of lambda_k - 2(d+1), plus a
      one-dimensional zero mode.  (The companion + branch is strictly
      positive and omitted.)
    * ``coexact-form``: the single value -4(1-tau^2) with multiplicity
      d(d+1)/2 coming from coexact one-forms (harmonic forms for d = 1).

    At tau^2 = 1 these families evaluate exactly to the classical round
    values: the coexact value reaches zero and the k = 1 gradient value
    becomes -d.
    """
    if not (1 <= d <= n):
        raise GeometryDomainError("need 1 <= d <= n")
    param = BergerParam.coerce(tau)
    modes = []

    for k in range(max(k_max, 2) + 1):
        mult = spectra.sphere_harmonic_multiplicity(d, k)
        if d < n:
            value = Fraction(_round_sphere_eig(d, k) - d)
            modes.append(JacobiMode("constant-normal", (k,), value, 2 * (n - d) * mult))
        if k == 0:
            modes.append(JacobiMode("gradient-pair", (0,), Fraction(0), 1))
            continue
        lam = _round_sphere_eig(d, k)
        gap = lam - 2 * (d + 1)  # exact sign of the minus branch
        if gap == 0:
            modes.append(JacobiMode("gradient-pair", (k,), Fraction(0), mult))
        else:
            c = d + 1 - 2 * float(param.tau_sq)
            value = lam - c - math.sqrt(c * c + 4 * float(param.tau_sq) * lam)
            modes.append(JacobiMode("gradient-pair", (k,), value, mult,
                                    sign=(1 if gap > 0 else -1)))

    modes.append(JacobiMode("coexact-form", (2,), -4 * param.one_minus, d * (d + 1) // 2))
    modes.sort(key=lambda mo: (mo.value_float, mo.family, mo.labels))
    return modes


def totally_real_sphere_index_nullity(n: int, d: int, tau) -> IndexReport:
    """Closed-form index/nullity of the totally real d-sphere.

    For tau^2 < 1: index 2n+1+d(d-1)/2 and nullity (d+1)(2n+1-3d/2).
    At tau^2 = 1 the classical round values 2n+1-d and (d+1)(2n+1-d).
    """
    if not (1 <= d <= n):
        raise GeometryDomainError("need 1 <= d <= n")
    param = BergerParam.coerce(tau)
    if param.tau_sq == 1:
        index = 2 * n + 1 - d
        nullity = (d + 1) * (2 * n + 1 - d)
    else:
        index = 2 * n + 1 + d * (d - 1) // 2
        nullity = int((d + 1) * Fraction(2 * (2 * n + 1) - 3 * d, 2))
    modes = totally_real_sphere_modes(n, d, param, k_max=2)
    cert = ("constant-normal modes are positive for k >= 2, gradient-pair "
            "modes are negative exactly for lambda_k < 2(d+1) (k <= 1) and "
            "zero exactly at k = 2; the coexact value is -4(1-tau^2)")
    report = _collect_report([m for m in modes if m.sign is not None and m.sign <= 0], 2, cert)
    if (report.index, report.nullity) != (index, nullity):
        raise AssertionError("closed-form table disagrees with its own mode list")
    return report


# ---------------------------------------------------------------------------
# Clifford product hypersurfaces
# ---------------------------------------------------------------------------


def clifford_jacobi_modes(m1: int, m2: int, tau) -> list[JacobiMode]:
    """Nonpositive-relevant Jacobi modes of the Clifford hypersurface.

    The Jacobi operator is the Laplacian plus 4n, so its modes are
    mu_{k1,k2,p} - 4n; every mode with k1+k2 >= 3 (and every (2,0)/(0,2)
    mode) is strictly positive, leaving

    * -4n with multiplicity 1,
    * 1/tau^2 - (2n+1) with multiplicity 2(n+1),
    * 0 with multiplicity 2(m1+1)(m2+1)                (frequency-0 pair),
    * 4(1-tau^2)/tau^2 with multiplicity 2(m1+1)(m2+1) (frequency-2 pair;
      this one reaches zero at tau^2 = 1 and doubles the nullity there).
    """
    param = BergerParam.coerce(tau)
    n = m1 + m2 + 1
    shift = 4 * n

    def mode(k1, k2, p):
        value = spectra.clifford_eigenvalue(m1, m2, param, k1, k2, p) - shift
        mult = spectra.clifford_multiplicity(m1, m2, k1, k2, p)
        return JacobiMode("hypersurface", (k1, k2, p), value, mult)

    modes = [mode(0, 0, 0), mode(1, 0, 0), mode(0, 1, 0), mode(1, 1, 1), mode(1, 1, 0)]
    modes.sort(key=lambda mo: (mo.value_float, mo.labels))
    return modes


def clifford_index_nullity(m1: int, m2: int, tau) -> IndexReport:
    """Index/nullity of the Clifford hypersurface.

    Index 1 for tau^2 <= 1/(2n+1), else 2n+3.  Nullity 2(m1+1)(m2+1)
    generically, gaining 2(n+1) at tau^2 = 1/(2n+1) and doubling at
    tau^2 = 1 (cross-checked against the flat-torus Fourier oracle).
    """
    param = BergerParam.coerce(tau)
    modes = clifford_jacobi_modes(m1, m2, param)
    cert = ("eigenvalues with k1+k2 >= 3 satisfy mu >= 2n(k1+k2) > 4n and the "
            "(2,0)/(0,2) shells exceed 4n, so the five listed modes are complete")
    return _collect_report([m for m in modes if m.sign <= 0], 2, cert)


# ---------------------------------------------------------------------------
# Generic certified driver
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TruncationPolicy:
    """Optional override of the scan depth used by ``enumerate_index``."""

    k_max: Optional[int] = None
    k_limit: int = 64


def _resolve_k(policy: Optional[TruncationPolicy], required: int) -> int:
    policy = policy or TruncationPolicy()
    k = required if policy.k_max is None else policy.k_max
    if k < required:
        raise TruncationError(
            f"requested truncation k_max={k} is below the certified bound {required}")
    if k > policy.k_limit:
        raise TruncationError(
            f"certified truncation {k} exceeds the configured limit {policy.k_limit}")
    return k


def enumerate_index(model: ModelSubmanifold, tau, policy: Optional[TruncationPolicy] = None) -> IndexReport:
    """Index/nullity of a model by mode enumeration with a positivity certificate."""
    param = BergerParam.coerce(tau)

    if isinstance(model, TotallyGeodesicBergerSphere):
        if model.m >= model.n:
            raise GeometryDomainError("index enumeration needs m < n")
        k = _resolve_k(policy, 2)
        modes = tg_berger_modes(model.n, model.m, param, k_max=k)
        cert = (f"scanned k <= {k}; for k >= 2 every mode is at least "
                f"(2m+3)(k-1) > 0 plus a nonnegative vertical term")
        return _collect_report(modes, k, cert)

    if isinstance(model, CircleCover):
        k = _resolve_k(policy, model.s)
        modes = circle_modes(model.s, param, k_max=k, slots=model.n)
        cert = (f"scanned k <= {k}; for k > s every mode is at least "
                f"k^2/s^2 - 1 > 0 plus a nonnegative vertical term")
        return _collect_report(modes, k, cert)

    if isinstance(model, (VeroneseRP3, VeroneseS3)):
        quotient = isinstance(model, VeroneseRP3)
        k = _resolve_k(policy, 4)
        modes = veronese_modes(param, k_max=k, quotient=quotient)
        cert = f"scanned k <= {k}; modes with k >= 5 satisfy rho >= (k^2-16)/4 > 0"
        index_lb = (not quotient) and param.tau_sq > Fraction(1, 4)
        nullity_lb = (not quotient) and param.tau_sq not in (
            Fraction(1), Fraction(1, 4), Fraction(1, 8))
        return _collect_report(modes, k, cert,
                               index_is_lower_bound=index_lb,
                               nullity_is_lower_bound=nullity_lb)

    if isinstance(model, TotallyRealSphere):
        k = _resolve_k(policy, 2)
        modes = totally_real_sphere_modes(model.n, model.d, param, k_max=k)
        cert = (f"scanned k <= {k}; constant-normal modes grow like k(d+k-1)-d "
                "and gradient-pair modes are positive exactly for lambda_k > 2(d+1)")
        return _collect_report(modes, k, cert)

    if isinstance(model, CliffordHypersurface):
        k = _resolve_k(policy, 2)
        n = model.n
        shift = 4 * n
        modes = []
        for cmode in spectra.clifford_modes(model.m1, model.m2, param, sum_max=k):
            modes.append(JacobiMode("hypersurface", (cmode.k1, cmode.k2, cmode.p),
                                    cmode.value - shift, cmode.multiplicity))
        modes.sort(key=lambda mo: (mo.value_float, mo.labels))
        cert = (f"scanned k1+k2 <= {k}; eigenvalues with k1+k2 >= 3 satisfy "
                f"mu >= 2n(k1+k2) > 4n")
        return _collect_report(modes, k, cert)

    raise GeometryDomainError(f"unknown model {model!r}")


def model_index_nullity(model: ModelSubmanifold, tau) -> IndexReport:
    """Closed-form report for a model (piecewise tables where available)."""
    if isinstance(model, TotallyGeodesicBergerSphere):
        return tg_berger_index_nullity(model.n, model.m, tau)
    if isinstance(model, TotallyRealSphere):
        return totally_real_sphere_index_nullity(model.n, model.d, tau)
    if isinstance(model, CliffordHypersurface):
        return clifford_index_nullity(model.m1, model.m2, tau)
    if isinstance(model, (VeroneseRP3, VeroneseS3)):
        return veronese_index_nullity(tau, quotient=isinstance(model, VeroneseRP3))
    return enumerate_index(model, tau)
