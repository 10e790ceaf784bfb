"""Lossless three-layer Fabry-Perot stack: Fresnel data and photon numbers.

Normal incidence, single polarization (TE and TM coincide at theta = 0).
Interface amplitudes follow the convention r' = -r, t*t' - r*r' = 1, under
which the composite coefficients take the form

    nu2 = 1 / (1 + r1*r2*e^{2 i k2 d2}),
    R1  = (r1 + r2*e^{2 i k2 d2}) * nu2,        R2  = r2,
    T1  = t1*nu2,                               T2  = t2,
    R1' = r1',  R2' = (r2' + r1'*e^{2 i k2 d2}) * nu2,
    T1' = t1',  T2' = t2'*nu2,

and the directional photon numbers in each layer are linear in the two
input occupations <n_1+> and <n_3->, with the intracavity numbers divided
by Re[1 + 2 R1' R2 nu2 e^{2 i k2 d2}].  For a lossless stack every output
lies between the two inputs, so equal inputs are a fixed point.
"""

import cmath
import math
from dataclasses import dataclass

from .constants import C, HBAR, KB
from .errors import NumericalGuardError


@dataclass(frozen=True)
class LayerStack:
    """Three lossless layers: permittivities eps1..eps3 and cavity width d2 (m)."""

    eps1: float
    eps2: float
    eps3: float
    d2: float

    def __post_init__(self):
        for name in ("eps1", "eps2", "eps3"):
            eps = getattr(self, name)
            if not math.isfinite(eps) or eps < 1:
                raise ValueError(f"{name} must be real and >= 1, got {eps}")
        if not math.isfinite(self.d2) or self.d2 <= 0:
            raise ValueError(f"d2 must be positive, got {self.d2}")

    @property
    def n1(self):
        return math.sqrt(self.eps1)

    @property
    def n2(self):
        return math.sqrt(self.eps2)

    @property
    def n3(self):
        return math.sqrt(self.eps3)

    def k2(self, omega):
        """Wavenumber inside the cavity layer, n2*omega/c (1/m)."""
        return self.n2 * omega / C


@dataclass(frozen=True)
class InterfaceCoefficients:
    """Single-interface amplitudes: left incidence (r, t), right (r_p, t_p)."""

    r: float
    t: float
    r_p: float
    t_p: float


def fresnel(n_a, n_b):
    """Normal-incidence Fresnel coefficients for the interface n_a | n_b."""
    if n_a < 1 or n_b < 1:
        raise ValueError(f"indices must be >= 1, got {n_a}, {n_b}")
    s = n_a + n_b
    r = (n_a - n_b) / s
    return InterfaceCoefficients(r=r, t=2.0 * n_a / s, r_p=-r, t_p=2.0 * n_b / s)


@dataclass(frozen=True)
class CompositeCoefficients:
    """Composite amplitudes of the three-layer stack at one frequency."""

    nu2: complex
    R1: complex
    R2: complex
    T1: complex
    T2: complex
    R1p: complex
    R2p: complex
    T1p: complex
    T2p: complex
    denom: float  # Re[1 + 2 R1' R2 nu2 e^{2 i k2 d2}]


def _phase_factor(stack, omega):
    # Reduce 2*k2*d2 mod 2*pi before exponentiating to limit
    # argument-reduction error for optically thick cavities.
    phase = math.remainder(2.0 * stack.k2(omega) * stack.d2, 2.0 * math.pi)
    return cmath.exp(1j * phase)


def composite(stack, omega):
    """Composite reflection/transmission amplitudes and the photon-number
    denominator for the stack at angular frequency omega (rad/s)."""
    if omega <= 0:
        raise ValueError(f"omega must be positive, got {omega}")
    i1 = fresnel(stack.n1, stack.n2)
    i2 = fresnel(stack.n2, stack.n3)
    e = _phase_factor(stack, omega)
    base = 1.0 + i1.r * i2.r * e
    if abs(base) < 1e-14:
        raise NumericalGuardError(
            f"degenerate resonance: |1 + r1 r2 e^(2 i k2 d2)| = {abs(base):g}"
        )
    nu2 = 1.0 / base
    R1 = (i1.r + i2.r * e) * nu2
    R2p = (i2.r_p + i1.r_p * e) * nu2
    denom = (1.0 + 2.0 * i1.r_p * i2.r * nu2 * e).real
    return CompositeCoefficients(
        nu2=nu2,
        R1=R1,
        R2=complex(i2.r),
        T1=i1.t * nu2,
        T2=complex(i2.t),
        R1p=complex(i1.r_p),
        R2p=R2p,
        T1p=complex(i1.t_p),
        T2p=i2.t_p * nu2,
        denom=denom,
    )


@dataclass(frozen=True)
class DirectionalPhotonNumbers:
    """The six directional photon-number expectation values at one frequency."""

    n1p: float
    n1m: float
    n2p: float
    n2m: float
    n3p: float
    n3m: float


def photon_numbers(stack, omega, in1, in3):
    """Directional photon numbers for inputs <n_1+> = in1, <n_3-> = in3."""
    if in1 < 0 or in3 < 0:
        raise ValueError(f"input photon numbers must be >= 0, got {in1}, {in3}")
    cc = composite(stack, omega)
    n1, n2, n3 = stack.n1, stack.n2, stack.n3
    n1m = abs(cc.R1) ** 2 * in1 + (n1 / n3) * abs(cc.T1p * cc.T2p) ** 2 * in3
    n2p = (
        (n2 / n1) * abs(cc.T1) ** 2 * in1
        + (n2 / n3) * abs(cc.T2p * cc.R1p) ** 2 * in3
    ) / cc.denom
    n2m = (
        (n2 / n1) * abs(cc.T1 * cc.R2) ** 2 * in1
        + (n2 / n3) * abs(cc.T2p) ** 2 * in3
    ) / cc.denom
    n3p = (n3 / n1) * abs(cc.T1 * cc.T2) ** 2 * in1 + abs(cc.R2p) ** 2 * in3
    return DirectionalPhotonNumbers(
        n1p=in1, n1m=n1m, n2p=n2p, n2m=n2m, n3p=n3p, n3m=in3
    )


def total_photon_number(n_plus, n_minus):
    """Total photon number of a homogeneous lossless layer: the equal-weight
    average of the two directional values."""
    if n_plus < 0 or n_minus < 0:
        raise ValueError(f"photon numbers must be >= 0, got {n_plus}, {n_minus}")
    return 0.5 * (n_plus + n_minus)


def bose_einstein(omega, T):
    """Thermal occupation 1/(e^{hbar*omega/kB*T} - 1), stable at both ends."""
    if omega <= 0:
        raise ValueError(f"omega must be positive, got {omega}")
    if T < 0:
        raise ValueError(f"temperature must be >= 0, got {T}")
    if T == 0:
        return 0.0
    x = HBAR * omega / (KB * T)
    if x > 700.0:
        return 0.0
    if x < 1e-8:
        return 1.0 / x
    return 1.0 / math.expm1(x)
