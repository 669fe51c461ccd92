"""Numerical Dirac algebra engine for the single-photon annihilation of a
photon-excited bound pair.

Everything is evaluated with explicit 4x4 complex matrices in the Dirac-Pauli
representation, natural units (hbar = c = 1, energies in MeV). Spinors carry
box normalization, ubar u = 1 and vbar v = -1, so the spin sums are
(pslash +- m)/(2m). The spin-summed squared amplitude is reduced to

    M(eps_i, eps_f) = Tr[(pslash_+ - m) (ei ef - ef ei) kslash
                         (pslash_- + m) kslash (ef ei - ei ef)] / (16 m^4 w^2)

with p_+ = p_- = (m, 0) for a pair at rest and w the photon energy; its closed
form is (2/m^2) (1 - (eps_i . eps_f)^2). The cross-section coefficient
multiplies this by the polarization average (1/2 of the sum over the four
basis pairs), the spin-statistics factor (1/4 averaging over all four spin
states, or 1 when only the singlet contributes), the photon phase-space factor
pi, and m^2/pi; the squared photon coupling cancels against the alpha^2
normalization of the quoted cross section and the divergent relative-velocity
flux is carried symbolically and cancelled in the decay rate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy.integrate import quad

from .checks import CheckRow, check_row
from .constants import ConstantsSet, LeptonSpecies

# Dirac-Pauli representation.
_SIGMA = (
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)
_I2 = np.eye(2, dtype=complex)
_Z2 = np.zeros((2, 2), dtype=complex)

IDENTITY = np.eye(4, dtype=complex)
GAMMA = (
    np.block([[_I2, _Z2], [_Z2, -_I2]]),
    np.block([[_Z2, _SIGMA[0]], [-_SIGMA[0], _Z2]]),
    np.block([[_Z2, _SIGMA[1]], [-_SIGMA[1], _Z2]]),
    np.block([[_Z2, _SIGMA[2]], [-_SIGMA[2], _Z2]]),
)
for _g in GAMMA:
    _g.flags.writeable = False
IDENTITY.flags.writeable = False

METRIC_DIAGONAL = (1.0, -1.0, -1.0, -1.0)

DEFAULT_REGULARIZATION_WIDTHS = (1e-2, 3e-3, 1e-3, 3e-4, 1e-4)


@dataclass(frozen=True)
class FourVector:
    """Contravariant four-vector, metric signature (+,-,-,-)."""

    t: float
    x: float
    y: float
    z: float

    def dot(self, other: "FourVector") -> float:
        return self.t * other.t - self.x * other.x - self.y * other.y - self.z * other.z

    def spatial(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z])

    def as_array(self) -> np.ndarray:
        return np.array([self.t, self.x, self.y, self.z])


@dataclass(frozen=True)
class DiracSpinor:
    components: np.ndarray  # 4 complex entries
    kind: str  # "u" | "v"
    momentum: FourVector
    spin: str  # "+" | "-"

    def bar(self) -> np.ndarray:
        """Adjoint row spinor psi^dagger gamma^0."""
        return self.components.conj() @ GAMMA[0]


@dataclass(frozen=True)
class AnnihilationResult:
    species: str
    sigma_coefficient: float  # sigma * |v_rel| * m^2 / (pi alpha^2)
    gamma: float  # natural-unit rate (MeV)
    lifetime: float  # s


def gamma_matrices() -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """The four gamma matrices plus the 4x4 identity."""
    return GAMMA + (IDENTITY,)


def slash(a: FourVector) -> np.ndarray:
    """Contraction a_mu gamma^mu with index lowering by the metric."""
    return a.t * GAMMA[0] - a.x * GAMMA[1] - a.y * GAMMA[2] - a.z * GAMMA[3]


def kinematic_check(electron_energy: float, photon_energy: float) -> str:
    """Single-photon annihilation kinematics for a pair at rest.

    The squared conservation constraint reduces to E^2 + E*w = 0, which a
    physical pair (E > 0) can never satisfy; only the transient-pair limit
    E -> 0 opens the channel.
    """
    if electron_energy < 0.0 or photon_energy < 0.0:
        raise ValueError("energies must be non-negative")
    constraint = electron_energy**2 + electron_energy * photon_energy
    return "allowed" if constraint == 0.0 else "forbidden"


def spinor(kind: str, momentum: FourVector, spin: str, mass: float) -> DiracSpinor:
    """Free-particle spinor with box normalization ubar u = 1, vbar v = -1."""
    if kind not in ("u", "v"):
        raise ValueError(f"spinor kind must be 'u' or 'v', got {kind!r}")
    if spin not in ("+", "-"):
        raise ValueError(f"spin label must be '+' or '-', got {spin!r}")
    if not (mass > 0.0):
        raise ValueError("mass must be positive")
    energy = momentum.t
    p = momentum.spatial()
    if abs(energy - math.sqrt(mass**2 + float(p @ p))) >= 1e-9 * mass:
        raise ValueError("momentum is off shell for the given mass")
    chi = np.array([1, 0], dtype=complex) if spin == "+" else np.array([0, 1], dtype=complex)
    sigma_p = p[0] * _SIGMA[0] + p[1] * _SIGMA[1] + p[2] * _SIGMA[2]
    norm = math.sqrt((energy + mass) / (2.0 * mass))
    small = (sigma_p @ chi) / (energy + mass)
    if kind == "u":
        components = norm * np.concatenate([chi, small])
    else:
        components = norm * np.concatenate([small, chi])
    return DiracSpinor(components=components, kind=kind, momentum=momentum, spin=spin)


def spin_sum(kind: str, momentum: FourVector, mass: float) -> np.ndarray:
    """Outer-product sum over both spins, equal to (pslash +- m)/(2m)."""
    total = np.zeros((4, 4), dtype=complex)
    for s in ("+", "-"):
        psi = spinor(kind, momentum, s, mass)
        total += np.outer(psi.components, psi.bar())
    return total


def _random_four_vectors(rng: np.random.Generator, count: int) -> list[FourVector]:
    return [FourVector(*rng.normal(size=4)) for _ in range(count)]


def trace_identities_check(trials: int = 100, seed: int = 0) -> list[CheckRow]:
    """Verify the gamma-trace identities numerically on random four-vectors.

    Covers Tr(aslash bslash) = 4 a.b, the four-slash trace expansion, and the
    vanishing of odd products. Deviations are scaled by the magnitude of the
    vectors involved so the tolerances are scale-free.
    """
    rng = np.random.default_rng(seed)
    worst_pair = 0.0
    worst_quartet = 0.0
    worst_odd = 0.0
    for _ in range(trials):
        a, b, c, d = _random_four_vectors(rng, 4)
        scale = max(1.0, *(abs(v.dot(v)) for v in (a, b, c, d)))

        pair = np.trace(slash(a) @ slash(b))
        worst_pair = max(worst_pair, abs(pair - 4.0 * a.dot(b)) / scale)

        quartet = np.trace(slash(a) @ slash(b) @ slash(c) @ slash(d))
        expected = 4.0 * (a.dot(b) * c.dot(d) - a.dot(c) * b.dot(d) + a.dot(d) * b.dot(c))
        worst_quartet = max(worst_quartet, abs(quartet - expected) / scale**2)

        single = abs(np.trace(slash(a)))
        triple = abs(np.trace(slash(a) @ slash(b) @ slash(c)))
        worst_odd = max(worst_odd, single / scale, triple / scale ** 1.5)
    return [
        check_row("trace-pair-identity", worst_pair, 1e-12),
        check_row("trace-quartet-identity", worst_quartet, 1e-12),
        check_row("trace-odd-vanishes", worst_odd, 1e-12),
    ]


def _require_lightlike(k: FourVector) -> None:
    if k.t <= 0.0:
        raise ValueError("photon momentum must have positive energy")
    if abs(k.dot(k)) > 1e-9 * k.t**2:
        raise ValueError("photon momentum must be lightlike")


def _require_polarization(eps: FourVector, k: FourVector, label: str) -> None:
    if abs(eps.dot(eps) + 1.0) > 1e-9:
        raise ValueError(f"{label} must be a spacelike unit vector")
    if abs(k.dot(eps)) > 1e-9 * k.t:
        raise ValueError(f"{label} must be transverse to the photon momentum")


def squared_matrix_element(
    epsilon_i: FourVector, epsilon_f: FourVector, k_i: FourVector, mass: float
) -> float:
    """Spin-summed reduced squared amplitude by brute-force matrix products.

    No symbolic simplification: the commutator structure, the photon slash,
    and the (pslash +- m) projectors are multiplied out entrywise and traced.
    """
    if not (mass > 0.0):
        raise ValueError("mass must be positive")
    _require_lightlike(k_i)
    _require_polarization(epsilon_i, k_i, "initial polarization")
    _require_polarization(epsilon_f, k_i, "final polarization")

    p_rest = FourVector(mass, 0.0, 0.0, 0.0)
    ei, ef, ks = slash(epsilon_i), slash(epsilon_f), slash(k_i)
    commutator = ei @ ef - ef @ ei
    reversed_commutator = ef @ ei - ei @ ef
    matrix = (
        (slash(p_rest) - mass * IDENTITY)
        @ commutator
        @ ks
        @ (slash(p_rest) + mass * IDENTITY)
        @ ks
        @ reversed_commutator
    )
    trace = np.trace(matrix)
    scale = max(1.0, abs(trace.real))
    if abs(trace.imag) > 1e-10 * scale:
        raise RuntimeError(f"squared amplitude trace has a non-real part: {trace}")
    return float(trace.real) / (16.0 * mass**4 * k_i.t**2)


def closed_form_matrix_element(epsilon_i: FourVector, epsilon_f: FourVector, mass: float) -> float:
    """Closed form of the reduced squared amplitude, (2/m^2)(1 - (ei.ef)^2)."""
    return (2.0 / mass**2) * (1.0 - epsilon_i.dot(epsilon_f) ** 2)


def transverse_polarization_basis(k: FourVector) -> tuple[FourVector, FourVector]:
    """Two orthonormal spacelike polarization vectors transverse to k."""
    _require_lightlike(k)
    khat = k.spatial() / np.linalg.norm(k.spatial())
    trial = np.zeros(3)
    trial[int(np.argmin(np.abs(khat)))] = 1.0
    e1 = trial - (trial @ khat) * khat
    e1 /= np.linalg.norm(e1)
    e2 = np.cross(khat, e1)
    return FourVector(0.0, *e1), FourVector(0.0, *e2)


def polarization_sums(
    k_i: FourVector,
    initial_basis: Sequence[FourVector] | None = None,
    final_basis: Sequence[FourVector] | None = None,
) -> tuple[float, float]:
    """Sums over initial/final polarization pairs for a final photon with the
    same momentum as the initial one: sum of 1 and sum of (eps_i . eps_f)^2."""
    _require_lightlike(k_i)
    if initial_basis is None:
        initial_basis = transverse_polarization_basis(k_i)
    if final_basis is None:
        final_basis = transverse_polarization_basis(k_i)
    for label, basis in (("initial", initial_basis), ("final", final_basis)):
        if len(basis) != 2:
            raise ValueError(f"{label} polarization basis must contain two vectors")
        for eps in basis:
            _require_polarization(eps, k_i, f"{label} polarization")
    sum_one = 0.0
    sum_dot_squared = 0.0
    for ei in initial_basis:
        for ef in final_basis:
            sum_one += 1.0
            sum_dot_squared += ei.dot(ef) ** 2
    return sum_one, sum_dot_squared


def phase_space_integral(
    method: str = "analytic",
    photon_energy: float = 1.0,
    widths: Sequence[float] = DEFAULT_REGULARIZATION_WIDTHS,
) -> float:
    """Photon phase-space integral: the on-shell delta against d^3k/(2w).

    ``analytic`` performs the radial delta integration in closed form (the
    angular integral gives 4pi, the radial one w^2/(4w^2)), returning exactly
    pi. ``regularized`` replaces the radial delta by Gaussians of decreasing
    width and integrates numerically; the sequence must converge to pi.
    """
    if method == "analytic":
        return 4.0 * math.pi * photon_energy**2 / (4.0 * photon_energy**2)
    if method != "regularized":
        raise ValueError(f"method must be 'analytic' or 'regularized', got {method!r}")
    values = phase_space_width_study(widths, photon_energy)
    errors = [abs(value - math.pi) for _, value in values]
    if any(late > early for early, late in zip(errors, errors[1:])):
        raise RuntimeError("regularized phase-space integral is not converging")
    if errors[-1] > 1e-6:
        raise RuntimeError(
            f"regularized phase-space integral off by {errors[-1]:.3e} at the narrowest width"
        )
    return values[-1][1]


def phase_space_width_study(
    widths: Sequence[float] = DEFAULT_REGULARIZATION_WIDTHS, photon_energy: float = 1.0
) -> list[tuple[float, float]]:
    """Regularized phase-space values for each relative delta width."""
    if not widths:
        raise ValueError("at least one regularization width is required")
    w = photon_energy
    results = []
    for relative_width in widths:
        width = relative_width * w
        norm = 1.0 / (width * math.sqrt(2.0 * math.pi))

        def integrand(kk: float) -> float:
            return 4.0 * math.pi * kk**2 / (4.0 * w**2) * norm * math.exp(-0.5 * ((kk - w) / width) ** 2)

        lower = max(0.0, w - 10.0 * width)
        upper = w + 10.0 * width
        value, _ = quad(integrand, lower, upper, epsabs=1e-13, epsrel=1e-12)
        results.append((relative_width, value))
    return results


def cross_section_coefficient(
    spin_average_mode: str = "singlet_only", mass: float = 1.0, photon_energy: float | None = None
) -> float:
    """Dimensionless sigma * |v_rel| * m^2 / (pi alpha^2), assembled from the
    brute-force matrix element, the polarization sums, and the phase-space
    integral.

    ``all_four`` averages over all four fermion spin states; ``singlet_only``
    keeps the one spin state that can reach a single photon (charge
    conjugation rules out the triplet), quadrupling the result.
    """
    if spin_average_mode == "all_four":
        spin_factor = 0.25
    elif spin_average_mode == "singlet_only":
        spin_factor = 1.0
    else:
        raise ValueError(
            f"spin_average_mode must be 'all_four' or 'singlet_only', got {spin_average_mode!r}"
        )
    if photon_energy is None:
        photon_energy = mass
    k = FourVector(photon_energy, 0.0, 0.0, photon_energy)
    basis = transverse_polarization_basis(k)
    element_sum = sum(
        squared_matrix_element(ei, ef, k, mass) for ei in basis for ef in basis
    )
    # 1/2 averages the initial polarization; the leftover photon-coupling and
    # wavenumber-measure factors reduce to 4/pi against the pi alpha^2 / m^2
    # normalization of the quoted cross section.
    return spin_factor * 0.5 * element_sum * 4.0 * phase_space_integral("analytic") * mass**2 / math.pi


def wavefunction_at_origin(mass: float, alpha: float) -> float:
    """Squared ground-state wave function of the bound pair at zero
    separation, (1/pi) (alpha m / 2)^3 in natural units."""
    if not (mass > 0.0) or alpha < 0.0:
        raise ValueError("mass must be positive and alpha non-negative")
    return (alpha * mass / 2.0) ** 3 / math.pi


def decay_rate(species: LeptonSpecies, constants: ConstantsSet) -> AnnihilationResult:
    """Single-photon decay rate of the photon-excited pair, end to end.

    The relative-velocity flux divides the cross section and multiplies the
    collision rate, so it is cancelled algebraically before any number is
    evaluated; the result equals alpha^5 * m in natural units.
    """
    mass_natural = constants.to_natural(species.mass, "mass")
    coefficient = cross_section_coefficient("singlet_only", mass=mass_natural)
    sigma_times_velocity = coefficient * math.pi * constants.alpha**2 / mass_natural**2
    gamma_natural = sigma_times_velocity * wavefunction_at_origin(mass_natural, constants.alpha)
    rate_si = constants.from_natural(gamma_natural, "rate")
    return AnnihilationResult(
        species=species.name,
        sigma_coefficient=coefficient,
        gamma=gamma_natural,
        lifetime=1.0 / rate_si,
    )


def two_photon_rate_natural(species: LeptonSpecies, constants: ConstantsSet) -> float:
    """Two-photon annihilation rate of the ordinary (non-transient) singlet
    pair: half the single-photon rate of the photon-excited transient pair."""
    return decay_rate(species, constants).gamma / 2.0


def _rotation_matrix(rng: np.random.Generator) -> np.ndarray:
    q, r = np.linalg.qr(rng.normal(size=(3, 3)))
    q *= np.sign(np.diag(r))
    if np.linalg.det(q) < 0:
        q[:, 0] = -q[:, 0]
    return q


def verification_suite(trials: int = 100, seed: int = 0) -> list[CheckRow]:
    """Full engine self-check: algebraic identities, spinor projectors, the
    angular law, rotation and basis independence, phase space, and the
    assembled coefficients."""
    rng = np.random.default_rng(seed)
    rows: list[CheckRow] = []

    worst = 0.0
    for mu in range(4):
        for nu in range(4):
            target = 2.0 * (METRIC_DIAGONAL[mu] if mu == nu else 0.0) * IDENTITY
            anti = GAMMA[mu] @ GAMMA[nu] + GAMMA[nu] @ GAMMA[mu]
            worst = max(worst, float(np.max(np.abs(anti - target))))
    rows.append(check_row("clifford-anticommutator", worst, 1e-14))

    worst = float(np.max(np.abs(GAMMA[0] - GAMMA[0].conj().T)))
    for g in GAMMA[1:]:
        worst = max(worst, float(np.max(np.abs(g + g.conj().T))))
    rows.append(check_row("gamma-hermiticity", worst, 1e-14))

    rows.extend(trace_identities_check(trials=trials, seed=seed))

    worst = 0.0
    for _ in range(trials):
        a, b = _random_four_vectors(rng, 2)
        scale = max(1.0, abs(a.dot(a)), abs(b.dot(b)))
        square = slash(a) @ slash(a) - a.dot(a) * IDENTITY
        pair = slash(a) @ slash(b) + slash(b) @ slash(a) - 2.0 * a.dot(b) * IDENTITY
        worst = max(worst, float(np.max(np.abs(square))) / scale, float(np.max(np.abs(pair))) / scale)
    rows.append(check_row("slash-clifford-square", worst, 1e-12))

    worst_dirac = 0.0
    worst_norm = 0.0
    worst_projector = 0.0
    for _ in range(max(1, trials // 10)):
        mass = math.exp(rng.uniform(-1.0, 1.0))
        p3 = rng.normal(size=3) * mass
        momentum = FourVector(math.sqrt(mass**2 + float(p3 @ p3)), *p3)
        for kind, sign in (("u", 1.0), ("v", -1.0)):
            for spin_label in ("+", "-"):
                psi = spinor(kind, momentum, spin_label, mass)
                residual = (slash(momentum) - sign * mass * IDENTITY) @ psi.components
                worst_dirac = max(worst_dirac, float(np.max(np.abs(residual))) / mass)
                worst_norm = max(worst_norm, abs(psi.bar() @ psi.components - sign))
            projector = (slash(momentum) + sign * mass * IDENTITY) / (2.0 * mass)
            worst_projector = max(
                worst_projector, float(np.max(np.abs(spin_sum(kind, momentum, mass) - projector)))
            )
    rows.append(check_row("spinor-dirac-equation", worst_dirac, 1e-12))
    rows.append(check_row("spinor-normalization", worst_norm, 1e-12))
    rows.append(check_row("spin-sum-projectors", worst_projector, 1e-12))

    mass = 1.0
    k = FourVector(mass, 0.0, 0.0, mass)
    e1, e2 = transverse_polarization_basis(k)
    scale = 2.0 / mass**2
    worst = 0.0
    for _ in range(trials):
        theta = rng.uniform(0.0, 2.0 * math.pi)
        ef = FourVector(0.0, math.cos(theta), math.sin(theta), 0.0)
        brute = squared_matrix_element(e1, ef, k, mass)
        worst = max(worst, abs(brute - closed_form_matrix_element(e1, ef, mass)) / scale)
    rows.append(check_row("matrix-element-angular-law", worst, 1e-10))

    reference = squared_matrix_element(e1, e2, k, mass)
    worst = 0.0
    for _ in range(max(1, trials // 5)):
        rotation = _rotation_matrix(rng)

        def rotated(v: FourVector) -> FourVector:
            return FourVector(v.t, *(rotation @ v.spatial()))

        value = squared_matrix_element(rotated(e1), rotated(e2), rotated(k), mass)
        worst = max(worst, abs(value - reference) / scale)
    rows.append(check_row("matrix-element-rotation-invariance", worst, 1e-10))

    worst_count = 0.0
    worst_dot = 0.0
    for _ in range(trials):
        direction = rng.normal(size=3)
        direction /= np.linalg.norm(direction)
        energy = math.exp(rng.uniform(-1.0, 1.0))
        k_random = FourVector(energy, *(energy * direction))
        sum_one, sum_dot = polarization_sums(k_random)
        worst_count = max(worst_count, abs(sum_one - 4.0))
        worst_dot = max(worst_dot, abs(sum_dot - 2.0))
    rows.append(check_row("polarization-sum-count", worst_count, 1e-12))
    rows.append(check_row("polarization-sum-dot-squared", worst_dot, 1e-12))

    b1, b2 = transverse_polarization_basis(k)
    worst = 0.0
    for _ in range(max(1, trials // 5)):
        phi = rng.uniform(0.0, 2.0 * math.pi)
        r1 = FourVector(0.0, *(math.cos(phi) * b1.spatial() + math.sin(phi) * b2.spatial()))
        r2 = FourVector(0.0, *(-math.sin(phi) * b1.spatial() + math.cos(phi) * b2.spatial()))
        sum_one, sum_dot = polarization_sums(k, final_basis=(r1, r2))
        worst = max(worst, abs(sum_one - 4.0), abs(sum_dot - 2.0))
    rows.append(check_row("polarization-basis-independence", worst, 1e-12))

    rows.append(
        check_row("phase-space-analytic", abs(phase_space_integral("analytic") - math.pi), 1e-15)
    )
    rows.append(
        check_row(
            "phase-space-regularized", abs(phase_space_integral("regularized") - math.pi), 1e-6
        )
    )

    rows.append(
        check_row("cross-section-all-four", abs(cross_section_coefficient("all_four") - 2.0), 1e-8)
    )
    rows.append(
        check_row(
            "cross-section-singlet", abs(cross_section_coefficient("singlet_only") - 8.0), 1e-8
        )
    )
    return rows
