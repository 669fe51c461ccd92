"""Characteristics of a transient bound lepton-antilepton pair (a VF).

Everything here is evaluated in SI; natural-unit views go through
``ConstantsSet.to_natural`` so no hbar=c=1 shortcut leaks between modules.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .constants import ConsistencyError, ConstantsSet, LeptonSpecies


@dataclass(frozen=True)
class VfCharacterization:
    species: LeptonSpecies
    binding_energy: float  # J, negative
    omega0: float  # rad/s
    creation_energy: float  # J
    lifetime: float  # s
    length: float  # m
    volume: float  # m^3
    number_density: float  # 1/m^3


def binding_energy(species: LeptonSpecies, constants: ConstantsSet) -> float:
    """Ground-state binding energy of the pair, Coulomb form (J, negative)."""
    mu = species.reduced_mass
    e = species.charge_magnitude
    return -mu * e**4 / (2.0 * (4.0 * math.pi * constants.eps0_accepted) ** 2 * constants.hbar**2)


def binding_energy_alpha_form(species: LeptonSpecies, constants: ConstantsSet) -> float:
    """Same binding energy written through the fine-structure constant."""
    return -species.mass * constants.alpha**2 * constants.c_defined**2 / 4.0


def resonant_frequency(species: LeptonSpecies, constants: ConstantsSet) -> float:
    """Effective oscillator frequency: level spacing equals |binding energy|."""
    return species.mass * constants.alpha**2 * constants.c_defined**2 / (4.0 * constants.hbar)


def creation_energy(species: LeptonSpecies, constants: ConstantsSet) -> float:
    """Energy borrowed to create the pair at rest, 2*m*c^2 (binding neglected)."""
    return 2.0 * species.mass_energy


def vf_lifetime(species: LeptonSpecies, constants: ConstantsSet) -> float:
    """Average lifetime of the pair, hbar/(2 * creation energy)."""
    return constants.hbar / (4.0 * species.mass_energy)


def vf_length(species: LeptonSpecies, constants: ConstantsSet) -> float:
    """Light-travel distance during the lifetime; also the internal trembling
    amplitude that sets the pair's size, hbar/(4*m*c)."""
    return constants.hbar / (4.0 * species.mass * constants.c_defined)


def number_density(species: LeptonSpecies, constants: ConstantsSet) -> float:
    """One pair per pair volume: 1/length^3."""
    return 1.0 / vf_length(species, constants) ** 3


def characterize(species: LeptonSpecies, constants: ConstantsSet) -> VfCharacterization:
    """Aggregate every per-species quantity and enforce the record invariants."""
    record = VfCharacterization(
        species=species,
        binding_energy=binding_energy(species, constants),
        omega0=resonant_frequency(species, constants),
        creation_energy=creation_energy(species, constants),
        lifetime=vf_lifetime(species, constants),
        length=vf_length(species, constants),
        volume=vf_length(species, constants) ** 3,
        number_density=number_density(species, constants),
    )
    _validate(record, constants)
    return record


def _validate(r: VfCharacterization, constants: ConstantsSet) -> None:
    def rel(a: float, b: float) -> float:
        return abs(a - b) / abs(b)

    if not r.binding_energy < 0.0:
        raise ConsistencyError("binding energy must be negative")
    if rel(r.omega0, abs(r.binding_energy) / constants.hbar) > 1e-9:
        raise ConsistencyError("omega0 != |binding energy|/hbar")
    if rel(r.length, constants.c_defined * r.lifetime) > 1e-12:
        raise ConsistencyError("length != c * lifetime")
    if rel(r.volume, r.length**3) > 1e-12:
        raise ConsistencyError("volume != length^3")
    if abs(r.number_density * r.volume - 1.0) > 1e-12:
        raise ConsistencyError("number density * volume != 1")
    if rel(abs(r.binding_energy) / r.creation_energy, constants.alpha**2 / 8.0) > 1e-9:
        raise ConsistencyError("|binding|/creation != alpha^2/8")
