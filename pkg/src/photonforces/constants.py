"""Physical constants in SI units (CODATA 2018 exact values).

Single source of truth for every module; the CLI records
CONSTANTS_VERSION in output metadata so archived results are traceable.
"""

import math

# Speed of light in vacuum (m/s)
C = 2.99792458e8

# Planck constant (J*s)
H = 6.62607015e-34

# Reduced Planck constant (J*s)
HBAR = H / (2.0 * math.pi)

# Elementary charge (C); also the eV -> J conversion factor
EV = 1.602176634e-19

# Boltzmann constant (J/K)
KB = 1.380649e-23

CONSTANTS_VERSION = "CODATA-2018"


def ev_to_joule(energy_ev):
    """Convert an energy in electronvolts to joules."""
    return energy_ev * EV


def joule_to_ev(energy_j):
    """Convert an energy in joules to electronvolts."""
    return energy_j / EV


def ev_to_omega(energy_ev):
    """Convert a photon energy in eV to angular frequency (rad/s)."""
    return energy_ev * EV / HBAR
