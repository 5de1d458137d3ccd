"""Weighted information generating functions."""

from ._igf import (
    DomainError,
    IgfError,
    ValidationError,
    beta_power_entropy,
    beta_power_igf,
    escort,
    geometric_entropy,
    geometric_igf,
    golomb_igf,
    hooda_bhaker_igf,
    uniform_entropy,
    uniform_igf,
    verify_scaling_identity,
    weighted_entropy,
    weighted_igf,
    weighted_igf_derivative,
    weighted_self_information_moment,
    zeta,
)

__all__ = [
    "DomainError",
    "IgfError",
    "ValidationError",
    "beta_power_entropy",
    "beta_power_igf",
    "escort",
    "geometric_entropy",
    "geometric_igf",
    "golomb_igf",
    "hooda_bhaker_igf",
    "uniform_entropy",
    "uniform_igf",
    "verify_scaling_identity",
    "weighted_entropy",
    "weighted_igf",
    "weighted_igf_derivative",
    "weighted_self_information_moment",
    "zeta",
]
