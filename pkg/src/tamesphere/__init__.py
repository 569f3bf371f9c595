"""Exact decision procedures for tame subsets of spheres."""

__version__ = "0.1.0"

from tamesphere.exact_core import LinearSystem, Ray, farkas_certificate, solve_strict

__all__ = [
    "LinearSystem",
    "Ray",
    "farkas_certificate",
    "solve_strict",
]
