"""Differentially orthogonal polynomials for the Laguerre and Hermite operators."""

from ._diffortho import (
    DiffOrthoError,
    MeasureSpec,
    construct,
    diff_orthogonality_residuals,
    level_curve,
    nth_root,
    precision,
    run,
    set_precision,
    stagnation,
    velocity,
    zeros,
)

__all__ = [
    "DiffOrthoError",
    "MeasureSpec",
    "construct",
    "diff_orthogonality_residuals",
    "level_curve",
    "nth_root",
    "precision",
    "run",
    "set_precision",
    "stagnation",
    "velocity",
    "zeros",
]
