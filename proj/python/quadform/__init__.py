"""Number systems built on ternary quadratic forms, with sandwich, Rodrigues
and Cayley rotations that preserve the form."""

from ._core import (
    Form,
    Number,
    QuadformError,
    Rotation,
    System,
    cayley,
    check,
    from_polar,
    rodrigues,
    sandwich_rotation,
)

__all__ = [
    "Form",
    "Number",
    "QuadformError",
    "Rotation",
    "System",
    "cayley",
    "check",
    "from_polar",
    "rodrigues",
    "sandwich_rotation",
]
