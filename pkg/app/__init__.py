"""Richardson varieties in G/P_r for types B, C and D: extremal pairs, nonemptiness and semistability."""

__all__ = [
    "create_app",
]

from .main import create_app  # noqa: F401
