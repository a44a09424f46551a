__all__ = [
    "cli",
    "render",
]
