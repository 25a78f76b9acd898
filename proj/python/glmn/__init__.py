"""Exact arithmetic for odd nilpotent elements of gl(m|n)."""

try:
    from ._glmn import *  # noqa: F401,F403  (installed package layout)
except ImportError:
    from _glmn import *  # noqa: F401,F403  (in-tree build layout)
