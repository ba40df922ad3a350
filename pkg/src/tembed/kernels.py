"""Kernel backend selection: compiled extension if built, Python otherwise."""

try:
    from ._kernels import BACKEND, embedding_step_interior, wave_step
except ImportError:  # extension not built
    from ._kernels_py import BACKEND, embedding_step_interior, wave_step

__all__ = ["BACKEND", "embedding_step_interior", "wave_step"]
