"""Select the compiled kernels when available.

Set ``DIOPHKIT_PURE=1`` to force the pure-Python implementations.
"""
import os

BACKEND = "python"

if os.environ.get("DIOPHKIT_PURE") != "1":
    try:
        from . import _kernels as kernels

        BACKEND = "cython"
    except ImportError:
        from . import _kernels_py as kernels
else:
    from . import _kernels_py as kernels

# moduli must stay below 2**32 so a product of two residues fits in 64 bits
MODULUS_LIMIT = 1 << 32


def modulus_for(q: int) -> int:
    m = q
    while m * q < MODULUS_LIMIT:
        m *= q
    return m


__all__ = ["BACKEND", "kernels", "modulus_for"]
