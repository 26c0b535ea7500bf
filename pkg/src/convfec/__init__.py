"""Erasure-channel FEC with maximum-distance-profile convolutional codes.

Subpackage map:

- `gf` / `linalg`: GF(p^m) arithmetic and dense linear algebra.
- `convcode`: the (n, k, delta) convolutional code object and its
  MDP / reverse-MDP / complete-MDP minor criteria.
- `construct`: superregular Toeplitz matrices and code extraction.
- `decoder`: sliding-window forward/backward/guard erasure recovery.
- `blockcode`: Vandermonde MDS block baseline.
- `channel`: seeded Gilbert-Elliot erasure channel.
- `simulate` / `cli`: experiment harness and command line front end.
"""

from ._backend import backend_name

__version__ = "0.1.0"

__all__ = ["backend_name", "__version__"]
