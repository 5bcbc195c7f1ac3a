"""Offset linear canonical transform toolkit.

Thin wrapper around the compiled extension: parameter handling, the
chirp-FFT discrete OLCT with its direct-quadrature oracle, the OLCT
convolution/correlation operators and their spectral-product identities,
Paley-Wiener/Boas band-limit estimators, multiplicative filtering, signal
generators, and the identity-verification suite.
"""

from ._olct import *  # noqa: F401,F403
