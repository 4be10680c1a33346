"""Split-quaternion geometry toolkit.

Python surface of the C++ core: split-quaternion arithmetic, the flat-model
hypersymplectic invariants (rho0, the rho2 obstruction, Euler field, kappa
potentials), split 3-Sasakian verification on the unit pseudo-sphere, and the
Nahm-Schmid integrator with degeneracy-locus indicators.
"""

from ._splitgeom import *  # noqa: F401,F403
from ._splitgeom import __version__  # noqa: F401
