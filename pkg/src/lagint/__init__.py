"""lagint: indefinite-integral identities for second-order linear ODEs.

Given y'' + p y' + q y = 0 with integrating factor f = exp(int p), any
twice-differentiable h yields

    int f (h'' + p h' + q h) y dx = f (h' y - h y').

The package provides special-function evaluators (:mod:`lagint.specfun`), an
ODE catalog (:mod:`lagint.odecat`), identity constructors
(:mod:`lagint.identity`), numerical verification (:mod:`lagint.verify`), a
corpus of worked identities (:mod:`lagint.corpus`) and a CLI
(:mod:`lagint.cli`).
"""

from ._accel import backend_name

__version__ = "0.1.0"

__all__ = ["backend_name", "__version__"]
