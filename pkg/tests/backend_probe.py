"""Print evaluator samples and the corpus pass vector as JSON for the active backend.

Run as a script in a fresh interpreter so that LAGINT_DISABLE_NUMBA takes effect.
Pass ``--no-corpus`` to skip the corpus sweep.
"""

import json
import sys

import numpy as np

import lagint
from lagint import corpus, specfun

POS = np.linspace(0.3, 12.0, 15)
AIRY = np.linspace(-12.0, 6.0, 15)
UNIT = np.linspace(0.05, 0.95, 15)
LEG = np.linspace(-0.9, 0.9, 15)

SAMPLES = {
    "J0": lambda: specfun.eval_bessel("J", 0, POS),
    "Y3": lambda: specfun.eval_bessel("Y", 3, POS),
    "I2": lambda: specfun.eval_bessel("I", 2, POS),
    "K1": lambda: specfun.eval_bessel("K", 1, POS),
    "Ai": lambda: specfun.eval_airy_scorer("Ai", AIRY),
    "Bi": lambda: specfun.eval_airy_scorer("Bi", AIRY),
    "Gi": lambda: specfun.eval_airy_scorer("Gi", AIRY),
    "Hi": lambda: specfun.eval_airy_scorer("Hi", AIRY),
    "K": lambda: specfun.eval_elliptic("K", UNIT),
    "E": lambda: specfun.eval_elliptic("E", UNIT),
    "2F1": lambda: specfun.eval_hyp2f1(0.3, 0.7, 1.4, UNIT),
    "P": lambda: specfun.eval_legendre("P", 1.5, 1, LEG),
    "H1": lambda: specfun.eval_struve_lommel("StruveH", 0, 1, POS),
    "s": lambda: specfun.eval_struve_lommel("LommelS", 1.5, 0.5, POS),
}


def main(argv):
    out = {"backend": lagint.backend_name(), "values": {}}
    for name, fn in SAMPLES.items():
        r = fn()
        out["values"][name] = [np.asarray(r.value).tolist(), np.asarray(r.d1).tolist()]
    if "--no-corpus" not in argv:
        run = corpus.run_all()
        out["vector"] = [list(v) for v in run.vector]
    json.dump(out, sys.stdout)


if __name__ == "__main__":
    main(sys.argv[1:])
