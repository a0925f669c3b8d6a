"""Time the special-function kernels and the corpus sweep.

    python3 benchmarks/bench_kernels.py              # active backend
    python3 benchmarks/bench_kernels.py --compare    # numba and numpy side by side

The numpy fallback is selected with LAGINT_DISABLE_NUMBA=1, which must be set
before lagint is imported, so ``--compare`` runs each backend in a child process.
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys
import time
import timeit

import numpy as np

N = 2000


def cases():
    from lagint import specfun

    pos = np.linspace(0.1, 30.0, N)
    airy = np.linspace(-15.0, 15.0, N)
    unit = np.linspace(0.01, 0.99, N)
    leg = np.linspace(-0.99, 0.99, N)
    return {
        "bessel J_5": lambda: specfun.eval_bessel("J", 5, pos),
        "bessel Y_2": lambda: specfun.eval_bessel("Y", 2, pos),
        "bessel K_1": lambda: specfun.eval_bessel("K", 1, pos),
        "airy Ai": lambda: specfun.eval_airy_scorer("Ai", airy),
        "scorer Gi": lambda: specfun.eval_airy_scorer("Gi", airy),
        "elliptic K": lambda: specfun.eval_elliptic("K", unit),
        "hyp2f1": lambda: specfun.eval_hyp2f1(0.3, 0.7, 1.4, unit),
        "legendre P_(phi-1)": lambda: specfun.eval_legendre("P", 0.5 * (5**0.5 - 1), 0, leg),
        "struve H_1": lambda: specfun.eval_struve_lommel("StruveH", 0, 1, pos[:N // 3]),
        "lommel s_1.5,0.5": lambda: specfun.eval_struve_lommel("LommelS", 1.5, 0.5, pos[:N // 3]),
    }


def measure(repeat: int) -> dict:
    import lagint
    from lagint import corpus

    results = {"backend": lagint.backend_name(), "kernels": {}}
    for name, fn in cases().items():
        fn()  # warm up (JIT compilation / cache load)
        best = min(timeit.repeat(fn, number=1, repeat=repeat))
        results["kernels"][name] = best
    start = time.perf_counter()
    run = corpus.run_all()
    results["corpus_sweep"] = time.perf_counter() - start
    results["corpus_ok"] = run.summary.ok
    return results


def child(disable_numba: bool, repeat: int) -> dict:
    env = dict(os.environ)
    env.pop("LAGINT_DISABLE_NUMBA", None)
    if disable_numba:
        env["LAGINT_DISABLE_NUMBA"] = "1"
    out = subprocess.run([sys.executable, __file__, "--json", "--repeat", str(repeat)],
                         env=env, check=True, capture_output=True, text=True)
    return json.loads(out.stdout)


def print_table(rows: list[dict]) -> None:
    header = f"{'kernel (' + str(N) + ' points)':<28}" + "".join(f"{r['backend']:>14}" for r in rows)
    print(header)
    print("-" * len(header))
    for name in rows[0]["kernels"]:
        print(f"{name:<28}" + "".join(f"{1e3 * r['kernels'][name]:>11.2f} ms" for r in rows))
    print(f"{'corpus sweep':<28}" + "".join(f"{r['corpus_sweep']:>12.2f} s" for r in rows))


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--compare", action="store_true", help="run both backends in child processes")
    ap.add_argument("--repeat", type=int, default=5, help="timing repetitions (best is reported)")
    ap.add_argument("--json", action="store_true", help="emit raw results as JSON")
    args = ap.parse_args(argv)
    rows = [child(False, args.repeat), child(True, args.repeat)] if args.compare else [measure(args.repeat)]
    if args.json:
        json.dump(rows[0] if len(rows) == 1 else rows, sys.stdout)
    else:
        print_table(rows)
    return 0


if __name__ == "__main__":
    sys.exit(main())
