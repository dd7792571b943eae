"""Time the hot kernels with numba and with the plain-Python fallback.

Each backend runs in its own interpreter because the backend is fixed at import
time by SNCOVER_DISABLE_NUMBA. Numba timings exclude compilation (one warm-up
call first).

    python benchmarks/bench_kernels.py
    python benchmarks/bench_kernels.py --sweep 24 30 36 --groups S6 A7 --repeat 3
"""

import argparse
import json
import os
import subprocess
import sys

WORKER = r"""
import json, sys, time
from sncover import _accel
from sncover.witness import build_H, uncovered_types
from sncover.smallgroups import build_cover_instance, exact_min_cover, maximal_subgroups, named_group

cfg = json.loads(sys.argv[1])
out = {"backend": _accel.backend_name(), "rows": []}

def best_of(fn, repeat):
    fn()  # warm-up (and jit compile)
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)

for n in cfg["sweep"]:
    plan = build_H(n).without("alternating")
    out["rows"].append({"task": f"type sweep n={n}", "seconds": best_of(lambda: uncovered_types(plan), cfg["repeat"])})
for name in cfg["groups"]:
    g = named_group(name)
    inst = build_cover_instance(g, maximal_subgroups(g))
    out["rows"].append({"task": f"exact cover {name}", "seconds": best_of(lambda: exact_min_cover(inst, budget_seconds=None), cfg["repeat"])})
print(json.dumps(out))
"""


def run_backend(cfg, disable):
    env = dict(os.environ)
    env.pop("SNCOVER_DISABLE_NUMBA", None)
    if disable:
        env["SNCOVER_DISABLE_NUMBA"] = "1"
    res = subprocess.run([sys.executable, "-c", WORKER, json.dumps(cfg)], env=env, capture_output=True, text=True)
    if res.returncode:
        sys.exit(res.stderr)
    return json.loads(res.stdout)


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--sweep", type=int, nargs="*", default=[24, 30, 36])
    ap.add_argument("--groups", nargs="*", default=["S6", "A6"])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    cfg = {"sweep": args.sweep, "groups": args.groups, "repeat": args.repeat}

    fast = run_backend(cfg, disable=False)
    slow = run_backend(cfg, disable=True)
    print(f"{'task':<22}{'numba (s)':>12}{'python (s)':>12}{'speedup':>10}")
    for a, b in zip(fast["rows"], slow["rows"]):
        print(f"{a['task']:<22}{a['seconds']:>12.4f}{b['seconds']:>12.4f}{b['seconds'] / a['seconds']:>9.1f}x")


if __name__ == "__main__":
    main()
