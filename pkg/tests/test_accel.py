import json
import os
import subprocess
import sys

from sncover import _accel
from sncover.witness import build_H, uncovered_types

SCRIPT = """
import json
from sncover import _accel
from sncover.witness import build_H, uncovered_types
from sncover.smallgroups import build_cover_instance, exact_min_cover, maximal_subgroups, named_group
g = named_group("A5")
res = exact_min_cover(build_cover_instance(g, maximal_subgroups(g)))
print(json.dumps({
    "backend": _accel.backend_name(),
    "sweep": [str(t) for t in uncovered_types(build_H(24).without("alternating", "intransitive:5"))],
    "cover": res.to_dict(),
}))
"""


def _run(disable):
    env = dict(os.environ)
    env.pop("SNCOVER_DISABLE_NUMBA", None)
    if disable:
        env["SNCOVER_DISABLE_NUMBA"] = "1"
    out = subprocess.run([sys.executable, "-c", SCRIPT], env=env, capture_output=True, text=True, check=True)
    return json.loads(out.stdout)


def test_backends_agree():
    fast, slow = _run(False), _run(True)
    assert fast["backend"] == "numba" and slow["backend"] == "python"
    assert fast["sweep"] == slow["sweep"] and fast["sweep"]
    assert fast["cover"] == slow["cover"]


def test_flag_parsing(monkeypatch):
    for value, expected in [("1", True), ("true", True), ("ON", True), ("0", False), ("", False)]:
        monkeypatch.setenv("SNCOVER_DISABLE_NUMBA", value)
        assert _accel._disabled_from_env() is expected


def test_in_process_sweep():
    assert uncovered_types(build_H(30)) == []
