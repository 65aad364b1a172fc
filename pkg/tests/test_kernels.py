import random
import sys

import pytest

from hcone import _kernels
from hcone._kernels import pivot_py
from hcone.core import HVector
from hcone.oracle import membership_oracle
from hcone.selftest import random_system

simplex_mod = sys.modules["hcone.oracle.simplex"]

try:
    from hcone._kernels import pivot_ext
except ImportError:  # pragma: no cover - depends on the build
    pivot_ext = None

needs_ext = pytest.mark.skipif(pivot_ext is None, reason="compiled kernel not built")


def test_implementation_flag():
    assert _kernels.IMPLEMENTATION in ("cython", "python")
    if pivot_ext is not None and _kernels.IMPLEMENTATION == "cython":
        assert _kernels.pivot is pivot_ext.pivot


def test_python_pivot_on_identity_scaled_tableau():
    rows = [[2, 1, 0], [1, 3, 1]]
    obj = [1, 1, 0]
    denom = pivot_py.pivot(rows, obj, 0, 0, 1)
    assert denom == 2
    # row 1: (2*[1,3,1] - 1*[2,1,0]) / 1
    assert rows == [[2, 1, 0], [0, 5, 2]]
    assert obj == [0, 1, 0]


@needs_ext
def test_kernels_agree_on_random_pivots():
    rng = random.Random(3)
    for _ in range(200):
        width, height = rng.randint(2, 7), rng.randint(1, 5)
        rows = [[rng.randint(-9, 9) for _ in range(width)] for _ in range(height)]
        obj = [rng.randint(-9, 9) for _ in range(width)]
        leave, enter = rng.randrange(height), rng.randrange(width)
        rows[leave][enter] = rng.randint(1, 9)
        a_rows, a_obj = [r[:] for r in rows], obj[:]
        b_rows, b_obj = [r[:] for r in rows], obj[:]
        assert pivot_py.pivot(a_rows, a_obj, leave, enter, 1) == pivot_ext.pivot(b_rows, b_obj, leave, enter, 1)
        assert (a_rows, a_obj) == (b_rows, b_obj)


@needs_ext
@pytest.mark.parametrize("kernel", ["python", "cython"])
def test_simplex_results_identical_across_kernels(monkeypatch, kernel):
    impl = pivot_py.pivot if kernel == "python" else pivot_ext.pivot
    rng = random.Random(11)
    systems = [random_system(rng) for _ in range(60)]
    baseline = [simplex_mod.feasible(s) for s in systems]
    monkeypatch.setattr(simplex_mod, "kernel_pivot", impl)
    again = [simplex_mod.feasible(s) for s in systems]
    assert [(r.feasible, r.witness) for r in again] == [(r.feasible, r.witness) for r in baseline]
    h = HVector([3, 3, 2, 4, 2, 1, 2, 1])
    assert membership_oracle(3, h).member


def test_env_var_forces_pure_python():
    import os
    import subprocess

    env = dict(os.environ, HCONE_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "from hcone import _kernels; print(_kernels.IMPLEMENTATION)"],
        capture_output=True, text=True, env=env, check=True,
    )
    assert out.stdout.strip() == "python"
