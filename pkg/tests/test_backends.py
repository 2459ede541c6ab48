import os
import subprocess
import sys

import pytest

from gallai_ramsey import kernels


def _selected(value):
    env = dict(os.environ)
    if value is None:
        env.pop("GALLAI_RAMSEY_BACKEND", None)
    else:
        env["GALLAI_RAMSEY_BACKEND"] = value
    return subprocess.run([sys.executable, "-c", "from gallai_ramsey import kernels; print(kernels.BACKEND_NAME)"],
                          capture_output=True, text=True, env=env)


@pytest.mark.parametrize("value,name", [("numpy", "numpy"), ("numba", "numba"), (None, "numba")])
def test_env_flag(value, name):
    proc = _selected(value)
    assert proc.returncode == 0, proc.stderr
    assert proc.stdout.strip() == name


def test_env_flag_invalid():
    proc = _selected("fortran")
    assert proc.returncode != 0
    assert "GALLAI_RAMSEY_BACKEND" in proc.stderr


def test_get_backend():
    assert kernels.get_backend("numpy").__name__.endswith("_numpy")
    assert kernels.get_backend(None) is kernels.backend
    with pytest.raises(ValueError):
        kernels.get_backend("fortran")
