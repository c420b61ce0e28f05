import os
import subprocess
import sys
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from heckeq import _pykernels as py
from heckeq import kernels

c = pytest.importorskip("heckeq._ckernels")

ints = st.lists(st.integers(-10**30, 10**30), max_size=30)
units = st.tuples(st.sampled_from([1, -1]), ints).map(lambda t: [t[0]] + t[1])
fracs = st.lists(st.fractions(max_denominator=9), max_size=20)


@given(a=ints, b=ints, n=st.integers(0, 70))
def test_conv(a, b, n):
    assert c.conv(a, b, n) == py.conv(a, b, n)


@given(a=fracs, b=ints, n=st.integers(0, 40))
def test_conv_fractions(a, b, n):
    assert c.conv(a, b, n) == py.conv(a, b, n)


@given(a=units, n=st.integers(0, 50))
def test_inv_unit(a, n):
    inv = py.inv_unit(a, n)
    assert c.inv_unit(a, n) == inv
    assert py.conv(a, inv, n)[:n] == ([1] + [0] * (n - 1))[:n] or n == 0


def test_inv_unit_guard():
    for impl in (c, py):
        with pytest.raises(ValueError):
            impl.inv_unit([2, 1], 5)


@given(x=ints, cc=st.integers(-5, 5), d=st.integers(1, 6), n=st.integers(0, 50))
def test_geom_div(x, cc, d, n):
    assert c.geom_div(x, cc, d, n) == py.geom_div(x, cc, d, n)


@given(y=ints, x=ints, cc=st.one_of(st.integers(-5, 5), st.fractions(max_denominator=5)),
       d=st.integers(-40, 40))
def test_shift_axpy(y, x, cc, d):
    y1, y2 = list(y), list(y)
    c.shift_axpy(y1, x, cc, d)
    py.shift_axpy(y2, x, cc, d)
    assert y1 == y2


def test_backend_selection():
    assert kernels.BACKEND == "cython"
    env = dict(os.environ, HECKEQ_PURE_PYTHON="1")
    code = ("import heckeq; from heckeq.identities import verify; "
            "print(heckeq.BACKEND, verify('thm-t1', 60).status.value)")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True,
                         check=True).stdout.split()
    assert out == ["python", "VERIFIED"]
