"""Pure-Python reference kernels.

Every function takes and returns plain lists of exact numbers (ints, or
Fractions in the rare non-integral case).  ``heckeq._ckernels`` exposes the
same functions compiled; ``heckeq.kernels`` picks one at import.
"""


def conv(a, b, n):
    """First ``n`` coefficients of the product of dense coefficient lists."""
    la, lb = len(a), len(b)
    if not la or not lb or n <= 0:
        return []
    m = min(n, la + lb - 1)
    nza = [(i, v) for i, v in enumerate(a) if v and i < m]
    nzb = [(j, v) for j, v in enumerate(b) if v and j < m]
    if len(nza) > len(nzb):
        nza, nzb = nzb, nza
    out = [0] * m
    for i, ai in nza:
        lim = m - i
        for j, bj in nzb:
            if j >= lim:
                break
            out[i + j] += ai * bj
    return out


def inv_unit(a, n):
    """Inverse of ``a`` modulo ``q^n``; requires ``a[0]`` to be 1 or -1."""
    a0 = a[0]
    if a0 != 1 and a0 != -1:
        raise ValueError("leading coefficient must be +-1")
    nz = [(i, v) for i, v in enumerate(a) if i and v and i < n]
    out = [0] * n
    if n:
        out[0] = a0
    for k in range(1, n):
        acc = 0
        for i, v in nz:
            if i > k:
                break
            acc += v * out[k - i]
        out[k] = -a0 * acc
    return out


def geom_div(x, c, d, n):
    """``x / (1 - c q^d)`` modulo ``q^n`` for ``d >= 1``."""
    y = list(x[:n])
    if len(y) < n:
        y.extend([0] * (n - len(y)))
    for e in range(d, n):
        prev = y[e - d]
        if prev:
            y[e] += c * prev
    return y


def shift_axpy(y, x, c, d):
    """In place: ``y[e + d] += c * x[e]`` wherever ``0 <= e + d < len(y)``."""
    ly = len(y)
    start = max(0, -d)
    stop = min(len(x), ly - d)
    for e in range(start, stop):
        v = x[e]
        if v:
            y[e + d] += c * v
