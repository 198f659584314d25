"""Pure-Python kernels; the reference the compiled core is tested against.

Matrices are flat row-major tuples of length ``n*n``.  The generic kernels
only use ``+`` and ``*`` on the entries, so they work for any scalar type.
"""

from itertools import product


def matmul_flat(a, b, n):
    out = []
    for i in range(n):
        row = a[i * n:(i + 1) * n]
        for j in range(n):
            acc = row[0] * b[j]
            for k in range(1, n):
                acc = acc + row[k] * b[k * n + j]
            out.append(acc)
    return tuple(out)


def star_flat(a, b, n):
    # diagonal from the diagonal parts alone, off-diagonal from the full product
    out = []
    for i in range(n):
        row = a[i * n:(i + 1) * n]
        for j in range(n):
            if i == j:
                out.append(row[i] * b[i * n + i])
                continue
            acc = row[0] * b[j]
            for k in range(1, n):
                acc = acc + row[k] * b[k * n + j]
            out.append(acc)
    return tuple(out)


def star2_flat(a, b):
    a0, a1, a2, a3 = a
    b0, b1, b2, b3 = b
    return (a0 * b0, a0 * b1 + a1 * b3, a2 * b0 + a3 * b2, a3 * b3)


def assoc2_exhaustive(values):
    """Compare both bracketings of every triple of 2x2 matrices over ``values``.

    Returns ``(violations, checked, first)`` where ``first`` is the first
    offending ``(A, B, C)`` in enumeration order, or ``None``.
    """
    values = [int(v) for v in values]
    mats = list(product(values, repeat=4))
    m = len(mats)
    table = [[star2_flat(x, y) for y in mats] for x in mats]
    violations = 0
    first = None
    for i in range(m):
        a = mats[i]
        row = table[i]
        for j in range(m):
            ab = row[j]
            bc_row = table[j]
            for k in range(m):
                if star2_flat(ab, mats[k]) != star2_flat(a, bc_row[k]):
                    violations += 1
                    if first is None:
                        first = (a, mats[j], mats[k])
    return violations, m * m * m, first
