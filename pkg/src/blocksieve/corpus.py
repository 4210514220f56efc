"""Reference coalgebras used by the test suite, the demos, and the shipped corpus.

Everything here is split over Q by construction, which is what the analyzer
requires: grouplike-basis coalgebras, the 4-dimensional non-cosemisimple
coalgebra with two grouplikes and a skew-primitive pair, matrix coalgebras,
and the dual of the rational group algebra of the symmetric group S3.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from pathlib import Path

from .coalgebra import Coalgebra, serialize_coalgebra, tensor_product

ONE = Fraction(1)


def grouplike_coalgebra(n: int) -> Coalgebra:
    """n grouplike basis vectors: Delta g = g (x) g, counit 1 everywhere.

    As a coalgebra this is the group algebra of any group of order n; the
    group multiplication is invisible to the coalgebra structure.
    """
    if n < 1:
        raise ValueError("n must be positive")
    labels = tuple(f"g{i}" for i in range(n))
    delta = tuple((i, i, i, ONE) for i in range(n))
    return Coalgebra(n, labels, delta, tuple(ONE for _ in range(n)))


def sweedler_coalgebra() -> Coalgebra:
    """Basis 1, g, x, gx with Delta x = x(x)1 + g(x)x and Delta gx = gx(x)g + 1(x)gx.

    The smallest non-cosemisimple pointed coalgebra with two grouplikes; its
    coradical filtration is 1,g then everything.
    """
    basis = ("1", "g", "x", "gx")
    one, g, x, gx = 0, 1, 2, 3
    delta = (
        (one, one, one, ONE),
        (g, g, g, ONE),
        (x, x, one, ONE),
        (x, g, x, ONE),
        (gx, gx, g, ONE),
        (gx, one, gx, ONE),
    )
    return Coalgebra(4, basis, delta, (ONE, ONE, Fraction(0), Fraction(0)))


def sweedler_tensor_square() -> Coalgebra:
    c = sweedler_coalgebra()
    return tensor_product(c, c)


def matrix_coalgebra(d: int) -> Coalgebra:
    """Comatrix coalgebra of size d: Delta e_ij = sum_k e_ik (x) e_kj, counit delta_ij."""
    if d < 1:
        raise ValueError("d must be positive")
    labels = tuple(f"e{i + 1}{j + 1}" for i in range(d) for j in range(d))

    def idx(i, j):
        return i * d + j

    delta = tuple(
        (idx(i, j), idx(i, k), idx(k, j), ONE)
        for i in range(d)
        for j in range(d)
        for k in range(d)
    )
    counit = tuple(ONE if i == j else Fraction(0) for i in range(d) for j in range(d))
    return Coalgebra(d * d, labels, delta, counit)


_S3_LABELS = {
    (0, 1, 2): "e",
    (1, 0, 2): "(12)",
    (2, 1, 0): "(13)",
    (0, 2, 1): "(23)",
    (1, 2, 0): "(123)",
    (2, 0, 1): "(132)",
}


def s3_dual_coalgebra() -> Coalgebra:
    """Dual of the rational group algebra of S3, as a coalgebra.

    Basis vectors are indicator functionals of group elements, so
    Delta(e_s) = sum over factorizations s = u.v of e_u (x) e_v and the counit
    picks out the identity.  The dual algebra is Q[S3], whose Wedderburn
    decomposition over Q is Q x Q x M2(Q): two grouplikes and one
    2-dimensional simple component.
    """
    elems = sorted(permutations(range(3)), key=lambda p: _S3_LABELS[p])
    pos = {p: i for i, p in enumerate(elems)}

    def compose(u, v):
        return tuple(u[v[i]] for i in range(3))

    delta = []
    for u in elems:
        for v in elems:
            s = compose(u, v)
            delta.append((pos[s], pos[u], pos[v], ONE))
    counit = tuple(ONE if p == (0, 1, 2) else Fraction(0) for p in elems)
    return Coalgebra(6, tuple(_S3_LABELS[p] for p in elems), tuple(sorted(delta)), counit)


CORPUS_BUILDERS = {
    "grouplike_c3.json": lambda: grouplike_coalgebra(3),
    "grouplike_c4.json": lambda: grouplike_coalgebra(4),
    "sweedler4.json": sweedler_coalgebra,
    "sweedler4_tensor_square.json": sweedler_tensor_square,
    "s3_dual.json": s3_dual_coalgebra,
    "matrix2.json": lambda: matrix_coalgebra(2),
}


def write_corpus(directory: str | Path) -> list[Path]:
    """Write the shipped corpus files; returns the paths written."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for name, build in sorted(CORPUS_BUILDERS.items()):
        path = directory / name
        path.write_bytes(serialize_coalgebra(build()) + b"\n")
        written.append(path)
    return written
