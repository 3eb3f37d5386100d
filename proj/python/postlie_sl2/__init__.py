"""Post-Lie structures on sl(2,C) through the matrix equation A'((trA+1)I - A) = adj(A).

Floating matrices are numpy complex arrays. Exact matrices are nested lists whose
entries are ints, ``fractions.Fraction``, ``"p/q"`` strings or ``(re, im)`` pairs of
those; exact results come back as nested lists of ``(Fraction, Fraction)`` pairs.
Reports are plain dicts with the same layout as the command-line JSON.
"""

from fractions import Fraction
from numbers import Rational

import numpy as np

from . import _core
from ._core import PostlieError

__all__ = [
    "PostlieError",
    "adjoint_rep",
    "automorphism_check",
    "check_postlie",
    "classify",
    "classify_symmetric",
    "congruate",
    "congruence_test",
    "is_solution",
    "multistart",
    "newton_solve",
    "random_so3",
    "representative",
    "residual",
    "verify_canon",
]


def _is_exact_entry(x):
    if isinstance(x, (Rational, str)):
        return True
    if isinstance(x, tuple) and len(x) == 2:
        return all(isinstance(p, (Rational, str)) for p in x)
    return False


def _is_exact(a):
    if isinstance(a, np.ndarray):
        return False
    rows = list(a)
    entries = [x for row in rows for x in row]
    exact = [_is_exact_entry(x) for x in entries]
    if all(exact):
        return True
    if any(exact) and any(isinstance(x, (float, complex)) for x in entries):
        raise PostlieError("ParseError: matrix mixes exact and floating entries")
    return False


def _part(x):
    return str(Fraction(x))


def _to_grid(a):
    grid = []
    for row in a:
        out = []
        for x in row:
            re, im = x if isinstance(x, tuple) else (x, 0)
            out.append((_part(re), _part(im)))
        grid.append(out)
    return grid


def _from_grid(g):
    return [[(Fraction(re), Fraction(im)) for re, im in row] for row in g]


def _array(a):
    return np.asarray(a, dtype=np.complex128)


def residual(a):
    if _is_exact(a):
        return _from_grid(_core.residual_exact(_to_grid(a)))
    return _core.residual_numeric(_array(a))


def is_solution(a, tol=1e-10):
    if _is_exact(a):
        return _core.is_solution_exact(_to_grid(a))
    return _core.is_solution_numeric(_array(a), tol)


def classify(a, tol=1e-6, witness=False, seed=0):
    if _is_exact(a):
        return _core.classify_exact(_to_grid(a), witness, seed)
    return _core.classify_numeric(_array(a), tol, witness, seed)


def representative(family, k=None, exact=True):
    """Canonical solution of a family; ``k`` is required for ``"KFamily"``."""
    k_pair = None
    if k is not None:
        re, im = k if isinstance(k, tuple) else (k, 0)
        k_pair = (_part(re), _part(im))
    g = _core.representative_exact(family, k_pair)
    if exact:
        return _from_grid(g)
    return np.array([[complex(float(Fraction(re)), float(Fraction(im))) for re, im in row] for row in g])


def congruate(a, t, tol=1e-10):
    """T'AT; raises unless T is special orthogonal."""
    if _is_exact(a) and _is_exact(t):
        return _from_grid(_core.congruate_exact(_to_grid(a), _to_grid(t)))
    return _core.congruate_numeric(_as_numeric(a), _as_numeric(t), tol)


def congruence_test(a, b, budget=64, seed=0):
    if _is_exact(a) and _is_exact(b):
        return _core.congruence_test_exact(_to_grid(a), _to_grid(b), budget, seed)
    return _core.congruence_test_numeric(_as_numeric(a), _as_numeric(b), budget, seed)


def random_so3(seed, exact=False, radius=0.5):
    if exact:
        return _from_grid(_core.random_so3_exact(seed))
    return _core.random_so3_numeric(seed, radius)


def adjoint_rep(p):
    """Matrix of X -> P X P^-1 in the fixed basis, acting on row vectors."""
    if _is_exact(p):
        return _from_grid(_core.adjoint_rep_exact(_to_grid(p)))
    return _core.adjoint_rep_numeric(_array(p))


def automorphism_check(t, tol=1e-9):
    return _core.automorphism_check(_as_numeric(t), tol)


def check_postlie(a, tol=1e-10):
    """Violated PostLie identities of the product x o y = [f(x), y] with f(x) = xA."""
    if _is_exact(a):
        return _core.check_postlie_exact(_to_grid(a))
    return _core.check_postlie_numeric(_array(a), tol)


def classify_symmetric(s, tol=1e-6):
    if _is_exact(s):
        return _core.classify_symmetric_exact(_to_grid(s))
    return _core.classify_symmetric_numeric(_array(s), tol)


def newton_solve(a0, max_iter=50, tol=1e-12):
    return _core.newton_solve(_array(a0), max_iter, tol)


def multistart(starts=500, seed=0, radius=2.0, tol=1e-12, max_iter=100, threads=1):
    return _core.multistart(starts, seed, radius, tol, max_iter, threads)


def verify_canon():
    return _core.verify_canon()


def _as_numeric(a):
    if _is_exact(a):
        return np.array([[complex(float(Fraction(re)), float(Fraction(im))) for re, im in row] for row in _to_grid(a)])
    return _array(a)
