"""Slow, obviously-correct reference implementations used only by tests."""
from fractions import Fraction


def brute_period(u):
    n = len(u)
    return next(p for p in range(1, n + 1) if all(u[i] == u[i + p] for i in range(n - p)))


def brute_violation(w, spec):
    """First forbidden factor by enumerating every (end, length) pair.

    Returns ``(kind, start, length, period)`` or ``None``.
    """
    w = tuple(w)
    n = len(w)
    for end in range(1, n + 1):
        for length in range(1, end + 1):
            u = w[end - length:end]
            half = length // 2
            if length % 2 == 0 and half >= spec.min_square_period and u[:half] == u[half:]:
                return ("LargeSquare", end - length, length, half)
            p = brute_period(u)
            if spec.power.forbids(Fraction(length, p)):
                return ("ForbiddenPower", end - length, length, p)
    return None


def brute_squarefree(w):
    w = tuple(w)
    n = len(w)
    return not any(w[i:i + p] == w[i + p:i + 2 * p]
                   for p in range(1, n // 2 + 1) for i in range(n - 2 * p + 1))


def as_tuple(v):
    return None if v is None else (v.kind.value, v.start, v.length, v.period)
