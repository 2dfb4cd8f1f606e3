"""Sparse supercommutative polynomials: even variables commute, odd variables
anticommute and square to zero.

A monomial is a pair (even_exps, odd_support): a tuple of exponents over the
even variables and a sorted tuple of odd variable indices. Elements are dicts
monomial -> Cyclo8Scalar, so they plug directly into the echelon machinery.
"""

from __future__ import annotations

from .scalars import Cyclo8Scalar, _coerce


def merge_odd(o1: tuple, o2: tuple):
    """Merge two sorted odd supports; returns (merged, sign) or None if a
    variable repeats."""
    if not o1:
        return o2, 1
    if not o2:
        return o1, 1
    out = []
    i = j = 0
    sign = 1
    while i < len(o1) and j < len(o2):
        a, b = o1[i], o2[j]
        if a == b:
            return None
        if a < b:
            out.append(a)
            i += 1
        else:
            # b jumps over the remaining entries of o1
            if (len(o1) - i) & 1:
                sign = -sign
            out.append(b)
            j += 1
    out.extend(o1[i:])
    out.extend(o2[j:])
    return tuple(out), sign


def insert_odd(o: tuple, v: int, position: int):
    """Insert odd variable v, currently sitting after `position` odd factors,
    into the sorted support; returns (support, sign) or None on repeat."""
    if v in o:
        return None
    target = sum(1 for c in o if c < v)
    sign = -1 if (position - target) & 1 else 1
    return tuple(sorted(o + (v,))), sign


def mono_degree(mono) -> int:
    return sum(mono[0]) + len(mono[1])


def mono_mul(m1, m2, trunc=None):
    """Product of monomials; (monomial, sign) or None if zero/truncated."""
    om = merge_odd(m1[1], m2[1])
    if om is None:
        return None
    e = tuple(a + b for a, b in zip(m1[0], m2[0]))
    mono = (e, om[0])
    if trunc is not None and sum(e) + len(om[0]) > trunc:
        return None
    return mono, om[1]


def p_add(p: dict, q: dict) -> dict:
    out = dict(p)
    for k, c in q.items():
        s = out.get(k)
        s = c if s is None else s + c
        if s.is_zero():
            out.pop(k, None)
        else:
            out[k] = s
    return out


def p_scale(p: dict, c) -> dict:
    c = _coerce(c)
    if c.is_zero():
        return {}
    return {k: c * x for k, x in p.items()}


def p_mul(p: dict, q: dict, trunc=None) -> dict:
    out = {}
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            r = mono_mul(m1, m2, trunc)
            if r is None:
                continue
            mono, sign = r
            c = c1 * c2
            s = out.get(mono)
            s = (c if sign == 1 else -c) if s is None else (s + c if sign == 1 else s - c)
            if s.is_zero():
                out.pop(mono, None)
            else:
                out[mono] = s
    return out


def p_parity(p: dict):
    ps = {len(m[1]) & 1 for m in p}
    return ps.pop() if len(ps) == 1 else None


def p_truncate(p: dict, trunc: int) -> dict:
    return {m: c for m, c in p.items() if mono_degree(m) <= trunc}


def constant_term(p: dict, n_even: int) -> Cyclo8Scalar:
    return p.get(((0,) * n_even, ()), Cyclo8Scalar())


def p_one(n_even: int) -> dict:
    from .scalars import ONE

    return {((0,) * n_even, ()): ONE}


def p_inverse(p: dict, n_even: int, trunc: int) -> dict:
    """Inverse of a jet with invertible constant term, by geometric series."""
    c = constant_term(p, n_even)
    if c.is_zero():
        raise ZeroDivisionError("jet has no invertible constant term")
    cinv = c.inverse()
    # p = c (1 - r): r is minus the non-constant part of p/c
    r = {k: -v for k, v in p_scale(p, cinv).items() if k != ((0,) * n_even, ())}
    out = p_one(n_even)
    power = p_one(n_even)
    for _ in range(trunc):
        power = p_mul(power, r, trunc)
        if not power:
            break
        out = p_add(out, power)
    return p_scale(out, cinv)
