"""The coordinate maps between A(n,n) and the group K, modeled on jets.

phi sends x_ij, y_ij to polynomials in the K-coordinates a, b, a', b';
psi inverts it lexicographically into jets of A localized at the
distinguished maximal ideal (power series in x_ij - delta_ij and y_ij,
truncated at the jet order).
"""

from __future__ import annotations

from dataclasses import dataclass

from .scalars import Cyclo8Scalar, ONE, ZETA, _coerce
from .spoly import p_add, p_inverse, p_mul, p_one, p_scale


class JetInversionError(ZeroDivisionError):
    pass


@dataclass(frozen=True)
class JetRing:
    """A truncated supercommutative polynomial ring with named variables."""

    even_names: tuple
    odd_names: tuple
    order: int

    def __post_init__(self):
        object.__setattr__(
            self, "_even_idx", {v: i for i, v in enumerate(self.even_names)}
        )
        object.__setattr__(
            self, "_odd_idx", {v: i for i, v in enumerate(self.odd_names)}
        )

    @property
    def n_even(self):
        return len(self.even_names)

    def one(self):
        return p_one(self.n_even)

    def const(self, c):
        return p_scale(self.one(), _coerce(c))

    def even_var(self, name):
        e = [0] * self.n_even
        e[self._even_idx[name]] = 1
        return {(tuple(e), ()): ONE}

    def odd_var(self, name):
        return {((0,) * self.n_even, (self._odd_idx[name],)): ONE}

    def mul(self, p, q):
        return p_mul(p, q, self.order)

    def add(self, p, q):
        return p_add(p, q)

    def scale(self, p, c):
        return p_scale(p, c)

    def inverse(self, p):
        try:
            return p_inverse(p, self.n_even, self.order)
        except ZeroDivisionError as exc:
            raise JetInversionError(str(exc)) from exc

    def constant_term(self, p) -> Cyclo8Scalar:
        return p.get(((0,) * self.n_even, ()), Cyclo8Scalar())


def k_ring(n: int, order: int) -> JetRing:
    """Coordinates of K: a_ij, b_ij on B (i <= j, diagonal a recentered),
    a'_ij, b'_ij on U (i < j)."""
    even = []
    odd = []
    for j in range(1, n + 1):
        for i in range(1, j + 1):
            even.append(("abar", i, j) if i == j else ("a", i, j))
            odd.append(("b", i, j))
            if i < j:
                even.append(("ap", i, j))
                odd.append(("bp", i, j))
    return JetRing(tuple(even), tuple(odd), order)


def a_ring(n: int, order: int) -> JetRing:
    """Jets of A(n,n) at the maximal ideal: xbar_ij = x_ij - delta_ij, y_ij."""
    even = []
    odd = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            even.append(("xbar", i, j))
            odd.append(("y", i, j))
    return JetRing(tuple(even), tuple(odd), order)


def _k_a(ring: JetRing, t: int, i: int):
    """The coordinate a_{t,i} of B as a jet (t <= i)."""
    if t == i:
        return ring.add(ring.one(), ring.even_var(("abar", t, t)))
    return ring.even_var(("a", t, i))


def _k_ap(ring: JetRing, t: int, j: int):
    if t == j:
        return ring.one()
    return ring.even_var(("ap", t, j))


def _k_b(ring: JetRing, t: int, i: int):
    return ring.odd_var(("b", t, i))


def _k_bp(ring: JetRing, t: int, j: int):
    if t == j:
        return {}
    return ring.odd_var(("bp", t, j))


def phi_map(n: int, order: int):
    """Images of the A(n,n) generators in C[K], truncated at the jet order.

    phi(x_ij) = sum_{t <= i,j} a_ti a'_tj + zeta b_ti b'_tj
    phi(y_ij) = sum_{t <= i,j} a_ti b'_tj - zeta b_ti a'_tj
    """
    ring = k_ring(n, order)
    images = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            px = {}
            py = {}
            for t in range(1, min(i, j) + 1):
                a = _k_a(ring, t, i)
                ap = _k_ap(ring, t, j)
                b = _k_b(ring, t, i)
                bp = _k_bp(ring, t, j)
                px = ring.add(px, ring.mul(a, ap))
                px = ring.add(px, ring.scale(ring.mul(b, bp), ZETA))
                py = ring.add(py, ring.mul(a, bp))
                py = ring.add(py, ring.scale(ring.mul(b, ap), -ZETA))
            images[("x", i, j)] = px
            images[("y", i, j)] = py
    return ring, images


def phi_apply(n: int, order: int, poly) -> dict:
    """phi on a SuperPoly of A(n,n), extended multiplicatively."""
    ring, images = phi_map(n, order)
    m = poly.m
    out = {}
    for (e, o), c in poly.terms.items():
        term = ring.const(c)
        for idx, ex in enumerate(e):
            if ex:
                i, j = divmod(idx, m)
                for _ in range(ex):
                    term = ring.mul(term, images[("x", i + 1, j + 1)])
        for idx in o:
            i, j = divmod(idx, m)
            term = ring.mul(term, images[("y", i + 1, j + 1)])
        out = ring.add(out, term)
    return out


def psi_map(n: int, order: int):
    """Images of the K-coordinates as jets of A at the maximal ideal.

    Defined lexicographically (second index most significant); the a'/b'
    step inverts the 2x2 matrix (p, zeta q; -zeta q, p) whose determinant
    is p^2 exactly since odd jets square to zero.
    """
    ring = a_ring(n, order)
    x = {
        (i, j): (
            ring.add(ring.one(), ring.even_var(("xbar", i, j)))
            if i == j
            else ring.even_var(("xbar", i, j))
        )
        for i in range(1, n + 1)
        for j in range(1, n + 1)
    }
    y = {
        (i, j): ring.odd_var(("y", i, j))
        for i in range(1, n + 1)
        for j in range(1, n + 1)
    }
    psi = {}

    def p_a(t, i):
        return psi[("a", t, i)]

    def p_ap(t, j):
        return ring.one() if t == j else psi[("ap", t, j)]

    def p_b(t, i):
        return psi[("b", t, i)]

    def p_bp(t, j):
        return {} if t == j else psi[("bp", t, j)]

    pairs = sorted(
        ((i, j) for j in range(1, n + 1) for i in range(1, j + 1)),
        key=lambda ij: (ij[1], ij[0]),
    )
    for (i, j) in pairs:
        acc_a = x[(j, i)]
        acc_b = ring.scale(y[(j, i)], ZETA)
        for t in range(1, i):
            corr = ring.add(
                ring.mul(p_a(t, j), p_ap(t, i)),
                ring.scale(ring.mul(p_b(t, j), p_bp(t, i)), ZETA),
            )
            acc_a = ring.add(acc_a, ring.scale(corr, -1))
            corr2 = ring.add(
                ring.mul(p_a(t, j), p_bp(t, i)),
                ring.scale(ring.mul(p_b(t, j), p_ap(t, i)), -ZETA),
            )
            acc_b = ring.add(acc_b, ring.scale(corr2, -ZETA))
        psi[("a", i, j)] = acc_a
        psi[("b", i, j)] = acc_b
        if i < j:
            rx = x[(i, j)]
            ry = y[(i, j)]
            for t in range(1, i):
                corr = ring.add(
                    ring.mul(p_a(t, i), p_ap(t, j)),
                    ring.scale(ring.mul(p_b(t, i), p_bp(t, j)), ZETA),
                )
                rx = ring.add(rx, ring.scale(corr, -1))
                corr2 = ring.add(
                    ring.mul(p_a(t, i), p_bp(t, j)),
                    ring.scale(ring.mul(p_b(t, i), p_ap(t, j)), -ZETA),
                )
                ry = ring.add(ry, ring.scale(corr2, -1))
            p = psi[("a", i, i)]
            q = psi[("b", i, i)]
            if ring.constant_term(p).is_zero():
                raise JetInversionError("psi inversion needs a unit diagonal entry")
            inv2 = ring.inverse(ring.mul(p, p))
            ap_val = ring.mul(
                inv2,
                ring.add(ring.mul(p, rx), ring.scale(ring.mul(q, ry), -ZETA)),
            )
            bp_val = ring.mul(
                inv2,
                ring.add(ring.scale(ring.mul(q, rx), ZETA), ring.mul(p, ry)),
            )
            psi[("ap", i, j)] = ap_val
            psi[("bp", i, j)] = bp_val
    return ring, psi


def psi_apply(n: int, order: int, kjet, kring: JetRing) -> dict:
    """Substitute the psi images into a jet over the K-coordinates."""
    aring, psi = psi_map(n, order)

    def image(varname):
        kind = varname[0]
        _, i, j = varname
        if kind == "abar":
            # a_ii = 1 + abar_ii, so abar maps to psi(a_ii) - 1
            return aring.add(psi[("a", i, i)], aring.scale(aring.one(), -1))
        if kind == "a":
            return psi[("a", i, j)]
        if kind == "ap":
            return psi[("ap", i, j)]
        if kind == "b":
            return psi[("b", i, j)]
        if kind == "bp":
            return psi[("bp", i, j)]
        raise KeyError(varname)

    out = {}
    for (e, o), c in kjet.items():
        term = aring.const(c)
        for idx, ex in enumerate(e):
            for _ in range(ex):
                term = aring.mul(term, image(kring.even_names[idx]))
        for idx in o:
            term = aring.mul(term, image(kring.odd_names[idx]))
        out = aring.add(out, term)
    return out


def psi_of_phi_on_generators(n: int, order: int):
    """psi(phi(g)) for every generator g of A(n,n), next to g's own jet."""
    kring, phi = phi_map(n, order)
    aring = a_ring(n, order)
    results = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            for kind in ("x", "y"):
                got = psi_apply(n, order, phi[(kind, i, j)], kring)
                if kind == "x":
                    want = aring.even_var(("xbar", i, j))
                    if i == j:
                        want = aring.add(want, aring.one())
                else:
                    want = aring.odd_var(("y", i, j))
                results.append(((kind, i, j), got, want))
    return results
