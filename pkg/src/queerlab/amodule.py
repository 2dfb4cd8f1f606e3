"""The truncated bivariate queer algebra A(n,m) = Sym(half(V (x) W)).

Generators x_ij (even) and y_ij (odd) transform like the half-tensor basis
v_ij, w_ij. Everything is graded by total degree and by the torus biweight
(row sums, column sums), and all subspace work happens per weight component.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .linalg import Echelon, kernel_basis
from .partitions import StrictPartition, contains, enumerate_strict, staircase
from .queer import QnElement
from .scalars import Cyclo8Scalar, ONE, ZETA, _coerce
from .spoly import mono_degree, p_add, p_mul, p_scale


class TruncationError(ValueError):
    pass


# a monomial of A(n,m) is ((x exponents, flattened n*m), (sorted y cells))


def _cell(i: int, j: int, m: int) -> int:
    return (i - 1) * m + (j - 1)


class SuperPoly:
    """A sparse element of A(n,m) over the cyclotomic field."""

    __slots__ = ("n", "m", "terms")

    def __init__(self, n: int, m: int, terms=None):
        self.n = n
        self.m = m
        self.terms = {}
        if terms:
            for mono, c in terms.items():
                c = _coerce(c)
                if not c.is_zero():
                    self.terms[mono] = c

    @staticmethod
    def x(n: int, m: int, i: int, j: int) -> "SuperPoly":
        e = [0] * (n * m)
        e[_cell(i, j, m)] = 1
        return SuperPoly(n, m, {(tuple(e), ()): ONE})

    @staticmethod
    def y(n: int, m: int, i: int, j: int) -> "SuperPoly":
        return SuperPoly(n, m, {((0,) * (n * m), (_cell(i, j, m),)): ONE})

    @staticmethod
    def one(n: int, m: int) -> "SuperPoly":
        return SuperPoly(n, m, {((0,) * (n * m), ()): ONE})

    def __add__(self, other):
        return SuperPoly(self.n, self.m, p_add(self.terms, other.terms))

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c) -> "SuperPoly":
        return SuperPoly(self.n, self.m, p_scale(self.terms, c))

    def __mul__(self, other):
        if (self.n, self.m) != (other.n, other.m):
            raise ValueError("rank mismatch")
        return SuperPoly(self.n, self.m, p_mul(self.terms, other.terms))

    def __eq__(self, other):
        return self.terms == other.terms

    def is_zero(self):
        return not self.terms

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for (e, o), c in sorted(self.terms.items()):
            mono = []
            for idx, ex in enumerate(e):
                if ex:
                    i, j = divmod(idx, self.m)
                    mono.append(
                        "x%d%d^%d" % (i + 1, j + 1, ex) if ex > 1 else "x%d%d" % (i + 1, j + 1)
                    )
            for idx in o:
                i, j = divmod(idx, self.m)
                mono.append("y%d%d" % (i + 1, j + 1))
            bits.append("%r*%s" % (c, "*".join(mono) or "1"))
        return " + ".join(bits)


def a_mult(p: SuperPoly, q: SuperPoly) -> SuperPoly:
    return p * q


def mono_biweight(mono, n: int, m: int):
    """(row sums, column sums) of the combined x,y exponents."""
    rows = [0] * n
    cols = [0] * m
    e, o = mono
    for idx, ex in enumerate(e):
        if ex:
            i, j = divmod(idx, m)
            rows[i] += ex
            cols[j] += ex
    for idx in o:
        i, j = divmod(idx, m)
        rows[i] += 1
        cols[j] += 1
    return tuple(rows), tuple(cols)


# ---------------------------------------------------------------------------
# the q_n x q_m action by superderivations
# ---------------------------------------------------------------------------

# generator tables, derived from the action on U (x ~ v, y ~ w):
#   left  X_ab: x_ij -> d_bi x_aj          y_ij -> d_bi y_aj
#   left  Y_ab: x_ij -> -zeta d_bi y_aj    y_ij -> -zeta d_bi x_aj
#   right X_ab: x_ij -> d_bj x_ia          y_ij -> d_bj y_ia
#   right Y_ab: x_ij -> -d_bj y_ia         y_ij -> +d_bj x_ia


def _act_monomial(side, kind, a, b, mono, coeff, n, m, out):
    """Accumulate the derivation action of X_ab/Y_ab on one monomial."""
    e, o = mono
    odd_op = kind == "Y"
    # x factors
    for idx, ex in enumerate(e):
        if not ex:
            continue
        i, j = divmod(idx, m)
        i += 1
        j += 1
        if side == "left":
            if b != i:
                continue
            ti, tj = a, j
            scal = -ZETA if odd_op else ONE
        else:
            if b != j:
                continue
            ti, tj = i, a
            scal = -ONE if odd_op else ONE
        c = coeff * scal * ex
        e2 = list(e)
        e2[idx] -= 1
        tcell = _cell(ti, tj, m)
        if odd_op:
            # new odd factor enters in front of the existing odd block
            from .spoly import insert_odd

            ins = insert_odd(o, tcell, 0)
            if ins is None:
                continue
            o2, sign = ins
            key = (tuple(e2), o2)
            c = c if sign == 1 else -c
        else:
            e2[tcell] += 1
            key = (tuple(e2), o)
        s = out.get(key)
        s = c if s is None else s + c
        if s.is_zero():
            out.pop(key, None)
        else:
            out[key] = s
    # y factors
    for t, idx in enumerate(o):
        i, j = divmod(idx, m)
        i += 1
        j += 1
        if side == "left":
            if b != i:
                continue
            ti, tj = a, j
            scal = -ZETA if odd_op else ONE
        else:
            if b != j:
                continue
            ti, tj = i, a
            scal = ONE
        # crossing the t preceding odd factors with an odd operator
        c = coeff * scal
        if odd_op and t & 1:
            c = -c
        tcell = _cell(ti, tj, m)
        o_rest = o[:t] + o[t + 1 :]
        if odd_op:
            e2 = list(e)
            e2[tcell] += 1
            key = (tuple(e2), o_rest)
        else:
            from .spoly import insert_odd

            ins = insert_odd(o_rest, tcell, t)
            if ins is None:
                continue
            o2, sign = ins
            key = (e, o2)
            c = c if sign == 1 else -c
        s = out.get(key)
        s = c if s is None else s + c
        if s.is_zero():
            out.pop(key, None)
        else:
            out[key] = s


def act_terms(side: str, g: QnElement, terms: dict, n: int, m: int) -> dict:
    """Superderivation action of (g, 0) or (0, g) on a polynomial dict."""
    out = {}
    for (i, j), c in g.xmat.items():
        for mono, cm in terms.items():
            _act_monomial(side, "X", i, j, mono, c * cm, n, m, out)
    for (i, j), c in g.ymat.items():
        for mono, cm in terms.items():
            _act_monomial(side, "Y", i, j, mono, c * cm, n, m, out)
    return out


def act(side: str, g: QnElement, p: SuperPoly) -> SuperPoly:
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    rank = p.n if side == "left" else p.m
    if g.n != rank:
        raise ValueError("operator rank %d does not match side rank %d" % (g.n, rank))
    return SuperPoly(p.n, p.m, act_terms(side, g, p.terms, p.n, p.m))


# ---------------------------------------------------------------------------
# weight spaces
# ---------------------------------------------------------------------------


def _tables(rows, cols):
    """All nonnegative integer matrices with the given margins."""
    n = len(rows)
    m = len(cols)
    out = []

    def rec(i, cols_left, acc):
        if i == n:
            if all(c == 0 for c in cols_left):
                out.append(tuple(acc))
            return
        # distribute rows[i] over m columns bounded by cols_left
        def dist(j, left, row):
            if j == m:
                if left == 0:
                    rec(i + 1, [c - r for c, r in zip(cols_left, row)], acc + row)
                return
            for v in range(0, min(left, cols_left[j]) + 1):
                dist(j + 1, left - v, row + [v])

        dist(0, rows[i], [])

    rec(0, list(cols), [])
    return out


def weight_space_monomials(n: int, m: int, d: int, w) -> list:
    """All monomials of A(n,m) with total degree d and biweight w."""
    rows, cols = w
    if sum(rows) != d or sum(cols) != d:
        return []
    cells = list(range(n * m))
    out = []

    def supports(idx, rleft, cleft, acc):
        if idx == len(cells):
            xr = tuple(rleft)
            xc = tuple(cleft)
            if sum(xr) != sum(xc):
                return
            for table in _tables(xr, xc):
                out.append((table, tuple(acc)))
            return
        supports(idx + 1, rleft, cleft, acc)
        i, j = divmod(cells[idx], m)
        if rleft[i] > 0 and cleft[j] > 0:
            rl = list(rleft)
            cl = list(cleft)
            rl[i] -= 1
            cl[j] -= 1
            supports(idx + 1, rl, cl, acc + [cells[idx]])

    supports(0, list(rows), list(cols), [])
    return out


def weight_space(n: int, m: int, d: int, w) -> "GradedSubspace":
    """The degree-d, biweight-w component of A(n,m) as a graded subspace."""
    space = GradedSubspace(n, m)
    for mono in weight_space_monomials(n, m, d, w):
        space.insert({mono: ONE})
    return space


# ---------------------------------------------------------------------------
# singular vectors and the lambda summand
# ---------------------------------------------------------------------------


def _pad(parts, k):
    return tuple(parts) + (0,) * (k - len(parts))


def raising_operators(n: int, m: int):
    ops = []
    for i in range(1, n):
        ops.append(("left", QnElement.X(n, i, i + 1)))
        ops.append(("left", QnElement.Y(n, i, i + 1)))
    for j in range(1, m):
        ops.append(("right", QnElement.X(m, j, j + 1)))
        ops.append(("right", QnElement.Y(m, j, j + 1)))
    return ops


def all_operators(n: int, m: int):
    ops = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            ops.append(("left", QnElement.X(n, i, j)))
            ops.append(("left", QnElement.Y(n, i, j)))
    for i in range(1, m + 1):
        for j in range(1, m + 1):
            ops.append(("right", QnElement.X(m, i, j)))
            ops.append(("right", QnElement.Y(m, i, j)))
    return ops


def lowering_operators(n: int, m: int):
    """Strictly lower-triangular operators of both factors."""
    ops = []
    for i in range(1, n + 1):
        for j in range(1, i):
            ops.append(("left", QnElement.X(n, i, j)))
            ops.append(("left", QnElement.Y(n, i, j)))
    for i in range(1, m + 1):
        for j in range(1, i):
            ops.append(("right", QnElement.X(m, i, j)))
            ops.append(("right", QnElement.Y(m, i, j)))
    return ops


def singular_vectors(n: int, m: int, lam: StrictPartition) -> list[dict]:
    """Weight-(lam,lam) vectors killed by the raising operators of both sides."""
    if lam.length > min(n, m):
        return []
    w = (_pad(lam.parts, n), _pad(lam.parts, m))
    monos = weight_space_monomials(n, m, lam.size, w)
    if not monos:
        return []
    constraints = {}
    for op_id, (side, g) in enumerate(raising_operators(n, m)):
        for mono in monos:
            img = act_terms(side, g, {mono: ONE}, n, m)
            for tgt, c in img.items():
                row = constraints.setdefault((op_id, tgt), {})
                row[mono] = row.get(mono, Cyclo8Scalar()) + c
    rows = [
        {k: c for k, c in row.items() if not c.is_zero()}
        for row in constraints.values()
    ]
    return kernel_basis(rows, monos)


@dataclass
class GradedSubspace:
    """Weight-graded subspace: components keyed by (degree, biweight)."""

    n: int
    m: int
    components: dict = field(default_factory=dict)

    def insert(self, vec: dict) -> bool:
        if not vec:
            return False
        mono = next(iter(vec))
        d = mono_degree(mono)
        w = mono_biweight(mono, self.n, self.m)
        ech = self.components.get((d, w))
        if ech is None:
            ech = self.components[(d, w)] = Echelon()
        return ech.insert(vec)

    def component(self, d, w) -> Echelon:
        return self.components.get((d, w), Echelon())

    def dim(self) -> int:
        return sum(e.rank for e in self.components.values())

    def dims_by_degree(self) -> dict:
        out = {}
        for (d, _), e in self.components.items():
            out[d] = out.get(d, 0) + e.rank
        return out

    def contains(self, vec: dict) -> bool:
        if not vec:
            return True
        mono = next(iter(vec))
        d = mono_degree(mono)
        w = mono_biweight(mono, self.n, self.m)
        return self.component(d, w).contains(vec)


def _within_cap(vec: dict, n: int, m: int, cap) -> bool:
    if cap is None:
        return True
    kr, kc = cap
    rows, cols = mono_biweight(next(iter(vec)), n, m)
    return not any(rows[kr:]) and not any(cols[kc:])


def summand(n: int, m: int, lam: StrictPartition, support_cap=None) -> GradedSubspace:
    """The lambda summand of the Cauchy decomposition at degree |lambda|,
    generated from its singular vectors by operator closure.

    The singular space is stable under both Cartans, so closing under the
    strictly-lowering operators alone spans the summand; their weights
    strictly descend, hence the worklist terminates without revisits.

    support_cap = (kr, kc) drops components whose weight touches rows past
    kr or columns past kc. Lowering operators never move weight back out of
    late rows and ideal slices at a target biweight only consume components
    with pointwise-smaller weight, so capped components cannot contribute to
    any membership check against targets supported in the first kr rows and
    kc columns.
    """
    space = GradedSubspace(n, m)
    queue = []
    for vec in singular_vectors(n, m, lam):
        if space.insert(vec):
            queue.append(vec)
    ops = lowering_operators(n, m)
    while queue:
        vec = queue.pop()
        for side, g in ops:
            img = act_terms(side, g, vec, n, m)
            if img and _within_cap(img, n, m, support_cap) and space.insert(img):
                queue.append(img)
    return space


_SUMMAND_CACHE: dict = {}


def summand_cached(n: int, m: int, lam: StrictPartition, support_cap=None) -> GradedSubspace:
    key = (n, m, lam, support_cap)
    if key not in _SUMMAND_CACHE:
        _SUMMAND_CACHE[key] = summand(n, m, lam, support_cap)
    return _SUMMAND_CACHE[key]


class EquivariantIdeal:
    """The ideal of A(n,m) generated by an operator-closed graded subspace.

    Since A_1 * (stable subspace) is again stable, the degree-d part is
    A_{d-d0} times the generators; components are computed per biweight on
    demand and cached.
    """

    def __init__(self, n: int, m: int, gens: GradedSubspace, d_max: int):
        self.n = n
        self.m = m
        self.gens = gens
        self.d_max = d_max
        self._cache: dict = {}

    def component(self, d: int, w) -> Echelon:
        if d > self.d_max:
            raise TruncationError("degree %d beyond d_max %d" % (d, self.d_max))
        key = (d, w)
        if key in self._cache:
            return self._cache[key]
        n, m = self.n, self.m
        ech = Echelon()
        rows_w, cols_w = w
        for (d0, w0), comp in self.gens.components.items():
            if d0 > d or comp.rank == 0:
                continue
            crows = tuple(a - b for a, b in zip(rows_w, w0[0]))
            ccols = tuple(a - b for a, b in zip(cols_w, w0[1]))
            if any(c < 0 for c in crows) or any(c < 0 for c in ccols):
                continue
            for mono in weight_space_monomials(n, m, d - d0, (crows, ccols)):
                mono_poly = {mono: ONE}
                for row in comp.rows.values():
                    ech.insert(p_mul(mono_poly, row))
        self._cache[key] = ech
        return ech

    def full_closure(self) -> GradedSubspace:
        """Materialize every component up to d_max (the literal closure)."""
        out = GradedSubspace(self.n, self.m)
        degrees = sorted({d0 for (d0, _) in self.gens.components})
        if not degrees:
            return out
        dmin = degrees[0]
        for d in range(dmin, self.d_max + 1):
            for w in all_biweights(self.n, self.m, d):
                ech = self.component(d, w)
                if ech.rank:
                    out.components[(d, w)] = ech
        return out


def all_biweights(n: int, m: int, d: int):
    rws = _compositions(d, n)
    cws = _compositions(d, m)
    return [(r, c) for r in rws for c in cws]


def _compositions(d: int, k: int):
    if k == 0:
        return [()] if d == 0 else []
    out = []

    def rec(left, acc):
        if len(acc) == k - 1:
            out.append(tuple(acc + [left]))
            return
        for v in range(left + 1):
            rec(left - v, acc + [v])

    rec(d, [])
    return out


def ideal_closure(n: int, m: int, gens: GradedSubspace, d_max: int) -> EquivariantIdeal:
    """The equivariant ideal generated by gens (operator-closed degreewise)."""
    closed = GradedSubspace(n, m)
    queue = []
    for comp in gens.components.values():
        for row in comp.rows.values():
            if closed.insert(dict(row)):
                queue.append(dict(row))
    ops = all_operators(n, m)
    while queue:
        vec = queue.pop()
        for side, g in ops:
            img = act_terms(side, g, vec, n, m)
            if img and closed.insert(img):
                queue.append(img)
    return EquivariantIdeal(n, m, closed, d_max)


def summand_membership(n: int, m: int, ideal: EquivariantIdeal, mu: StrictPartition) -> bool:
    """True iff the whole mu summand lies in the ideal (multiplicity-freeness
    reduces this to containment of the singular vectors)."""
    if mu.length > min(n, m):
        raise ValueError("l(mu) exceeds min(n, m); summand vanishes at this rank")
    sings = singular_vectors(n, m, mu)
    w = (_pad(mu.parts, n), _pad(mu.parts, m))
    comp = ideal.component(mu.size, w)
    return all(comp.contains(s) for s in sings)


@dataclass
class MembershipCase:
    lam: StrictPartition
    mu: StrictPartition
    predicted: bool
    observed: bool

    @property
    def passed(self):
        return self.predicted == self.observed

    def to_dict(self):
        return {
            "lambda": self.lam.serialize(),
            "mu": self.mu.serialize(),
            "predicted": self.predicted,
            "observed": self.observed,
            "pass": self.passed,
        }


def _strict_in_range(d_max: int, maxlen: int):
    out = []
    for k in range(0, d_max + 1):
        out.extend(p for p in enumerate_strict(k) if p.length <= maxlen)
    return out


def _max_candidate_length(d_max: int, maxlen: int) -> int:
    lengths = [p.length for p in _strict_in_range(d_max, maxlen)]
    return max(lengths, default=0)


def membership_cases_for(n: int, m: int, lam: StrictPartition, d_max: int):
    """Membership row of the main-theorem matrix for one generator lambda."""
    k = _max_candidate_length(d_max, min(n, m))
    cap = (k, k) if k < min(n, m) else None
    gens = summand_cached(n, m, lam, cap)
    ideal = EquivariantIdeal(n, m, gens, d_max)
    cases = []
    for mu in _strict_in_range(d_max, min(n, m)):
        if mu.size < lam.size:
            observed = False
        else:
            observed = summand_membership(n, m, ideal, mu)
        cases.append(MembershipCase(lam, mu, contains(lam, mu), observed))
    return cases


def verify_main_theorem(n: int, m: int, d_max: int) -> list[MembershipCase]:
    """Check membership(I^lambda, mu) == (lambda inside mu) over the truncation."""
    cases = []
    for lam in _strict_in_range(d_max, min(n, m)):
        cases.extend(membership_cases_for(n, m, lam, d_max))
    return cases


@dataclass
class DeterminantalReport:
    r: int
    cases: list
    observed_quotient_lengths: list

    @property
    def passed(self):
        return all(c.passed for c in self.cases)


def determinantal_ideal_check(n: int, m: int, r: int, d_max: int) -> DeterminantalReport:
    """The staircase summand generates exactly the mu with l(mu) > r."""
    lam = staircase(r)
    if lam.size > d_max:
        raise ValueError("staircase size exceeds d_max")
    k = _max_candidate_length(d_max, min(n, m))
    cap = (k, k) if k < min(n, m) else None
    gens = summand_cached(n, m, lam, cap)
    ideal = EquivariantIdeal(n, m, gens, d_max)
    cases = []
    outside = []
    for mu in _strict_in_range(d_max, min(n, m)):
        observed = (
            summand_membership(n, m, ideal, mu) if mu.size >= lam.size else False
        )
        predicted = mu.length > r
        cases.append(MembershipCase(lam, mu, predicted, observed))
        if not observed:
            outside.append(mu.length)
    return DeterminantalReport(r, cases, sorted(set(outside)))


# ---------------------------------------------------------------------------
# m-stability of the distinguished maximal ideal
# ---------------------------------------------------------------------------


def m_generators(n: int) -> list[SuperPoly]:
    """x_ij - delta_ij and y_ij for A(n,n)."""
    gens = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            g = SuperPoly.x(n, n, i, j)
            if i == j:
                g = g - SuperPoly.one(n, n)
            gens.append(g)
            gens.append(SuperPoly.y(n, n, i, j))
    return gens


def _in_m_span(p: SuperPoly, n: int) -> bool:
    """Is p a linear combination of the generators of the maximal ideal?"""
    const = Cyclo8Scalar()
    diag = Cyclo8Scalar()
    zero_e = (0,) * (n * n)
    for (e, o), c in p.terms.items():
        d = sum(e) + len(o)
        if d == 0:
            const = c
        elif d != 1:
            return False
    for i in range(1, n + 1):
        e = [0] * (n * n)
        e[_cell(i, i, n)] = 1
        diag = diag + p.terms.get((tuple(e), ()), Cyclo8Scalar())
    return (const + diag).is_zero()


@dataclass
class StabilityReport:
    failures: list

    @property
    def passed(self):
        return not self.failures


def m_stability_check(n: int) -> StabilityReport:
    """Every X'_ij, Y'_ij maps every generator of m into the span of generators."""
    from .queer import x_prime, y_prime

    failures = []
    hbasis = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            hbasis.append(("X'", (i, j), x_prime(n, i, j)))
            hbasis.append(("Y'", (i, j), y_prime(n, i, j)))
    for name, idx, (gl, gr) in hbasis:
        for gen in m_generators(n):
            img = act("left", gl, gen) + act("right", gr, gen)
            if not _in_m_span(img, n):
                failures.append((name, idx, repr(gen)))
    return StabilityReport(failures)
