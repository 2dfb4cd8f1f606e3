"""Z/2-graded linear algebra over the cyclotomic field.

Sign conventions follow the Koszul rule throughout:
(f (x) g)(v (x) w) = (-1)^{|g||v|} f(v) (x) g(w).
"""

from __future__ import annotations

from .linalg import kernel_basis
from .scalars import Cyclo8Scalar, ONE, ZETA, _coerce


class SuperSpace:
    """A finite basis of labels, each with a parity in {0, 1}."""

    def __init__(self, labels, parities):
        self.labels = list(labels)
        self.parity = dict(zip(self.labels, parities))
        if len(self.parity) != len(self.labels):
            raise ValueError("duplicate basis labels")

    @property
    def dim(self):
        return len(self.labels)

    def dims(self):
        even = sum(1 for l in self.labels if self.parity[l] == 0)
        return (even, self.dim - even)

    def tensor(self, other: "SuperSpace") -> "SuperSpace":
        labels = [(a, b) for a in self.labels for b in other.labels]
        return SuperSpace(
            labels, [(self.parity[a] + other.parity[b]) % 2 for a, b in labels]
        )

    def shift(self) -> "SuperSpace":
        return SuperSpace(self.labels, [1 - self.parity[l] for l in self.labels])

    def vector_parity(self, vec: dict):
        """Parity of a homogeneous vector, or None if mixed / zero."""
        ps = {self.parity[k] for k in vec}
        return ps.pop() if len(ps) == 1 else None


class SuperMap:
    """A linear map stored sparsely as {(row_label, col_label): scalar}."""

    def __init__(self, domain: SuperSpace, codomain: SuperSpace, entries=None, parity=None):
        self.domain = domain
        self.codomain = codomain
        self.entries = {}
        if entries:
            for k, c in entries.items():
                c = _coerce(c)
                if not c.is_zero():
                    self.entries[k] = c
        self._parity = parity

    @property
    def parity(self):
        """0/1 for homogeneous maps, None for mixed."""
        if self._parity is not None:
            return self._parity
        ps = {
            (self.codomain.parity[r] - self.domain.parity[c]) % 2
            for (r, c) in self.entries
        }
        self._parity = ps.pop() if len(ps) == 1 else None
        return self._parity

    def homogeneous_parts(self):
        parts = {0: {}, 1: {}}
        for (r, c), x in self.entries.items():
            p = (self.codomain.parity[r] - self.domain.parity[c]) % 2
            parts[p][(r, c)] = x
        return {
            p: SuperMap(self.domain, self.codomain, e, parity=p)
            for p, e in parts.items()
            if e
        }

    @staticmethod
    def identity(space: SuperSpace) -> "SuperMap":
        return SuperMap(space, space, {(l, l): ONE for l in space.labels}, parity=0)

    def apply(self, vec: dict) -> dict:
        out = {}
        for (r, c), x in self.entries.items():
            v = vec.get(c)
            if v is None:
                continue
            s = out.get(r)
            s = x * v if s is None else s + x * v
            if s.is_zero():
                out.pop(r, None)
            else:
                out[r] = s
        return out

    def compose(self, other: "SuperMap") -> "SuperMap":
        """self after other."""
        bycol = {}
        for (r, c), x in self.entries.items():
            bycol.setdefault(c, []).append((r, x))
        entries = {}
        for (r, c), x in other.entries.items():
            for (rr, xx) in bycol.get(r, ()):
                k = (rr, c)
                s = entries.get(k)
                s = xx * x if s is None else s + xx * x
                if s.is_zero():
                    entries.pop(k, None)
                else:
                    entries[k] = s
        par = None
        if self.parity is not None and other.parity is not None:
            par = (self.parity + other.parity) % 2
        return SuperMap(other.domain, self.codomain, entries, parity=par)

    def __add__(self, other):
        entries = dict(self.entries)
        for k, c in other.entries.items():
            s = entries.get(k)
            s = c if s is None else s + c
            if s.is_zero():
                entries.pop(k, None)
            else:
                entries[k] = s
        return SuperMap(self.domain, self.codomain, entries)

    def scale(self, c) -> "SuperMap":
        c = _coerce(c)
        return SuperMap(
            self.domain,
            self.codomain,
            {k: c * x for k, x in self.entries.items()},
            parity=self._parity,
        )

    def __sub__(self, other):
        return self + other.scale(-1)

    def __eq__(self, other):
        return (
            self.domain is other.domain or self.domain.labels == other.domain.labels
        ) and self.entries == other.entries


def tensor_map(f: SuperMap, g: SuperMap) -> SuperMap:
    """f (x) g on the tensor basis, with the Koszul sign (-1)^{|g||v|}."""
    if f.parity is None or g.parity is None:
        raise ValueError("tensor_map needs homogeneous maps; split mixed maps first")
    dom = f.domain.tensor(g.domain)
    cod = f.codomain.tensor(g.codomain)
    gp = g.parity
    entries = {}
    for (rf, cf), x in f.entries.items():
        sign = -1 if gp and f.domain.parity[cf] else 1
        for (rg, cg), y in g.entries.items():
            val = x * y
            entries[((rf, rg), (cf, cg))] = val if sign == 1 else -val
    return SuperMap(dom, cod, entries, parity=(f.parity + gp) % 2)


class QueerStructure:
    """A super vector space with an odd endomorphism squaring to +1."""

    def __init__(self, carrier: SuperSpace, alpha: SuperMap):
        if alpha.parity != 1:
            raise ValueError("queer structure map must be odd")
        sq = alpha.compose(alpha)
        if sq != SuperMap.identity(carrier):
            raise ValueError("queer structure map must square to the identity")
        self.carrier = carrier
        self.alpha = alpha


def standard_queer(n: int) -> QueerStructure:
    """C^{n|n} with alpha(e_i) = f_i, alpha(f_i) = e_i."""
    labels = [("e", i) for i in range(1, n + 1)] + [("f", i) for i in range(1, n + 1)]
    space = SuperSpace(labels, [0] * n + [1] * n)
    entries = {}
    for i in range(1, n + 1):
        entries[(("f", i), ("e", i))] = ONE
        entries[(("e", i), ("f", i))] = ONE
    return QueerStructure(space, SuperMap(space, space, entries, parity=1))


class HalfTensorError(ValueError):
    pass


def half_tensor(va: QueerStructure, wb: QueerStructure):
    """The zeta eigenspace of alpha (x) beta inside V (x) W.

    Returns (eigenspace SuperSpace, embedding SuperMap). The eigenbasis is
    computed per parity so all basis vectors are homogeneous.
    """
    op = tensor_map(va.alpha, wb.alpha)
    big = op.domain
    # constraints (op - zeta)(v) = 0, sliced by parity
    basis_vectors = []
    parities = []
    for par in (0, 1):
        cols = [l for l in big.labels if big.parity[l] == par]
        colset = set(cols)
        rows = {}
        for (r, c), x in op.entries.items():
            if c in colset:
                rows.setdefault(r, {})[c] = x
        for c in cols:
            rows.setdefault(c, {})[c] = rows.get(c, {}).get(c, Cyclo8Scalar()) - ZETA
        constraints = [
            {c: x for c, x in row.items() if not x.is_zero()} for row in rows.values()
        ]
        for vec in kernel_basis(constraints, cols):
            basis_vectors.append(vec)
            parities.append(par)
    if 2 * len(basis_vectors) != big.dim:
        raise HalfTensorError(
            "zeta eigenspace has dimension %d, expected %d"
            % (len(basis_vectors), big.dim // 2)
        )
    labels = [("u", k) for k in range(len(basis_vectors))]
    half = SuperSpace(labels, parities)
    entries = {}
    for k, vec in enumerate(basis_vectors):
        for lab, c in vec.items():
            entries[(lab, ("u", k))] = c
    embedding = SuperMap(half, big, entries, parity=0)
    return half, embedding


class SuperAlgebra:
    """A superalgebra given by structure constants on a labeled basis."""

    def __init__(self, space: SuperSpace, table: dict, unit: dict):
        self.space = space
        self.table = table  # (i, j) -> {k: scalar}
        self.unit = unit

    def mult(self, x: dict, y: dict) -> dict:
        out = {}
        for i, cx in x.items():
            for j, cy in y.items():
                prods = self.table.get((i, j))
                if not prods:
                    continue
                c = cx * cy
                for k, s in prods.items():
                    v = out.get(k)
                    v = c * s if v is None else v + c * s
                    if v.is_zero():
                        out.pop(k, None)
                    else:
                        out[k] = v
        return out

    def parity(self, x: dict):
        return self.space.vector_parity(x)


def superalgebra_mult(alg: SuperAlgebra, x: dict, y: dict) -> dict:
    return alg.mult(x, y)


def opposite(alg: SuperAlgebra) -> SuperAlgebra:
    """Same space, product x*y = (-1)^{|x||y|} yx."""
    table = {}
    par = alg.space.parity
    for (i, j), prods in alg.table.items():
        sign = -1 if par[i] and par[j] else 1
        table[(j, i)] = {k: (c if sign == 1 else -c) for k, c in prods.items()}
    return SuperAlgebra(alg.space, table, alg.unit)


def clifford_algebra(n: int) -> SuperAlgebra:
    """Cl_n with odd generators a_i, a_i^2 = 1, a_i a_j = -a_j a_i."""
    labels = [frozenset(s) for s in _subsets(range(1, n + 1))]
    space = SuperSpace(labels, [len(s) % 2 for s in labels])
    table = {}
    for s1 in labels:
        for s2 in labels:
            sign = 1
            for b in sorted(s2):
                sign *= (-1) ** len([a for a in s1 if a > b])
            table[(s1, s2)] = {frozenset(s1 ^ s2): _coerce(sign)}
    return SuperAlgebra(space, table, {frozenset(): ONE})


def _subsets(items):
    items = list(items)
    out = [[]]
    for x in items:
        out += [s + [x] for s in out]
    return out


def braiding(space_v: SuperSpace, space_w: SuperSpace) -> SuperMap:
    """x (x) y -> (-1)^{|x||y|} y (x) x."""
    dom = space_v.tensor(space_w)
    cod = space_w.tensor(space_v)
    entries = {}
    for a in space_v.labels:
        for b in space_w.labels:
            sign = -1 if space_v.parity[a] and space_w.parity[b] else 1
            entries[((b, a), (a, b))] = _coerce(sign)
    return SuperMap(dom, cod, entries, parity=0)
