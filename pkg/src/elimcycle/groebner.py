"""Buchberger's algorithm, ideal membership and localized membership.

Local membership at the origin uses the identity

    p in I * Q[x,y,z]_(x,y,z)   <=>   (I : p) is not contained in (x,y,z),

and (I : p) is computed from an elimination basis of t*I + (1 - t)*(p).
"""

from __future__ import annotations

import contextvars
import heapq
from contextlib import contextmanager
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Sequence

from .errors import ResourceError
from .ring import Poly, _add, _divides, _lcm, _sub, elim_key, grevlex_key

DEFAULT_MAX_STEPS = 20000

_budget = contextvars.ContextVar("gb_budget", default=DEFAULT_MAX_STEPS)


@contextmanager
def gb_budget(max_steps: int):
    """Cap the number of S-pair reductions per Groebner computation."""
    token = _budget.set(int(max_steps))
    try:
        yield
    finally:
        _budget.reset(token)


@dataclass(frozen=True)
class IdealBasis:
    generators: tuple
    groebner: tuple
    order: str = "grevlex"

    def __post_init__(self):
        object.__setattr__(self, "_leads", tuple(g.lead(grevlex_key) for g in self.groebner))

    def is_unit_ideal(self) -> bool:
        return any(e == (0,) * len(e) for e, _ in self._leads)


ORDERS = {"grevlex": grevlex_key, "elim": elim_key}


def _reduce(p: Poly, basis, key, cofs=None, track=None):
    """Fully reduce p by ``basis`` (list of (lead_exp, lead_coef, poly)).

    With ``track`` (cofactor vectors of the basis elements) and ``cofs``
    (cofactor vector of p), returns the remainder and its cofactor vector.
    """
    work = dict(p.items())
    # max-heap on the monomial order; every new term is smaller than the
    # term being reduced, so a popped monomial never comes back
    heap = [(_neg(key(e)), e) for e in work]
    heapq.heapify(heap)
    rem = {}
    if cofs is not None:
        cofs = list(cofs)
    while heap:
        e = heapq.heappop(heap)[1]
        if e not in work:
            continue
        c = work[e]
        for idx, (le, lc, g) in enumerate(basis):
            if _divides(le, e):
                m = _sub(e, le)
                f = c / lc
                for te, tc in g.items():
                    k = _add(te, m)
                    old = work.get(k)
                    if old is None:
                        work[k] = -f * tc
                        heapq.heappush(heap, (_neg(key(k)), k))
                    elif old == f * tc:
                        del work[k]
                    else:
                        work[k] = old - f * tc
                if cofs is not None:
                    for j, cj in enumerate(track[idx]):
                        if cj:
                            cofs[j] = cofs[j] - cj.scale(f, m)
                break
        else:
            rem[e] = c
            del work[e]
    r = Poly._raw(rem)
    return (r, cofs) if cofs is not None else r


def _neg(k):
    return tuple(-v for v in k)


def _spoly(a, b, key):
    (ae, ac, ap), (be, bc, bp) = a, b
    m = _lcm(ae, be)
    return ap.scale(1 / ac, _sub(m, ae)) - bp.scale(1 / bc, _sub(m, be)), _sub(m, ae), _sub(m, be)


def buchberger(gens: Sequence[Poly], key: Callable = grevlex_key, track: bool = False):
    """Reduced Groebner basis of ``gens``.

    Returns a list of polys, or with ``track`` a list of (poly, cofactors)
    where cofactors express the poly in terms of ``gens``.
    """
    max_steps = _budget.get()
    gens = [g for g in gens]
    nv = next((g.nvars for g in gens if g), 3)
    n = len(gens)
    zero = Poly()

    basis = []   # (lead_exp, lead_coef, poly)
    cof = []     # cofactor vectors, parallel to basis
    for i, g in enumerate(gens):
        if g.is_zero():
            continue
        e, c = g.lead(key)
        basis.append((e, c, g))
        if track:
            v = [zero] * n
            v[i] = Poly.constant(1, nv)
            cof.append(v)

    # normal selection strategy: smallest lcm of leading monomials first
    pairs = set()
    queue = []

    def add_pair(i, j):
        lcm = _lcm(basis[i][0], basis[j][0])
        pairs.add((i, j))
        heapq.heappush(queue, (key(lcm), i, j, lcm))

    for j in range(len(basis)):
        for i in range(j):
            add_pair(i, j)
    steps = 0
    while queue:
        _, i, j, lcm = heapq.heappop(queue)
        pairs.discard((i, j))
        ei, ej = basis[i][0], basis[j][0]
        if all(a == 0 or b == 0 for a, b in zip(ei, ej)):
            continue  # coprime leading monomials
        if any(
            k != i and k != j
            and _divides(basis[k][0], lcm)
            and (min(i, k), max(i, k)) not in pairs
            and (min(j, k), max(j, k)) not in pairs
            for k in range(len(basis))
        ):
            continue
        steps += 1
        if steps > max_steps:
            raise ResourceError(f"Groebner computation exceeded {max_steps} steps")
        s, mi, mj = _spoly(basis[i], basis[j], key)
        if track:
            ci, cj = basis[i][1], basis[j][1]
            scof = [a.scale(1 / ci, mi) - b.scale(1 / cj, mj) for a, b in zip(cof[i], cof[j])]
            r, rc = _reduce(s, basis, key, scof, cof)
        else:
            r = _reduce(s, basis, key)
        if r.is_zero():
            continue
        e, c = r.lead(key)
        k = len(basis)
        basis.append((e, c, r))
        if track:
            cof.append(rc)
        for a in range(k):
            add_pair(a, k)

    # minimize
    keep = []
    for idx, (e, c, g) in enumerate(basis):
        dominated = False
        for jdx, (e2, _, _) in enumerate(basis):
            if jdx == idx:
                continue
            if _divides(e2, e) and (e2 != e or jdx < idx):
                dominated = True
                break
        if not dominated:
            keep.append(idx)
    basis = [basis[i] for i in keep]
    if track:
        cof = [cof[i] for i in keep]

    # interreduce and normalize
    out = []
    for idx in range(len(basis)):
        e, c, g = basis[idx]
        others = [b for k, b in enumerate(basis) if k != idx]
        # leads are pairwise non-dividing, so only the tail reduces
        if track:
            ocof = [v for k, v in enumerate(cof) if k != idx]
            poly, rc = _reduce(g, others, key, cof[idx], ocof)
        else:
            poly = _reduce(g, others, key)
        inv = 1 / c
        poly = poly.scale(inv)
        if track:
            out.append((poly, [x.scale(inv) for x in rc]))
        else:
            out.append(poly)
    sort_key = (lambda t: key(t[0].lead(key)[0])) if track else (lambda p: key(p.lead(key)[0]))
    out.sort(key=sort_key, reverse=True)
    return out


def groebner(gens: Sequence[Poly]) -> IdealBasis:
    """Reduced grevlex Groebner basis wrapped with its generators."""
    gens = tuple(gens)
    if not gens:
        raise ValueError("need at least one generator")
    return _groebner_cached(gens, _budget.get())


@lru_cache(maxsize=4096)
def _groebner_cached(gens, _steps):
    return IdealBasis(gens, tuple(buchberger(gens)))


def normal_form(p: Poly, basis: IdealBasis) -> Poly:
    return _reduce(p, list(zip(*zip(*basis._leads), basis.groebner)), grevlex_key)


def ideal_contains(p: Poly, basis: IdealBasis) -> bool:
    """Global membership: normal form of p is zero."""
    return normal_form(p, basis).is_zero()


def is_groebner(polys: Sequence[Poly], key: Callable = grevlex_key) -> bool:
    """Buchberger criterion: every S-polynomial reduces to zero."""
    basis = [(*p.lead(key), p) for p in polys if p]
    for j in range(len(basis)):
        for i in range(j):
            s, _, _ = _spoly(basis[i], basis[j], key)
            if not _reduce(s, basis, key).is_zero():
                return False
    return True


def lift(p: Poly, gens: Sequence[Poly]):
    """Cofactors c with p == sum(c_i * gens_i), or None if p is not in the ideal."""
    gens = tuple(gens)
    gb = buchberger(gens, track=True)
    basis = [(*g.lead(grevlex_key), g) for g, _ in gb]
    track = [v for _, v in gb]
    # reducing from a zero vector accumulates -(p - remainder)
    r, acc = _reduce(p, basis, grevlex_key, [Poly()] * len(gens), track)
    if not r.is_zero():
        return None
    return [-c for c in acc]


def reduce_with_cofactors(p: Poly, gens: Sequence[Poly]):
    """Return (cofactors, remainder) with p == sum(c_i * gens_i) + remainder,
    the remainder being the normal form modulo a Groebner basis of gens."""
    gens = tuple(gens)
    gb = buchberger(gens, track=True)
    basis = [(*g.lead(grevlex_key), g) for g, _ in gb]
    r, acc = _reduce(p, basis, grevlex_key, [Poly()] * len(gens), [v for _, v in gb])
    return [-c for c in acc], r


def ideal_quotient(gens: Sequence[Poly], p: Poly) -> IdealBasis:
    """Basis of (gens) : p."""
    if p.is_zero():
        return groebner([Poly.constant(1)])
    t = Poly.var(0, 4)
    one = Poly.constant(1, 4)
    ext = [t * g.extend() for g in gens] + [(one - t) * p.extend()]
    gb = buchberger(ext, key=elim_key)
    inter = [g.drop() for g in gb if all(e[0] == 0 for e, _ in g.items())]
    quot = []
    for g in inter:
        q = g.exact_div(p)
        assert q is not None, "intersection element not divisible by p"
        quot.append(q)
    if not quot:
        quot = [Poly()]
    return groebner(quot)


TRUNCATION_CAP = 8


@lru_cache(maxsize=None)
def _maximal_power(k: int, nvars: int) -> tuple:
    """Monomial generators of (x, y, z)^k."""
    def rec(n, d):
        if n == 1:
            return [(d,)]
        return [(i,) + rest for i in range(d, -1, -1) for rest in rec(n - 1, d - i)]
    return tuple(Poly.monomial(e) for e in rec(nvars, k))


def local_contains(p: Poly, basis: IdealBasis) -> bool:
    """Membership of p in the ideal extended to the local ring at the origin."""
    return _local_contains(p, basis.generators, _budget.get())


@lru_cache(maxsize=16384)
def _local_contains(p: Poly, gens: tuple, _steps) -> bool:
    if p.is_zero():
        return True
    basis = groebner(gens)
    if basis.is_unit_ideal():
        return True
    if ideal_contains(p, basis):
        return True
    if all(g.constant_term() == 0 for g in gens):
        if p.constant_term() != 0:
            return False
        # I*O_m meets Q[x,y,z] inside I + m^k, so missing that is a cheap
        # certificate of non-membership; a nonmember is caught for large k
        top = min(max(p.degree(), max(g.degree() for g in gens)) + 2, TRUNCATION_CAP)
        for k in range(2, top + 1):
            if not ideal_contains(p, groebner(gens + _maximal_power(k, p.nvars))):
                return False
    quot = ideal_quotient(gens, p)
    return any(q.constant_term() != 0 for q in quot.groebner)


def local_differs(p: Poly, basis: IdealBasis) -> bool:
    """True when local and global membership of p disagree."""
    return local_contains(p, basis) != ideal_contains(p, basis)


__all__ = [
    "IdealBasis", "groebner", "buchberger", "normal_form", "ideal_contains",
    "is_groebner", "lift", "reduce_with_cofactors", "ideal_quotient", "local_contains", "local_differs",
    "gb_budget", "DEFAULT_MAX_STEPS",
]
