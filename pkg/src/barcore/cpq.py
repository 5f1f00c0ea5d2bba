"""Generalised bar-cores: the set C_{p,q}, bad triples, orbit criteria and mu (+) sigma."""
from __future__ import annotations

from collections import Counter
from typing import NamedTuple

from .bars import (
    BarQuotient,
    is_p_bar_core,
    p_bar_core,
    p_bar_weight,
    p_quotient,
    p_set,
    reconstruct,
)
from .coxeter import ActionParams
from .partitions import BarPartition, PreconditionError, bead_contains


class BadTriple(NamedTuple):
    a: int
    b: int
    c: int


def q_weighted_p_quotient(lam: BarPartition, params: ActionParams) -> Counter:
    """Multiset of (Delta_i lam mod q, kind, component i) over i = 0..p-1."""
    p, q = params.p, params.q
    delta = p_set(lam, p)
    quot = p_quotient(lam, p)
    return Counter((delta[i] % q, "bar" if i == 0 else "ordinary", tuple(quot[i]))
                   for i in range(p))


def weighted_quotient_list(lam: BarPartition, params: ActionParams) -> list[tuple[int, tuple]]:
    """The same data in residue order, as printed in worked examples."""
    delta = p_set(lam, params.p)
    quot = p_quotient(lam, params.p)
    return [(delta[i] % params.q, tuple(quot[i])) for i in range(params.p)]


def in_cpq(lam: BarPartition, params: ActionParams) -> bool:
    """True when the p-bar-weight of lam equals that of its q-bar-core."""
    p, q = params.p, params.q
    return p_bar_weight(p_bar_core(lam, q), p) == p_bar_weight(lam, p)


def default_triple_window(lam: BarPartition, params: ActionParams) -> int:
    return lam.largest + params.p * params.q


def _bead_mask(lam: BarPartition, window: int) -> int:
    mask = 0
    for x in range(-window, window + 1):
        if bead_contains(lam, x):
            mask |= 1 << (x + window)
    return mask


def _shift(mask: int, t: int, full: int) -> int:
    """Bit x of the result is bit x+t of ``mask``."""
    return (mask >> t) if t >= 0 else (mask << -t) & full


def find_bad_triple(lam: BarPartition, params: ActionParams,
                    window: int | None = None) -> BadTriple | None:
    """A bad triple with |a|, |b|, |c|, |b+c-a| <= window, or None.

    Writes b = a+u (p | u) and c = a+t (q | t). For each t, ``gap`` marks the
    x with x not a bead and x+t a bead; a candidate a needs a in A, a+t not
    in A and a gap position in its class mod p.
    """
    p, q = params.p, params.q
    if window is None:
        window = default_triple_window(lam, params)
    size = 2 * window + 1
    full = (1 << size) - 1
    beads = _bead_mask(lam, window)
    holes = ~beads & full
    classes = []
    for r in range(p):
        m = 0
        for x in range(-window, window + 1):
            if x % p == r:
                m |= 1 << (x + window)
        classes.append(m)
    for t in range(-2 * window + (2 * window) % q, 2 * window + 1, q):
        if t == 0:
            continue
        gap = holes & _shift(beads, t, full)
        if not gap:
            continue
        starts = beads & _shift(holes, t, full)
        if not starts:
            continue
        allowed = 0
        for r in range(p):
            if gap & classes[r]:
                allowed |= classes[r]
        hit = starts & allowed
        if hit:
            return _extract_triple(hit, gap, classes, t, window, p)
    return None


def _extract_triple(hit: int, gap: int, classes: list[int], t: int, window: int,
                    p: int) -> BadTriple:
    a = (hit & -hit).bit_length() - 1 - window
    cands = gap & classes[a % p]
    b = (cands & -cands).bit_length() - 1 - window
    return BadTriple(a, b, a + t)


def is_bad_triple(lam: BarPartition, params: ActionParams, triple: BadTriple) -> bool:
    a, b, c = triple
    return ((a - b) % params.p == 0 and (a - c) % params.q == 0
            and bead_contains(lam, a) and bead_contains(lam, b + c - a)
            and not bead_contains(lam, b) and not bead_contains(lam, c))


def find_bad_triple_naive(lam: BarPartition, params: ActionParams,
                          window: int | None = None) -> BadTriple | None:
    """Direct triple loop over the window; the reference for ``find_bad_triple``."""
    p, q = params.p, params.q
    if window is None:
        window = default_triple_window(lam, params)
    span = range(-window, window + 1)
    inside = {x for x in span if bead_contains(lam, x)}
    for a in sorted(inside):
        for b in range(-window + (a + window) % p, window + 1, p):
            if b in inside:
                continue
            for c in range(-window + (a + window) % q, window + 1, q):
                if c in inside:
                    continue
                d = b + c - a
                if -window <= d <= window and d in inside:
                    return BadTriple(a, b, c)
    return None


def same_level_q_orbit(lam: BarPartition, mu: BarPartition, params: ActionParams) -> bool:
    return q_weighted_p_quotient(lam, params) == q_weighted_p_quotient(mu, params)


def same_orbit_cores(lam: BarPartition, mu: BarPartition, params: ActionParams) -> bool:
    """Orbit test for two p-bar-cores via their p-sets reduced mod q."""
    p, q = params.p, params.q
    for nu in (lam, mu):
        if not is_p_bar_core(nu, p):
            raise PreconditionError(f"{nu} is not a {p}-bar-core")
    return (sorted(d % q for d in p_set(lam, p)) == sorted(d % q for d in p_set(mu, p)))


def matching_permutation(mu: BarPartition, nu: BarPartition, params: ActionParams) -> list[int]:
    """phi with phi(0) = 0 and Delta_j mu = Delta_phi(j) nu (mod q), first fit."""
    p, q = params.p, params.q
    dm, dn = p_set(mu, p), p_set(nu, p)
    free = list(range(1, p))
    phi = [0]
    for j in range(1, p):
        for k in free:
            if (dm[j] - dn[k]) % q == 0:
                phi.append(k)
                free.remove(k)
                break
        else:
            raise PreconditionError("p-sets do not agree modulo q")
    return phi


def boxplus(mu: BarPartition, sigma: BarPartition, params: ActionParams) -> BarPartition:
    """The unique member of C_{p,q} with p-bar-core mu and q-bar-core sigma."""
    p, q = params.p, params.q
    if not is_p_bar_core(mu, p):
        raise PreconditionError(f"{mu} is not a {p}-bar-core")
    if not is_p_bar_core(sigma, q):
        raise PreconditionError(f"{sigma} is not a {q}-bar-core")
    nu = p_bar_core(mu, q)
    if nu != p_bar_core(sigma, p):
        raise PreconditionError(
            f"mutual cores differ: {q}-bar-core of mu is {nu}, "
            f"{p}-bar-core of sigma is {p_bar_core(sigma, p)}")
    phi = matching_permutation(mu, nu, params)
    squot = p_quotient(sigma, p)
    return reconstruct(mu, BarQuotient(tuple(squot[phi[j]] for j in range(p))), p)
