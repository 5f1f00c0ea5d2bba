"""Yin/Yang partitions and the bijection between the Upsilon-orbit and
(subsets of {1..(p-1)/2}) x (p-bar-cores) x (q-bar-cores)."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .bars import is_p_bar_core, p_bar_core, p_quotient, reconstruct
from .coxeter import ActionParams
from .cpq import boxplus, in_cpq
from .ordinary import double, partition_from_beads
from .partitions import (
    BarPartition,
    PreconditionError,
    bead_contains,
    beads_in_window,
    conjugate,
)


@lru_cache(maxsize=None)
def yin_yang(p: int, q: int) -> BarPartition:
    """All positive ((p-1)/2 - k)q - (l+1)p with k, l >= 0."""
    ActionParams(p, q)
    parts = set()
    for k in range((p - 1) // 2 + 1):
        top = ((p - 1) // 2 - k) * q
        parts.update(range(top - p, 0, -p))
    return BarPartition(sorted(parts, reverse=True))


@dataclass(frozen=True)
class UpsilonTriple:
    X: frozenset
    alpha: BarPartition
    beta: BarPartition

    def __post_init__(self):
        object.__setattr__(self, "X", frozenset(self.X))
        object.__setattr__(self, "alpha", BarPartition(self.alpha))
        object.__setattr__(self, "beta", BarPartition(self.beta))

    def validate(self, params: ActionParams) -> None:
        half = (params.p - 1) // 2
        if not all(isinstance(i, int) and 1 <= i <= half for i in self.X):
            raise PreconditionError(f"X must be a subset of 1..{half}, got {sorted(self.X)}")
        if not is_p_bar_core(self.alpha, params.p):
            raise PreconditionError(f"alpha={self.alpha} is not a {params.p}-bar-core")
        if not is_p_bar_core(self.beta, params.q):
            raise PreconditionError(f"beta={self.beta} is not a {params.q}-bar-core")

    def to_json(self) -> dict:
        return {"X": sorted(self.X), "alpha": list(self.alpha), "beta": list(self.beta)}

    @classmethod
    def from_json(cls, data: dict) -> "UpsilonTriple":
        return cls(frozenset(data["X"]), BarPartition(data["alpha"]), BarPartition(data["beta"]))


def sigma_from_beta(beta: BarPartition, params: ActionParams) -> BarPartition:
    """The q-bar-core with p-bar-core Upsilon_{p,q} whose residue-0 component is beta.

    The other components are D(beta) on the residues i*q (1 <= i <= (p-1)/2)
    and its conjugate on the rest.
    """
    p, q = params.p, params.q
    if not is_p_bar_core(beta, q):
        raise PreconditionError(f"beta={beta} is not a {q}-bar-core")
    d = double(beta)
    dq = conjugate(d)
    upper = {i * q % p for i in range(1, (p - 1) // 2 + 1)}
    comps = [beta] + [d if j in upper else dq for j in range(1, p)]
    return reconstruct(yin_yang(p, q), comps, p)


def _top_beads(alpha: BarPartition, p: int) -> list[int]:
    # the highest bead on each runner; A(alpha) is closed under x -> x - p
    lo = -alpha.largest - p
    beads = beads_in_window(alpha, lo, alpha.largest)
    return sorted(x for x in beads if x + p not in beads)


def mu_candidates(alpha: BarPartition, params: ActionParams) -> list[BarPartition]:
    """Every p-bar-core with q-bar-core Upsilon_{p,q} and residue-0 q-component alpha.

    Such a mu has all other q-quotient components equal to one self-conjugate
    p-core gamma with B^gamma_{(1-p)/2} between A(alpha) - p and A(alpha).
    Since alpha is a p-bar-core that beta-set is A(alpha) - p plus (p+1)/2 of
    the p runner tops of A(alpha), so the choices can be listed directly.
    """
    p, q = params.p, params.q
    if not is_p_bar_core(alpha, p):
        raise PreconditionError(f"alpha={alpha} is not a {p}-bar-core")
    ups = yin_yang(p, q)
    tops = _top_beads(alpha, p)
    floor = min(tops) - p
    shifted = {x - p for x in beads_in_window(alpha, floor - p, alpha.largest)}
    charge = (1 - p) // 2
    out = set()
    for free in combinations(tops, (p + 1) // 2):
        gamma, r = partition_from_beads(shifted | set(free), floor - p)
        if r != charge or conjugate(gamma) != gamma:
            continue
        mu = reconstruct(ups, [alpha] + [gamma] * (q - 1), q)
        if is_p_bar_core(mu, p) and p_bar_core(mu, q) == ups:
            out.add(mu)
    expected = 2 ** ((p - 1) // 2)
    if len(out) != expected:
        raise AssertionError(f"found {len(out)} candidates for alpha={alpha}, expected {expected}")
    return sorted(out, key=lambda m: (m.size, m))


def free_beads(alpha: BarPartition, p: int) -> list[int]:
    """The runner tops of A(alpha) above -p/2, largest first.

    Tops on runners r and -r sum to -p, so exactly one of each pair is
    listed and the runner of 0 (top -p) never is.
    """
    return [x for x in reversed(_top_beads(alpha, p)) if 2 * x > -p]


def test_integers(alpha: BarPartition, params: ActionParams) -> list[int]:
    """a*q + p for each free bead a of A(alpha); membership in A(mu) picks mu."""
    return [a * params.q + params.p for a in free_beads(alpha, params.p)]


def _x_set(lam: BarPartition, alpha: BarPartition, params: ActionParams) -> frozenset:
    return frozenset(i for i, t in enumerate(test_integers(alpha, params), start=1)
                     if bead_contains(lam, t))


def in_upsilon_orbit(lam: BarPartition, params: ActionParams) -> bool:
    p, q = params.p, params.q
    return in_cpq(lam, params) and p_bar_core(p_bar_core(lam, q), p) == yin_yang(p, q)


def phi(lam: BarPartition, params: ActionParams) -> UpsilonTriple:
    """(X, alpha, beta) for lam in the Upsilon orbit.

    X is read off the p-bar-core of lam, the same partition ``psi`` selects
    among the candidates, so the two maps invert each other.
    """
    if not in_upsilon_orbit(lam, params):
        raise PreconditionError(f"{lam} is not in the Upsilon orbit for {params.p},{params.q}")
    alpha = p_quotient(lam, params.q)[0]
    beta = p_quotient(lam, params.p)[0]
    return UpsilonTriple(_x_set(p_bar_core(lam, params.p), alpha, params), alpha, beta)


def psi(t: UpsilonTriple, params: ActionParams) -> BarPartition:
    t.validate(params)
    for mu in mu_candidates(t.alpha, params):
        if _x_set(mu, t.alpha, params) == t.X:
            return boxplus(mu, sigma_from_beta(t.beta, params), params)
    raise PreconditionError(f"no candidate matches X={sorted(t.X)}")
