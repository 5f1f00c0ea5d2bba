"""Exhaustive property checks over all bar partitions up to a given size."""
from __future__ import annotations

from collections import defaultdict
from typing import Callable

from .bars import (
    p_bar_core,
    p_bar_weight,
    p_quotient,
    p_quotient_by_gaps,
    reconstruct,
    remove_p_bar,
    removable_p_bars,
    weight_pairs,
)
from .coxeter import ActionParams
from .cpq import boxplus, find_bad_triple, in_cpq
from .partitions import BarPartition, ParameterError, bar_partitions_up_to

MAX_FAILURES = 10


def core_by_removal(lam: BarPartition, p: int) -> BarPartition:
    """Strip p-bars in whatever order they turn up until none remain."""
    while True:
        moves = removable_p_bars(lam, p)
        if not moves:
            return lam
        lam = remove_p_bar(lam, p, moves[0])


def _weight_inequality(lam, params):
    lo = p_bar_weight(p_bar_core(lam, params.q), params.p)
    hi = p_bar_weight(lam, params.p)
    if lo > hi:
        return f"weight of q-core {lo} exceeds weight {hi}"


def _bad_triple_equivalence(lam, params):
    member = in_cpq(lam, params)
    triple = find_bad_triple(lam, params)
    if member != (triple is None):
        return f"in_cpq={member} but bad triple {triple}"


def _symmetry(lam, params):
    if in_cpq(lam, params) != in_cpq(lam, params.swapped()):
        return "membership changes when p and q are swapped"


def _members_are_pq_cores(lam, params):
    if not in_cpq(lam, params):
        return None
    p, q = params.p, params.q
    if p_bar_weight(lam, p * q) != 0:
        return f"member is not a {p * q}-bar-core"
    a, b = p_bar_core(p_bar_core(lam, q), p), p_bar_core(p_bar_core(lam, p), q)
    if a != b:
        return f"cores do not commute: {a} vs {b}"


def _core_matches_removal(lam, params):
    for m in (params.p, params.q):
        if p_bar_core(lam, m) != core_by_removal(lam, m):
            return f"{m}-bar-core differs from bar removal"
        if len(weight_pairs(lam, m)) != 2 * p_bar_weight(lam, m):
            return f"weight pairs disagree with {m}-bar-weight"


def _quotient_roundtrip(lam, params):
    for m in (params.p, params.q):
        quot = p_quotient(lam, m)
        if quot != p_quotient_by_gaps(lam, m):
            return f"{m}-quotient routes disagree"
        if quot.weight != p_bar_weight(lam, m):
            return f"{m}-quotient weight {quot.weight} is not the {m}-bar-weight"
        if reconstruct(p_bar_core(lam, m), quot, m) != lam:
            return f"{m}-core and quotient do not rebuild lambda"


PER_PARTITION: dict[str, Callable] = {
    "weight-inequality": _weight_inequality,
    "bad-triple-equivalence": _bad_triple_equivalence,
    "symmetry": _symmetry,
    "members-are-pq-cores": _members_are_pq_cores,
    "core-matches-removal": _core_matches_removal,
    "quotient-roundtrip": _quotient_roundtrip,
}


def _cores_table(corpus, params):
    table = defaultdict(list)
    for lam in corpus:
        table[(p_bar_core(lam, params.p), p_bar_core(lam, params.q))].append(lam)
    return table


def _size_uniqueness(corpus, params):
    by_size = defaultdict(lambda: defaultdict(int))
    for lam in corpus:
        key = (p_bar_core(lam, params.p), p_bar_core(lam, params.q))
        by_size[lam.size][key] += 1
    for lam in corpus:
        key = (p_bar_core(lam, params.p), p_bar_core(lam, params.q))
        alone = by_size[lam.size][key] == 1
        if in_cpq(lam, params) != alone:
            yield lam, f"in_cpq={in_cpq(lam, params)} but unique among size {lam.size}: {alone}"


def _boxplus_minimal(corpus, params):
    p, q = params.p, params.q
    for (mu, sigma), group in sorted(_cores_table(corpus, params).items()):
        if p_bar_core(mu, q) != p_bar_core(sigma, p):
            continue  # no member of C_{p,q} has this pair of cores
        lam = boxplus(mu, sigma, params)
        if lam.size != mu.size + sigma.size - p_bar_core(sigma, p).size:
            yield group[0], f"size law fails for {lam}"
        if p_bar_core(lam, p) != mu or core_by_removal(lam, q) != sigma:
            yield group[0], f"{lam} does not have cores {mu}, {sigma}"
        if not in_cpq(lam, params):
            yield group[0], f"{lam} is not a member"
        for nu in group:
            if nu.size < lam.size or (nu.size == lam.size and nu != lam):
                yield nu, f"shares cores with {lam} but is not larger"


CORPUS_LEVEL: dict[str, Callable] = {
    "size-uniqueness": _size_uniqueness,
    "boxplus-minimal": _boxplus_minimal,
}

CHECKS = tuple(PER_PARTITION) + tuple(CORPUS_LEVEL)


def verify_corpus(params: ActionParams, max_n: int, checks=None) -> list[dict]:
    """Run the selected checks over every bar partition of size <= max_n.

    Returns one report per check: {property, corpus_size, failure_count,
    failures: [{lambda, detail}, ...]} with at most MAX_FAILURES entries.
    """
    if max_n < 0:
        raise ParameterError("max_n must be non-negative")
    checks = list(CHECKS if checks is None else checks)
    unknown = [c for c in checks if c not in CHECKS]
    if unknown:
        raise ParameterError(f"unknown checks {unknown}; choose from {list(CHECKS)}")
    corpus = list(bar_partitions_up_to(max_n))
    reports = []
    for name in checks:
        if name in PER_PARTITION:
            fn = PER_PARTITION[name]
            found = ((lam, fn(lam, params)) for lam in corpus)
            found = ((lam, d) for lam, d in found if d)
        else:
            found = CORPUS_LEVEL[name](corpus, params)
        failures = []
        count = 0
        for lam, detail in found:
            count += 1
            if len(failures) < MAX_FAILURES:
                failures.append({"lambda": list(lam), "detail": detail})
        reports.append({"property": name, "p": params.p, "q": params.q,
                        "corpus_size": len(corpus), "failure_count": count,
                        "failures": failures})
    return reports


def all_passed(reports: list[dict]) -> bool:
    return all(r["failure_count"] == 0 for r in reports)

