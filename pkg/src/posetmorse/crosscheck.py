"""
The exhaustive cross-check harness: every interval of a poset up to a size
cap, every Mobius route, and every structural invariant the machinery is
supposed to satisfy.

Per interval it verifies that the closed form, the critical-chain count,
and the brute-force recursion agree (plus the reduced Euler characteristic
when the rank gap is at least two), that the chain listing is poset
lexicographic with consistent labels, that the fast skipped-interval
characterization matches the definition (pattern poset), the descent and
ascent laws, the disjoint-family laws, and that at most one chain, the
lexicographically last one, is ever critical, with the homotopy type
matching the Mobius value.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .chains import StepClass, classify_steps, is_poset_lex
from .closed_form import mobius_factor, mobius_pattern
from .morse import morse_report, msis_fast_pattern
from .posets import MobiusCache, euler_characteristic, mobius_bruteforce


@dataclass(frozen=True)
class IntervalRecord:
    bottom: str
    top: str
    rank_gap: int
    mu_closed: int
    mu_morse: int
    mu_brute: int
    euler: int | None
    chain_count: int
    critical_count: int
    homotopy: str | None
    problems: tuple[str, ...]


@dataclass
class CrosscheckReport:
    poset_tag: str
    max_size: int
    total: int = 0
    mu_histogram: dict[int, int] = field(default_factory=dict)
    mismatches: list[str] = field(default_factory=list)
    records: list[IntervalRecord] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def naive_chain_count(poset, bottom, top, elems: frozenset) -> int:
    """Independent chain count: recursive descent over interval elements."""
    memo: dict = {}

    def f(e):
        if e == bottom:
            return 1
        if e in memo:
            return memo[e]
        total = 0
        if poset.rank(e) > poset.rank(bottom):
            for child, _pos in poset.down_covers(e):
                if child in elems:
                    total += f(child)
        memo[e] = total
        return total

    return f(top)


def check_interval(poset, bottom, top, cache: MobiusCache | None = None) -> IntervalRecord:
    """Run every route and invariant suite on one interval."""
    from .posets import interval_elements

    problems: list[str] = []
    gap = poset.rank(top) - poset.rank(bottom)
    report = morse_report(poset, bottom, top)
    mu_morse = report.mobius
    mu_brute = mobius_bruteforce(poset, bottom, top, cache)
    if poset.kind == "pattern":
        mu_closed = mobius_pattern(bottom, top)
    else:
        mu_closed = mobius_factor(bottom, top)
    euler = euler_characteristic(poset, bottom, top) if gap >= 2 else None

    if mu_closed not in (-1, 0, 1):
        problems.append(f"mu-range: closed form returned {mu_closed}")
    if not (mu_closed == mu_morse == mu_brute):
        problems.append(
            f"mu-disagreement: closed={mu_closed} morse={mu_morse} brute={mu_brute}")
    if euler is not None and euler != mu_brute:
        problems.append(f"mu-euler: euler={euler} brute={mu_brute}")

    chains = [d.chain for d in report.chains]
    ids = [c.labels for c in chains]
    if len(set(ids)) != len(ids):
        problems.append("chains: duplicate label sequences")
    if ids != sorted(ids):
        problems.append("chains: not sorted by label sequence")
    elems = interval_elements(poset, bottom, top)
    expect = naive_chain_count(poset, bottom, top, elems)
    if len(chains) != expect:
        problems.append(f"chains: found {len(chains)}, naive descent gives {expect}")
    if not is_poset_lex(chains):
        problems.append("poset-lex: chain order violates the divergence property")

    top_len = poset.rank(top)
    for d in report.chains:
        chain = d.chain
        lo, hi = chain.windows[-1]
        expected_labels = set(range(1, top_len + 1)) - set(range(lo + 1, hi + 1))
        if set(chain.labels) != expected_labels:
            problems.append(f"labels: chain {chain.labels} does not match its window")
        classes = classify_steps(chain)
        covered = {k for a, b in d.msis for k in range(a, b + 1)}
        for idx, cls in enumerate(classes, start=1):
            if cls is StepClass.STRONG_DESCENT and (idx, idx) not in d.msis:
                problems.append(
                    f"descent-law: strong descent at {idx} of {chain.labels} "
                    "is not a singleton interval")
            if cls is StepClass.ASCENT and idx in covered:
                problems.append(
                    f"ascent-law: ascent at {idx} of {chain.labels} "
                    "lies in a minimal skipped interval")
        if poset.kind == "pattern":
            fast = msis_fast_pattern(chain)
            if fast != list(d.msis):
                problems.append(
                    f"msi-fast: {fast} != {list(d.msis)} on chain {chain.labels}")
        seen: set[int] = set()
        for a, b in d.family:
            pts = set(range(a, b + 1))
            if pts & seen:
                problems.append(f"family: overlapping members on chain {chain.labels}")
            seen |= pts
            if not any(p <= a and b <= q for p, q in d.msis):
                problems.append(
                    f"family: member ({a},{b}) of chain {chain.labels} lies in "
                    "no minimal interval")

    if report.critical_count > 1:
        problems.append(f"critical: {report.critical_count} critical chains")
    if report.critical_count == 1 and not report.chains[-1].critical:
        problems.append("critical: the critical chain is not the lexicographically last")
    last = report.chains[-1]
    if last.chain.steps >= 2:
        ls = last.chain.labels
        if all(ls[k] > ls[k + 1] for k in range(len(ls) - 1)):
            classes = classify_steps(last.chain)
            if any(c is not StepClass.WEAK_DESCENT for c in classes[:-1]):
                problems.append(
                    "descent-structure: a strictly decreasing id has a strong "
                    "descent before its final step")
    if gap >= 2:
        h = report.homotopy
        if report.critical_count == 0 and (mu_brute != 0 or h.kind != "contractible"):
            problems.append(f"homotopy: no critical chains but mu={mu_brute}, type={h}")
        if report.critical_count == 1:
            d0 = next(d for d in report.chains if d.critical)
            want = -1 if d0.dim % 2 else 1
            if h.kind != "sphere" or mu_brute != want:
                problems.append(f"homotopy: one critical chain of dim {d0.dim} "
                                f"but mu={mu_brute}, type={h}")

    return IntervalRecord(
        bottom=poset.format(bottom),
        top=poset.format(top),
        rank_gap=gap,
        mu_closed=mu_closed,
        mu_morse=mu_morse,
        mu_brute=mu_brute,
        euler=euler,
        chain_count=len(chains),
        critical_count=report.critical_count,
        homotopy=str(report.homotopy) if report.homotopy is not None else None,
        problems=tuple(problems),
    )


def _interval_records(poset, tops, cache: MobiusCache | None) -> list[IntervalRecord]:
    records = []
    for top in tops:
        bottoms = sorted(poset.down_set(top),
                         key=lambda e: (poset.rank(e), poset.format(e)))
        for bottom in bottoms:
            records.append(check_interval(poset, bottom, top, cache))
    return records


def _worker(args) -> list[IntervalRecord]:
    poset, tops = args
    return _interval_records(poset, tops, MobiusCache())


def run_crosscheck(poset, max_size: int, cache: MobiusCache | None = None,
                   jobs: int | None = 1,
                   keep_records: bool = True) -> CrosscheckReport:
    """
    Check every interval [bottom, top] with rank(top) <= max_size.  The
    unit of parallel work is all intervals under one top.
    """
    tops = [
        e for d in range(poset.min_rank, max_size + 1)
        for e in poset.elements_of_rank(d)
    ]
    if jobs is None:
        jobs = os.cpu_count() or 1
    if jobs > 1 and len(tops) > 1:
        chunks = [tops[i::jobs] for i in range(jobs)]
        chunks = [c for c in chunks if c]
        with ProcessPoolExecutor(max_workers=len(chunks)) as pool:
            parts = list(pool.map(_worker, [(poset, chunk) for chunk in chunks]))
        records = [r for part in parts for r in part]
        records.sort(key=lambda r: (len(r.top), r.top, len(r.bottom), r.bottom))
    else:
        own_cache = cache if cache is not None else MobiusCache()
        records = _interval_records(poset, tops, own_cache)

    report = CrosscheckReport(poset_tag=poset.tag, max_size=max_size)
    report.total = len(records)
    for rec in records:
        report.mu_histogram[rec.mu_brute] = report.mu_histogram.get(rec.mu_brute, 0) + 1
        for problem in rec.problems:
            report.mismatches.append(f"[{rec.bottom}, {rec.top}] {problem}")
    if keep_records:
        report.records = records
    return report


def crosscheck_json(report: CrosscheckReport, include_records: bool = True) -> dict:
    out = {
        "poset": report.poset_tag,
        "max_size": report.max_size,
        "intervals": report.total,
        "mu_histogram": {str(k): v for k, v in sorted(report.mu_histogram.items())},
        "mismatches": list(report.mismatches),
    }
    if include_records:
        out["records"] = [
            {
                "bottom": r.bottom,
                "top": r.top,
                "rank_gap": r.rank_gap,
                "mu": r.mu_brute,
                "euler": r.euler,
                "chain_count": r.chain_count,
                "critical_count": r.critical_count,
                "homotopy": r.homotopy,
                "problems": list(r.problems),
            }
            for r in report.records
        ]
    return out


def crosscheck_text(report: CrosscheckReport) -> str:
    lines = [
        f"crosscheck {report.poset_tag} up to size {report.max_size}",
        f"intervals checked: {report.total}",
        "mobius histogram: " + ", ".join(
            f"{k}: {v}" for k, v in sorted(report.mu_histogram.items())),
        f"mismatches: {len(report.mismatches)}",
    ]
    lines.extend(f"  {m}" for m in report.mismatches[:50])
    if len(report.mismatches) > 50:
        lines.append(f"  ... and {len(report.mismatches) - 50} more")
    return "\n".join(lines) + "\n"
