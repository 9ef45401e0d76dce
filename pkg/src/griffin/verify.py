"""End-to-end verification pipelines tying the construction to the oracle."""

from __future__ import annotations

import multiprocessing as mp
import os
import time
import traceback
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .construct import build_G, build_G_s, check_element
from .diagrams import build_D_direct
from .groebner import (
    groebner,
    is_groebner,
    minimal_generators,
    reduce_basis,
    standard_monomials,
)
from .ideals import certify, generators
from .partitions import INF, ShapeError, enumerate_C, in_C, partition, partitions_of, size
from .poly import Polynomial, pure_power

SCHEMA = 1
DEFAULT_TIMEOUT = 60.0


def max_n() -> int:
    return int(os.environ.get("GRIFFIN_MAX_N", "7"))


def format_s(s) -> str:
    return "inf" if s == INF else str(s)


def parse_s(text):
    if text is None or str(text).lower() in ("inf", "infinity", "oo"):
        return INF
    try:
        return int(text)
    except ValueError as err:
        raise ShapeError(f"cannot parse s={text!r}; use an integer or 'inf'") from err


@dataclass
class Check:
    name: str
    passed: bool | None  # None means skipped
    detail: object = None
    ms: float = 0.0

    def to_json(self) -> dict:
        status = "skip" if self.passed is None else ("pass" if self.passed else "fail")
        return {"name": self.name, "status": status, "detail": self.detail}


@dataclass
class VerificationReport:
    params: dict
    checks: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed is not False for c in self.checks)

    @property
    def failed(self) -> list:
        return [c for c in self.checks if c.passed is False]

    def timings(self) -> dict:
        return {c.name: round(c.ms, 3) for c in self.checks}

    def to_json(self, timings: bool = True) -> dict:
        out = {
            "schema": SCHEMA,
            "params": self.params,
            "passed": self.passed,
            "checks": [c.to_json() for c in self.checks],
        }
        if timings:
            out["timings_ms"] = self.timings()
        return out

    def summary(self) -> str:
        lines = []
        for c in self.checks:
            status = "SKIP" if c.passed is None else ("PASS" if c.passed else "FAIL")
            line = f"[{status}] {c.name} ({c.ms:.1f} ms)"
            if c.passed is not True and c.detail is not None:
                line += f": {c.detail}"
            lines.append(line)
        lines.append("ALL PASS" if self.passed else f"{len(self.failed)} check(s) failed")
        return "\n".join(lines)


class _Runner:
    def __init__(self, report: VerificationReport):
        self.report = report

    def run(self, name, fn):
        t0 = time.perf_counter()
        try:
            passed, detail = fn()
        except Exception as err:  # a crash inside a check is a failed check
            passed, detail = False, f"{type(err).__name__}: {err}"
        self.report.checks.append(Check(name, passed, detail, (time.perf_counter() - t0) * 1e3))
        return passed


def default_degree_bound(n: int, lam) -> int:
    """max(n + |lam|, 1 + max |alpha| over D_{n, lam}).

    The minimal generators of the initial ideal lie among the x^alpha with
    alpha in D, so the second term always clears them; n + |lam| alone does
    not (e.g. n = 4, lam = (1, 1) has a minimal generator of degree 6).
    """
    lam = partition(lam)
    top = max((sum(a) for a in build_D_direct(n, lam)), default=0)
    return max(n + size(lam), top + 1)


def _mono_str(exp) -> str:
    return str(Polynomial.monomial(exp))


def verify(n: int, lam, s=INF, degree_bound: int | None = None) -> VerificationReport:
    """Run the six checks for G_{n, lam, s}.

    Checks 3-6 go through the oracle (``groebner``) and the combinatorial
    enumerations only; they never look inside the construction.
    """
    lam = partition(lam)
    if n < 1 or not 1 <= size(lam) <= n + 1:
        raise ShapeError(f"need n >= 1 and 1 <= |lambda| <= n + 1, got n={n}, lambda={lam}")
    if s != INF and (not isinstance(s, int) or s < len(lam)):
        raise ShapeError(f"s must be an integer >= l(lambda) = {len(lam)} or inf, got {s}")
    bound = default_degree_bound(n, lam) if degree_bound is None else degree_bound
    report = VerificationReport({"n": n, "lambda": list(lam), "s": format_s(s)})
    if s == INF:
        report.params["degree_bound"] = bound
    run = _Runner(report).run
    state: dict = {}

    def construct():
        elements = build_G(n, lam)
        state["elements"] = elements
        state["G"] = build_G_s(n, lam, s)
        bad = {}
        for el in elements:
            problems = [p for p in check_element(el, n, lam) if "certificate" not in p]
            if problems:
                bad[_mono_str(el.target)] = problems
        return not bad, bad or {"elements": len(elements), "with_powers": len(state["G"])}

    def certificates():
        bad = [list(el.target) for el in state["elements"] if not certify(el.poly, n, lam)]
        return not bad, bad or f"{len(state['elements'])} certificates re-expand"

    def groebner_criterion():
        return is_groebner(state["G"], "grevlex"), None

    def leading_monomials():
        got = {g.leading_monomial("grevlex") for g in state["G"]}
        want = set(build_D_direct(n, lam))
        if s != INF:
            want |= {pure_power(i, s, n).leading_monomial() for i in range(1, n + 1)}
        if got == want:
            return True, f"{len(want)} leading monomials"
        return False, {
            "missing": [list(a) for a in sorted(want - got)],
            "extra": [list(a) for a in sorted(got - want)],
        }

    def standard():
        G = state["G"]
        if s != INF:
            got = standard_monomials(G, None, "grevlex", n)
            want = enumerate_C(n, lam, s)
        else:
            got = standard_monomials(G, bound, "grevlex", n)
            want = {a for a in standard_monomials([], bound, "grevlex", n) if in_C(a, n, lam, INF)}
        if got == want:
            return True, f"{len(want)} standard monomials"
        return False, {
            "missing": [list(a) for a in sorted(want - got)][:20],
            "extra": [list(a) for a in sorted(got - want)][:20],
        }

    def independent():
        oracle = groebner(generators(n, lam, s), "grevlex")
        mine = reduce_basis(state["G"], "grevlex")
        state["reduced"] = oracle
        if s == INF:
            gens_deg = max((sum(m) for m in minimal_generators(oracle.leading_monomials())), default=0)
            if gens_deg >= bound:
                return False, f"minimal generator of degree {gens_deg} reaches bound {bound}"
        if set(oracle.elements) == set(mine.elements):
            return True, f"reduced basis with {len(oracle)} elements"
        return False, {
            "oracle": [str(g) for g in oracle.elements],
            "construction": [str(g) for g in mine.elements],
        }

    run("construct", construct)
    if "G" not in state:
        return report
    run("certify", certificates)
    run("groebner-criterion", groebner_criterion)
    run("leading-monomials", leading_monomials)
    run("standard-monomials", standard)
    run("reduced-basis-match", independent)
    return report


# -- conjecture sweep -------------------------------------------------------


@dataclass
class SweepSpec:
    n_max: int = 4
    s_max: int = 4
    orders: tuple = ("grevlex", "lex")
    include_inf: bool = True
    include_degenerate: bool = True
    timeout: float | None = DEFAULT_TIMEOUT
    jobs: int = 1

    def __post_init__(self):
        cap = max_n()
        if self.n_max > cap:
            raise ShapeError(f"n_max={self.n_max} exceeds GRIFFIN_MAX_N={cap}")
        if len(self.orders) < 2:
            raise ShapeError("the conjecture compares at least two orders")


def sweep_cells(spec: SweepSpec) -> list:
    cells = []
    for n in range(1, spec.n_max + 1):
        top = n + 1 if spec.include_degenerate else n
        for k in range(1, top + 1):
            for lam in partitions_of(k):
                svals = list(range(len(lam), spec.s_max + 1))
                if spec.include_inf:
                    svals.append(INF)
                cells.extend((n, lam, s) for s in svals)
    return cells


def conjecture_cell(n: int, lam, s, orders=("grevlex", "lex")):
    """Reduced bases of I_{n, lam, s} under each order, as sorted strings."""
    gens = generators(n, lam, s)
    bases = {o: groebner(gens, o) for o in orders}
    first = set(bases[orders[0]].elements)
    agree = all(set(b.elements) == first for b in bases.values())
    detail = None
    if not agree:
        detail = {o: sorted(str(g) for g in b.elements) for o, b in bases.items()}
    return agree, detail, len(first)


def _child(conn, fn, args):
    try:
        conn.send(("ok", fn(*args)))
    except Exception:
        conn.send(("error", traceback.format_exc(limit=3)))
    finally:
        conn.close()


def run_with_timeout(fn, args, timeout):
    """Run fn(*args) in a forked process; returns ("ok", value), ("error", msg) or ("timeout", None)."""
    if timeout is None:
        try:
            return "ok", fn(*args)
        except Exception:
            return "error", traceback.format_exc(limit=3)
    ctx = mp.get_context("fork")
    parent, child = ctx.Pipe(duplex=False)
    proc = ctx.Process(target=_child, args=(child, fn, args))
    proc.start()
    child.close()
    if parent.poll(timeout):
        status, value = parent.recv()
        proc.join()
        return status, value
    proc.terminate()
    proc.join()
    return "timeout", None


def conjecture_sweep(spec: SweepSpec) -> VerificationReport:
    """Compare reduced bases across orders on every cell; timeouts are skips, never passes."""
    cells = sweep_cells(spec)
    report = VerificationReport(
        {
            "n_max": spec.n_max,
            "s_max": spec.s_max,
            "orders": list(spec.orders),
            "cells": len(cells),
        }
    )

    def one(cell):
        n, lam, s = cell
        name = f"n={n} lambda={','.join(map(str, lam))} s={format_s(s)}"
        t0 = time.perf_counter()
        status, value = run_with_timeout(conjecture_cell, (n, lam, s, spec.orders), spec.timeout)
        ms = (time.perf_counter() - t0) * 1e3
        if status == "timeout":
            return Check(name, None, f"timed out after {spec.timeout} s", ms)
        if status == "error":
            return Check(name, False, value, ms)
        agree, detail, size_ = value
        return Check(name, agree, detail if not agree else f"{size_} elements", ms)

    if spec.jobs > 1:
        with ThreadPoolExecutor(spec.jobs) as pool:
            checks = list(pool.map(one, cells))
    else:
        checks = [one(c) for c in cells]
    # pool.map keeps cell order, so the report is canonical whatever finishes first
    report.checks = checks
    return report

