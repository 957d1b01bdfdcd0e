"""Exhaustive re-verification of every claim about the two families.

``PaperSuite`` runs ten numbered criteria and returns one
``CriterionResult`` each.  Details are plain JSON-able data with a fixed
key order so that two runs serialize byte-identically; timings are kept
apart from the details for that reason.
"""

from dataclasses import dataclass, field as dc_field
import json
import time

import numpy as np

from .analysis import collision, completeness_level, completeness_level_of_table, cycle_type
from .families import FamilyParams, build, closed_table, family_m, parse_descriptor
from .gf import make_field
from .groups import verify_additive_group, verify_multiplicative_group, verify_relationship, verify_star_lemma
from .poly import SparsePoly, linear_mix, mix_table, value_table

PRIMES = (3, 5, 7, 11)
SWEEP_MAX_Q = 2401
MAX_FAILURES_SHOWN = 5

# The four worked polynomials and the levels claimed for them.
FIXTURES = (
    ("plus:p=5,s=1,n=2,c=2", "20:2,16:2,12:2,8:2,4:2,1:1", 3),
    ("star:p=5,s=1,n=2,c=4", "21:4,17:4,13:4,9:4,5:4,1:1", 3),
    ("plus:p=7,s=1,n=2,c=4", "42:4,36:4,30:4,24:4,18:4,12:4,6:4,1:1", 5),
    ("star:p=7,s=1,n=2,c=6", "43:6,37:6,31:6,25:6,19:6,13:6,7:6,1:1", 5),
)
MAXIMAL_FIELDS = ((3, 2, 2), (5, 2, 2))  # (p, s, n): GF(3^4) over GF(9), GF(5^4) over GF(25)
STAR_LEMMA_QS = (3, 5, 7, 9, 25, 27, 49)
LINEAR_FIELDS = ((3, 2), (5, 2), (3, 3))
TIME_LIMITS = {1: 0.001, 2: 0.05, 3: 60.0, 4: 120.0, 8: 30.0}


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: dict = dc_field(default_factory=dict)
    seconds: float = 0.0
    time_limit: float = None

    def to_dict(self, timings=False):
        out = {"criterion": self.number, "name": self.name, "passed": self.passed, "detail": self.detail}
        if timings:
            out["seconds"] = round(self.seconds, 6)
            out["time_limit"] = self.time_limit
        return out


def sweep_triples(max_q=SWEEP_MAX_Q, primes=PRIMES):
    """All ``(p, s, n)`` with ``n >= 2`` and ``p^(s n) <= max_q``, ascending."""
    out = []
    for p in primes:
        total = 2
        while p ** total <= max_q:
            for s in range(1, total):
                if total % s == 0:
                    out.append((p, s, total // s))
            total += 1
    return out


def _collect(failures, item):
    if len(failures) < MAX_FAILURES_SHOWN:
        failures.append(item)


class PaperSuite:
    """Holds the sweep bounds, modulus overrides and a value-table cache."""

    def __init__(self, max_q=None, moduli=None):
        self.max_q = SWEEP_MAX_Q if max_q is None else min(max_q, SWEEP_MAX_Q)
        self.moduli = dict(moduli or {})
        for (p, m), irr in self.moduli.items():
            make_field(p, m, irr)  # fail fast on a bad override
        self._tables = {}

    # -- helpers -------------------------------------------------------------

    def params(self, flavor, p, s, n, c=0, b=1):
        return FamilyParams(flavor, p, s, n, c, b, irr=self.moduli.get((p, s * n)))

    def field(self, p, m):
        return make_field(p, m, self.moduli.get((p, m)))

    def table(self, params):
        key = params
        if key not in self._tables:
            t = value_table(build(params))
            t.setflags(write=False)
            self._tables[key] = t
        return self._tables[key]

    def triples(self):
        return sweep_triples(self.max_q)

    def members(self, p, s, n, star_excludes_one=True):
        """Every ``(params)`` of both flavors over one field, ``c`` over the base subfield."""
        f = self.field(p, s * n)
        base = f.subfield(s)
        for flavor in ("plus", "star"):
            for c in base:
                if flavor == "star" and c == 1 and star_excludes_one:
                    continue
                yield self.params(flavor, p, s, n, c)

    # -- criteria ------------------------------------------------------------

    def criterion_1(self):
        rows, ok, worst = [], True, 0.0
        for desc, expected, _ in FIXTURES:
            params = parse_descriptor(desc, irr=self.moduli.get(_pm(desc)))
            build(params)  # warm the field cache
            best = min(_timed(build, params)[1] for _ in range(3))
            got = build(params).to_text()
            worst = max(worst, best)
            match = got == expected
            ok &= match and best < TIME_LIMITS[1]
            rows.append({"descriptor": desc, "expected": expected, "got": got, "match": match})
        return CriterionResult(1, "fixture coefficients", ok, {"fixtures": rows}, worst, TIME_LIMITS[1])

    def criterion_2(self):
        rows, ok = [], True
        for desc, _, claimed in FIXTURES:
            self.field(*_pm(desc))
        t0 = time.perf_counter()
        for desc, _, claimed in FIXTURES:
            params = parse_descriptor(desc, irr=self.moduli.get(_pm(desc)))
            rep = completeness_level(build(params))
            rows.append(
                {"descriptor": desc, "claimed": claimed, "level": rep.level, "failure": _failure(rep)}
            )
            ok &= rep.level == claimed
        dt = time.perf_counter() - t0
        ok &= dt < TIME_LIMITS[2]
        return CriterionResult(2, "fixture completeness levels", ok, {"fixtures": rows}, dt, TIME_LIMITS[2])

    def criterion_3(self):
        t0 = time.perf_counter()
        checked, bad, failures = 0, 0, []
        for p, s, n in self.triples():
            for params in self.members(p, s, n):
                rep = completeness_level_of_table(params.field, self.table(params))
                checked += 1
                if not (rep.is_permutation and rep.level == p - 2):
                    bad += 1
                    _collect(failures, {"member": str(params), "level": rep.level, "failure": _failure(rep)})
        dt = time.perf_counter() - t0
        detail = {"fields": len(self.triples()), "members": checked, "violations": bad, "examples": failures}
        return CriterionResult(3, "level p-2 across the sweep", bad == 0 and dt < TIME_LIMITS[3], detail, dt, TIME_LIMITS[3])

    def criterion_4(self):
        t0 = time.perf_counter()
        checked, bad, failures, fields = 0, 0, [], []
        for p, s, n in MAXIMAL_FIELDS:
            if p ** (s * n) > max(self.max_q, 81):
                continue
            f = self.field(p, s * n)
            fields.append(f"GF({p}^{s * n}) over GF({p}^{s})")
            middle = [b for b in f.subfield(s) if not f.in_subfield(b, 1)]
            for b in middle:
                for flavor in ("plus", "star"):
                    for c in f.subfield(s):
                        if flavor == "star" and c == 1:
                            continue
                        params = self.params(flavor, p, s, n, c, b)
                        poly = build(params)
                        rep = completeness_level(poly)
                        nonlinear = c == 0 or poly.degree > 1
                        checked += 1
                        if rep.level != p - 1 or not nonlinear:
                            bad += 1
                            _collect(
                                failures,
                                {"member": str(params), "level": rep.level, "degree": poly.degree, "failure": _failure(rep)},
                            )
        dt = time.perf_counter() - t0
        detail = {"fields": fields, "members": checked, "violations": bad, "examples": failures}
        return CriterionResult(4, "maximal completeness with middle-subfield scale", bad == 0 and dt < TIME_LIMITS[4], detail, dt, TIME_LIMITS[4])

    def criterion_5(self):
        t0 = time.perf_counter()
        checked, bad, failures, fields = 0, 0, [], []
        for p, s, n in self.triples():
            if s != 1 or not _is_prime_degree(n):
                continue
            fields.append(f"GF({p}^{n})")
            f = self.field(p, n)
            for params in self.members(p, s, n):
                table = self.table(params)
                rep = completeness_level_of_table(f, table)
                checked += 1
                if rep.level != p - 2:
                    bad += 1
                    _collect(failures, {"member": str(params), "level": rep.level, "failure": _failure(rep)})
                if params.flavor == "plus":
                    w = collision(mix_table(f, table, 1, p - 1))
                    if w is None or not all(f.in_subfield(i, 1) for i in w):
                        bad += 1
                        _collect(failures, {"member": str(params), "k": p - 1, "witness": list(w) if w else None})
        dt = time.perf_counter() - t0
        detail = {"fields": fields, "members": checked, "violations": bad, "examples": failures}
        return CriterionResult(5, "level p-2 without middle subfields", bad == 0, detail, dt)

    def criterion_6(self):
        t0 = time.perf_counter()
        checked, bad, failures = 0, 0, []
        for p, s, n in self.triples():
            f = self.field(p, s * n)
            for params in self.members(p, s, n, star_excludes_one=False):
                checked += 1
                i = _mismatch(self.table(params), closed_table(params))
                if i is not None:
                    bad += 1
                    _collect(failures, {"member": str(params), "element": i})
            q = p ** s
            geo = value_table(SparsePoly(f, {j * (q - 1): 1 for j in range(1, family_m(q, n) + 1)}))
            xs = np.arange(f.order)
            inside = np.zeros(f.order, dtype=bool)
            inside[f.subfield(s)] = True
            expected = np.where(inside, 0, f.neg(1))
            i = _mismatch(geo[xs > 0], expected[xs > 0])
            if i is not None:
                bad += 1
                _collect(failures, {"geometric_sum": f"GF({p}^{s * n}) over GF({p}^{s})", "element": i + 1})
        dt = time.perf_counter() - t0
        detail = {"members": checked, "violations": bad, "examples": failures}
        return CriterionResult(6, "closed forms and geometric sum", bad == 0, detail, dt)

    def criterion_7(self):
        t0 = time.perf_counter()
        checked, bad, failures = 0, 0, []
        for p, s, n in self.triples():
            f = self.field(p, s * n)
            q, big = p ** s, f.order
            for params in self.members(p, s, n):
                c = params.c
                if c == 0:
                    continue
                ct = cycle_type(self.table(params))
                if params.flavor == "plus":
                    want, order = {1: q, p: (big - q) // p}, p
                else:
                    d = f.multiplicative_order(f.sub(1, c))
                    want, order = {1: q, d: (big - q) // d}, d
                checked += 1
                if ct.counts != want or ct.order != order:
                    bad += 1
                    _collect(failures, {"member": str(params), "cycle_type": ct.as_pairs(), "expected": sorted(want.items())})
        dt = time.perf_counter() - t0
        detail = {"members": checked, "violations": bad, "examples": failures}
        return CriterionResult(7, "cycle structure", bad == 0, detail, dt)

    def criterion_8(self):
        t0 = time.perf_counter()
        rows, ok = [], True
        for p, s, n in self.triples():
            f = self.field(p, s * n)
            add = verify_additive_group(f, s)
            mul = verify_multiplicative_group(f, s)
            rel = verify_relationship(f, s)
            good = add.law_holds and add.iso_verified and mul.law_holds and mul.iso_verified and rel
            ok &= good
            if not good:
                rows.append({"additive": add.to_dict(), "multiplicative": mul.to_dict(), "relationship": rel})
        lemma = {}
        for q in STAR_LEMMA_QS:
            if q <= max(self.max_q, 49):
                lemma[str(q)] = verify_star_lemma(q)
                ok &= lemma[str(q)]
        dt = time.perf_counter() - t0
        ok &= dt < TIME_LIMITS[8]
        detail = {"fields": len(self.triples()), "failures": rows, "star_lemma": lemma}
        return CriterionResult(8, "composition groups and relationship", ok, detail, dt, TIME_LIMITS[8])

    def criterion_9(self):
        t0 = time.perf_counter()
        checked, bad, failures = 0, 0, []
        for p, m in LINEAR_FIELDS:
            f = self.field(p, m)
            x = SparsePoly.x(f)
            for a in range(1, f.order):
                want = p - 1 - a if f.in_subfield(a, 1) else p - 1
                for b0 in f.elements():
                    poly = linear_mix(a, x, 0) + SparsePoly.constant(f, b0)
                    rep = completeness_level(poly)
                    checked += 1
                    if rep.level != want:
                        bad += 1
                        _collect(failures, {"field": f"GF({p}^{m})", "a": a, "b0": b0, "level": rep.level, "expected": want})
        dt = time.perf_counter() - t0
        detail = {"polynomials": checked, "violations": bad, "examples": failures}
        return CriterionResult(9, "linear polynomials", bad == 0, detail, dt)

    def criterion_10(self):
        """Two fresh runs of a reduced suite (max Q 100) serialize identically."""
        t0 = time.perf_counter()
        first = to_json(PaperSuite(100, self.moduli).run(include_determinism=False))
        second = to_json(PaperSuite(100, self.moduli).run(include_determinism=False))
        dt = time.perf_counter() - t0
        return CriterionResult(10, "deterministic output", first == second, {"bytes": len(first)}, dt)

    def run(self, include_determinism=True, only=None):
        numbers = range(1, 11 if include_determinism else 10)
        return [getattr(self, f"criterion_{i}")() for i in numbers if only is None or i in only]


def _pm(desc):
    params_text = dict(kv.split("=") for kv in desc.split(":", 1)[1].split(","))
    p, s, n = int(params_text["p"]), int(params_text["s"]), int(params_text["n"])
    return p, s * n


def _timed(fn, *args):
    t0 = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - t0


def _failure(rep):
    if rep.level_failure_witness is None:
        return None
    k, pair = rep.level_failure_witness
    return {"k": k, "pair": list(pair)}


def _mismatch(a, b):
    diff = np.flatnonzero(np.asarray(a) != np.asarray(b))
    return int(diff[0]) if diff.size else None


def _is_prime_degree(n):
    return n > 1 and all(n % d for d in range(2, n))


def to_json(results, timings=False):
    return json.dumps(
        {"all_passed": all(r.passed for r in results), "criteria": [r.to_dict(timings) for r in results]},
        indent=2,
    )


def to_text(results):
    lines = []
    for r in results:
        limit = f" (limit {r.time_limit:g}s)" if r.time_limit is not None else ""
        lines.append(f"[{'PASS' if r.passed else 'FAIL'}] criterion {r.number}: {r.name}  {r.seconds:.3f}s{limit}")
        if not r.passed:
            lines.append("       " + json.dumps(r.detail))
    lines.append(f"{sum(r.passed for r in results)}/{len(results)} criteria passed")
    return "\n".join(lines)


def verify_paper(max_q=None, moduli=None, include_determinism=True):
    return PaperSuite(max_q, moduli).run(include_determinism=include_determinism)
