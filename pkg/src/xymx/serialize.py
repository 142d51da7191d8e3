"""JSON-ready dicts for the result types. Integers travel as decimal strings."""

from __future__ import annotations

from fractions import Fraction

from .classify import (
    Candidate,
    ClassifyConfig,
    EulerFamily,
    Rejection,
    S2Element,
    S2Family,
    SolutionSet,
)
from .hasse import HasseVerdict, LocalReport
from .pell import PellFamily, PellRep, PellUnit
from .thue import ResidueWitness, ThueEquation, ThueOutcome
from .verify import PowerSolution


def _i(x) -> str | None:
    return None if x is None else str(x)


def _n(s) -> int | None:
    return None if s is None else int(s)


def solution_to_dict(sol: PowerSolution) -> dict:
    return {
        "base": {"num": _i(sol.base.numerator), "den": _i(sol.base.denominator)},
        "ex": _i(sol.e_x),
        "ey": _i(sol.e_y),
        "text": str(sol),
    }


def solution_from_dict(d: dict) -> PowerSolution:
    return PowerSolution(Fraction(int(d["base"]["num"]), int(d["base"]["den"])), int(d["ex"]), int(d["ey"]))


def candidate_to_dict(c: Candidate) -> dict:
    return {"m": _i(c.m), "k": _i(c.k), "d": _i(c.d), "m_prime": _i(c.m_prime), "sign": _i(c.sign)}


def candidate_from_dict(d: dict) -> Candidate:
    return Candidate(int(d["m"]), int(d["k"]), int(d["d"]), int(d["m_prime"]), int(d["sign"]))


def rep_to_dict(r: PellRep) -> dict:
    return {"x0": _i(r.x0), "y0": _i(r.y0), "D": _i(r.D), "N": _i(r.N)}


def unit_to_dict(u: PellUnit) -> dict:
    return {"D": _i(u.D), "u1": _i(u.u1), "v1": _i(u.v1)}


def s2_family_to_dict(f: S2Family) -> dict:
    return {
        "candidate": candidate_to_dict(f.candidate),
        "rep": rep_to_dict(f.family.rep),
        "unit": unit_to_dict(f.family.unit),
        "elements": [
            {"u": _i(e.u), "v": _i(e.v), "solution": solution_to_dict(e.solution)} for e in f.elements
        ],
    }


def s2_family_from_dict(d: dict) -> S2Family:
    rep = PellRep(*(int(d["rep"][key]) for key in ("x0", "y0", "D", "N")))
    unit = PellUnit(*(int(d["unit"][key]) for key in ("D", "u1", "v1")))
    elems = tuple(
        S2Element(int(e["u"]), int(e["v"]), solution_from_dict(e["solution"])) for e in d["elements"]
    )
    return S2Family(candidate_from_dict(d["candidate"]), PellFamily(rep, unit), elems)


def equation_to_dict(eq: ThueEquation) -> dict:
    return {"k": _i(eq.k), "m": _i(eq.m), "c": _i(eq.c)}


def config_to_dict(cfg: ClassifyConfig) -> dict:
    return {
        "k_min": _i(cfg.k_min),
        "k_max": _i(cfg.k_max),
        "sieve_n_max": _i(cfg.sieve_n_max),
        "search_bound": _i(cfg.search_bound),
        "families_count": _i(cfg.families_count),
        "workers": _i(cfg.workers),
    }


def solution_set_to_dict(s: SolutionSet) -> dict:
    return {
        "m": _i(s.m),
        "s0": solution_to_dict(s.s0),
        "s1_families": [{"m": _i(f.m), "branch": f.branch, "n_min": _i(f.n_min)} for f in s.s1],
        "s2_families": [s2_family_to_dict(f) for f in s.s2],
        "s2_verdict": s.s2_verdict,
        "sporadics": [solution_to_dict(x) for x in s.sporadics],
        "unresolved": [equation_to_dict(eq) for eq in s.unresolved],
        "k_range": [_i(s.k_range[0]), _i(s.k_range[1])],
        "config": config_to_dict(s.config),
        "survivors": [{"k": _i(k), "targets": [_i(t) for t in ts]} for k, ts in s.survivors],
        "rejected": [
            {"u": _i(r.u), "v": _i(r.v), "k": _i(r.k), "c": _i(r.c), "reason": r.reason}
            for r in s.rejected
        ],
    }


def solution_set_from_dict(d: dict) -> SolutionSet:
    cfg = d["config"]
    return SolutionSet(
        m=int(d["m"]),
        s0=solution_from_dict(d["s0"]),
        s1=tuple(EulerFamily(int(f["m"]), f["branch"]) for f in d["s1_families"]),
        s2=tuple(s2_family_from_dict(f) for f in d["s2_families"]),
        s2_verdict=d["s2_verdict"],
        sporadics=tuple(solution_from_dict(x) for x in d["sporadics"]),
        unresolved=tuple(ThueEquation(int(e["k"]), int(e["m"]), int(e["c"])) for e in d["unresolved"]),
        k_range=(int(d["k_range"][0]), int(d["k_range"][1])),
        config=ClassifyConfig(
            k_min=int(cfg["k_min"]),
            k_max=_n(cfg["k_max"]),
            sieve_n_max=int(cfg["sieve_n_max"]),
            search_bound=int(cfg["search_bound"]),
            families_count=int(cfg["families_count"]),
            workers=int(cfg["workers"]),
        ),
        survivors=tuple((int(x["k"]), tuple(int(t) for t in x["targets"])) for x in d["survivors"]),
        rejected=tuple(
            Rejection(int(r["u"]), int(r["v"]), int(r["k"]), int(r["c"]), r["reason"]) for r in d["rejected"]
        ),
    )


def witness_to_dict(w: ResidueWitness) -> dict:
    return {
        "p": _i(w.p),
        "n": _i(w.n),
        "modulus": _i(w.modulus),
        "eliminated_targets": [_i(t) for t in sorted(w.eliminated_targets)],
    }


def outcome_to_dict(o: ThueOutcome) -> dict:
    return {
        "kind": o.kind,
        "k": _i(o.k),
        "m": _i(o.m),
        "targets": [_i(t) for t in o.targets],
        "witnesses": [witness_to_dict(w) for w in o.witnesses],
        "survivors": [_i(t) for t in o.survivors],
        "solutions": [{"u": _i(u), "v": _i(v), "c": _i(c)} for u, v, c in o.solutions],
        "complete": o.complete,
        "incomplete": [_i(t) for t in o.incomplete],
        "search_bound": _i(o.search_bound),
    }


def report_to_dict(r: LocalReport | None) -> dict | None:
    return None if r is None else {"p": _i(r.p), "e": _i(r.e), "solvable": r.solvable}


def verdict_to_dict(v: HasseVerdict) -> dict:
    return {
        "kind": v.kind,
        "witness": None if v.witness is None else [_i(x) for x in v.witness],
        "report": report_to_dict(v.report),
        "prime_cap": _i(v.prime_cap),
        "exp_cap": _i(v.exp_cap),
        "global_bound": _i(v.global_bound),
    }
