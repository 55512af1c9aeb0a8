"""JSON-ready dictionaries and text renderings of the computations.

Integers that might not survive a round trip through a 53-bit float are
written as decimal strings.  JSON is emitted with sorted keys so the output
is canonical.
"""
from __future__ import annotations

import json

from . import upoly as U
from .cover import (
    Weights,
    all_relations,
    duplicate_generators,
    local_fermat_form,
    toric_classical_correspondence,
    u1_generators,
    u2_generators,
)
from .curve import SmoothnessCertificate, chart_polynomials, smoothness_certificate, verify_chart_recursion
from .elimination import LocusVerdict
from . import genus as G
from .hj import HJResolution, fan_diagram, hj_resolve
from .laurent import LaurentPoly2

_SAFE = 2 ** 53


def num(v: int):
    return v if -_SAFE < v < _SAFE else str(v)


def nums(vs) -> list:
    return [num(v) for v in vs]


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def weights_dict(w: Weights) -> dict:
    return {"a": num(w.a), "m": num(w.m), "n": num(w.n)}


def _generators(gens) -> list[dict]:
    return [
        {"j": j, "exponents": nums(g.exponents), "monomial": str(g)}
        for j, g in enumerate(gens)
    ]


_RELATION_KEYS = {
    "U1_0e": "U1_(0,m)",
    "U1_01": "U1_(0,1)",
    "U2_0e": "U2_(0,n)",
    "U2_01": "U2_(0,1)",
}


def relations_dict(w: Weights) -> dict:
    gens = {"U1": u1_generators(w), "U2": u2_generators(w)}
    out = {}
    for key, rels in all_relations(w).items():
        out[_RELATION_KEYS[key]] = [
            {
                "j": r.j,
                "relation": str(r),
                "lhs": [r.lhs_var, num(r.lhs_exp)],
                "rhs": {str(i): num(e) for i, e in sorted(r.rhs.items())},
                "holds": r.holds(gens[r.chart]),
            }
            for r in rels
        ]
    return out


def resolution_dict(res: HJResolution) -> dict:
    violations = res.check()
    return {
        "m": num(res.m),
        "n": num(res.n),
        "k": num(res.k),
        "r": num(res.r0),
        "s": res.s,
        "b": nums(res.b),
        "r_seq": nums(res.r_seq),
        "t_seq": nums(res.t_seq),
        "rays": [nums(ray) for ray in res.rays],
        "self_intersections": nums(res.self_intersections),
        "already_smooth": res.is_trivial,
        "invariants_ok": not violations,
        "violations": violations,
    }


def locus_dict(v: LocusVerdict) -> dict:
    return {
        "status": v.status,
        "domain": v.domain,
        "strata": [{"stratum": s, "status": st} for s, st in v.strata],
        "witnesses": [
            {
                "stratum": wt.stratum,
                "variable": wt.variable,
                "polynomial": None if wt.polynomial is None else nums(wt.polynomial),
                "text": wt.describe(),
                "multiplicities": [
                    {"factor": nums(f), "multiplicity": k} for f, k in wt.multiplicities
                ],
                "fibers": list(wt.fibers),
            }
            for wt in v.witnesses
        ],
        "notes": list(v.notes),
    }


def smoothness_dict(cert: SmoothnessCertificate) -> dict:
    charts = []
    for c in cert.chart_results:
        d = {
            "chart": c.chart,
            "method": c.method,
            "verdict": c.verdict,
            "polynomial": c.polynomial.serialize() if c.polynomial is not None else None,
        }
        if c.locus is not None:
            d["locus"] = locus_dict(c.locus)
        if c.x_axis_points is not None:
            d["x_axis_points"] = nums(c.x_axis_points)
        if c.evidence:
            d["evidence"] = c.evidence
        charts.append(d)
    return {
        "overall": cert.overall,
        "elimination_checks": cert.elimination_checks,
        "overlap_records": cert.overlap_records,
        "charts": charts,
    }


def orbit_dict(o: G.RamificationOrbit) -> dict:
    return {
        "location": o.location,
        "point_count": num(o.point_count),
        "coefficient": num(o.coefficient),
        "points": o.point_description,
        "minimal_polynomial": nums(o.minimal_polynomial),
        "minimal_polynomial_text": U.to_str(list(o.minimal_polynomial)),
    }


def build_report(w: Weights, input_weights=None, notes=()) -> dict:
    """Full pipeline for one weight triple, as a JSON-ready dict."""
    res = hj_resolve(w)
    polys = chart_polynomials(w, res)
    recursion = verify_chart_recursion(w, res)
    cert = smoothness_certificate(w)
    rep = G.full_report(w, cert)
    corr = toric_classical_correspondence(w)
    relations = relations_dict(w)
    relations_ok = all(r["holds"] for rels in relations.values() for r in rels)
    u1, u2 = u1_generators(w), u2_generators(w)
    checks = {
        "correspondence": corr.all_ok,
        "relations": relations_ok,
        "resolution": not res.check(),
        "chart_recursion": all(recursion),
        "smooth": cert.smooth,
        "hurwitz": rep.hurwitz_holds(),
        "agreement": rep.agreement,
    }
    return {
        "weights": weights_dict(w),
        "input": (
            weights_dict(w) if input_weights is None
            else {k: num(v) for k, v in zip("amn", input_weights)}
        ),
        "notes": list(notes),
        "curve": f"x0^{w.a * w.m * w.n} + x1^{w.a * w.n} - x2^{w.a * w.m}",
        "generators_u1": _generators(u1),
        "generators_u2": _generators(u2),
        "generator_duplicates": {
            "U1": [list(p) for p in duplicate_generators(u1)],
            "U2": [list(p) for p in duplicate_generators(u2)],
        },
        "correspondence": {
            "all_ok": corr.all_ok,
            "entries": [
                {
                    "chart": e.chart,
                    "j": e.j,
                    "toric": nums(e.toric),
                    "image": nums(e.image.exponents),
                    "classical": nums(e.classical.exponents),
                    "ok": e.ok,
                }
                for e in corr.entries
            ],
        },
        "relations": relations,
        "local_forms": {c: local_fermat_form(w, c).serialize() for c in ("U0", "U1", "U2")},
        "resolution": resolution_dict(res),
        "charts": [{"j": j, "F": f.serialize()} for j, f in enumerate(polys, start=1)],
        "chart_recursion": recursion,
        "smoothness": smoothness_dict(cert),
        "phi_degree": num(rep.phi_degree),
        "ramification": [orbit_dict(o) for o in rep.ramification],
        "deg_R": num(rep.deg_R),
        "genus": num(rep.genus),
        "closed_form": num(G.genus_closed_form(w)),
        "oracle": num(rep.oracle_genus),
        "dual": num(rep.dual_projection_genus),
        "agreement": rep.agreement,
        "checks": checks,
    }


def report_passes(d: dict) -> bool:
    return all(d["checks"].values())


def sweep_row(w: Weights) -> dict:
    rep = G.full_report(w)
    cert = smoothness_certificate(w)
    res = hj_resolve(w)
    return {
        "a": num(w.a),
        "m": num(w.m),
        "n": num(w.n),
        "s": res.s,
        "genus": num(rep.genus),
        "oracle": num(rep.oracle_genus),
        "dual": num(rep.dual_projection_genus),
        "smooth": cert.smooth,
        "agree": rep.agreement and rep.hurwitz_holds(),
    }


# -- text ---------------------------------------------------------------------

def report_text(d: dict) -> str:
    w = d["weights"]
    out = [f"Fermat-type curve {d['curve']} on P(1,{w['m']},{w['n']})  (a={w['a']})"]
    out += [f"note: {n}" for n in d["notes"]]
    out.append("")
    out.append("U1 generators: " + ", ".join(f"z{g['j']}={g['monomial']}" for g in d["generators_u1"]))
    out.append("U2 generators: " + ", ".join(f"w{g['j']}={g['monomial']}" for g in d["generators_u2"]))
    out.append(f"toric <-> classical correspondence: {'ok' if d['correspondence']['all_ok'] else 'MISMATCH'}")
    for key, rels in d["relations"].items():
        if rels:
            out.append(f"{key}: " + "; ".join(r["relation"] for r in rels))
    out.append("")
    r = d["resolution"]
    out.append(f"resolution of sigma_1: b = {r['b']}, r = {r['r_seq']}, t = {r['t_seq']}")
    out.append("rays: " + " ".join(f"({x},{y})" for x, y in r["rays"]))
    for c in d["charts"]:
        out.append(f"F_{c['j']} = {LaurentPoly2.parse(c['F'])}")
    out.append("")
    sm = d["smoothness"]
    out.append(f"smoothness: {sm['overall']} ({sm['elimination_checks']} elimination checks, "
               f"{sm['overlap_records']} overlap records)")
    for c in sm["charts"]:
        out.append(f"  {c['chart']:<8} {c['method']:<12} {c['verdict']}")
    out.append("")
    out.append(f"deg(phi) = {d['phi_degree']}")
    for o in d["ramification"]:
        out.append(f"  {o['point_count']} x coefficient {o['coefficient']}: {o['points']}")
    out.append(f"deg R = {d['deg_R']}")
    out.append(f"genus = {d['genus']}  (closed form {d['closed_form']}, Newton polygon {d['oracle']}, "
               f"dual projection {d['dual']})")
    out.append(f"agreement: {d['agreement']}")
    return "\n".join(out) + "\n"


def resolution_text(res: HJResolution) -> str:
    out = [f"cone <(0,1), ({-res.m},{-res.n})>:  n = {res.m}*{res.k} + {res.r0}"]
    if res.is_trivial:
        out.append("chart already smooth")
    out.append(f"b = {list(res.b)}")
    out.append(f"r = {list(res.r_seq)}  (r_-1 .. r_s)")
    out.append(f"t = {list(res.t_seq)}  (t_0 .. t_s+1)")
    out.append(fan_diagram(res))
    bad = res.check()
    out.append("invariants: ok" if not bad else "invariants FAILED: " + "; ".join(bad))
    return "\n".join(out) + "\n"


def sweep_text(rows: list[dict]) -> str:
    cols = ("a", "m", "n", "s", "genus", "oracle", "dual", "smooth", "agree")
    table = [cols] + [tuple(str(r[c]) for c in cols) for r in rows]
    widths = [max(len(t[i]) for t in table) for i in range(len(cols))]
    return "\n".join("  ".join(v.rjust(wd) for v, wd in zip(t, widths)) for t in table) + "\n"


def smoothness_text(cert: SmoothnessCertificate) -> str:
    w = cert.weights
    out = [f"smoothness of the Fermat-type curve, (a,m,n) = ({w.a},{w.m},{w.n}): {cert.overall}"]
    for c in cert.chart_results:
        out.append(f"{c.chart:<8} {c.method:<12} {c.verdict:<10} {c.polynomial}")
        if c.locus is not None:
            for s, st in c.locus.strata:
                out.append(f"    {s:<12} {st}")
            for wt in c.locus.witnesses:
                out.append(f"    witness {wt.describe()}")
        if c.x_axis_points:
            out.append(f"    meets x=0 where {U.to_str(list(c.x_axis_points), 'y')} = 0")
        if c.evidence:
            out.append(f"    {c.evidence}")
    return "\n".join(out) + "\n"
