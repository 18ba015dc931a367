"""Run checks from catalogue programs and emit verdict reports.

A report is a list of records, one per ``check`` line, sorted by entry id
then check index.  Certificates are stored as text together with their
sha256 digest; ``reverify`` re-checks Split/NoSplit evidence from a record.
"""
from __future__ import annotations

import hashlib
import json
import time
import warnings
from dataclasses import dataclass
from importlib import resources
from typing import Optional, Sequence

from .build import Environment
from .dsl import CheckDecl, format_program, parse
from .errors import PuretopError

SCHEMA_VERSION = 1  # matches data/report_schema.json


@dataclass(frozen=True)
class CheckResult:
    verdict: str
    certificate: str
    ok_extra: bool = True  # side conditions (consistency, oracle agreement)
    data: Optional[dict] = None  # machine-readable evidence for re-verification


@dataclass(frozen=True, eq=False)
class CatalogEntry:
    id: str
    source: str
    program: tuple

    @property
    def checks(self) -> list:
        """(operation, expected verdict, citation) per check line."""
        return [(d.op, d.option("expect"), d.option("cite")) for d in self.program
                if isinstance(d, CheckDecl)]

    def round_trips(self) -> bool:
        return parse(format_program(self.program)) == self.program


# ---------------------------------------------------------------- checks


def _poly_strs(xs):
    return [str(x) for x in xs]


def _split_result(alpha) -> CheckResult:
    from .finite import FiniteRingMap
    from .purity import semi_decide_purity, split_test
    if isinstance(alpha, FiniteRingMap):
        v = split_test(alpha)
        if v.tag == "Split":
            cert = "retraction " + ", ".join(f"{alpha.target.labels[s]} -> {alpha.source.labels[int(t)]}"
                                             for s, t in enumerate(v.retraction))
            data = {"kind": "finite-retraction", "table": [int(t) for t in v.retraction]}
        else:
            cert = "J_e = {" + ", ".join(v.certificate) + "}"
            data = {"kind": "finite-ideal", "elements": list(v.certificate)}
        return CheckResult(v.tag, cert, v.verify(alpha), data)
    if alpha.finite_presentation is None:
        v = semi_decide_purity(alpha)
        return CheckResult(v.tag, v.note, True, None)
    v = split_test(alpha)
    if v.tag == "Split":
        data = {"kind": "retraction", "values": _poly_strs(v.retraction)}
    else:
        data = {"kind": "groebner", "basis": _poly_strs(v.certificate)}
    return CheckResult(v.tag, v.certificate_text(), v.verify(alpha), data)


def _contract_result(env, d, alpha) -> CheckResult:
    from .purity import contraction_witness
    src = alpha.source
    I = [src.from_expr(g) for g in d.option("ideal")]
    f = src.from_expr(d.option("elem"))
    cv = contraction_witness(alpha, I, f)
    cert = ("contraction (" + ", ".join(_poly_strs(cv.contraction)) + "); "
            f"in contraction: {str(cv.is_in_contraction).lower()}, in ideal: {str(cv.is_in_I).lower()}")
    return CheckResult(str(cv.non_purity_witnessed).lower(), cert)


def _tensorinj_result(env, d, alpha) -> CheckResult:
    from .finite import FiniteRingMap, tensor_injective
    from .purity import tensor_inject_test
    M = env[d.option("module")]
    if isinstance(alpha, FiniteRingMap):
        inj = tensor_injective(alpha, M.build()[0])
        return CheckResult("injective" if inj else "not-injective", "exhaustive")
    tv = tensor_inject_test(alpha, M)
    cert = f"method {tv.method}"
    if tv.kernel_witness is not None:
        cert += "; kernel witness (" + ", ".join(_poly_strs(tv.kernel_witness)) + ")"
    return CheckResult("injective" if tv.injective else "not-injective", cert)


def _fsplit_result(R) -> CheckResult:
    from .errors import JacobianUnsupported
    from .frobenius import f_split_test, fedder_f_pure, frobenius_map
    alpha = frobenius_map(R)
    v = f_split_test(R)
    try:
        fedder = fedder_f_pure(R)
        agree = fedder == (v.tag == "Split")
        note = f"; Fedder oracle: {'F-pure' if fedder else 'not F-pure'}"
    except JacobianUnsupported:
        agree, note = True, ""
    ok = agree and v.verify(alpha)
    if v.tag == "Split":
        data = {"kind": "retraction", "values": _poly_strs(v.retraction)}
    else:
        data = {"kind": "groebner", "basis": _poly_strs(v.certificate)}
    return CheckResult(v.tag, v.certificate_text() + note, ok, data)


def _kunz_result(R) -> CheckResult:
    from .frobenius import kunz_check, pushforward
    rep = kunz_check(R)
    F = pushforward(R)
    verdict = ("free" if rep.is_free else "not-free") + "," + (
        "unknown" if rep.regular_expected is None else
        "regular" if rep.regular_expected else "not-regular")
    cert = f"pushforward on {len(F.basis)} generators; consistent: {str(rep.consistent).lower()}"
    if rep.note:
        cert += f"; {rep.note}"
    return CheckResult(verdict, cert, rep.consistent is not False)


def _frobalg_result(d, spec) -> CheckResult:
    from .frobalg import build_extension, obstruction_check
    alpha = build_extension(spec)
    sv = _split_result(alpha)
    rep = obstruction_check(spec)
    summary = rep.summary()
    want = d.option("obstruction")
    ok = sv.ok_extra and (want is None or want == summary)
    return CheckResult(sv.verdict, f"{sv.certificate}; {summary}", ok, sv.data)


def _descent_result(env, d, alpha) -> CheckResult:
    from .descent import canonical_datum, descend, graded_source, round_trip
    from .finite import FiniteRingMap
    from .modules import ModulePresentation
    M = env[d.option("module")]
    if isinstance(alpha, FiniteRingMap):
        M0 = M.build()[0]
        rep = canonical_datum(alpha, M0).verify()
        rt = round_trip(alpha, M0)
    else:
        Rg = graded_source(alpha)
        degs = M.generator_degrees or (0,) * M.n_generators
        try:
            M0 = ModulePresentation(Rg, M.n_generators, M.relations, degs)
        except PuretopError:
            M0 = M
        datum = canonical_datum(alpha, M0)
        rep = datum.verify()
        res = descend(datum)
        rt = res.rho_is_iso
        hm = res.detail.get("hilbert_M")
        if hm is not None and res.detail.get("hilbert_M0") is not None:
            rt = rt and hm == res.detail["hilbert_M0"]
    good = rep.all_pass and rt
    failed = rep.failed()
    cert = ("identities 1-5 pass" if not failed else "identities failing: " + ", ".join(failed))
    cert += f"; cocycle {rep.cocycle_order}: {str(rep.cocycle).lower()}; reconstruction: {str(rt).lower()}"
    return CheckResult("effective" if good else "not-effective", cert)


def evaluate_check(env: Environment, d: CheckDecl) -> CheckResult:
    obj = env[d.target]
    if d.op == "split":
        return _split_result(obj)
    if d.op == "contract":
        return _contract_result(env, d, obj)
    if d.op == "tensorinj":
        return _tensorinj_result(env, d, obj)
    if d.op == "fsplit":
        return _fsplit_result(obj)
    if d.op == "kunz":
        return _kunz_result(obj)
    if d.op == "frobalg":
        return _frobalg_result(d, obj)
    if d.op == "descent":
        return _descent_result(env, d, obj)
    raise ValueError(d.op)


# ---------------------------------------------------------------- reports


def digest(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def run_program(entry_id: str, prog, timings: bool = False) -> list:
    """Records for every check of one program; failures stay inside the entry."""
    checks = [d for d in prog if isinstance(d, CheckDecl)]
    try:
        env = Environment(prog)
    except PuretopError as e:
        return [_record(entry_id, i, d, CheckResult(f"error: {e}", ""), None) for i, d in enumerate(checks)]
    out = []
    for i, d in enumerate(checks):
        t0 = time.perf_counter()
        try:
            res = evaluate_check(env, d)
        except PuretopError as e:
            res = CheckResult(f"error: {type(e).__name__}: {e}", "", False)
        out.append(_record(entry_id, i, d, res, time.perf_counter() - t0 if timings else None))
    return out


def _record(entry_id, i, d: CheckDecl, res: CheckResult, wall) -> dict:
    expected = d.option("expect")
    if res.verdict.startswith("error"):
        passed = False
    else:
        passed = (expected is None or res.verdict == expected) and res.ok_extra
    rec = {
        "entry": entry_id,
        "index": i,
        "check": d.op,
        "target": d.target,
        "verdict": res.verdict,
        "expected": expected,
        "pass": bool(passed),
        "certificate": res.certificate,
        "digest": digest(res.certificate),
        "evidence": res.data,
        "cite": d.option("cite"),
    }
    if wall is not None:
        rec["wall_time"] = round(wall, 4)
    return rec


def catalog_entries() -> list:
    base = resources.files("puretop") / "data" / "catalog"
    out = []
    for f in sorted(base.iterdir(), key=lambda p: p.name):
        if f.name.endswith(".pt"):
            text = f.read_text(encoding="utf-8")
            out.append(CatalogEntry(f.name[:-3], text, parse(text)))
    return out


def run_catalog(only: Sequence[str] = None, timings: bool = False) -> list:
    entries = catalog_entries()
    if only is not None:
        ids = {e.id for e in entries}
        for x in only:
            if x not in ids:
                warnings.warn(f"no catalogue entry {x!r}")
        entries = [e for e in entries if e.id in set(only)]
    records = []
    for e in entries:
        records.extend(run_program(e.id, e.program, timings))
    records.sort(key=lambda r: (r["entry"], r["index"]))
    return records


def all_pass(records) -> bool:
    return all(r["pass"] for r in records)


def emit(records, fmt: str = "json") -> str:
    if fmt == "json":
        return json.dumps(list(records), indent=2, sort_keys=True, ensure_ascii=False)
    if fmt == "markdown":
        lines = ["| entry | # | check | target | verdict | expected | pass | certificate |",
                 "|---|---|---|---|---|---|---|---|"]
        for r in records:
            cert = r["certificate"].replace("|", "\\|")
            lines.append(f"| {r['entry']} | {r['index']} | {r['check']} | {r['target']} | {r['verdict']} "
                         f"| {r['expected'] if r['expected'] is not None else ''} "
                         f"| {'pass' if r['pass'] else 'FAIL'} | {cert} |")
        return "\n".join(lines)
    raise ValueError(f"unknown format {fmt!r}")


def report_schema() -> dict:
    path = resources.files("puretop") / "data" / "report_schema.json"
    return json.loads(path.read_text(encoding="utf-8"))


def validate_report(records) -> None:
    import jsonschema
    jsonschema.validate(list(records), report_schema())


# ---------------------------------------------------------------- re-verification


def reverify(record: dict, entry_source: str) -> bool:
    """Re-check a record's Split/NoSplit evidence from the record and the entry text alone."""
    ev = record.get("evidence")
    if ev is None:
        return True
    import numpy as np
    from .finite import FiniteRingMap
    from .frobalg import build_extension
    from .frobenius import frobenius_map
    from .purity import SplitVerdict
    prog = parse(entry_source)
    env = Environment(prog)
    obj = env[record["target"]]
    if record["check"] == "fsplit":
        alpha = frobenius_map(obj)
    elif record["check"] == "frobalg":
        alpha = build_extension(obj)
    else:
        alpha = obj
    if isinstance(alpha, FiniteRingMap):
        if ev["kind"] == "finite-retraction":
            v = SplitVerdict("Split", retraction=tuple(np.asarray(ev["table"])))
        else:
            v = SplitVerdict("NoSplit", certificate=tuple(ev["elements"]))
        return alpha.verify_verdict(v) and v.tag == record["verdict"]
    R = alpha.source
    if ev["kind"] == "retraction":
        v = SplitVerdict("Split", retraction=tuple(R.parse(x) for x in ev["values"]))
    else:
        v = SplitVerdict("NoSplit", certificate=tuple(R.ring.parse(x) for x in ev["basis"]))
    return v.verify(alpha) and v.tag == record["verdict"]


def check_file(path: str, timings: bool = False) -> list:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    prog = parse(text)
    import os
    entry = os.path.splitext(os.path.basename(path))[0]
    return run_program(entry, prog, timings)
