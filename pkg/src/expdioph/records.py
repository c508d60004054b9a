"""JSON-lines record schema.

Every record is a flat-ish dict ``{"type": ..., "v": 1, ...}``. Integers are
written as decimal strings so arbitrarily large values survive any JSON
reader; lists of triples are lists of string triples. Parsing ignores fields
it does not know (``"cached"`` among them).
"""

from __future__ import annotations

from typing import Any

from . import model
from .classifier import CatalanWitness, FamilyPrimeRow, FrenicleWitness
from .model import (
    CatalanApplication,
    FactorSplit,
    FamilyFourN,
    FrenicleApplication,
    Generic,
    PowerOfTwoMatch,
    SolutionFamily,
    SolutionTriple,
)

SCHEMA_VERSION = 1


class RecordError(ValueError):
    pass


def _i(value: Any) -> int:
    if isinstance(value, bool):
        raise RecordError(f"expected an integer, got {value!r}")
    if isinstance(value, int):
        return value
    if isinstance(value, str) and value.lstrip("-").isdigit():
        return int(value)
    raise RecordError(f"expected an integer, got {value!r}")


def _s(value: int) -> str:
    return str(int(value))


def _triples(ts) -> list[list[str]]:
    return [[_s(c) for c in t] for t in ts]


def _parse_triples(raw) -> tuple[SolutionTriple, ...]:
    try:
        return tuple(SolutionTriple(*map(_i, t)) for t in raw)
    except TypeError as exc:
        raise RecordError(f"malformed triple list: {raw!r}") from exc


def instance_fields(inst: model.EquationInstance) -> dict[str, str]:
    if isinstance(inst, FamilyFourN):
        return {"equation": "FamilyFourN", "n": _s(inst.n), "p": _s(inst.p)}
    return {"equation": "Generic", "a": _s(inst.a), "b": _s(inst.b)}


def parse_instance(rec: dict) -> model.EquationInstance:
    try:
        kind = rec["equation"]
        if kind == "FamilyFourN":
            return FamilyFourN(_i(rec["n"]), _i(rec["p"]))
        if kind == "Generic":
            return Generic(_i(rec["a"]), _i(rec["b"]))
    except KeyError as exc:
        raise RecordError(f"instance is missing field {exc}") from exc
    raise RecordError(f"unknown equation kind {rec.get('equation')!r}")


def _head(kind: str) -> dict[str, Any]:
    return {"type": kind, "v": SCHEMA_VERSION}


def solution_record(inst: model.EquationInstance, t: SolutionTriple) -> dict:
    rec = _head("solution")
    rec.update(instance_fields(inst))
    rec.update(x=_s(t.x), y=_s(t.y), z=_s(t.z))
    return rec


def family_record(f: SolutionFamily) -> dict:
    rec = _head("family")
    rec.update(kind="descriptor", n=_s(f.n), parameter=f.parameter_name,
               x_of_k=f.x_of_k, y_of_k=f.y_of_k, z_of_k=f.z_of_k,
               admissibility=f.admissibility)
    if f.p is not None:
        rec["p"] = _s(f.p)
    return rec


def family_prime_record(n: int, row: FamilyPrimeRow) -> dict:
    rec = _head("family")
    rec.update(kind="prime_scan", n=_s(n), k=_s(row.k), p=_s(row.p),
               is_prime=row.is_prime, probabilistic=row.probabilistic)
    return rec


def catalan_record(w: CatalanWitness) -> dict:
    rec = _head("witness")
    rec.update(kind="catalan", a=_s(w.a), b=_s(w.b), x=_s(w.x), y=_s(w.y))
    return rec


def frenicle_record(p: int, w: FrenicleWitness) -> dict:
    rec = _head("witness")
    rec.update(kind="frenicle", p=_s(p), x=_s(w.x), exponent=_s(w.exponent))
    return rec


def report_record(report) -> dict:
    rec = _head("report")
    rec.update(instance_fields(report.instance))
    rec.update(
        x_max=_s(report.box.x_max),
        y_max=_s(report.box.y_max),
        verdict=report.verdict.value,
        classifier_in_box=_triples(report.classifier_in_box),
        oracle=_triples(report.oracle),
        missing_from_classifier=_triples(report.missing_from_classifier),
        extra_in_classifier=_triples(report.extra_in_classifier),
    )
    return rec


def note_record(text: str, **extra: Any) -> dict:
    rec = _head("note")
    rec["text"] = text
    rec.update(extra)
    return rec


def completeness_record(desc: model.SolutionSetDescription) -> dict:
    rec = note_record(f"{len(desc.sporadic)} solution(s); {desc.completeness.value}",
                      kind="completeness", completeness=desc.completeness.value)
    rec.update(instance_fields(desc.instance))
    return rec


def step_record(step: model.DerivationStep) -> dict:
    rec = note_record(step.note, kind="step")
    if isinstance(step, FactorSplit):
        rec.update(step="FactorSplit", split_exponent=_s(step.v), n=_s(step.n), p=_s(step.p),
                   triple=[_s(c) for c in step.triple])
    elif isinstance(step, CatalanApplication):
        rec.update(step="CatalanApplication", a=_s(step.a), b=_s(step.b),
                   x=_s(step.x), y=_s(step.y))
    elif isinstance(step, FrenicleApplication):
        rec.update(step="FrenicleApplication", p=_s(step.p), exponent=_s(step.exponent))
    elif isinstance(step, PowerOfTwoMatch):
        rec.update(step="PowerOfTwoMatch", m=_s(step.m), p=_s(step.p))
    else:
        raise TypeError(f"not a derivation step: {step!r}")
    return rec


def _parse_step(rec: dict) -> model.DerivationStep:
    kind, note = rec.get("step"), rec.get("text", "")
    if kind == "FactorSplit":
        return FactorSplit(_i(rec["split_exponent"]), _i(rec["n"]), _i(rec["p"]),
                           SolutionTriple(*map(_i, rec["triple"])), note)
    if kind == "CatalanApplication":
        return CatalanApplication(_i(rec["a"]), _i(rec["b"]), _i(rec["x"]), _i(rec["y"]), note)
    if kind == "FrenicleApplication":
        return FrenicleApplication(_i(rec["p"]), _i(rec["exponent"]), note)
    if kind == "PowerOfTwoMatch":
        return PowerOfTwoMatch(_i(rec["m"]), _i(rec["p"]), note)
    raise RecordError(f"unknown derivation step {kind!r}")


def parse_record(rec: dict):
    """Rebuild the domain object a record encodes.

    Solutions come back as ``(instance, triple)`` and frenicle witnesses as
    ``(p, witness)``, since the bare triple does not carry its equation.
    """
    if not isinstance(rec, dict):
        raise RecordError(f"record must be an object, got {type(rec).__name__}")
    if rec.get("v") != SCHEMA_VERSION:
        raise RecordError(f"unsupported record version {rec.get('v')!r}")
    kind = rec.get("type")
    try:
        if kind == "solution":
            inst = parse_instance(rec)
            return inst, model.checked_triple(inst, _i(rec["x"]), _i(rec["y"]), _i(rec["z"]))
        if kind == "family":
            if rec.get("kind") == "prime_scan":
                return _i(rec["n"]), FamilyPrimeRow(_i(rec["k"]), _i(rec["p"]),
                                                    bool(rec["is_prime"]), bool(rec["probabilistic"]))
            p = _i(rec["p"]) if "p" in rec else None
            return SolutionFamily(_i(rec["n"]), p, rec.get("parameter", "k"))
        if kind == "witness":
            if rec.get("kind") == "catalan":
                return CatalanWitness(_i(rec["a"]), _i(rec["b"]), _i(rec["x"]), _i(rec["y"]))
            if rec.get("kind") == "frenicle":
                return _i(rec["p"]), FrenicleWitness(_i(rec["x"]), _i(rec["exponent"]))
            raise RecordError(f"unknown witness kind {rec.get('kind')!r}")
        if kind == "report":
            from .search import SearchBox
            from .validate import ValidationReport

            return ValidationReport(
                instance=parse_instance(rec),
                box=SearchBox(_i(rec["x_max"]), _i(rec["y_max"])),
                classifier_in_box=_parse_triples(rec["classifier_in_box"]),
                oracle=_parse_triples(rec["oracle"]),
                missing_from_classifier=_parse_triples(rec["missing_from_classifier"]),
                extra_in_classifier=_parse_triples(rec["extra_in_classifier"]),
                verdict=rec["verdict"],
            )
        if kind == "note":
            if rec.get("kind") == "step":
                return _parse_step(rec)
            return rec["text"]
    except KeyError as exc:
        raise RecordError(f"{kind} record is missing field {exc}") from exc
    raise RecordError(f"unknown record type {kind!r}")
