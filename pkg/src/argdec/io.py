"""JSON problem files for the four framework kinds.

Goal sets are sorted string arrays, preferences are lists of
``{"prefer": [...], "over": [...]}`` strict pairs, graph edges are
``{"from", "to", "tag", "defeasible"}`` objects and belief-base
implications are ``{"body": [...], "head": "..."}``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from pathlib import Path

from .decision import Adf, GoalSetPreference, Pdf, validate_adf
from .errors import ArgdecError, SchemaError
from .graphs import BeliefBase, Dg, Edge, Pdg, implication

KINDS = ("adf", "pdf", "dg", "pdg")


@dataclass(frozen=True)
class ProblemFile:
    kind: str
    framework: Adf | Pdf | Dg | Pdg
    path: str | None = None


class _Locator:
    """Best-effort mapping from a JSON key path back to a text position."""

    def __init__(self, text: str):
        self.text = text

    def position(self, path) -> tuple[int | None, int | None]:
        offset = 0
        found = None
        for key in path:
            if not isinstance(key, str):
                continue
            m = re.compile(r'"' + re.escape(key) + r'"\s*:').search(self.text, offset)
            if m is None:
                break
            offset = found = m.start()
        if found is None:
            return None, None
        line = self.text.count("\n", 0, found) + 1
        column = found - (self.text.rfind("\n", 0, found) + 1) + 1
        return line, column

    def error(self, message: str, *path) -> SchemaError:
        line, column = self.position(path)
        return SchemaError(message, line=line, column=column)


def _require(obj: dict, key: str, kind, loc: _Locator):
    if key not in obj:
        raise SchemaError(f"missing field {key!r}", line=1, column=1)
    value = obj[key]
    if not isinstance(value, kind):
        raise loc.error(f"field {key!r} must be a JSON {_JSON_NAMES[kind]}", key)
    return value


_JSON_NAMES = {list: "array", dict: "object", str: "string"}


def _strings(values, what: str, loc: _Locator, *path) -> list[str]:
    if not isinstance(values, list) or not all(isinstance(v, str) for v in values):
        raise loc.error(f"{what} must be an array of strings", *path)
    return values


def _preference(obj: dict, loc: _Locator) -> GoalSetPreference:
    raw = _require(obj, "preference", list, loc)
    pairs = []
    for item in raw:
        if not isinstance(item, dict) or set(item) != {"prefer", "over"}:
            raise loc.error('preference entries are {"prefer": [...], "over": [...]}', "preference")
        pairs.append((frozenset(_strings(item["prefer"], "prefer", loc, "preference")),
                      frozenset(_strings(item["over"], "over", loc, "preference"))))
    return GoalSetPreference(frozenset(pairs))


def _adf(obj: dict, loc: _Locator) -> Adf:
    decisions = _strings(_require(obj, "decisions", list, loc), "decisions", loc, "decisions")
    goals = _strings(_require(obj, "goals", list, loc), "goals", loc, "goals")
    gamma = _require(obj, "gamma", dict, loc)
    for d, met in gamma.items():
        _strings(met, f"gamma[{d!r}]", loc, "gamma", d)
    return validate_adf(decisions, goals, gamma)


def _dg(obj: dict, loc: _Locator) -> Dg:
    decisions = _strings(_require(obj, "decisions", list, loc), "decisions", loc, "decisions")
    intermediates = _strings(obj.get("intermediates", []), "intermediates", loc, "intermediates")
    goals = _strings(_require(obj, "goals", list, loc), "goals", loc, "goals")
    edges = []
    for e in _require(obj, "edges", list, loc):
        if not isinstance(e, dict) or not {"from", "to"} <= set(e) or set(e) - {"from", "to", "tag", "defeasible"}:
            raise loc.error('edges are {"from", "to", "tag", "defeasible"} objects', "edges")
        tag = e.get("tag", 1)
        if isinstance(tag, bool) or not isinstance(tag, int):
            raise loc.error("edge tags are positive integers", "edges", "tag")
        edges.append(Edge(e["from"], e["to"], tag, bool(e.get("defeasible", False))))
    implications = []
    for imp in obj.get("beliefBase", []):
        if not isinstance(imp, dict) or set(imp) != {"body", "head"} or not isinstance(imp["head"], str):
            raise loc.error('implications are {"body": [...], "head": "..."} objects', "beliefBase")
        try:
            implications.append(implication(_strings(imp["body"], "body", loc, "beliefBase"), imp["head"]))
        except ValueError as exc:
            raise loc.error(str(exc), "beliefBase") from None
    return Dg(tuple(decisions), tuple(intermediates), tuple(goals), tuple(edges),
              BeliefBase(tuple(implications)))


def loads_problem(text: str, path: str | None = None) -> ProblemFile:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(exc.msg, line=exc.lineno, column=exc.colno) from None
    loc = _Locator(text)
    if not isinstance(obj, dict):
        raise SchemaError("a problem file is a JSON object", line=1, column=1)
    kind = obj.get("kind")
    if kind not in KINDS:
        raise loc.error(f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}", "kind")
    try:
        if kind == "adf":
            framework = _adf(obj, loc)
        elif kind == "pdf":
            framework = Pdf(_adf(obj, loc), _preference(obj, loc))
        elif kind == "dg":
            framework = _dg(obj, loc)
        else:
            framework = Pdg(_dg(obj, loc), _preference(obj, loc))
    except SchemaError:
        raise
    except (ArgdecError, ValueError, KeyError) as exc:
        message = exc.args[0] if exc.args else type(exc).__name__
        raise SchemaError(f"{type(exc).__name__}: {message}", line=1, column=1) from None
    return ProblemFile(kind, framework, path)


def parse_problem(path) -> ProblemFile:
    path = Path(path)
    return loads_problem(path.read_text(encoding="utf-8"), str(path))


# serialisation ----------------------------------------------------------------

def _preference_json(pref: GoalSetPreference) -> list[dict]:
    def key(pair):
        a, b = pair
        return ([len(a)] + sorted(a), [len(b)] + sorted(b))
    return [{"prefer": sorted(a), "over": sorted(b)} for a, b in sorted(pref.pairs, key=key)]


def _adf_json(adf: Adf) -> dict:
    return {"decisions": list(adf.decisions), "goals": list(adf.goals),
            "gamma": {d: [g for g in adf.goals if g in adf.gamma[d]] for d in adf.decisions}}


def _dg_json(dg: Dg) -> dict:
    return {
        "decisions": list(dg.decisions),
        "intermediates": list(dg.intermediates),
        "goals": list(dg.goals),
        "edges": [{"from": e.source, "to": e.target, "tag": e.tag, "defeasible": e.defeasible}
                  for e in dg.edges],
        "beliefBase": [{"body": [str(b) for b in imp.body], "head": str(imp.head)}
                       for imp in dg.belief_base.implications],
    }


def to_json(framework: Adf | Pdf | Dg | Pdg) -> dict:
    if isinstance(framework, Pdf):
        return {"kind": "pdf", **_adf_json(framework.adf), "preference": _preference_json(framework.preference)}
    if isinstance(framework, Adf):
        return {"kind": "adf", **_adf_json(framework)}
    if isinstance(framework, Pdg):
        return {"kind": "pdg", **_dg_json(framework.dg), "preference": _preference_json(framework.preference)}
    return {"kind": "dg", **_dg_json(framework)}


def dumps_problem(framework) -> str:
    return json.dumps(to_json(framework), indent=2) + "\n"

