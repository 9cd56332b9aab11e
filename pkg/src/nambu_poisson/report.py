"""Report documents: one top-level result object, rendered as text or JSON.

Top-level keys, in this order when present:

``format``      always ``"nambu-poisson-report v1"``
``command``     the subcommand, e.g. ``"check algebra"``
``input``       input path
``field``       ``"rational"`` or ``"gf <p>"``
``status``      ``"PASS"``, ``"FAIL"``, ``"OK"`` (constructions, listings) or ``"ERROR"``
``checks``      list of ``{name, status, violation}``; ``violation`` is
                ``{axiom, witness, left, right}`` with 1-based witness indices
``dimensions``  ``{dim_Z2, dim_B2, dim_H2}``
``search``      ``{kind, field, space_size, examined, budget_exceeded, witness_count, witnesses}``
``examples``    list of ``{name, dim, description}``
``output``      text of a constructed file
``error``       message for usage and parse errors
"""

from __future__ import annotations

import json

FORMAT = "nambu-poisson-report v1"
KEY_ORDER = ("format", "command", "input", "field", "status", "checks", "dimensions", "search", "examples",
             "output", "error")

PASS, FAIL, OK, ERROR = "PASS", "FAIL", "OK", "ERROR"


class ReportDocument:
    def __init__(self, command: str, **fields):
        self.data = {"format": FORMAT, "command": command}
        for k, v in fields.items():
            self.set(k, v)

    def set(self, key, value):
        if key not in KEY_ORDER:
            raise KeyError(f"unknown report key {key!r}")
        self.data[key] = value
        return self

    def add_check(self, name: str, report, field=None):
        entry = {"name": name, "status": PASS if report is None else FAIL}
        if report is not None:
            entry["violation"] = report.as_dict(field)
        self.data.setdefault("checks", []).append(entry)
        return report is None

    @property
    def status(self):
        return self.data.get("status")

    @property
    def failed(self) -> bool:
        return any(c["status"] == FAIL for c in self.data.get("checks", ()))

    def ordered(self) -> dict:
        return {k: self.data[k] for k in KEY_ORDER if k in self.data}

    def to_json(self) -> str:
        return json.dumps(self.ordered(), indent=2) + "\n"

    def to_text(self) -> str:
        d = self.ordered()
        out = []
        for key in ("command", "input", "field", "status"):
            if key in d:
                out.append(f"{key}: {d[key]}")
        for c in d.get("checks", ()):
            out.append(f"check {c['name']}: {c['status']}")
            v = c.get("violation")
            if v:
                out.append(f"  axiom: {v['axiom']}")
                out.append("  witness: (" + ", ".join(map(str, v["witness"])) + ")")
                out.append("  left: [" + ", ".join(v["left"]) + "]")
                out.append("  right: [" + ", ".join(v["right"]) + "]")
        for k, v in d.get("dimensions", {}).items():
            out.append(f"{k} = {v}")
        s = d.get("search")
        if s:
            for k in ("kind", "field", "space_size", "examined", "budget_exceeded", "witness_count"):
                out.append(f"{k} = {s[k]}")
            for i, w in enumerate(s["witnesses"], 1):
                out.append(f"witness {i}:")
                out.extend("  " + line for line in _witness_lines(w))
        for e in d.get("examples", ()):
            out.append(f"{e['name']}  dim {e['dim']}  {e['description']}")
        if "output" in d:
            out.append("output:")
            out.extend("  " + line for line in d["output"].splitlines())
        if "error" in d:
            out.append(f"error: {d['error']}")
        return "\n".join(out) + "\n"

    def render(self, fmt: str = "text") -> str:
        return self.to_json() if fmt == "json" else self.to_text()


def _witness_lines(w: dict):
    if "matrix" in w:
        for row in w["matrix"]:
            yield " ".join(row)
    else:
        yield from w["file"].splitlines()
    if "lift_verifies" in w:
        yield f"lift_verifies = {w['lift_verifies']}"
