"""JSON-serializable reports for the command line front end."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from .ideals import Ideal
from .phi import EMPTY
from .verdict import Verdict

SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["command", "ring", "bound", "results"],
    "properties": {
        "command": {"enum": ["classify", "ideals", "verify", "search"]},
        "ring": {"type": "string"},
        "ideal": {"type": ["string", "null"]},
        "phi": {"type": ["string", "null"]},
        "bound": {"type": "integer", "minimum": 0},
        "ideal_bound": {"type": ["integer", "null"]},
        "results": {"type": "array", "items": {"$ref": "#/$defs/result"}},
    },
    "additionalProperties": False,
    "$defs": {
        "status": {"enum": ["holds", "fails", "holds_up_to"]},
        "result": {
            "type": "object",
            "required": ["status"],
            "properties": {
                "class": {"type": "string"},
                "theorem": {"type": "string"},
                "ideal": {"type": "string"},
                "search": {"type": "string"},
                "status": {"$ref": "#/$defs/status"},
                "witness": {"type": "array"},
                "bound": {"type": "integer"},
                "details": {"type": "object"},
            },
            "oneOf": [
                {"required": ["class"]},
                {"required": ["theorem"]},
                {"required": ["ideal"]},
                {"required": ["search"]},
            ],
            "additionalProperties": False,
        },
    },
}

_KINDS = ("class", "theorem", "ideal", "search")


def to_json_value(x):
    """Witness entries as JSON values: tuples become lists, ideals their ``gen`` text."""
    if isinstance(x, Ideal):
        return x.text()
    if isinstance(x, tuple):
        return [to_json_value(c) for c in x]
    if isinstance(x, list):
        return [to_json_value(c) for c in x]
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, bool) or x is None:
        return x
    if isinstance(x, int):
        return int(x)
    if x is EMPTY:
        return "empty"
    if isinstance(x, Verdict):
        return str(x)
    return str(x)


@dataclass
class Result:
    kind: str
    name: str
    status: str
    witness: list | None = None
    bound: int | None = None
    details: dict | None = None

    @classmethod
    def of(cls, kind: str, name: str, v: Verdict, details: dict | None = None) -> Result:
        return cls(
            kind,
            name,
            v.status.value,
            [to_json_value(w) for w in v.witness] if v.failed else None,
            v.bound,
            details,
        )

    def to_dict(self) -> dict:
        out = {self.kind: self.name, "status": self.status}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.bound is not None:
            out["bound"] = self.bound
        if self.details is not None:
            out["details"] = self.details
        return out

    @classmethod
    def from_dict(cls, d: dict) -> Result:
        kind = next(k for k in _KINDS if k in d)
        return cls(kind, d[kind], d["status"], d.get("witness"), d.get("bound"), d.get("details"))


@dataclass
class Report:
    command: str
    ring: str
    bound: int
    results: list = field(default_factory=list)
    ideal: str | None = None
    phi: str | None = None
    ideal_bound: int | None = None

    def to_dict(self) -> dict:
        d = asdict(self)
        d["results"] = [r.to_dict() for r in self.results]
        return d

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, d: dict) -> Report:
        d = dict(d)
        d["results"] = [Result.from_dict(r) for r in d["results"]]
        return cls(**d)

    @classmethod
    def from_json(cls, text: str) -> Report:
        return cls.from_dict(json.loads(text))

    def to_table(self) -> str:
        head = [f"ring: {self.ring}"]
        if self.ideal is not None:
            head.append(f"ideal: {self.ideal}")
        if self.phi is not None:
            head.append(f"phi: {self.phi}")
        lines = ["  ".join(head)]
        width = max([len(r.name) for r in self.results] + [4])
        for r in self.results:
            status = r.status if r.bound is None else f"{r.status}({r.bound})"
            line = f"{r.name:<{width}}  {status}"
            if r.witness is not None:
                line += "  witness " + json.dumps(r.witness)
            if r.details:
                line += "  " + ", ".join(f"{k}={json.dumps(v)}" for k, v in r.details.items())
            lines.append(line)
        return "\n".join(lines)


def validate(d: dict) -> None:
    """Raise ``jsonschema.ValidationError`` unless ``d`` follows :data:`SCHEMA`."""
    import jsonschema

    jsonschema.validate(d, SCHEMA)
