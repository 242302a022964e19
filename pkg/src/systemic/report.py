"""Verification reports with a canonical structured serialization."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

VERDICTS = ("pass", "fail", "skipped", "inconclusive")


def _plain(x):
    """Convert witnesses to JSON-ready values with a deterministic layout."""
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (frozenset, set)):
        return sorted((_plain(v) for v in x), key=lambda v: json.dumps(v, sort_keys=True))
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, (str, int, float, bool)) or x is None:
        return x
    names = getattr(x, "elements", None)
    if names is not None and hasattr(x, "name"):
        return x.name
    return str(x)


@dataclass
class ClauseRecord:
    clause: str
    anchor: str
    verdict: str
    witness: object = None
    note: str = ""

    def __post_init__(self):
        if self.verdict not in VERDICTS:
            raise ValueError(f"unknown verdict {self.verdict!r}")
        if self.verdict in ("fail", "inconclusive") and self.witness is None and not self.note:
            raise ValueError(f"{self.verdict} record {self.clause!r} needs a witness or note")

    def as_dict(self):
        return {"clause": self.clause, "anchor": self.anchor, "verdict": self.verdict,
                "witness": _plain(self.witness), "note": self.note}


@dataclass
class VerificationReport:
    suite: str
    scope: dict = field(default_factory=dict)
    records: list[ClauseRecord] = field(default_factory=list)

    def add(self, clause, anchor, verdict, witness=None, note="") -> ClauseRecord:
        rec = ClauseRecord(clause, anchor, verdict, witness, note)
        self.records.append(rec)
        return rec

    def check(self, clause, anchor, ok, witness=None, note=""):
        """Record pass when ``ok`` is truthy, fail (with the witness) otherwise."""
        return self.add(clause, anchor, "pass" if ok else "fail",
                        None if ok else witness, note)

    def skip(self, clause, anchor, tag):
        return self.add(clause, anchor, "skipped", None, tag)

    def extend(self, other: "VerificationReport", prefix: str = ""):
        for r in other.records:
            self.records.append(ClauseRecord(prefix + r.clause, r.anchor, r.verdict,
                                             r.witness, r.note))

    @property
    def summary(self) -> dict[str, int]:
        counts = {v: 0 for v in VERDICTS}
        for r in self.records:
            counts[r.verdict] += 1
        return counts

    def by_verdict(self, verdict) -> list[ClauseRecord]:
        return [r for r in self.records if r.verdict == verdict]

    @property
    def ok(self) -> bool:
        return not self.by_verdict("fail")

    @property
    def exit_code(self) -> int:
        s = self.summary
        if s["fail"]:
            return 1
        if s["inconclusive"]:
            return 2
        return 0

    def as_dict(self):
        return {"suite": self.suite, "scope": _plain(self.scope),
                "records": [r.as_dict() for r in self.records], "summary": self.summary}

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True, indent=2, ensure_ascii=False) + "\n"

    def to_text(self, verbose: bool = False) -> str:
        lines = [f"suite {self.suite}"]
        if self.scope:
            lines.append("scope " + ", ".join(f"{k}={_plain(v)}" for k, v in
                                              sorted(self.scope.items())))
        for r in self.records:
            if not verbose and r.verdict == "pass":
                continue
            extra = f" witness={json.dumps(_plain(r.witness), ensure_ascii=False)}" \
                if r.witness is not None else ""
            note = f" ({r.note})" if r.note else ""
            lines.append(f"  {r.verdict:<12} {r.clause} [{r.anchor}]{extra}{note}")
        s = self.summary
        lines.append("summary " + " ".join(f"{k}={s[k]}" for k in VERDICTS))
        return "\n".join(lines) + "\n"
