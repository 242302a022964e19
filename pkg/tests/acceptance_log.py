"""Per-criterion outcomes collected by test_acceptance and printed at the end of the run."""

RESULTS: dict[int, list[tuple[str, bool, str]]] = {}


def record(criterion: int, part: str, ok: bool, detail: str = "") -> bool:
    RESULTS.setdefault(criterion, []).append((part, ok, detail))
    return ok


def lines() -> list[str]:
    out = []
    for c in sorted(RESULTS):
        parts = RESULTS[c]
        verdict = "PASS" if all(ok for _, ok, _ in parts) else "FAIL"
        body = "; ".join(f"{p}: {'ok' if ok else 'FAIL'}" + (f" ({d})" if d else "")
                         for p, ok, d in parts)
        out.append(f"criterion {c:2d}: {verdict}  {body}")
    return out
