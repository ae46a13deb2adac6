"""One pass/fail line per acceptance criterion."""

ACCEPTANCE: dict = {}


def record_criterion(number: int, title: str, ok: bool, detail: str = "") -> None:
    ACCEPTANCE[number] = (title, ok, detail)
    print(f"criterion {number}: {'PASS' if ok else 'FAIL'} {title} {detail}".rstrip())

