"""Lines collected by test_acceptance and printed in the pytest summary."""

LINES: list = []


def record(number: int, title: str, passed: bool, detail: str) -> None:
    line = f"[{'PASS' if passed else 'FAIL'}] criterion {number}: {title} ({detail})"
    LINES.append(line)
    print(line)
