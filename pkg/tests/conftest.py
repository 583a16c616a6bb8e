import os

from hypothesis import HealthCheck, settings

settings.register_profile(
    "default",
    max_examples=int(os.environ.get("HYPOTHESIS_MAX_EXAMPLES", "60")),
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(mod.TITLES):
        if num not in mod.RESULTS:
            terminalreporter.write_line(f"criterion {num:2d}: NOT RUN  {mod.TITLES[num]}")
            continue
        ok, detail = mod.RESULTS[num]
        line = f"criterion {num:2d}: {'PASS' if ok else 'FAIL'}  {mod.TITLES[num]}"
        if detail:
            line += f"  ({detail})"
        terminalreporter.write_line(line)
