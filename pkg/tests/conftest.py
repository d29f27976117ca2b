import random
from fractions import Fraction

import pytest

_acceptance = []


def rand_rational(rng):
    return Fraction(rng.randint(1, 9), rng.randint(1, 9))


def random_product_lists(seed, length):
    """Positive a, b, c prefixes, b_0 = 1, numerators/denominators in [1, 9]."""
    rng = random.Random(seed)
    a = [rand_rational(rng) for _ in range(length)]
    b = [Fraction(1)] + [rand_rational(rng) for _ in range(length - 1)]
    c = [rand_rational(rng) for _ in range(length)]
    return a, b, c


def list_spec(values):
    return "list:" + ",".join(f"{v.numerator}/{v.denominator}" for v in values)


def product_spec(a, b, c):
    return f"product:a={list_spec(a)},b={list_spec(b)},c={list_spec(c)}"


def rows_of(w):
    return [[int(x) if x.denominator == 1 else x for x in row] for row in w.rows]


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is not None and rep.when == "call":
        _acceptance.append((marker.args[0], item.name, rep.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for crit, name, outcome in sorted(_acceptance):
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {crit}: {status}  {name}")
