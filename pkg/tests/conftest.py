import os
import random
import subprocess
import sys
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from clifftwist.algebra import Multivector, Signature

ACCEPTANCE = pytest.StashKey[dict]()


def all_signatures(max_n=9):
    return [Signature(p, n - p) for n in range(max_n + 1) for p in range(n + 1)]


SMALL = all_signatures(4)


def sig_id(sig):
    return f"{sig.p}-{sig.q}"


@st.composite
def multivectors(draw, sig, max_terms=5):
    terms = draw(
        st.dictionaries(
            st.integers(0, sig.dim - 1),
            st.fractions(min_value=-4, max_value=4, max_denominator=4),
            max_size=max_terms,
        )
    )
    return Multivector(sig, terms)


signatures_upto6 = st.integers(0, 6).flatmap(lambda n: st.integers(0, n).map(lambda p: Signature(p, n - p)))


def random_spinor(cd, rng, terms=4):
    """u * e for a random sparse u, e = f or f + f-hat."""
    sig = cd.sig
    u = Multivector(sig, {rng.randrange(sig.dim): Fraction(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range(terms)})
    e = Multivector.zero(sig)
    for c in cd.ring.components:
        e = e + c.idem
    return u * e


@pytest.fixture
def rng():
    return random.Random(20240607)


@pytest.fixture
def run_cli():
    def run(*args, env=None):
        full_env = dict(os.environ, CLIFFTWIST_JOBS="1")
        if env:
            full_env.update(env)
        return subprocess.run(
            [sys.executable, "-m", "clifftwist", *args],
            capture_output=True,
            text=True,
            env=full_env,
            timeout=600,
        )

    return run


@pytest.fixture
def acceptance(request):
    log = request.config.stash.setdefault(ACCEPTANCE, {})

    def record(number, title, failures):
        log[number] = (title, list(failures))
        assert not failures, f"criterion {number} failed: {failures[:5]}"

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    log = config.stash.get(ACCEPTANCE, None)
    if not log:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(log):
        title, failures = log[number]
        status = "PASS" if not failures else f"FAIL ({len(failures)} problems)"
        terminalreporter.write_line(f"criterion {number}: {status}  {title}")
