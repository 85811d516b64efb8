import sys
from pathlib import Path

from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from wordrep.graph import Graph  # noqa: E402


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 7, connected: bool = False):
    n = draw(st.integers(min_n, max_n))
    vs = [str(i) for i in range(n)]
    pairs = [(a, b) for i, a in enumerate(vs) for b in vs[i + 1:]]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    g = Graph(vs, [e for e, keep in zip(pairs, mask) if keep])
    if connected:
        from hypothesis import assume
        assume(g.is_connected())
    return g


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n, (ok, detail) in sorted(results.items()):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {n}: {detail}")
