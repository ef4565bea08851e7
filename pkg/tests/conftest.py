import os

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from polarkoszul.graphs import SimpleGraph
from polarkoszul.koszul import CoefficientModule, KoszulElement
from polarkoszul.monomials import VariableSpace, minimalize

settings.register_profile(
    "default",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile("thorough", deadline=None, max_examples=400)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def monomial_ideals(draw, max_vars=3, max_exp=3, max_gens=4):
    n = draw(st.integers(1, max_vars))
    vec = st.tuples(*[st.integers(0, max_exp)] * n).filter(any)
    gens = draw(st.lists(vec, min_size=1, max_size=max_gens))
    return minimalize(gens, VariableSpace.standard(n))


@st.composite
def free_elements(draw, n=None, max_exp=2, max_terms=4, degree=None):
    """Random elements of K(x; S) in n variables (homogeneous homological degree if given)."""
    if n is None:
        n = draw(st.integers(1, 4))
    space = VariableSpace.standard(n)
    module = CoefficientModule.free(space)
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        u = draw(st.tuples(*[st.integers(0, max_exp)] * n))
        if degree is None:
            J = draw(st.sets(st.integers(0, n - 1)))
        else:
            J = draw(st.sets(st.integers(0, n - 1), min_size=min(degree, n), max_size=min(degree, n)))
        terms[(u, tuple(sorted(J)))] = draw(st.integers(-5, 5))
    return KoszulElement(module, terms)


@st.composite
def graphs(draw, min_n=1, max_n=5, connected=False):
    from polarkoszul.graphs import is_connected

    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    G = SimpleGraph.from_edges(n, chosen)
    if connected and not is_connected(G):
        # join consecutive components along a path so the draw stays cheap
        extra = [(i, i + 1) for i in range(1, n)]
        G = SimpleGraph.from_edges(n, set(chosen) | set(extra))
    return G


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not getattr(mod, "RESULTS", None):
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
