import hypothesis
from hypothesis import strategies as st

from cmsops.coeffs import CoeffFrac, ParamPoly, PARAMS

hypothesis.settings.register_profile(
    "exact", deadline=None, max_examples=30, derandomize=True
)
hypothesis.settings.load_profile("exact")


small_fractions = st.fractions(
    min_value=-6, max_value=6, max_denominator=6
).filter(lambda f: f != 0)


@st.composite
def param_polys(draw, max_terms: int = 5, params: tuple[str, ...] = ("k", "p0", "l")):
    """Sparse parameter polynomials with a few small-degree terms."""
    idx = {name: i for i, name in enumerate(PARAMS)}
    n_terms = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(n_terms):
        exp = [0] * len(PARAMS)
        for name in params:
            exp[idx[name]] = draw(st.integers(0, 2))
        terms[tuple(exp)] = draw(small_fractions)
    return ParamPoly(dict(terms))


@st.composite
def coeff_fracs(draw):
    num = draw(param_polys())
    den = draw(param_polys(max_terms=3).filter(lambda p: not p.is_zero()))
    return CoeffFrac(num, den)
