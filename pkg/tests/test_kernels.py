import pytest

from mapquot import _census_py
from mapquot.maps import PlaneMap, canonical_code

try:
    from mapquot import _census_c
except ImportError:
    _census_c = None

CASES = [
    dict(outer_deg=4, inner_deg=4, n_inner=3),
    dict(outer_deg=4, inner_deg=4, n_inner=4, require_simple=True, require_outer_simple=True),
    dict(outer_deg=3, inner_deg=3, n_inner=5),
    dict(outer_deg=3, inner_deg=3, n_inner=5, require_simple=True, require_outer_simple=True),
    dict(outer_deg=2, inner_deg=4, n_inner=3),
    dict(outer_deg=1, inner_deg=3, n_inner=5),
    dict(outer_deg=6, inner_deg=4, n_inner=3, require_outer_simple=True),
    dict(outer_deg=4, inner_deg=4, n_inner=2, require_loopless=True),
]


@pytest.mark.parametrize("case", CASES)
def test_pure_kernel_output_is_valid_and_duplicate_free(case):
    sigmas = _census_py.run_census(**case)
    codes = set()
    for s in sigmas:
        m = PlaneMap(s, 0)
        codes.add(canonical_code(m))
    assert len(codes) == len(sigmas)


@pytest.mark.skipif(_census_c is None, reason="compiled kernel not built")
@pytest.mark.parametrize("case", CASES)
def test_kernels_agree(case):
    assert _census_py.run_census(**case) == _census_c.run_census(**case)


def test_odd_dart_count_yields_nothing():
    assert _census_py.run_census(3, 3, 2) == []


def test_kernel_selection():
    from mapquot import kernel

    assert callable(kernel.run_census)
