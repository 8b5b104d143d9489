import numpy as np
import pytest

from pointless.dataclass import (
    AMBIGUOUS,
    INERT_CASE,
    SPLIT_CASE,
    CountResult,
    LPoly,
    ModPLData,
    PrimeRecord,
    exceptional,
    weil_bounds_hold,
)
from pointless.jacobian import fp_model
from pointless.lifting import naive_lift
from pointless.lpoly_modp import b_relations


class TestLPoly:
    def test_functional_equation(self):
        lp = LPoly(7, 1, 2, 3)
        assert lp.coefficients() == (1, 1, 2, 3, 14, 49, 343)
        assert lp.value_at(1) == sum(lp.coefficients())
        assert lp.value_at(-1) == 1 - 1 + 2 - 3 + 14 - 49 + 343

    def test_weil_bounds(self):
        p = 11
        assert weil_bounds_hold(p, 19, 0, 0)
        assert not weil_bounds_hold(p, 20, 0, 0)
        assert not weil_bounds_hold(p, 0, 15 * p, 0)
        assert weil_bounds_hold(p, 0, 15 * p - 1, 0)
        assert not LPoly(p, 0, 0, 20 * p * p).weil_ok()

    def test_reciprocal_roots_lie_on_the_circle(self, c2_conic):
        p = 11
        lp = naive_lift(fp_model(c2_conic, p).h, p)
        roots = lp.reciprocal_roots()
        assert roots.shape == (6,)
        np.testing.assert_allclose(np.abs(roots), np.sqrt(p), rtol=1e-6)

    def test_reduces_to(self):
        lp = LPoly(101, -3, 40, 250)
        assert lp.reduces_to(ModPLData(p=101, case=SPLIT_CASE, coeffs=(98, 40, 48)))
        assert lp.reduces_to(ModPLData(p=101, case=INERT_CASE, coeffs=b_relations(-3, 40, 250, 101)))
        assert not lp.reduces_to(ModPLData(p=101, case=SPLIT_CASE, coeffs=(0, 40, 48)))


def test_count_result_weil():
    assert CountResult(p=11, k=1, count=12).weil_ok()
    assert not CountResult(p=11, k=1, count=40).weil_ok()


class TestPrimeRecord:
    def test_ok_record(self):
        record = PrimeRecord.from_lpoly(LPoly(17, 1, 2, 3), "s", group_ops=5)
        assert record.is_ok and record.lpoly == LPoly(17, 1, 2, 3)
        assert record.to_json_line() == '{"p":17,"status":"ok","split":"s","a1":1,"a2":2,"a3":3}'
        assert record.stats() == {"p": 17, "status": "ok", "timings": {}, "group_ops": 5}

    def test_other_statuses(self):
        record = PrimeRecord(p=19, status=AMBIGUOUS, split="i")
        assert not record.is_ok and record.lpoly is None
        assert exceptional("h0") == "exceptional:h0"
        with pytest.raises(ValueError):
            exceptional("unlucky")
