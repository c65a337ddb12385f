import pytest
from hypothesis import given, strategies as st

from pythagorean import InvalidBasket, MeanKind
from pythagorean.index import BasketEntry, IndexBasket, aggregate_index, index_report
from pythagorean.io import parse_basket_csv

AM, GM, HM = MeanKind.ARITHMETIC, MeanKind.GEOMETRIC, MeanKind.HARMONIC


@pytest.fixture
def cpi(fixtures):
    return parse_basket_csv(fixtures / "cpi2017.csv")


@st.composite
def baskets(draw):
    n = draw(st.integers(1, 10))
    raw = draw(st.lists(st.floats(0.05, 1.0), min_size=n, max_size=n))
    idx = draw(st.lists(st.floats(10.0, 500.0), min_size=n, max_size=n))
    total = sum(raw)
    return IndexBasket((f"c{i}", w / total, x) for i, (w, x) in enumerate(zip(raw, idx)))


class TestBasket:
    def test_weights_sum(self):
        with pytest.raises(InvalidBasket):
            IndexBasket([("a", 0.5, 100), ("b", 0.4, 120)])

    def test_rounded_weights_accepted(self):
        IndexBasket([("a", 0.3333334, 100), ("b", 0.3333333, 120), ("c", 0.3333333, 90)])

    def test_duplicate(self):
        with pytest.raises(InvalidBasket):
            IndexBasket([("a", 0.5, 100), ("a", 0.5, 120)])

    @pytest.mark.parametrize("w,x", [(0.0, 100), (1.0, 0.0), (1.0, -5)])
    def test_entry_domain(self, w, x):
        with pytest.raises(InvalidBasket):
            IndexBasket([("a", w, x)] + ([("b", 1.0, 100)] if w == 0 else []))


class TestAggregate:
    def test_cpi_table(self, cpi):
        assert len(cpi.entries) == 8
        assert aggregate_index(cpi, AM) == pytest.approx(130.20, abs=0.01)
        assert aggregate_index(cpi, GM) == pytest.approx(129.40, abs=0.01)
        assert aggregate_index(cpi, HM) == pytest.approx(128.50, abs=0.01)

    def test_two_categories(self):
        b = IndexBasket([("x", 0.5, 100), ("y", 0.5, 400)])
        assert aggregate_index(b, AM) == pytest.approx(250)
        assert aggregate_index(b, GM) == pytest.approx(200)
        assert aggregate_index(b, HM) == pytest.approx(160)

    def test_single_category(self):
        b = IndexBasket([BasketEntry("all", 1.0, 117.3)])
        for k in MeanKind:
            assert aggregate_index(b, k) == 117.3

    @given(baskets())
    def test_ordering(self, b):
        am, gm, hm = (aggregate_index(b, k) for k in MeanKind)
        assert am >= gm * (1 - 1e-12) and gm >= hm * (1 - 1e-12)
        idx = [e.sub_index for e in b.entries]
        if max(idx) - min(idx) > 1e-6 * max(idx):
            assert am > gm > hm

    @given(baskets(), st.floats(0.01, 100.0))
    def test_rebasing(self, b, lam):
        for k in MeanKind:
            assert aggregate_index(b.rebased(lam), k) == pytest.approx(lam * aggregate_index(b, k), rel=1e-12)


class TestReport:
    def test_cpi_spread(self, cpi):
        r = index_report(cpi)
        assert r.spread_pct == pytest.approx(1.3, abs=0.1)
        assert r.differences["AM-HM"] == pytest.approx(r.differences["AM-GM"] + r.differences["GM-HM"])

    def test_uniform(self):
        r = index_report(IndexBasket([("a", 0.25, 140.0), ("b", 0.75, 140.0)]))
        assert set(r.aggregates.values()) == {140.0}
        assert r.spread_pct == 0

    def test_two_categories(self):
        r = index_report(IndexBasket([("x", 0.5, 100), ("y", 0.5, 400)]))
        assert r.spread_pct == pytest.approx(100 * 90 / 250)
        assert r.as_dict()["aggregates"] == pytest.approx({"arithmetic": 250, "geometric": 200, "harmonic": 160})
