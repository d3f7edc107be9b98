"""Tests for core.reproduce module."""

import pytest

from einsteincheck.core import reproduce
from einsteincheck.core.config import RunConfig
from einsteincheck.core.reference import SWEEP_RANKS
from einsteincheck.core.reproduce import CheckRecord, _match_tuples, all_tasks, run_checks, sweep


@pytest.fixture
def config():
    return RunConfig(jobs=2)


class TestTasks:
    """Test the task registry."""

    def test_task_names(self):
        names = set(all_tasks())
        assert {'tables.exceptional', 'poly.exceptional', 'signs', 'nr_only', 'nr_branch', 'brackets'} <= names
        for family in 'BCD':
            assert {f'tables.{family}', f'poly.{family}', f'window.{family}'} <= names
        assert {'solutions.E6', 'solutions.E7', 'ib.E7', 'ib.E8', 'ib.F4'} <= names


class TestRunChecks:
    """Test running selected reproduction tasks."""

    def test_dimension_tables(self, config):
        records = run_checks(config, only=['tables'])
        assert records
        assert all(r.passed for r in records), [r for r in records if not r.passed]
        assert [r.id for r in records] == sorted(r.id for r in records)
        assert any(r.id == 'tables.E6.IIb' for r in records)
        assert any(r.id == 'tables.B05' and 'Type Ib' in r.note for r in records)

    def test_sign_checks(self, config):
        records = run_checks(config, only=['signs'])
        assert [r.id for r in records] == ['signs.B.f1', 'signs.B.f17_10', 'signs.B.f1_factorization']
        assert all(r.passed for r in records)

    def test_prefix_filter_selects_nothing(self, config):
        assert run_checks(config, only=['nothing']) == []

    def test_failing_task_becomes_record(self, config, monkeypatch):
        def broken(cfg):
            raise RuntimeError("boom")

        monkeypatch.setattr(reproduce, 'all_tasks', lambda: {'broken': broken})
        records = run_checks(config)
        assert records == [CheckRecord('broken.error', 'broken', '', '', False, note='RuntimeError: boom')]


class TestMatchTuples:
    """Test matching computed solutions to printed ones."""

    def test_order_free_match(self):
        expected = [(1.0, 2.0), (3.0, 4.0)]
        found = [(3.00001, 4.0), (1.0, 1.99999)]
        assert _match_tuples(expected, found, 1e-4)

    def test_count_mismatch(self):
        assert not _match_tuples([(1.0,)], [(1.0,), (1.0,)], 1e-4)

    def test_each_found_tuple_used_once(self):
        assert not _match_tuples([(1.0,), (1.0,)], [(1.0,), (2.0,)], 1e-4)

    def test_outside_tolerance(self):
        assert not _match_tuples([(1.0, 2.0)], [(1.0, 2.01)], 1e-4)


class TestSweep:
    """Test the classical rank sweep."""

    def test_unknown_family(self, config):
        with pytest.raises(ValueError):
            sweep('E', 6, 6, config)

    @pytest.mark.slow
    def test_c3_has_metric_in_window(self, config):
        rows = sweep('c', 3, 3, config)
        assert len(rows) == 1
        row = rows[0]
        assert (row.family, row.n, row.p, row.dims) == ('C', 3, 2, (3, 3, 8, 6))
        assert row.non_nr >= 1
        assert row.in_window
        assert len(row.x2) == row.non_nr

    @pytest.mark.slow
    @pytest.mark.parametrize("family", ['B', 'C', 'D'])
    def test_every_rank_has_metric_in_window(self, config, family):
        ranks = SWEEP_RANKS[family]
        rows = sweep(family, ranks.start, ranks.stop - 1, config)
        assert [row.n for row in rows] == list(ranks)
        assert all(row.in_window for row in rows), [row for row in rows if not row.in_window]


@pytest.mark.slow
@pytest.mark.parametrize("prefix", ['poly', 'solutions', 'ib', 'nr_only', 'nr_branch', 'brackets', 'window'])
def test_published_artefacts_reproduce(config, prefix):
    records = run_checks(config, only=[prefix])
    assert records
    assert all(r.id.startswith(prefix) for r in records)
    assert all(r.passed for r in records), [r for r in records if not r.passed]


@pytest.mark.slow
def test_e7_and_e8_solution_tuples(config):
    records = {r.id: r for r in run_checks(config, only=['solutions.E7', 'ib.E8'])}
    assert records['solutions.E7.IIb'].passed
    assert records['ib.E8.solutions'].passed
    assert records['ib.E8.naturally_reductive'].computed == '7/23, 7/23, 7/23, 39/92'
