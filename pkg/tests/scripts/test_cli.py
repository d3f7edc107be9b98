"""Tests for the einsteincheck command line tool."""
import sys
import json
from unittest.mock import patch

import pytest

from einsteincheck.core.reproduce import CheckRecord
from einsteincheck.exceptions import EliminationError
from einsteincheck.scripts.einsteincheck_tool import (
    EXIT_FAILED,
    EXIT_INTERRUPTED,
    EXIT_USAGE,
    load_config,
    main,
    parse_arguments,
)


@pytest.fixture(autouse=True)
def clean_cwd(tmp_path, monkeypatch):
    """Run every command where no configuration file can be picked up."""
    monkeypatch.chdir(tmp_path)
    return tmp_path


def run(argv):
    with patch.object(sys, 'argv', ['einsteincheck', *argv]):
        main()


class TestCLIBasics:
    """Test basic CLI functionality."""

    def test_version_flag(self, capsys):
        with pytest.raises(SystemExit) as exc_info:
            run(['--version'])
        assert exc_info.value.code == 0
        assert 'EinsteinCheck 1.0.0' in capsys.readouterr().out

    def test_help_flag(self, capsys):
        with pytest.raises(SystemExit) as exc_info:
            run(['--help'])
        assert exc_info.value.code == 0
        out = capsys.readouterr().out
        assert 'usage:' in out
        assert 'reproduce' in out

    def test_command_is_required(self):
        with pytest.raises(SystemExit) as exc_info:
            run([])
        assert exc_info.value.code == 2

    def test_type_choices(self):
        with pytest.raises(SystemExit):
            parse_arguments(['spaces', '--type', 'III'])

    def test_flags_override_defaults(self):
        args = parse_arguments(['solve', '--group', 'E7', '--precision', '20', '--width', '1/10000000',
                                '--unit-einstein', '-j', '3'])
        config = load_config(args)
        assert config.group == 'E7'
        assert config.precision == 20
        assert config.jobs == 3
        assert config.unit_einstein
        assert str(config.width) == '1/10000000'

    def test_config_file_is_read(self, clean_cwd):
        (clean_cwd / 'einsteincheck.yaml').write_text("precision: 16\nformat: csv\n")
        config = load_config(parse_arguments(['spaces']))
        assert config.precision == 16
        assert config.output_format == 'csv'


class TestSpacesCommand:
    """Test the spaces subcommand."""

    def test_json(self, capsys):
        run(['spaces', '--group', 'E6', '--format', 'json'])
        data = json.loads(capsys.readouterr().out)
        assert [s['node'] for s in data['spaces']] == [2, 3, 5]

    def test_single_row_csv(self, capsys):
        run(['spaces', '--group', 'G2', '--format', 'csv'])
        lines = capsys.readouterr().out.splitlines()
        assert len(lines) == 2
        assert lines[1].startswith('G2,2,Ia,')
        assert lines[1].endswith(',0,3,8,2')

    def test_classical_selector(self, capsys):
        run(['spaces', '--family', 'B', '--n', '5', '--type', 'IIb', '--format', 'csv'])
        lines = capsys.readouterr().out.splitlines()
        assert [line.split(',')[1] for line in lines[1:]] == ['3', '4']

    def test_verbose_lists_quotient_metrics(self, capsys):
        run(['spaces', '--group', 'F4', '--node', '4', '--verbose'])
        assert 'Kahler-Einstein' in capsys.readouterr().out

    def test_no_selector_lists_exceptional_groups(self, capsys):
        run(['spaces', '--format', 'json'])
        groups = {s['group'] for s in json.loads(capsys.readouterr().out)['spaces']}
        assert groups == {'E6', 'E7', 'E8', 'F4', 'G2'}

    def test_output_file(self, clean_cwd, capsys):
        target = clean_cwd / 'spaces.csv'
        run(['spaces', '--group', 'F4', '--format', 'csv', '-o', str(target)])
        err = capsys.readouterr().err
        assert '✓ Report saved to' in err
        assert target.read_text().splitlines()[0].startswith('group,node')

    def test_quiet_output_file(self, clean_cwd, capsys):
        target = clean_cwd / 'spaces.json'
        run(['spaces', '--group', 'F4', '--format', 'json', '-o', str(target), '-q'])
        assert capsys.readouterr().err == ''
        assert json.loads(target.read_text())['spaces']


class TestErrors:
    """Test exit codes and error messages."""

    def test_unknown_group(self, capsys):
        with pytest.raises(SystemExit) as exc_info:
            run(['spaces', '--group', 'SU(3)'])
        assert exc_info.value.code == EXIT_USAGE
        assert '❌ Selector Error' in capsys.readouterr().err

    def test_invalid_precision(self, capsys):
        with pytest.raises(SystemExit) as exc_info:
            run(['spaces', '--precision', '3'])
        assert exc_info.value.code == EXIT_USAGE
        assert '❌ Configuration Error' in capsys.readouterr().err

    def test_solve_needs_selector(self, capsys):
        with pytest.raises(SystemExit) as exc_info:
            run(['solve'])
        assert exc_info.value.code == EXIT_USAGE

    def test_sweep_needs_family(self, capsys):
        with pytest.raises(SystemExit) as exc_info:
            run(['solve', '--group', 'E6', '--sweep', '5..6'])
        assert exc_info.value.code == EXIT_USAGE

    def test_unknown_reproduce_prefix(self, capsys):
        with pytest.raises(SystemExit) as exc_info:
            run(['reproduce', '--only', 'bogus'])
        assert exc_info.value.code == EXIT_USAGE
        assert 'bogus' in capsys.readouterr().err

    def test_computation_error(self, capsys):
        with patch('einsteincheck.scripts.einsteincheck_tool.run_command',
                   side_effect=EliminationError("resultant vanished")):
            with pytest.raises(SystemExit) as exc_info:
                run(['spaces', '--group', 'E6'])
        assert exc_info.value.code == EXIT_FAILED
        assert 'Error: resultant vanished' in capsys.readouterr().err

    def test_unexpected_error(self, capsys):
        with patch('einsteincheck.scripts.einsteincheck_tool.run_command', side_effect=RuntimeError("boom")):
            with pytest.raises(SystemExit) as exc_info:
                run(['spaces', '--group', 'E6'])
        assert exc_info.value.code == EXIT_FAILED
        err = capsys.readouterr().err
        assert 'Unexpected error: boom' in err
        assert '--verbose' in err

    def test_keyboard_interrupt(self, capsys):
        with patch('einsteincheck.scripts.einsteincheck_tool.run_command', side_effect=KeyboardInterrupt):
            with pytest.raises(SystemExit) as exc_info:
                run(['spaces', '--group', 'E6'])
        assert exc_info.value.code == EXIT_INTERRUPTED
        assert 'cancelled' in capsys.readouterr().err


class TestReproduceCommand:
    """Test the reproduce subcommand."""

    def test_tables_pass(self, capsys):
        run(['reproduce', '--only', 'tables.exceptional', '--format', 'json'])
        data = json.loads(capsys.readouterr().out)
        assert data['summary']['failed'] == 0
        assert data['summary']['total'] == 10

    def test_failed_check_exits_one(self, capsys):
        failed = [CheckRecord('poly.E6', 'E6', '[1]', '[2]', False)]
        with patch('einsteincheck.scripts.einsteincheck_tool.run_checks', return_value=failed):
            with pytest.raises(SystemExit) as exc_info:
                run(['reproduce', '--only', 'poly'])
        assert exc_info.value.code == EXIT_FAILED
        assert '0/1 checks passed' in capsys.readouterr().out


class TestSolveCommand:
    """Test the solve subcommand on small spaces."""

    def test_g2_json(self, capsys):
        run(['solve', '--group', 'G2', '--format', 'json'])
        data = json.loads(capsys.readouterr().out)
        solutions = data['results'][0]['solutions']
        assert solutions
        assert all(s['classification'] != 'NotNaturallyReductive' for s in solutions)

    def test_unit_einstein(self, capsys):
        run(['solve', '--group', 'G2', '--format', 'json', '--unit-einstein'])
        data = json.loads(capsys.readouterr().out)
        assert all(s['params']['e']['value'] == '1' for s in data['results'][0]['solutions'])
