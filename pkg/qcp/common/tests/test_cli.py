import os
import csv
import importlib.util

import pytest

RUN_PY = os.path.join(os.path.dirname(__file__), '..', '..', '..', 'run.py')


@pytest.fixture(scope='module')
def cli():
    spec = importlib.util.spec_from_file_location('qcp_run', RUN_PY)
    module = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(module)
    return module


def test_list(cli, capsys):
    assert cli.main(['list']) == 0
    out = capsys.readouterr().out
    assert 'mach_zehnder' in out and 'Fig. 3' in out


def test_list_csv(cli, capsys):
    assert cli.main(['list', '--format', 'csv']) == 0
    rows = list(csv.reader(capsys.readouterr().out.splitlines()))
    assert rows[0] == ['name', 'figure', 'description']
    assert len(rows) == 9


def test_run_closed_shutter(cli, tmp_path):
    code = cli.main(['run', 'mach_zehnder', '--set', 'shutter=closed', '--seed', '7',
                     '--count', '500', '--out', str(tmp_path)])
    assert code == 0
    with open(tmp_path / 'mach_zehnder' / 'report.csv', newline='') as f:
        rows = {r['name']: r for r in csv.DictReader(f)}
    assert float(rows['detect.D1']['value']) == pytest.approx(0.25, abs=1e-10)
    assert float(rows['detect.absorbed']['value']) == pytest.approx(0.5, abs=1e-10)


def test_unknown_scenario_exits_2(cli, tmp_path):
    assert cli.main(['run', 'bogus', '--out', str(tmp_path)]) == 2


def test_unknown_key_exits_2(cli, tmp_path):
    assert cli.main(['run', 'beam_splitter', '--set', 'mirror=1', '--out', str(tmp_path)]) == 2


def test_failed_assertion_exits_1_and_still_writes(cli, tmp_path):
    # a negative slack turns every anchored pair into a compatibility violation
    code = cli.main(['run', 'beam_splitter', '--count', '200', '--slack=-1', '--out', str(tmp_path)])
    assert code == 1
    assert (tmp_path / 'beam_splitter' / 'report.csv').exists()


def test_sweep_writes_csv(cli, tmp_path):
    code = cli.main(['sweep', 'mach_zehnder', 'hwp_phase', '0', 'pi/2', 'pi', '--count', '0',
                     '--out', str(tmp_path)])
    assert code == 0
    with open(tmp_path / 'mach_zehnder' / 'sweep_hwp_phase.csv', newline='') as f:
        rows = list(csv.DictReader(f))
    assert [float(r['detect.D1']) for r in rows] == pytest.approx([0.0, 0.5, 1.0], abs=1e-10)
