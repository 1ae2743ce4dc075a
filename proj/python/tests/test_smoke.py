import os
import subprocess

import pytest

import oaparity as oa


def test_plane_parities():
    a = oa.linear_mols(5)
    assert (a.k, a.n) == (6, 5)
    t = oa.tau_parity(a)
    assert oa.check_plausible(t)["pp_plausible"] == "yes"
    assert oa.tau_from_sigma(oa.sigma_parity(a), 5) == t


def test_text_round_trip():
    a = oa.linear_mols(3)
    assert oa.OrthogonalArray.from_text(a.to_text()) == a
    assert oa.OrthogonalArray(a.k, a.n, a.rows()) == a


def test_invalid_array_raises():
    with pytest.raises(oa.DomainError):
        oa.OrthogonalArray(3, 2, [[0, 0, 0], [0, 1, 1], [1, 0, 1], [1, 1, 1]])
    with pytest.raises(ValueError):
        oa.linear_mols(6)


def test_classes():
    table = oa.enumerate_classes(5, 3)
    assert table["classes"] == 2
    assert [size for size, _ in table["entries"]] == [192, 320]
    assert oa.class_of_oa(oa.thm45_oa(11, "rnr"))["size"] == 320
    assert oa.determining_components(oa.tau_parity(oa.thm45_oa(11, "nnn"))) == [0, 0, 0, 0, 1, 1, 0, 0, 0]


def test_census():
    c = oa.ensemble_census(oa.tau_from_sigma(oa.block_sigma(10), 10))
    assert c["x"] == 3
    assert all(check["passed"] for check in c["checks"])
    assert oa.max_equiparity(8) == 20
    assert oa.is_good(6, oa.optimal_mu(6))


def test_search():
    assert oa.count_latin_squares(4) == 576
    assert len(oa.achieved_parity_types(5)) == 4


def test_cli_in_process():
    code, out, _ = oa.run_cli(["enumerate", "--k", "4", "--nmod4", "1"])
    assert code == 0
    assert out.startswith("2 classes: 8, 24")


@pytest.mark.skipif("OAPARITY_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_binary(tmp_path):
    path = tmp_path / "q4.oa"
    path.write_text(oa.linear_mols(4).to_text())
    done = subprocess.run([os.environ["OAPARITY_CLI"], "validate", str(path)], capture_output=True, text=True)
    assert done.returncode == 0
    assert done.stdout == "OA(5,4) valid\n"
