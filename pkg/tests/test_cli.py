import json

import pytest

from reebdeform import cli


def run(argv):
    return cli.main(argv)


class TestConfig:
    def test_defaults(self):
        cfg = cli.load_config(None)
        assert cfg.t_list == cli.DEFAULT_T_LIST
        assert cfg.profile.delta == 0.3
        assert (cfg.n_th1, cfg.n_th2, cfg.n_s) == (20, 20, 20)

    def test_file_values(self, tmp_path):
        p = tmp_path / "cfg.json"
        p.write_text(
            json.dumps(
                {
                    "profile": {"delta": 0.25},
                    "t_list": [0.0, 1.0],
                    "grid": {"n_s": 9},
                    "tolerances": {"fd_step": 1e-4},
                    "output_dir": str(tmp_path / "o"),
                }
            )
        )
        cfg = cli.load_config(str(p))
        assert cfg.profile.delta == 0.25
        assert cfg.t_list == [0.0, 1.0]
        assert cfg.n_s == 9 and cfg.n_th1 == 20
        assert cfg.fd_step == 1e-4
        assert cfg.output_dir == tmp_path / "o"

    def test_flag_overrides(self, tmp_path):
        class Args:
            t = "0.5,1.0"
            delta = 0.2
            grid = "4,5,6"
            out = str(tmp_path)

        cfg = cli.apply_overrides(cli.RunConfig(), Args())
        assert cfg.t_list == [0.5, 1.0]
        assert cfg.profile.delta == 0.2
        assert (cfg.n_th1, cfg.n_th2, cfg.n_s) == (4, 5, 6)

    def test_bad_t_rejected(self):
        class Args:
            t = "1.6"
            delta = None
            grid = None
            out = None

        with pytest.raises(cli.DomainError):
            cli.apply_overrides(cli.RunConfig(), Args())


class TestClassifyCommand:
    def test_below_and_at_t1(self, tmp_path):
        code = run(["--t", "0,1", "--out", str(tmp_path), "classify"])
        assert code == cli.EXIT_OK
        d0 = json.loads((tmp_path / "classify_t0.json").read_text())
        d1 = json.loads((tmp_path / "classify_t1.json").read_text())
        assert d0["verdict"] == "contact_positive"
        assert d1["verdict"] == "integrable"
        assert all(v == 1 for v in d0["openbook_sign_profile"])

    def test_above_t1_reports_mixed_signs(self, tmp_path):
        # the expected negative verdict is not met: the wedge is positive in
        # a window around s = 0 for t > 1, so the command exits 2 and the
        # JSON carries the sign counts
        code = run(["--t", "1.25", "--out", str(tmp_path), "classify"])
        assert code == cli.EXIT_VERIFY
        d = json.loads((tmp_path / "classify_t1_25.json").read_text())
        assert d["verdict"] == "mixed_signs"
        assert d["n_negative"] > d["n_positive"] > 0
        lo, hi = d["tube_interval"]
        assert lo == -0.3 and 0.0 < hi < 0.3

    def test_deterministic_output(self, tmp_path):
        a, b = tmp_path / "a", tmp_path / "b"
        run(["--t", "0.5,1.25", "--out", str(a), "classify"])
        run(["--t", "0.5,1.25", "--out", str(b), "classify"])
        for name in ("classify_t0_5.json", "classify_t1_25.json"):
            assert (a / name).read_bytes() == (b / name).read_bytes()


class TestLeafCommand:
    def test_outputs_and_exit(self, tmp_path):
        code = run(["--out", str(tmp_path), "leaf", "--bound", "6.28"])
        assert code == cli.EXIT_OK
        rep = json.loads((tmp_path / "leaf_report.json").read_text())
        assert rep["legendrian_residual"] <= 1e-6
        assert rep["monotone"] is True
        assert rep["s_at_bound"] is not None
        assert (tmp_path / "leaf_curve.csv").exists()
        obj = (tmp_path / "leaf_surface.obj").read_text()
        assert obj.startswith("v ") and "\nf " in obj


class TestCrosscheckCommand:
    def test_small_grid(self, tmp_path):
        code = run(
            ["--t", "0,1", "--grid", "4,4,6", "--out", str(tmp_path), "crosscheck"]
        )
        assert code == cli.EXIT_OK
        d = json.loads((tmp_path / "crosscheck.json").read_text())
        by_t = {e["t"]: e for e in d["results"]}
        assert by_t[0.0]["c_coefficient_max"] <= 1e-8
        assert by_t[1.0]["cap_residual"] <= 1e-9
        assert all(e["max_scaled_err"] <= 1e-6 for e in d["results"])

    def test_deterministic(self, tmp_path):
        a, b = tmp_path / "a", tmp_path / "b"
        args = ["--t", "0.5", "--grid", "3,3,4", "crosscheck"]
        run(args[:4] + ["--out", str(a)] + args[4:])
        run(args[:4] + ["--out", str(b)] + args[4:])
        assert (a / "crosscheck.json").read_bytes() == (b / "crosscheck.json").read_bytes()


class TestMeshCommand:
    def test_outputs(self, tmp_path):
        code = run(["--t", "0.5", "--grid", "4,5,7", "--out", str(tmp_path), "mesh"])
        assert code == cli.EXIT_OK
        obj = (tmp_path / "surface_t0_5.obj").read_text()
        assert obj.count("v ") == 4 * 5 * (7 - 2) + 2 * 4
        header = (tmp_path / "grid_t0_5.csv").read_text().splitlines()[0]
        assert header == "t,th1,th2,s,r1,r2,r3,a,b,c,wedge"


class TestPlotCommand:
    def test_svg_written(self, tmp_path):
        code = run(["--t", "0,1,1.25", "--out", str(tmp_path), "plot"])
        assert code == cli.EXIT_OK
        assert (tmp_path / "curves.svg").stat().st_size > 0
        assert (tmp_path / "leaf_graph.svg").stat().st_size > 0


class TestIOError:
    def test_exit_3_when_out_is_a_file(self, tmp_path):
        blocker = tmp_path / "blocked"
        blocker.write_text("not a directory\n")
        code = run(["--t", "0", "--out", str(blocker), "classify"])
        assert code == cli.EXIT_IO
