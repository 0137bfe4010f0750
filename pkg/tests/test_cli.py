import random

import pytest

from exactpoly.cli import main
from exactpoly.fileformats import (
    FormatError,
    read_hpoly,
    read_poly,
    write_hpoly,
    write_poly,
)
from exactpoly.polytopes import VPolytope, facet_enumeration
from exactpoly.rationals import Rat


def pt(*coords):
    return tuple(Rat(c) for c in coords)


def cube_text():
    pts = tuple(pt(*(1 if m >> i & 1 else -1 for i in range(3))) for m in range(8))
    return write_poly(VPolytope(pts))


class TestFileFormats:
    def test_poly_round_trip_exact(self):
        rng = random.Random(4)
        pts = tuple(
            tuple(Rat(rng.randint(-99, 99), rng.randint(1, 9)) for _ in range(3))
            for _ in range(6)
        )
        poly = VPolytope(pts, tuple(f"v{i}" for i in range(6)))
        back = read_poly(write_poly(poly))
        assert back.vertices == poly.vertices
        assert back.labels == poly.labels

    def test_hpoly_round_trip_exact(self):
        tri = VPolytope((pt(0, 0, 1), pt(2, 0, 1), pt(0, 2, 1)))
        hull = facet_enumeration(tri)
        back = read_hpoly(write_hpoly(hull.hrep))
        assert back.inequalities == hull.hrep.inequalities
        assert back.equalities == hull.hrep.equalities

    def test_poly_header_required(self):
        with pytest.raises(FormatError):
            read_poly("dim 2\nvertices 1\n0 0\n")

    def test_poly_row_width_checked(self):
        with pytest.raises(FormatError):
            read_poly("POLY 1\ndim 2\nvertices 1\n0 0 0\n")

    def test_rational_literals_in_files(self):
        text = "POLY 1\ndim 2\nvertices 3\n315/2 -45\n0 1/3\n-1 0\n"
        poly = read_poly(text)
        assert poly.vertices[0] == (Rat(315, 2), Rat(-45))


class TestCommands:
    def test_width_of_builtin(self, tmp_path, capsys):
        path = tmp_path / "q5.poly"
        assert main(["builtin", "--out", str(path)]) == 0
        assert main(["width", str(path)]) == 0
        out = capsys.readouterr().out
        assert out.strip().splitlines()[-1] == "6"

    def test_excess_output(self, capsys):
        assert main(["excess", "--dim", "43", "--facets", "86", "--diameter", "44"]) == 0
        assert capsys.readouterr().out.strip() == "1/43 NON-HIRSCH"

    def test_excess_hirsch_case(self, capsys):
        assert main(["excess", "--dim", "3", "--facets", "6", "--diameter", "3"]) == 0
        assert capsys.readouterr().out.strip() == "0 HIRSCH"

    def test_family_output(self, capsys):
        rc = main([
            "family", "--dim", "43", "--facets", "86", "--diameter", "44",
            "--k", "1", "--j", "2",
        ])
        assert rc == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "dim=43 facets=129 diameter_lb=87"

    def test_family_rejects_hirsch_input(self, capsys):
        rc = main(["family", "--dim", "3", "--facets", "6", "--diameter", "3"])
        assert rc == 3

    def test_hull_writes_files_deterministically(self, tmp_path, capsys):
        src = tmp_path / "cube.poly"
        src.write_text(cube_text())
        out = tmp_path / "cube.hpoly"
        assert main(["hull", str(src), "--out", str(out)]) == 0
        first = out.read_text()
        first_inc = (tmp_path / "cube.hpoly.inc").read_text()
        assert main(["hull", str(src), "--out", str(out)]) == 0
        assert out.read_text() == first
        assert (tmp_path / "cube.hpoly.inc").read_text() == first_inc
        h = read_hpoly(first)
        assert len(h.inequalities) == 6

    def test_diameter_command(self, tmp_path, capsys):
        src = tmp_path / "cube.poly"
        src.write_text(cube_text())
        assert main(["diameter", str(src)]) == 0
        assert capsys.readouterr().out.strip() == "3"

    def test_polar_command(self, tmp_path):
        src = tmp_path / "cube.poly"
        src.write_text(cube_text())
        out = tmp_path / "polar.poly"
        assert main(["polar", str(src), "--out", str(out)]) == 0
        pol = read_poly(out.read_text())
        assert pol.n_vertices == 6

    def test_construct_ops(self, tmp_path, capsys):
        src = tmp_path / "pent.poly"
        src.write_text(write_poly(VPolytope((pt(0, 0), pt(4, 0), pt(6, 3), pt(3, 6), pt(-1, 3)))))
        out = tmp_path / "ops.poly"
        assert main(["construct", "ops", str(src), "--vertex", "1", "--out", str(out)]) == 0
        sus = read_poly(out.read_text())
        assert sus.n_vertices == 6
        assert sus.ambient_dim == 3

    def test_construct_push_deterministic(self, tmp_path):
        src = tmp_path / "cube.poly"
        src.write_text(cube_text())
        o1, o2 = tmp_path / "p1.poly", tmp_path / "p2.poly"
        assert main(["construct", "push", str(src), "--vertex", "2", "--seed", "9",
                     "--out", str(o1)]) == 0
        assert main(["construct", "push", str(src), "--vertex", "2", "--seed", "9",
                     "--out", str(o2)]) == 0
        assert o1.read_text() == o2.read_text()

    def test_construct_product(self, tmp_path):
        a = tmp_path / "a.poly"
        a.write_text(write_poly(VPolytope((pt(-1,), pt(1,)))))
        out = tmp_path / "sq.poly"
        assert main(["construct", "product", str(a), str(a), "--out", str(out)]) == 0
        assert read_poly(out.read_text()).n_vertices == 4

    def test_construct_blend(self, tmp_path, capsys):
        src = tmp_path / "cube.poly"
        src.write_text(cube_text())
        assert main(["construct", "blend", str(src), str(src), "--v1", "0", "--v2", "7"]) == 0
        out = capsys.readouterr().out
        assert "facets=9" in out and "nodes=14" in out

    def test_construct_dstep_iterate(self, tmp_path, capsys):
        src = tmp_path / "cube.poly"
        src.write_text(cube_text())
        out = tmp_path / "lifted.poly"
        rc = main(["construct", "dstep-iterate", str(src), "--steps", "2", "--seed",
                   "7", "--out", str(out)])
        assert rc == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0].startswith("STEP 0 dim=3 vertices=8")
        assert lines[2].startswith("STEP 2 dim=5 vertices=10")
        lifted = read_poly(out.read_text())
        assert lifted.n_vertices == 10

    def test_plot_torus(self, tmp_path):
        out = tmp_path / "maps.svg"
        assert main(["plot-torus", "--out", str(out), "--svg-size", "400"]) == 0
        svg = out.read_text()
        assert svg.startswith("<svg")
        assert svg.count("<circle") == 64
        out2 = tmp_path / "maps2.svg"
        assert main(["plot-torus", "--out", str(out2), "--svg-size", "400"]) == 0
        assert out2.read_text() == svg

    def test_missing_file_is_parse_error(self):
        assert main(["width", "/nonexistent/thing.poly"]) == 2

    def test_bad_flags_exit_2(self):
        assert main(["excess", "--dim", "43"]) == 2

    def test_verify_fast(self, capsys):
        assert main(["verify", "--fast"]) == 0
        out = capsys.readouterr().out
        assert "FAIL" not in out
        assert "0 failures" in out
