import io
import subprocess
import sys

import pytest

from kayada import fixtures
from kayada.cli import main
from kayada.corpus import FIELDS, auto_rate, read_corpus
from kayada.notation import tokenize

THEME = str(fixtures.data_path("theme_fig3.txt"))
TABLE9 = str(fixtures.data_path("table9_observed.csv"))
RATINGS = str(fixtures.data_path("ratings_theme1.csv"))


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def _block(text, name):
    lines = text.splitlines()
    start = lines.index(f"# {name}") + 1
    block = []
    for line in lines[start:]:
        if not line or line.startswith("#"):
            break
        block.append(line)
    return "\n".join(block)


def test_matrix_tables():
    code, out, _ = run("matrix", THEME)
    assert code == 0
    assert _block(out, "counts") == fixtures.TABLE1_COUNTS
    assert _block(out, "relative") == fixtures.TABLE2_RELATIVE
    assert _block(out, "cumulative") == fixtures.TABLE3_CUMULATIVE
    assert out.startswith("# tool: kayada")


def test_matrix_acyclic_drops_na_dha():
    code, out, _ = run("matrix", THEME, "--acyclic")
    assert code == 0
    na = [l for l in _block(out, "counts").splitlines() if l.startswith("Na\t")][0]
    assert na.split("\t")[1] == "0"


def test_missing_file(tmp_path):
    code, out, err = run("matrix", str(tmp_path / "nope.txt"))
    assert code != 0 and "no such file" in err and out == ""


def test_bad_theme_reports_line(tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("type: cyclic\nbhari: DhaTi\ntempo: fast\n")
    code, _, err = run("matrix", str(p))
    assert code == 1 and "line 3" in err


def _generate(tmp_path, seed=5, name="c.tsv", *extra):
    path = tmp_path / name
    code, _, err = run("generate", THEME, "--rng-seed", str(seed), "--out", str(path), *extra)
    assert code == 0, err
    return path


def test_generate_corpus(tmp_path):
    path = _generate(tmp_path)
    settings, records = read_corpus(path.read_text())
    assert settings["rng_seed"] == "5"
    assert settings["command"] == "generate"
    assert settings["population_size"] == "150"
    assert len(records) == 150
    fits = [r.fitness for r in records]
    assert fits == sorted(fits)
    assert records[0].fitness == 0
    allowed = set(tokenize(fixtures.THEME_BHARI)) | set(tokenize(fixtures.THEME_KHALI))
    for r in records:
        assert set(tokenize(r.bhari)) <= allowed
        assert set(tokenize(r.khali)) <= allowed


def test_generate_is_byte_identical(tmp_path):
    a = _generate(tmp_path, 8, "a.tsv").read_bytes()
    b = _generate(tmp_path, 8, "b.tsv").read_bytes()
    assert a == b
    c = _generate(tmp_path, 9, "c.tsv").read_bytes()
    assert a != c


def test_generate_stats_file(tmp_path):
    stats = tmp_path / "s.tsv"
    _generate(tmp_path, 3, "c.tsv", "--stats-out", str(stats), "--population-size", "40")
    rows = [l for l in stats.read_text().splitlines() if not l.startswith("#")]
    assert rows[0] == "generation\tzero_fitness_proportion\tbest_fitness\tmean_fitness"
    assert rows[1].startswith("0\t")


def test_generate_to_stdout():
    code, out, _ = run("generate", THEME, "--population-size", "10", "--generations", "2")
    assert code == 0
    assert "\t".join(FIELDS) in out.splitlines()


def test_generate_bad_config():
    code, _, err = run("generate", THEME, "--population-size", "1")
    assert code == 1 and "population_size" in err


def test_evaluate_table11():
    code, out, _ = run("evaluate", RATINGS)
    assert code == 0
    values = dict(l.split(": ") for l in out.splitlines() if not l.startswith("#"))
    assert [values[f"c{k}"] for k in range(1, 15)] == [
        "0.98", "1", "0.7", "0.65", "1", "0", "inf", "0", "0", "inf", "0.98", "0.7", "1", "0.65",
    ]


def test_evaluate_empty_ratings(tmp_path):
    p = tmp_path / "r.csv"
    p.write_text("")
    code, _, err = run("evaluate", str(p))
    assert code == 1 and "empty" in err


def test_evaluate_auto_rated(tmp_path):
    corpus = _generate(tmp_path, 2)
    code, out, _ = run("evaluate", "--corpus", str(corpus))
    assert code == 0
    assert "# source: auto-rated" in out


def test_auto_rate_dedupes(tmp_path):
    settings, records = read_corpus(_generate(tmp_path, 2).read_text())
    items = auto_rate(records, settings["theme_bhari"])
    assert len(items) == len({r.bhari for r in records})
    assert sum(i.in_inspiring_set for i in items) <= 1


def test_stats_chisq():
    code, out, _ = run("stats", "chisq", TABLE9)
    assert code == 0
    assert "X2 = 11.39756, DF = 9" in out
    p = float(out.split("p = ")[1])
    assert abs(p - 0.2497) < 1e-3


def test_stats_pearson(tmp_path):
    p = tmp_path / "pairs.csv"
    p.write_text("x,y\n1,2\n2,4\n3,6\n")
    code, out, _ = run("stats", "pearson", str(p))
    assert code == 0 and out.strip() == "r = 1.000000"


def test_stats_pearson_degenerate(tmp_path):
    p = tmp_path / "pairs.csv"
    p.write_text("1,2\n1,3\n")
    code, _, err = run("stats", "pearson", str(p))
    assert code == 1 and "vary" in err


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "kayada", "stats", "chisq", TABLE9],
                         capture_output=True, text=True)
    assert res.returncode == 0 and "DF = 9" in res.stdout
