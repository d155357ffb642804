"""Reference compositions and tables bundled with the package."""

from importlib import resources

THEME_BHARI = "DhaTi TDha TiT DhaDha TiT DhaGa TinNa KiNa"
THEME_KHALI = "TaTi TTa TiT TaTa TiT DhaGa DhinNa GiNa"

# (bharī, khālī) rows as printed
FIGURES = {
    3: (THEME_BHARI, THEME_KHALI),
    4: ("DhaTi TDha DhaTi TDha TiT DhaGa TinNa KiNa", "TaTi TTa TaTi TDha TiT DhaGa DhiNa GiNa"),
    5: ("DhaTi TDha TiT DhaDha TiT TiT TinNa KiNa", "TaTi TTa TiT DhaDha TiT TiT DhiNa GiNa"),
    6: ("DhaTi TDha DhaTi TDha TiT DhaGa TinNa KiNa", "TaTi TTa TaTi TDha TiT DhaGa DhiNa GiNa"),
    7: ("DhaDha TiT DhaTi TDha TiT DhaGa TinNa KiNa", "TaTa TiT TaTi TDha TiT DhaGa DhiNa GiNa"),
    9: ("DhaDha TiT DhaTi TDha TiT DhaGa TinNa KiNa", "TaTa TiNa KiNa TDha TiT DhaGa DhiNa GiNa"),
    10: ("DhaTi TDha DhaTi TDha TiT DhaGa TinNa KiNa", "TaTi TTa TaTi TDha TiT DhaGa DhiNa GiNa"),
}

TABLE1_COUNTS = """\
\tDha\tTi\tT\tGa\tTin\tNa\tKi
Dha\t1\t3\t0\t1\t0\t0\t0
Ti\t0\t0\t3\t0\t0\t0\t0
T\t3\t0\t0\t0\t0\t0\t0
Ga\t0\t0\t0\t0\t1\t0\t0
Tin\t0\t0\t0\t0\t0\t1\t0
Na\t1\t0\t0\t0\t0\t0\t1
Ki\t0\t0\t0\t0\t0\t1\t0"""

TABLE2_RELATIVE = """\
\tDha\tTi\tT\tGa\tTin\tNa\tKi
Dha\t0.2\t0.6\t0\t0.2\t0\t0\t0
Ti\t0\t0\t1\t0\t0\t0\t0
T\t1\t0\t0\t0\t0\t0\t0
Ga\t0\t0\t0\t0\t1\t0\t0
Tin\t0\t0\t0\t0\t0\t1\t0
Na\t0.5\t0\t0\t0\t0\t0\t0.5
Ki\t0\t0\t0\t0\t0\t1\t0"""

TABLE3_CUMULATIVE = """\
\tDha\tTi\tT\tGa\tTin\tNa\tKi
Dha\t0.2\t0.8\t0\t1.0\t0\t0\t0
Ti\t0\t0\t1\t0\t0\t0\t0
T\t1\t0\t0\t0\t0\t0\t0
Ga\t0\t0\t0\t0\t1\t0\t0
Tin\t0\t0\t0\t0\t0\t1\t0
Na\t0.5\t0\t0\t0\t0\t0\t1.0
Ki\t0\t0\t0\t0\t0\t1\t0"""

# (seed, draw, output)
TABLE4 = [
    ("Dha", 0.3, "Ti"), ("Ti", 0.8, "T"), ("T", 0.9, "Dha"), ("Dha", 0.3, "Ti"),
    ("Ti", 0.7, "T"), ("T", 0.2, "Dha"), ("Dha", 0.6, "Ti"), ("Ti", 0.2, "T"),
    ("T", 0.9, "Dha"), ("Dha", 0.1, "Dha"), ("Dha", 0.9, "Ga"), ("Ga", 0.2, "Tin"),
    ("Tin", 0.8, "Na"), ("Na", 1.0, "Ki"), ("Ki", 0.7, "Na"),
]
TABLE4_SEQUENCE = "Dha Ti T Dha Ti T Dha Ti T Dha Dha Ga Tin Na Ki Na"

TABLE5 = [
    "Dha Dha Dha Dha Dha Ga Tin Na Ki Na Dha Ga Tin Na Ki Na",
    "Dha Ti T Dha Ti T Dha Ti T Dha Ti T Dha Ga Tin Na",
    "Dha Dha Ti T Dha Ga Dha Ti T Dha Ti T Dha Ga Tin Na",
    "Dha Ti T Dha Ti T Ti T Dha Ga Tin Na Ki Na Ki Na",
    "Dha Ga Tin Na Ti T Ti T Dha Ti T Dha Ti T Dha Ti",
    "Dha Ti T Dha Ti T Dha Dha Ti T Dha Ti T Dha Ga Tin",
    "Dha Ti T Dha Ti T Dha Ti T Dha Ga Tin Na Dha Dha Ti",
    "Dha Ti T Dha Ti T Dha Dha Ti T Dha Ti T Dha Ti T",
    "Dha Dha Ti T Dha Ti T Dha Ti T Dha Ti T Dha Dha Dha",
    "Dha Dha Ti T Dha Ti T Dha Ti T Dha Ti T Dha Ti T",
]

TABLE9_OBSERVED = [
    [13, 12, 11, 11, 18, 11, 13, 14, 15, 16],
    [7, 8, 9, 9, 2, 9, 7, 6, 5, 4],
]

TABLE11_THEME1 = (0.98, 1, 0.7, 0.65, 1, 0, float("inf"), 0, 0, float("inf"), 0.98, 0.7, 1, 0.65)


def data_path(name: str):
    """Path to a bundled data file (theme, contingency table, ratings)."""
    return resources.files("kayada") / "data" / name
