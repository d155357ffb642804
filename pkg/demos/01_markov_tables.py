# # Transition tables from a theme
#
# A theme's bharī is read as a chain: every bōl points at the one after it,
# and with a cyclic theme the last bōl points back at the first.

from kayada import fixtures, load_theme, markov

spec = load_theme(fixtures.data_path("theme_fig3.txt"))
theme = spec.composition
print(" ".join(theme.bhari))

# Counts first. Rows and columns follow the order in which bōls first appear.

m = markov.build_matrix(theme.bhari, theme.cyclic)
print(markov.format_table(m, "counts"))

# The Na row has two entries: Na -> Ki inside the phrase, and Na -> Dha from
# the wrap-around. Drop the wrap and it loses one.

print(markov.format_table(markov.build_matrix(theme.bhari, cyclic=False), "counts").splitlines()[6])

# Relative frequencies and the cumulative form used for sampling

print(markov.format_table(m, "relative"))
print()
print(markov.format_table(m, "cumulative"))

# ## Sampling by hand
#
# Each step takes a draw u and picks the first cell of the current row whose
# cumulative value reaches u. Feeding a fixed list of draws replays a walk.

draws = [u for _, u, _ in fixtures.TABLE4]
for seed, u, out in markov.trace(m, "Dha", draws):
    print(f"{seed:>4}  u={u:.1f}  -> {out}")

print(" ".join(markov.generate(m, "Dha", 16, draws)))
