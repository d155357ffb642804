# # Evolving variations
#
# A population of Markov walks is refined generation by generation until
# enough of it matches the theme's rules exactly. One seed drives it all.

import time

from kayada import EvolutionConfig, evolve, fixtures, load_theme
from kayada.notation import render_sequence

spec = load_theme(fixtures.data_path("theme_fig3.txt"))

t0 = time.perf_counter()
result = evolve(spec.composition, EvolutionConfig(rng_seed=7))
print(f"{time.perf_counter() - t0:.2f} s")

for s in result.stats:
    print(f"gen {s.generation:2d}  zero-fitness {s.zero_fitness_proportion:.2f}  mean {s.mean_fitness:.2f}")

# Distinct winners, best first

seen = set()
for cand in result.ranked():
    if cand.fitness or cand.bhari in seen:
        continue
    seen.add(cand.bhari)
    print(render_sequence(cand.bhari), "|", render_sequence(cand.khali(result.ruleset)))
    if len(seen) == 8:
        break

# Same seed, same run

again = evolve(spec.composition, EvolutionConfig(rng_seed=7))
print(again.stats == result.stats)
