# # Scoring a variation
#
# theta rewards a seed start and a proper cadence and charges every verb
# repeated before the end. Fitness is how far a candidate's theta sits from
# the theme's own.

import numpy as np

from kayada import extract_ruleset, fixtures, load_theme, theta, tokenize
from kayada.memetic import Scorer, local_search, violation_sites
from kayada.notation import Composition, render

spec = load_theme(fixtures.data_path("theme_fig3.txt"))
rules = extract_ruleset(spec.composition, spec.seeds, spec.highlighted)
theta_0 = theta(spec.composition, rules).theta
print("seeds:", rules.sorted_seeds())
print("full verb:", " ".join(rules.full_verb_bhari), "/", " ".join(rules.full_verb_khali))
print("theta_0 =", theta_0)

# A well-formed variation scores the same as the theme

good = Composition(*(tuple(tokenize(row)) for row in fixtures.FIGURES[10]))
print(render(good))
print(theta(good, rules, theta_0))

# This one plays the full verb early, runs Dha six times and closes badly

bad = tuple(tokenize("DhaTi TinNa KiNa DhaDha DhaDha DhaDha TiT DhaGa"))
scorer = Scorer(rules, theta_0)
cand = scorer.candidate(bad)
print(cand.breakdown)
print(violation_sites(bad, rules))

# Local search patches each site with theme material and keeps a patch only
# if fitness holds or improves.

fixed = local_search(cand, rules, np.random.default_rng(1), scorer)
print(" ".join(fixed.bhari))
print(cand.fitness, "->", fixed.fitness)
