# # Judging the output
#
# Ritchie's criteria compare typicality and quality ratings against
# thresholds. The bundled ratings give every item high typicality and most
# of them good quality, with none drawn from the inspiring set.

import numpy as np

from kayada import ContingencyTable, chi_square_test, expected_frequencies, fixtures, pearson, ritchie_criteria
from kayada.evalstats import CRITERIA, parse_ratings

items = parse_ratings(fixtures.data_path("ratings_theme1.csv").read_text())
report = ritchie_criteria(items)
for k, v in report.values.items():
    print(f"c{k:<3}{v:<8.4g}{CRITERIA[k]}")

# Criteria 7 and 10 divide by empty sets here and come out infinite

print(report.notes)

# ## Independence test
#
# Two rows of counts across ten items. Are row and column independent?

table = ContingencyTable(np.array(fixtures.TABLE9_OBSERVED))
print(expected_frequencies(table))
res = chi_square_test(table)
print(f"X2 = {res.statistic:.5f}, DF = {res.dof}, p = {res.p_value:.4f}")

# p is well above 0.05, so independence is not rejected.

# Pearson r is invariant to positive rescaling of either variable

rng = np.random.default_rng(0)
x = rng.normal(size=30)
y = 0.6 * x + rng.normal(scale=0.5, size=30)
print(pearson(zip(x, y)), pearson(zip(3 * x + 1, y)))
