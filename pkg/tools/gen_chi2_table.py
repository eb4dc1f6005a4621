"""Regenerate src/aldr/_chi2_table.py (upper 1e-3 chi-square quantiles).

Needs scipy, which is a build-time tool only; the package never imports it.
"""

from pathlib import Path

from scipy.stats import chi2

MAX_DF = 1100
ALPHA = 1e-3

rows = [repr(float(chi2.isf(ALPHA, df))) for df in range(1, MAX_DF + 1)]
body = ",\n".join(f"    {r}" for r in rows)
text = f'''"""Upper-tail chi-square quantiles at significance {ALPHA:g}, df = 1..{MAX_DF}.

Generated by tools/gen_chi2_table.py; do not edit by hand.
"""

ALPHA = {ALPHA!r}
MAX_DF = {MAX_DF}

# QUANTILES[df - 1] is the critical value for df degrees of freedom
QUANTILES = (
{body},
)
'''
out = Path(__file__).resolve().parents[1] / "src" / "aldr" / "_chi2_table.py"
out.write_text(text)
print(f"wrote {out}")
