"""Audit the printed coefficient sets instead of trusting them.

Three findings, each established mechanically:

1. the sine-Gordon scattering pair closes only when the diagonal
   evolution entry carries the 1/zeta factor, and the flatness residual
   vanishes for the minus sign convention only;
2. the corrected pair maps exactly onto the sine-Gordon coframe triad
   under eta = -2 i zeta;
3. of the two circulating momentum-form coefficient pairs for the
   Camassa-Holm equation, (1, 2) expands to the velocity form and the
   often-printed (2, 1) does not.
"""

import sympy as sp

from pssgeo import symcore as sc
from pssgeo.forms import (
    MatrixOneForm,
    akns_compatibility,
    akns_xt,
    sasaki_triad,
    zero_curvature_residual,
)
from pssgeo.pss import catalog_entry, ch_form_equivalence, exact_multiplier
from pssgeo.symcore import normalize, to_text

entry = catalog_entry("sg-akns")

print("== scattering/evolution compatibility, both diagonal variants")
for variant, data in entry.akns.items():
    res = akns_compatibility(data.q, data.r, data.A, data.B, data.C, data.zeta)
    mus = [exact_multiplier(r, entry.pde) for r in res]
    closes = all(m is not None for m in mus)
    print(f"   {variant:9s} A = {to_text(data.A)}  ->  "
          f"{'closes, multipliers ' + str([to_text(m) for m in mus]) if closes else 'does NOT close'}")
    if not closes:
        print(f"             first residual: {to_text(normalize(res[0]))}")

print("\n== flatness residual sign convention (corrected variant)")
data = entry.akns["corrected"]
X, T = akns_xt(data.q, data.r, data.A, data.B, data.C, data.zeta)
for sign in (+1, -1):
    res = zero_curvature_residual(X, T, sign=sign)
    ok = all(exact_multiplier(res[i][j], entry.pde) is not None
             for i in range(2) for j in range(2))
    print(f"   D_t X {'+' if sign > 0 else '-'} D_x T + [X, T]: "
          f"{'vanishes modulo the equation' if ok else 'does not vanish'}")

print("\n== coframe recovered from the corrected pair (eta = -2 i zeta)")
triad = sasaki_triad(MatrixOneForm.from_xt(X, T))
link = {sc.param("zeta"): sp.I * sc.param("eta") / 2}
for name, w in zip(("w1", "w2", "w3"), triad.forms()):
    print(f"   {name} = ({to_text(normalize(w.fx.subs(link)))}) dx "
          f"+ ({to_text(normalize(w.ft.subs(link)))}) dt")

print("\n== momentum-form coefficient audit")
rep = ch_form_equivalence()
for (a, b), ok in rep.matches.items():
    verdict = "reproduces the velocity form" if ok else "does not"
    print(f"   m_t + {a} u m_x + {b} u_x m: {verdict}")
    if not ok:
        print(f"      difference: {to_text(normalize(rep.differences[(a, b)]))}")

print("\n== Camassa-Holm scattering set, as printed")
ch = catalog_entry("ch-akns")
data = ch.akns["printed"]
res = akns_compatibility(data.q, data.r, data.A, data.B, data.C, data.zeta)
closes = all(exact_multiplier(r, ch.pde) is not None for r in res)
print(f"   closes modulo the equation: {closes}")
print(f"   catalog note: {ch.provenance}")
