"""Walk the built-in coframe catalog through the verifier.

For each triad family this prints the three structure residuals, the
exact multipliers against the associated equation, the wedge
coefficient whose zeros mark the degenerate locus, and the expanded
first fundamental form.
"""

from pssgeo.pss import (
    catalog,
    degenerate_conditions,
    first_fundamental,
    generic_wedge,
    structure_residuals,
    verify_pss,
)
from pssgeo.symcore import normalize, to_text

for entry in catalog():
    if entry.triad is None:
        continue
    print(f"== {entry.name}  (equation: {entry.pde.name}, "
          f"parameters: {', '.join(entry.parameters)})")
    residuals = structure_residuals(entry.triad)
    for i, r in enumerate(residuals, start=1):
        print(f"   R{i} = {to_text(normalize(r.c))}")
    report = verify_pss(entry.triad, entry.pde, triad_name=entry.name)
    mus = ", ".join("-" if m is None else to_text(m) for m in report.multipliers)
    print(f"   status: {report.status}  multipliers: [{mus}]")
    print(f"   w1 ^ w2 coefficient: {to_text(generic_wedge(entry.triad))}")
    factors = degenerate_conditions(entry.triad)
    print(f"   degenerate locus factors: "
          f"{' | '.join(to_text(f) for f in factors)}")
    e, f, g = first_fundamental(entry.triad)
    print(f"   I = ({to_text(e)}) dx^2")
    print(f"     + 2 ({to_text(f)}) dx dt")
    print(f"     + ({to_text(g)}) dt^2")
    print()
