"""
Editability levels L0-L5
========================

Native presentation packages are ZIPs of XML. Five structural gates probe
them in order (text integrity, vector graphics, master/grouping structure,
native chart data, transitions and embedded media) and evaluation stops at
the first failure: the level is the count of leading passes. PDFs and
images terminate at L0 without being opened; URLs are recognized but not
evaluable without interactive inspection.
"""

from deckeval.pei import (
    build_fixture,
    evaluate_pei,
    fixture_filename,
    open_package,
    triage,
    with_member_removed,
)

# Triage decides the route and the ceiling.
for name in ("deck.pdf", "deck.pptx", "https://slides.example.com/d/42"):
    route = triage(name)
    print(f"{name:35s} -> {route.route:7s} (max {route.max_level})")

# The fixture builder fabricates a minimal deck for each final level.
print("\ngate ladder:")
for kind in ("l0", "l1", "l2", "l3", "l4", "l5"):
    report = evaluate_pei((fixture_filename(kind), build_fixture(kind)))
    marks = " ".join(
        f"{g.gate}:{'Y' if g.passed else ('n' if g.passed is False else '.')}"
        for g in report.gates)
    print(f"  {kind} -> {report.level}   {marks}")

# Evidence explains each failure in terms of slides and findings.
report = evaluate_pei(("fixture_l2.pptx", build_fixture("l2")))
t3 = next(g for g in report.gates if g.gate == "T3")
print("\nwhy the L2 fixture fails T3:")
for slide, finding in t3.evidence:
    print(f"  slide {slide}: {finding}")

# The knockout rule: break the chart workbook inside an otherwise perfect
# deck and the level drops to L3 even though the cinematic layer is intact.
broken = with_member_removed(build_fixture("l5"), "ppt/embeddings/data.xlsx")
report = evaluate_pei(("deck.pptx", broken))
print(f"\nL5 package with a dangling workbook link -> {report.level}")

# The package model itself is inspectable.
pkg = open_package(build_fixture("l4"))
print(f"\npackage inventory: {len(pkg.slides)} slides, {len(pkg.charts)} chart(s), "
      f"{len(pkg.media)} media ref(s), defects={len(pkg.defects)}")
