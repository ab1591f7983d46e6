"""
Full deck evaluation
====================

Ties everything together on the bundled sample deck: load the image
sequence with its layout sidecars and native package, run all four metric
families, and emit the report in both formats. The same inputs always
produce byte-identical output.

The CLI equivalent:

    deckeval eval sampledeck/deck.json --format table
"""

from pathlib import Path

from deckeval import emit_report, evaluate_deck, load_deck, parse_report

SAMPLE = Path(__file__).resolve().parent.parent / "sampledeck"

deck = load_deck(SAMPLE / "deck.json")
print(f"deck '{deck.topic}' by '{deck.system}': {len(deck.slides)} slides, "
      f"package={deck.package_path.name}")

report = evaluate_deck(deck)
data = report.to_dict()

print("\nper-slide metrics:")
for s in data["slides"]:
    usability = (f"{s['usability']['score']:.3f}" if s["usability"]["available"] else "  n/a")
    print(f"  {s['image']}: harmony {s['harmony']['score']:.3f} ({s['harmony']['template']})  "
          f"M {s['colorfulness']:6.2f}  usability {usability}  "
          f"E {s['entropy']['bits']:.2f} bits")

print("\ncomponents:", data["components"])
print("aesthetics:", data["aesthetics"])
print("rhythm detail:", data["rhythm_detail"]["band"],
      f"rmssd={data['rhythm_detail']['rmssd']:.3f}")
print("editability:", data["pei"]["level"])
for flag in data["flags"]:
    print("flag:", flag)

# Both serializations are deterministic.
struct_bytes = emit_report(report, "struct")
assert parse_report(struct_bytes) == data
assert emit_report(report, "struct") == struct_bytes

print("\ntabular summary:")
print(emit_report(report, "table").decode().strip())
