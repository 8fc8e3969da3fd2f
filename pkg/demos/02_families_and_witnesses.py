"""Every named family the toolkit generates, plus the witness catalog of
explicit edits known to produce asymmetric graphs."""

from asymindex import FamilySpec, apply_flips, generate, is_asymmetric, witness

SPECS = ["path:9", "cycle:12", "complete:7", "star:8", "wheel:9",
         "circulant:17:1,4", "grid:3x4", "pxc:3x5", "torus:6x7",
         "split:8+3", "pendant-cycle:4"]

print("family spec -> vertices, edges")
for text in SPECS:
    g = generate(FamilySpec.parse(text))
    print(f"  {text:18s} -> n={g.n:3d}  m={g.edge_count:3d}")

print()
print("witness catalog (explicit edits, then an asymmetry check):")
CASES = [("path-add-chord", (9,)),
         ("cycle-remove-add", (9,)),
         ("cycle-two-chords", (6, 3, 3, 4)),
         ("wheel-two-removals", (9,)),
         ("circulant-remove2", (4, "+")),
         ("circulant-add2", (4, "-")),
         ("circulant-mixed", (4, "+")),
         ("grid-corner", (3, 3)),
         ("pxc-two-removals", (2, 3)),
         ("split-construction", (9, 3))]
for name, args in CASES:
    spec, flips = witness(name, *args)
    edited = apply_flips(generate(spec), flips)
    print(f"  {name}{args} on {spec}: {flips.size} edits ->",
          "asymmetric" if is_asymmetric(edited) else "NOT asymmetric")

# The catalog keeps honest edge cases: the grid corner removal fails for
# two-row grids because swapping the rows survives it.
spec, flips = witness("grid-corner", 2, 3)
edited = apply_flips(generate(spec), flips)
print()
print("grid-corner(2,3) is a known boundary failure:",
      "asymmetric" if is_asymmetric(edited) else "not asymmetric (row swap survives)")
