"""SVG gallery: images of rings and spokes under the harmonic extension.

Certified maps carry the polar grid to a clean curvilinear grid filling the
target domain; a folding map visibly overlaps itself near the failure
region.  Output is deterministic, so the files double as goldens.
"""

from pathlib import Path

from harmcert import (BoundaryMap, build_curve, build_param,
                      fourier_coefficients, render_svg)

OUT = Path(__file__).parent / "out"
OUT.mkdir(exist_ok=True)

gallery = [
    ("disk_identity", {"type": "circle"}, {"type": "identity"}),
    ("ellipse", {"type": "ellipse", "a": 2, "b": 1}, {"type": "identity"}),
    ("three_lobes", {"type": "polar", "formula_id": "cosine",
                     "params": {"eps": 0.3, "k": 3}}, {"type": "identity"}),
    ("folding_two_lobes", {"type": "polar", "formula_id": "cosine",
                           "params": {"eps": 0.6, "k": 2}}, {"type": "identity"}),
]

for name, cspec, mspec in gallery:
    curve = build_curve(cspec)
    bmap = BoundaryMap(curve, build_param(mspec, curve.length))
    hm = fourier_coefficients(bmap, 1024)
    svg = render_svg(hm, curve, rings=10, spokes=24)
    path = OUT / f"{name}.svg"
    path.write_text(svg, encoding="utf-8")
    print(f"wrote {path} ({len(svg)} bytes)")
