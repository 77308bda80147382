"""Embedded polytope datasets (layouts + generators) and their JSON format."""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path

from .raysystem import (Generator, Pentadecagon, PentadecagonLayout,
                        POLYTOPES, check_generators)

_EXPECTED = {
    # polytope -> (rays, pentadecagons, generators, bases, per-ray count)
    "600cell": (60, 4, 5, 75, 5),
    "120cell": (300, 20, 45, 675, 9),
    "gosset": (120, 8, 135, 2025, 135),
}


def dataset_from_dict(doc: dict) -> tuple[PentadecagonLayout, tuple[Generator, ...]]:
    layout = PentadecagonLayout(
        polytope=doc["polytope"],
        dimension=int(doc["dimension"]),
        pentadecagons=tuple(
            Pentadecagon(p["label"], int(p["lo"]), int(p["hi"]),
                         float(p["radius"]), float(p["angle_deg"]))
            for p in doc["pentadecagons"]),
    )
    generators = tuple(Generator(g["label"], tuple(int(r) for r in g["rays"]))
                       for g in doc["generators"])
    check_generators(layout, generators)
    return layout, generators


def dataset_to_dict(layout: PentadecagonLayout,
                    generators: tuple[Generator, ...]) -> dict:
    return {
        "polytope": layout.polytope,
        "dimension": layout.dimension,
        "pentadecagons": [
            {"label": p.label, "lo": p.lo, "hi": p.hi,
             "radius": p.radius, "angle_deg": p.angle_deg}
            for p in layout.pentadecagons],
        "generators": [{"label": g.label, "rays": list(g.rays)}
                       for g in generators],
    }


def data_text(name: str) -> str:
    return resources.files("kspoly.data").joinpath(name).read_text()


def load_polytope(polytope: str,
                  path: str | Path | None = None
                  ) -> tuple[PentadecagonLayout, tuple[Generator, ...]]:
    """Load a built-in dataset, or an external JSON file when path is given."""
    if path is not None:
        doc = json.loads(Path(path).read_text())
        return dataset_from_dict(doc)
    if polytope not in POLYTOPES:
        raise ValueError(f"unknown polytope {polytope!r}; "
                         f"expected one of {POLYTOPES}")
    return dataset_from_dict(json.loads(data_text(f"{polytope}.json")))


def expected_counts(polytope: str) -> tuple[int, int, int, int, int]:
    """(rays, pentadecagons, generators, bases, bases-per-ray)."""
    return _EXPECTED[polytope]
