"""Octane-isomer dataset and ordinary least-squares property models.

The bundled CSV carries the four physico-chemical properties of the 18
octane isomers together with references to .graph fixtures; descriptor
values are always recomputed from the fixtures, never stored.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .errors import (
    DegenerateInputError,
    MalformedCSVError,
    MissingFixtureError,
    NonChemicalFixtureError,
    WrongIsomerCountError,
)
from .graph import MolGraph, canonical_code, load_graph
from .indices import COMPARISON_KINDS, IndexKind, index_value

EXPECTED_COLUMNS = ["name", "graph", "acenfac", "entropy", "snar", "hnar"]
PROPERTIES = ("acenfac", "entropy", "snar", "hnar")

# R^2 grid published for comparison (property x index); the spec leaves the
# final M_N column undefined, so it is not reproduced here.
REFERENCE_R2 = {
    "acenfac": {"so_red": 0.9213, "m1": 0.9468, "m2": 0.973, "f": 0.9313,
                "randic": 0.8176, "sci": 0.8647, "sdd": 0.8118},
    "entropy": {"so_red": 0.8922, "m1": 0.9107, "m2": 0.8868, "f": 0.9077,
                "randic": 0.8205, "sci": 0.8518, "sdd": 0.8276},
    "snar": {"so_red": 0.9736, "m1": 0.9974, "m2": 0.8940, "f": 0.9453,
             "randic": 0.9487, "sci": 0.9710, "sdd": 0.9252},
    "hnar": {"so_red": 0.9341, "m1": 0.9774, "m2": 0.8941, "f": 0.9453,
             "randic": 0.9487, "sci": 0.9710, "sdd": 0.9252},
}
SUSPECT_CELL_THRESHOLD = 0.02


@dataclass(frozen=True)
class PropertyRecord:
    isomer_name: str
    graph_file: str
    graph: MolGraph
    acenfac: float
    entropy: float
    snar: float
    hnar: float

    def property_value(self, prop: str) -> float:
        return getattr(self, prop)


@dataclass(frozen=True)
class RegressionModel:
    slope: float
    intercept: float
    r_squared: float
    sample_size: int

    def predict(self, x: float) -> float:
        return self.intercept + self.slope * x


def bundled_dataset_path() -> Path:
    return Path(str(resources.files("somborcg.data").joinpath("octane"))) / "octane_properties.csv"


def load_dataset(path: str | Path | None = None) -> list[PropertyRecord]:
    """Read the octane CSV; fixtures are resolved relative to the CSV."""
    csv_path = Path(path) if path is not None else bundled_dataset_path()
    if not csv_path.exists():
        raise MalformedCSVError(f"dataset file {csv_path} does not exist")
    records = []
    with open(csv_path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames != EXPECTED_COLUMNS:
            raise MalformedCSVError(
                f"expected columns {EXPECTED_COLUMNS}, got {reader.fieldnames}"
            )
        for row in reader:
            try:
                values = {prop: float(row[prop]) for prop in PROPERTIES}
            except (TypeError, ValueError):
                raise MalformedCSVError(f"non-numeric property in row {row!r}") from None
            fixture = csv_path.parent / row["graph"]
            if not fixture.exists():
                raise MissingFixtureError(f"fixture {fixture} not found")
            g = load_graph(fixture)
            if g.n != 8 or not g.is_tree() or not g.is_chemical():
                raise NonChemicalFixtureError(
                    f"{row['graph']} is not a chemical tree on 8 vertices"
                )
            records.append(PropertyRecord(row["name"], row["graph"], g, **values))
    if len(records) != 18:
        raise WrongIsomerCountError(f"expected 18 isomers, found {len(records)}")
    codes = {canonical_code(r.graph) for r in records}
    if len(codes) != 18:
        raise WrongIsomerCountError("octane fixtures are not pairwise non-isomorphic")
    return records


def octane_index_values(records: list[PropertyRecord], kind: IndexKind) -> list[float]:
    return [index_value(r.graph, kind) for r in records]


def fit_linear(x: list[float], y: list[float]) -> RegressionModel:
    """Ordinary least squares y = intercept + slope*x.

    A constant response gives slope 0 and, by convention, r_squared 0
    (SS_tot = 0); a constant predictor is an error.
    """
    if len(x) != len(y) or len(x) < 3:
        raise DegenerateInputError("need at least 3 paired observations")
    n = len(x)
    mean_x = math.fsum(x) / n
    mean_y = math.fsum(y) / n
    sxx = math.fsum((a - mean_x) ** 2 for a in x)
    if sxx == 0.0:
        raise DegenerateInputError("predictor is constant")
    sxy = math.fsum((a - mean_x) * (b - mean_y) for a, b in zip(x, y))
    slope = sxy / sxx
    intercept = mean_y - slope * mean_x
    ss_res = math.fsum((b - intercept - slope * a) ** 2 for a, b in zip(x, y))
    ss_tot = math.fsum((b - mean_y) ** 2 for b in y)
    r_squared = 0.0 if ss_tot == 0.0 else 1.0 - ss_res / ss_tot
    return RegressionModel(slope, intercept, r_squared, n)


@dataclass(frozen=True)
class ModelComparison:
    """Reduced-Sombor property models plus the R^2 comparison grid."""

    models: dict[str, RegressionModel]                 # property -> SO_red model
    r2_grid: dict[str, dict[str, float]]               # property -> index -> R^2
    suspect_cells: tuple[tuple[str, str, float, float], ...]


def reproduce_paper_models(records: list[PropertyRecord]) -> ModelComparison:
    """Fit the four properties against SO_red and the six comparison indices."""
    kinds = (IndexKind.SO_RED,) + COMPARISON_KINDS
    columns = {kind: octane_index_values(records, kind) for kind in kinds}
    models = {}
    grid: dict[str, dict[str, float]] = {}
    suspects = []
    for prop in PROPERTIES:
        y = [r.property_value(prop) for r in records]
        row: dict[str, float] = {}
        for kind in kinds:
            model = fit_linear(columns[kind], y)
            row[kind.value] = model.r_squared
            if kind is IndexKind.SO_RED:
                models[prop] = model
            reference = REFERENCE_R2[prop].get(kind.value)
            if reference is not None and abs(model.r_squared - reference) > SUSPECT_CELL_THRESHOLD:
                suspects.append((prop, kind.value, reference, model.r_squared))
        grid[prop] = row
    return ModelComparison(models, grid, tuple(suspects))
