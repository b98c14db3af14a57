"""Reading and writing densities and theories.

Densities travel as self-describing JSON: axis headers, frame label,
normalization flag, and the value array flattened row-major over axis order.
A theory is three such files side by side: the joint (the path you name), its
null-information density (``<base>.mu.json``), and a small provenance record
(``<base>.provenance.json``).  CSV export is one row per node for plotting.
"""

from __future__ import annotations

import csv
import json
from pathlib import Path

import numpy as np

from .density import Density
from .errors import IOFailure, SchemaError
from .grids import Axis, Grid
from .theory import Provenance, TheoryDensity

FORMAT_NAME = "inferspace-density"
FORMAT_VERSION = 1


# ---------------------------------------------------------------------------
# density JSON
# ---------------------------------------------------------------------------

def density_to_dict(d: Density) -> dict:
    return {
        "format": FORMAT_NAME,
        "version": FORMAT_VERSION,
        "axes": [ax.to_header() for ax in d.grid.axes],
        "frame": d.frame,
        "normalized": d.normalized,
        "values": d.values.ravel().tolist(),
    }


def density_from_dict(doc: dict) -> Density:
    if not isinstance(doc, dict):
        raise SchemaError(f"expected a JSON object, got {type(doc).__name__}")
    if doc.get("format") != FORMAT_NAME:
        raise SchemaError(f"not a density document: format is {doc.get('format')!r}")
    if int(doc.get("version", -1)) != FORMAT_VERSION:
        raise SchemaError(f"unsupported document version {doc.get('version')!r}")
    try:
        axes = tuple(Axis.from_header(h) for h in doc["axes"])
        grid = Grid.of(*axes)
        values = np.asarray(doc["values"], dtype=np.float64).reshape(grid.shape)
        frame = str(doc.get("frame", ""))
        normalized = bool(doc.get("normalized", False))
    except (KeyError, TypeError, ValueError) as exc:
        raise SchemaError(f"malformed density document: {exc}") from exc
    return Density(grid, values, frame=frame, normalized=normalized)


def write_density(d: Density, path: str | Path) -> None:
    path = Path(path)
    try:
        with path.open("w", encoding="utf-8") as fh:
            json.dump(density_to_dict(d), fh)
            fh.write("\n")
    except OSError as exc:
        raise IOFailure(f"cannot write {path}: {exc}") from exc


def read_density(path: str | Path) -> Density:
    path = Path(path)
    try:
        with path.open("r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise IOFailure(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path} is not valid JSON: {exc}") from exc
    return density_from_dict(doc)


# ---------------------------------------------------------------------------
# CSV export
# ---------------------------------------------------------------------------

def write_csv(d: Density, path: str | Path) -> None:
    """One row per node: axis coordinates then the density value."""
    path = Path(path)
    try:
        with path.open("w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(list(d.grid.names) + ["density"])
            if d.grid.ndim == 1:
                xs = d.grid.axes[0].nodes
                for x, v in zip(xs, d.values):
                    writer.writerow([repr(float(x)), repr(float(v))])
            else:
                xs = d.grid.axes[0].nodes
                ys = d.grid.axes[1].nodes
                for i, x in enumerate(xs):
                    for jj, y in enumerate(ys):
                        writer.writerow(
                            [repr(float(x)), repr(float(y)), repr(float(d.values[i, jj]))]
                        )
    except OSError as exc:
        raise IOFailure(f"cannot write {path}: {exc}") from exc


# ---------------------------------------------------------------------------
# theories
# ---------------------------------------------------------------------------

def _theory_paths(path: str | Path) -> tuple[Path, Path, Path]:
    path = Path(path)
    base = path.with_suffix("") if path.suffix == ".json" else path
    joint = base.with_name(base.name + ".json")
    mu = base.with_name(base.name + ".mu.json")
    prov = base.with_name(base.name + ".provenance.json")
    return joint, mu, prov


def write_theory(t: TheoryDensity, path: str | Path) -> None:
    joint_path, mu_path, prov_path = _theory_paths(path)
    write_density(t.joint, joint_path)
    write_density(t.mu, mu_path)
    try:
        with prov_path.open("w", encoding="utf-8") as fh:
            json.dump(t.provenance.as_dict(), fh, indent=2)
            fh.write("\n")
    except OSError as exc:
        raise IOFailure(f"cannot write {prov_path}: {exc}") from exc


def read_theory(path: str | Path) -> TheoryDensity:
    joint_path, mu_path, prov_path = _theory_paths(path)
    joint = read_density(joint_path)
    mu = read_density(mu_path)
    try:
        with prov_path.open("r", encoding="utf-8") as fh:
            prov = Provenance.from_dict(json.load(fh))
    except OSError as exc:
        raise IOFailure(f"cannot read {prov_path}: {exc}") from exc
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise SchemaError(f"malformed provenance record {prov_path}: {exc}") from exc
    return TheoryDensity(joint, mu, prov)
