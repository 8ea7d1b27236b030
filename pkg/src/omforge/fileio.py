"""File formats.

.chi  line 1 "r n"; line 2 C(n,r) sign characters over {+,-,0} in
      lexicographic r-subset order.  Bit-exact round trip.
.pts  line 1 "r n"; then n lines of r integers (homogeneous vectors).
.ccj  JSON {"n", "rank", "labels"?, "cocircuits": [sign strings]},
      negation-closed.
"""

from __future__ import annotations

import json
from pathlib import Path

from .core import Chirotope, OrientedMatroid, cocircuits_from_chirotope, om_from_points
from .signs import SignVector


def read_chi(path) -> Chirotope:
    lines = Path(path).read_text().split()
    r, n = int(lines[0]), int(lines[1])
    return Chirotope.from_string(r, n, lines[2])


def write_chi(path, chi: Chirotope) -> None:
    Path(path).write_text(f"{chi.rank} {chi.n}\n{chi.to_string()}\n")


def read_pts(path) -> list[list[int]]:
    tokens = Path(path).read_text().split()
    r, n = int(tokens[0]), int(tokens[1])
    vals = [int(t) for t in tokens[2:]]
    if len(vals) != n * r:
        raise ValueError(f"expected {n * r} coordinates, found {len(vals)}")
    return [vals[i * r : (i + 1) * r] for i in range(n)]


def write_pts(path, points) -> None:
    r = len(points[0])
    lines = [f"{r} {len(points)}"]
    lines.extend(" ".join(str(x) for x in row) for row in points)
    Path(path).write_text("\n".join(lines) + "\n")


def read_ccj(path) -> OrientedMatroid:
    data = json.loads(Path(path).read_text())
    cocircuits = [SignVector.from_string(s) for s in data["cocircuits"]]
    return OrientedMatroid(
        int(data["n"]),
        int(data["rank"]),
        cocircuits,
        provenance="from-file",
        labels=data.get("labels"),
    )


def write_ccj(path, om: OrientedMatroid) -> None:
    data = {
        "n": om.n,
        "rank": om.rank,
        "cocircuits": sorted(x.to_string() for x in om.cocircuits),
    }
    if om.labels is not None:
        data["labels"] = list(om.labels)
    Path(path).write_text(json.dumps(data, indent=1) + "\n")


def load_om(path) -> OrientedMatroid:
    """Load an oriented matroid from .chi, .pts or .ccj by extension."""
    suffix = Path(path).suffix
    if suffix == ".chi":
        chi = read_chi(path)
        om = cocircuits_from_chirotope(chi, provenance="from-file")
        return om
    if suffix == ".pts":
        return om_from_points(read_pts(path))
    if suffix == ".ccj":
        return read_ccj(path)
    raise ValueError(f"unknown oriented-matroid file extension: {suffix}")
