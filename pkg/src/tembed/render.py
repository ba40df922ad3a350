"""CSV and SVG export of embedding / origami stages.

CSV carries one row per dual vertex with header ``j,k,re_t,im_t,re_o,im_o``;
exact-mode values are written in rational text form and round-trip exactly,
float-mode values as decimals.  SVG draws the embedding edges in black and the
origami edges in red: segments between dual vertices at L1-distance 1, the
four corner spokes and the rhombus sides.
"""

from __future__ import annotations

import csv
import io

from .embedding import Embedding
from .rings import (
    GaussianRational,
    rational,
    rational_from_str,
    rational_to_str,
    to_float_complex,
)


def _format_component(value, mode: str) -> str:
    if mode == "float":
        return repr(float(value))
    return rational_to_str(value)


def write_csv(emb: Embedding, stream) -> None:
    """Dump the embedding and origami positions, one dual vertex per row."""
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(["j", "k", "re_t", "im_t", "re_o", "im_o"])
    for (j, k) in sorted(emb.vertices()):
        t, o = emb.T(j, k), emb.O(j, k)
        if emb.mode == "float":
            parts = [t.real, t.imag, o.real, o.imag]
        else:
            parts = [t.re, t.im, o.re, o.im]
        writer.writerow([j, k] + [_format_component(p, emb.mode) for p in parts])


def csv_text(emb: Embedding) -> str:
    buf = io.StringIO()
    write_csv(emb, buf)
    return buf.getvalue()


def read_csv(stream, mode: str = "exact"):
    """Inverse of ``write_csv``: two dicts (j, k) -> value.

    Exact mode reconstructs the GaussianRational values exactly.
    """
    reader = csv.reader(stream)
    header = next(reader)
    if header != ["j", "k", "re_t", "im_t", "re_o", "im_o"]:
        raise ValueError(f"unexpected CSV header {header!r}")
    tvals, ovals = {}, {}
    for row in reader:
        j, k = int(row[0]), int(row[1])
        if mode == "float":
            rt, it, ro, io_ = (float(x) for x in row[2:6])
            tvals[(j, k)] = complex(rt, it)
            ovals[(j, k)] = complex(ro, io_)
        else:
            rt, it, ro, io_ = (rational_from_str(x) for x in row[2:6])
            tvals[(j, k)] = GaussianRational(rt, it)
            ovals[(j, k)] = GaussianRational(ro, io_)
    return tvals, ovals


def drawing_edges(stage: int):
    """Dual-vertex pairs joined by a segment in the stage-n figure.

    Inner vertices at L1-distance 1, the four spokes from each corner to the
    nearest inner vertex, and the four rhombus sides between corners.
    """
    n = stage
    edges = []
    for j in range(-n + 1, n):
        for k in range(-(n - 1 - abs(j)), n - abs(j)):
            if abs(j + 1) + abs(k) < n:
                edges.append(((j, k), (j + 1, k)))
            if abs(j) + abs(k + 1) < n:
                edges.append(((j, k), (j, k + 1)))
    if n >= 2:
        edges += [
            ((n, 0), (n - 1, 0)),
            ((-n, 0), (-(n - 1), 0)),
            ((0, n), (0, n - 1)),
            ((0, -n), (0, -(n - 1))),
        ]
    else:
        edges += [(c, (0, 0)) for c in ((1, 0), (-1, 0), (0, 1), (0, -1))]
    cycle = [(n, 0), (0, n), (-n, 0), (0, -n)]
    edges += [(cycle[i], cycle[(i + 1) % 4]) for i in range(4)]
    return edges


def _svg_lines(points: dict, edges, color: str, width: float):
    chunks = []
    for p, q in edges:
        zp, zq = points[p], points[q]
        chunks.append(
            f'<line x1="{zp.real:.4f}" y1="{-zp.imag:.4f}" '
            f'x2="{zq.real:.4f}" y2="{-zq.imag:.4f}" '
            f'stroke="{color}" stroke-width="{width}"/>'
        )
    return chunks


def write_svg(emb: Embedding, stream, size: int = 900) -> None:
    """Render the stage as SVG: embedding in black, origami in red."""
    tc, oc = emb.as_complex()
    edges = drawing_edges(emb.stage)
    a = float(emb.a)
    # world box: embedding rhombus has |Re| <= 1, |Im| <= a; origami sits in
    # the same scale near 1 + i a
    lo_x = min(min(z.real for z in tc.values()), min(z.real for z in oc.values()))
    hi_x = max(max(z.real for z in tc.values()), max(z.real for z in oc.values()))
    lo_y = min(min(z.imag for z in tc.values()), min(z.imag for z in oc.values()))
    hi_y = max(max(z.imag for z in tc.values()), max(z.imag for z in oc.values()))
    pad = 0.05 * max(hi_x - lo_x, hi_y - lo_y, 1e-9)
    span = max(hi_x - lo_x, hi_y - lo_y) + 2 * pad
    scale = size / span
    width = max(0.25, scale * 0.4 / max(emb.stage, 1))

    def world(vals):
        return {key: scale * complex(z.real - lo_x + pad, z.imag - hi_y - pad)
                for key, z in vals.items()}

    height = int(round((hi_y - lo_y + 2 * pad) * scale))
    stream.write(
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" '
        f'height="{height}" viewBox="0 0 {size} {height}">\n'
    )
    stream.write('<rect width="100%" height="100%" fill="white"/>\n')
    for chunk in _svg_lines(world(tc), edges, "black", width):
        stream.write(chunk + "\n")
    for chunk in _svg_lines(world(oc), edges, "red", width):
        stream.write(chunk + "\n")
    stream.write("</svg>\n")


def svg_text(emb: Embedding, size: int = 900) -> str:
    buf = io.StringIO()
    write_svg(emb, buf, size=size)
    return buf.getvalue()
