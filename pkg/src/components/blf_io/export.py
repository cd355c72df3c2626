"""Plain-text and JSON descriptions of a diagram for external renderers."""
from __future__ import annotations

import json
from typing import Any, Dict, List

from ..diagram import trace_faces
from ..models import BlfDiagram, format_dart


def to_graph(d: BlfDiagram) -> Dict[str, Any]:
    a = d.arrangement
    faces = []
    for face in trace_faces(a):
        label = face.label if face.label is not None else next(iter(d.fibers), None)
        faces.append({
            "id": face.id,
            "label": label,
            "fiber": str(d.fibers[label]) if label in d.fibers else None,
            "circuits": [[format_dart(x) for x in c] for c in face.circuits],
            "lefschetz": [p.id for p in d.points_in(label)] if label else [],
        })

    def fold(element: str) -> Dict[str, Any]:
        f = d.folds.get(element)
        if f is None:
            return {}
        return {"high": f.high, "low": f.low, "surgery": str(f.surgery)}

    return {
        "vertices": [{"id": v.id, "kind": v.kind.value} for v in sorted(a.vertices.values(), key=lambda v: v.id)],
        "edges": [
            {
                "id": e.id,
                "tail": f"{e.tail.vertex}:{e.tail.slot}",
                "head": f"{e.head.vertex}:{e.head.slot}",
                "left": e.left,
                "right": e.right,
                **fold(e.id),
            }
            for e in sorted(a.edges.values(), key=lambda e: e.id)
        ],
        "circles": [
            {"id": c.id, "inside": c.inside, "outside": c.outside, **fold(c.id)}
            for c in sorted(a.circles.values(), key=lambda c: c.id)
        ],
        "faces": faces,
        "lefschetz": [
            {"id": p.id, "face": p.face, "component": p.component, "order": p.order, "cycle": list(p.cycle.coords)}
            for p in d.lefschetz
        ],
        "basepoints": d.basepoints,
        "sections": d.sections,
    }


def export_graph(d: BlfDiagram) -> str:
    g = to_graph(d)
    out: List[str] = []
    for v in g["vertices"]:
        out.append(f"vertex {v['id']} {v['kind']}")
    for e in g["edges"]:
        arrow = f" arrow={e['high']}->{e['low']} surgery={e['surgery']}" if "high" in e else ""
        out.append(f"edge {e['id']} {e['tail']} -> {e['head']} left={e['left']} right={e['right']}{arrow}")
    for c in g["circles"]:
        arrow = f" arrow={c['high']}->{c['low']} surgery={c['surgery']}" if "high" in c else ""
        out.append(f"circle {c['id']} inside={c['inside']} outside={c['outside']}{arrow}")
    for f in g["faces"]:
        circuits = " | ".join(" ".join(c) for c in f["circuits"]) or "-"
        out.append(f"face {f['id']} label={f['label']} fiber={f['fiber']} boundary={circuits}")
    for p in g["lefschetz"]:
        cycle = ",".join(str(x) for x in p["cycle"]) or "-"
        out.append(f"point {p['id']} face={p['face']} component={p['component']} order={p['order']} cycle={cycle}")
    out.append(f"basepoints {g['basepoints']} sections {g['sections']}")
    return "\n".join(out) + "\n"


def export_json(d: BlfDiagram) -> str:
    return json.dumps(to_graph(d), ensure_ascii=False, indent=2) + "\n"
