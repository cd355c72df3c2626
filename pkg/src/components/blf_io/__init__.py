from .format import parse, serialize, parse_fiber, parse_surgery, parse_cycle
from .script import parse_script
from .export import export_graph, export_json, to_graph
from .examples import bundled_names, resolve_path, load

__all__ = [
    "parse",
    "serialize",
    "parse_fiber",
    "parse_surgery",
    "parse_cycle",
    "parse_script",
    "export_graph",
    "export_json",
    "to_graph",
    "bundled_names",
    "resolve_path",
    "load",
]
