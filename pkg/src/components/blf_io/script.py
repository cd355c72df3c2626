"""MoveScript text: one move per line, ``name arg... key=value...``, ``#`` comments."""
from __future__ import annotations

import re
from typing import List

from ..errors import BlfSyntaxError
from ..models import MoveInvocation, MoveScript

MOVES = {
    # name: (min args, max args or None, allowed options)
    "slide": (2, None, ("bigon", "xsurgery", "ysurgery")),
    "slip": (2, None, ("bigon", "xsurgery", "ysurgery")),
    "r2": (1, 1, ()),
    "push": (2, 2, ("component", "cycle")),
    "cusp": (1, 1, ("face", "component", "cycle")),
    "flip": (1, 1, ("component", "fiber")),
    "connect-fibers": (0, 0, ()),
    "blow-up": (0, 0, ()),
    "blow-down": (0, 0, ()),
}
REQUIRED = {"push": ("component", "cycle")}


def parse_script(text: str) -> MoveScript:
    invocations: List[MoveInvocation] = []
    for number, raw in enumerate(text.split("\n"), start=1):
        body = raw.split("#", 1)[0]
        tokens = [(m.group(0), m.start() + 1) for m in re.finditer(r"\S+", body)]
        if not tokens:
            continue
        name, column = tokens[0]
        if name not in MOVES:
            raise BlfSyntaxError(f"unknown move {name!r}", number, column)
        lo, hi, allowed = MOVES[name]
        args, options = [], []
        for token, col in tokens[1:]:
            key, sep, value = token.partition("=")
            if sep:
                if key not in allowed:
                    raise BlfSyntaxError(f"{name} takes no option {key}=", number, col)
                if not value:
                    raise BlfSyntaxError(f"empty value for {key}=", number, col)
                options.append((key, value))
            elif options:
                raise BlfSyntaxError("positional argument after options", number, col)
            else:
                args.append(token)
        if len(args) < lo or (hi is not None and len(args) > hi):
            wanted = str(lo) if hi == lo else f"at least {lo}" if hi is None else f"{lo} to {hi}"
            raise BlfSyntaxError(f"{name} takes {wanted} arguments, got {len(args)}", number, column)
        keys = [k for k, _ in options]
        if len(set(keys)) != len(keys):
            raise BlfSyntaxError(f"repeated option in {name}", number, column)
        missing = [k for k in REQUIRED.get(name, ()) if k not in keys]
        if missing:
            raise BlfSyntaxError(f"{name} needs {', '.join(k + '=' for k in missing)}", number, column)
        invocations.append(MoveInvocation(name, tuple(args), tuple(options), number))
    return MoveScript(tuple(invocations))
