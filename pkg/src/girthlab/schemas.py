"""JSON Schemas for everything the command line prints."""

GRAPH = {
    "type": "object",
    "required": ["k", "q", "p", "m", "modulus", "modulus_str"],
    "properties": {
        "k": {"type": ["integer", "null"], "minimum": 2},
        "q": {"type": "integer", "minimum": 2},
        "p": {"type": "integer", "minimum": 2},
        "m": {"type": "integer", "minimum": 1},
        "modulus": {"type": "array", "items": {"type": "integer", "minimum": 0}, "minItems": 2},
        "modulus_str": {"type": "string"},
    },
    "additionalProperties": False,
}

GIRTH_PAYLOAD = {
    "type": "object",
    "required": ["girth", "exact", "display", "max_length"],
    "properties": {
        "girth": {"type": "integer", "minimum": 4},
        "exact": {"type": "boolean"},
        "display": {"type": "string", "pattern": "^>?[0-9]+$"},
        "max_length": {"type": "integer"},
    },
    "additionalProperties": False,
}

CYCLE_RECORD = {
    "type": "object",
    "required": ["type", "vertices"],
    "properties": {
        "type": {"type": "array", "items": {"type": "integer", "minimum": 1}},
        # encoded indices, alternating left, right, left, ...
        "vertices": {"type": "array", "items": {"type": "integer", "minimum": 0}},
    },
    "additionalProperties": False,
}

CYCLES_PAYLOAD = {
    "type": "object",
    "required": ["length", "count", "format"],
    "properties": {
        "length": {"type": "integer", "minimum": 4},
        "count": {"type": "integer", "minimum": 0},
        "format": {"enum": ["json", "csv"]},
    },
    "additionalProperties": False,
}

VERIFY_PAYLOAD = {
    "type": "object",
    "required": ["theorem", "passed", "checks"],
    "properties": {
        "theorem": {"enum": ["1", "2", "3", "4", "rho"]},
        "passed": {"type": "boolean"},
        "checks": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name", "passed", "counterexample"],
                "properties": {
                    "name": {"type": "string"},
                    "passed": {"type": "boolean"},
                    "counterexample": {"type": ["string", "null"]},
                },
                "additionalProperties": False,
            },
        },
    },
    "additionalProperties": False,
}

EXPORT_PAYLOAD = {
    "type": "object",
    "required": ["format", "path", "vertices_per_side", "edges"],
    "properties": {
        "format": {"enum": ["alist", "edgelist"]},
        "path": {"type": ["string", "null"]},
        "vertices_per_side": {"type": "integer"},
        "edges": {"type": "integer"},
    },
    "additionalProperties": False,
}

PAYLOADS = {
    "girth": GIRTH_PAYLOAD,
    "cycles": CYCLES_PAYLOAD,
    "verify": VERIFY_PAYLOAD,
    "export": EXPORT_PAYLOAD,
}

RUN_REPORT = {
    "type": "object",
    "required": ["command", "graph", "result", "wall_time", "workers"],
    "properties": {
        "command": {"enum": sorted(PAYLOADS)},
        "graph": GRAPH,
        "result": {"type": "object"},
        "wall_time": {"type": "number", "minimum": 0},
        "workers": {"type": "integer", "minimum": 1},
    },
    "additionalProperties": False,
}
