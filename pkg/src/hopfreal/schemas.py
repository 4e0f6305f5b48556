"""JSON schemas for the command-line payloads.

Each subcommand reads one JSON object.  Its ``op`` field selects the
operation (each subcommand has a default op); the remaining fields are the
operation's arguments.  ``hopf <command> --print-schema`` prints the schema.
"""

COMPLEX = {
    "oneOf": [
        {"type": "number"},
        {"type": "array", "items": {"type": "number"}, "minItems": 2, "maxItems": 2},
    ]
}

POLYMAP = {
    "type": "object",
    "required": ["conj", "P", "Q"],
    "properties": {
        "conj": {"type": "boolean"},
        "P": {"$ref": "#/$defs/terms"},
        "Q": {"$ref": "#/$defs/terms"},
    },
    "additionalProperties": False,
}

TERMS = {
    "type": "array",
    "items": {
        "type": "array",
        "prefixItems": [
            {"type": "integer", "minimum": 0},
            {"type": "integer", "minimum": 0},
            {"type": "number"},
            {"type": "number"},
        ],
        "minItems": 4,
        "maxItems": 4,
    },
}

CONTRACTION = {
    "type": "object",
    "required": ["class"],
    "properties": {
        "class": {"enum": ["IV", "III", "IIa", "IIb", "IIc", "IIcPrime", "IIaTilde", "IIbTilde"]},
        "alpha": {"$ref": "#/$defs/complex"},
        "delta": {"$ref": "#/$defs/complex"},
        "r": {"type": "integer", "minimum": 1},
        "c": {"$ref": "#/$defs/complex"},
    },
    "additionalProperties": False,
}

STRUCTURE = {
    "oneOf": [
        {
            "type": "object",
            "required": ["parity"],
            "properties": {"parity": {"enum": ["even", "odd"]}},
            "additionalProperties": False,
        },
        {
            "type": "object",
            "required": ["lift"],
            "properties": {"lift": {"$ref": "#/$defs/polymap"}},
            "additionalProperties": False,
        },
    ]
}

POINTS = {"type": "array", "minItems": 1, "items": {"type": "array", "items": {"$ref": "#/$defs/complex"}}}

DEFS = {
    "complex": COMPLEX,
    "polymap": POLYMAP,
    "terms": TERMS,
    "contraction": CONTRACTION,
    "structure": STRUCTURE,
    "points": POINTS,
}


def _ref(name):
    return {"$ref": "#/$defs/%s" % name}


def _command(default_op, ops):
    return {"default": default_op, "ops": ops}


def op_schema(command: str, op: str) -> dict:
    """The full JSON schema of one operation of a subcommand."""
    required, props = COMMANDS[command]["ops"][op]
    properties = {"op": {"const": op}}
    properties.update(props)
    return {
        "$schema": "https://json-schema.org/draft/2020-12/schema",
        "$defs": DEFS,
        "type": "object",
        "required": list(required),
        "properties": properties,
        "additionalProperties": False,
    }


def command_schema(command: str) -> dict:
    """All operations of a subcommand, keyed by op name."""
    spec = COMMANDS[command]
    return {"default_op": spec["default"], "ops": {op: op_schema(command, op) for op in sorted(spec["ops"])}}


C, S, M, P = _ref("contraction"), _ref("structure"), _ref("polymap"), _ref("points")
NUM = {"type": "number"}

COMMANDS = {
    "classify": _command(
        "classify",
        {
            "classify": (["map"], {"map": M, "allow_tilde": {"type": "boolean"}}),
            "biholomorphic": (["f1", "f2"], {"f1": C, "f2": C}),
            "flags": (["contraction"], {"contraction": C}),
        },
    ),
    "existence": _command(
        "existence",
        {
            "existence": (["contraction"], {"contraction": C}),
            "canonical": (["contraction", "parity"], {"contraction": C, "parity": {"enum": ["even", "odd"]}}),
            "parity": (["contraction", "lift"], {"contraction": C, "lift": M}),
            "family": (["contraction"], {"contraction": C, "params": {"type": "object"}}),
        },
    ),
    "normalize": _command(
        "normalize",
        {"normalize": (["contraction", "lift"], {"contraction": C, "lift": M})},
    ),
    "flow": _command(
        "flow",
        {
            "flow": (["contraction", "t"], {"contraction": C, "t": NUM}),
            "square": (["contraction"], {"contraction": C}),
            "generator": (["contraction", "points"], {"contraction": C, "points": P}),
            "evaluate": (["map", "points"], {"map": M, "points": P}),
            "compose": (["g", "h"], {"g": M, "h": M}),
            "invert": (["map"], {"map": M}),
            "maps_equal": (["m1", "m2"], {"m1": M, "m2": M, "tol": NUM}),
        },
    ),
    "root": _command(
        "root",
        {"root": (["contraction", "k"], {"contraction": C, "k": {"type": "integer", "minimum": 1}})},
    ),
    "chart": _command(
        "chart",
        {
            "chart": (["contraction", "structure"], {"contraction": C, "structure": S, "points": P}),
            "eta": (["contraction"], {"contraction": C}),
            "sigma": (
                ["eta", "points"],
                {
                    "eta": {
                        "type": "object",
                        "required": ["q", "B"],
                        "properties": {"q": {"type": "integer", "minimum": 1}, "B": {"type": "number", "exclusiveMinimum": 0}, "C": NUM},
                    },
                    "points": P,
                },
            ),
            "big_F": (["contraction", "t", "points"], {"contraction": C, "t": {"type": "array", "items": NUM}, "points": P}),
            "big_F_inverse": (["contraction", "points"], {"contraction": C, "points": P}),
            "model_involution": (["model", "points"], {"model": {"enum": ["Tau", "TauPrime", "Mu0"]}, "points": P}),
            "hopf_point": (["contraction", "points"], {"contraction": C, "points": P}),
        },
    ),
    "locus": _command(
        "locus",
        {"locus": (["contraction", "structure"], {"contraction": C, "structure": S})},
    ),
    "quotient": _command(
        "quotient",
        {
            "quotient": (["contraction", "structure"], {"contraction": C, "structure": S}),
            "beta": (["points"], {"points": {"type": "array", "items": {"type": "array", "items": NUM, "minItems": 2, "maxItems": 2}}}),
        },
    ),
    "picard": _command(
        "picard",
        {
            "picard": (["parity", "zeta"], {"parity": {"enum": ["even", "odd"]}, "zeta": _ref("complex")}),
            "involution": (["zeta"], {"zeta": _ref("complex")}),
            "group": (["parity"], {"parity": {"enum": ["even", "odd"]}}),
            "verify_bundle": (
                ["contraction", "structure", "zeta", "nu"],
                {"contraction": C, "structure": S, "zeta": _ref("complex"), "nu": _ref("complex")},
            ),
        },
    ),
    "aut": _command(
        "aut",
        {
            "aut": (["contraction", "structure"], {"contraction": C, "structure": S}),
            "canonical_rep": (["contraction", "map"], {"contraction": C, "map": M}),
            "membership_even": (["contraction", "map"], {"contraction": C, "map": M}),
            "spinc": (
                ["matrix"],
                {
                    "matrix": {"type": "array", "minItems": 2, "maxItems": 2, "items": {"type": "array", "minItems": 2, "maxItems": 2, "items": _ref("complex")}},
                    "alpha": _ref("complex"),
                },
            ),
        },
    ),
    "verify": _command("verify", {"verify": ([], {"suite": {"type": "string"}})}),
}
