"""JSON encodings.  Big integers travel as decimal strings."""

from __future__ import annotations

import json
from typing import Any

from .charring import DenomFactor, FormalChar, LaurentInt, RationalChar


def formal_to_json(c: FormalChar) -> list[dict]:
    return [{"wt": list(wt), "t": t, "coef": str(coef)} for wt, t, coef in c.items()]


def formal_from_json(data: list[dict]) -> FormalChar:
    return FormalChar.from_items((tuple(d["wt"]), int(d["t"]), int(d["coef"])) for d in data)


def rational_to_json(c: RationalChar) -> dict:
    return {
        "numerator": formal_to_json(c.numerator),
        "denominator": [
            {"wt": list(f.shift_weight), "t": f.t_degree, "mult": f.multiplicity} for f in c.denominator
        ],
    }


def rational_from_json(data: dict) -> RationalChar:
    return RationalChar(
        formal_from_json(data["numerator"]),
        [DenomFactor(tuple(f["wt"]), int(f["t"]), int(f["mult"])) for f in data["denominator"]],
    )


def laurent_to_json(x: LaurentInt) -> dict[str, str]:
    return {str(e): str(c) for e, c in sorted(x.coeffs.items())}


def laurent_from_json(data: dict[str, str]) -> LaurentInt:
    return LaurentInt({int(e): int(c) for e, c in data.items()})


def dumps(obj: Any, pretty: bool = False) -> str:
    """Deterministic JSON text."""
    return json.dumps(obj, indent=2 if pretty else None, sort_keys=True,
                      separators=None if pretty else (",", ":"))
