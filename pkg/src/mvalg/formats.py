"""JSON-compatible wire formats.

Algebras: {"finite": [2, 3]}, {"rational": {"kind": "chain", "n": 6}},
{"rational": {"kind": "supernatural", "primes": {"2": "inf"}, "all": false}},
{"product": [rational...]}, {"simplicial": {"rank": 2, "unit": [2, 3]}}.
Elements are lists of fraction strings in lowest terms (["1/2", "1/3"]);
environments map variable names to fraction strings; spaces are
{"points": n, "opens": [[...], ...]}.
"""

from __future__ import annotations

from fractions import Fraction

from .algebras import AlgebraError, Element, FiniteMV, Hom
from .lgroups import SimplicialGroup
from .rationals import INF, RationalAlgebra
from .topology import parse_space_json, space_to_json  # re-exported

__all__ = [
    "FormatError",
    "parse_fraction",
    "fraction_to_str",
    "parse_element",
    "element_to_json",
    "parse_algebra",
    "algebra_to_json",
    "rational_to_json",
    "parse_env",
    "hom_to_json",
    "parse_space_json",
    "space_to_json",
]


class FormatError(ValueError):
    """Malformed wire-format input."""


def parse_fraction(text) -> Fraction:
    if isinstance(text, Fraction):
        f = text
    elif isinstance(text, (str, int)):
        try:
            f = Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise FormatError(f"malformed fraction {text!r}: {exc}") from None
    else:
        raise FormatError(f"malformed fraction {text!r}")
    if not 0 <= f <= 1:
        raise FormatError(f"fraction {text!r} is outside [0,1]")
    return f


def fraction_to_str(f: Fraction) -> str:
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


def parse_element(algebra: FiniteMV, obj) -> Element:
    if not isinstance(obj, list):
        raise FormatError(f"element must be a list of fraction strings, got {obj!r}")
    try:
        return algebra.element(parse_fraction(c) for c in obj)
    except AlgebraError as exc:
        raise FormatError(str(exc)) from None


def element_to_json(x: Element) -> list[str]:
    return [fraction_to_str(c) for c in x]


def parse_env(algebra: FiniteMV, obj) -> dict[str, Element]:
    if not isinstance(obj, dict):
        raise FormatError(f"environment must be an object, got {obj!r}")
    env = {}
    for name, value in obj.items():
        coords = value if isinstance(value, list) else [value] * algebra.num_components
        env[name] = parse_element(algebra, coords)
    return env


def _parse_rational(obj) -> RationalAlgebra:
    if not isinstance(obj, dict) or "kind" not in obj:
        raise FormatError(f'expected {{"kind": ...}}, got {obj!r}')
    if obj["kind"] == "chain":
        n = obj.get("n")
        if not isinstance(n, int) or n < 1:
            raise FormatError(f"bad chain order {n!r}")
        return RationalAlgebra.chain(n)
    if obj["kind"] == "supernatural":
        primes = obj.get("primes", {})
        if not isinstance(primes, dict):
            raise FormatError(f"bad primes table {primes!r}")
        caps = {}
        for p, e in primes.items():
            try:
                prime = int(p)
            except ValueError:
                raise FormatError(f"bad prime {p!r}") from None
            if e == "inf":
                caps[prime] = INF
            elif isinstance(e, int) and e >= 0:
                caps[prime] = e
            else:
                raise FormatError(f"bad exponent {e!r} for prime {p}")
        try:
            return RationalAlgebra.supernatural(caps, bool(obj.get("all", False)))
        except AlgebraError as exc:
            raise FormatError(str(exc)) from None
    raise FormatError(f"unknown rational algebra kind {obj['kind']!r}")


def parse_algebra(obj):
    """Parse any of the algebra wire formats; returns FiniteMV,
    RationalAlgebra, a list of RationalAlgebra (product), or SimplicialGroup."""
    if not isinstance(obj, dict) or len(obj) != 1:
        raise FormatError(f"expected a one-key algebra object, got {obj!r}")
    (key, value), = obj.items()
    if key == "finite":
        if not isinstance(value, list) or not all(isinstance(m, int) for m in value):
            raise FormatError(f"bad chain orders {value!r}")
        try:
            return FiniteMV(value)
        except AlgebraError as exc:
            raise FormatError(str(exc)) from None
    if key == "rational":
        return _parse_rational(value)
    if key == "product":
        if not isinstance(value, list):
            raise FormatError(f"bad product {value!r}")
        return [
            _parse_rational(item["rational"]) if isinstance(item, dict) and set(item) == {"rational"} else _parse_rational(item)
            for item in value
        ]
    if key == "simplicial":
        if (
            not isinstance(value, dict)
            or set(value) not in ({"rank", "unit"}, {"unit"})
            or not isinstance(value.get("unit"), list)
        ):
            raise FormatError(f'expected {{"rank": r, "unit": [...]}}, got {value!r}')
        unit = value["unit"]
        if "rank" in value and value["rank"] != len(unit):
            raise FormatError(f"rank {value['rank']!r} does not match unit length {len(unit)}")
        try:
            return SimplicialGroup(unit)
        except AlgebraError as exc:
            raise FormatError(str(exc)) from None
    raise FormatError(f"unknown algebra kind {key!r}")


def rational_to_json(r: RationalAlgebra) -> dict:
    n = r.chain_order()
    if n is not None:
        return {"rational": {"kind": "chain", "n": n}}
    primes = {str(p): ("inf" if e == INF else e) for p, e in r.exponents}
    return {"rational": {"kind": "supernatural", "primes": primes, "all": r.all_infinite}}


def algebra_to_json(algebra) -> dict:
    if isinstance(algebra, FiniteMV):
        return {"finite": list(algebra.orders)}
    if isinstance(algebra, RationalAlgebra):
        return rational_to_json(algebra)
    if isinstance(algebra, SimplicialGroup):
        return {"simplicial": {"rank": algebra.rank, "unit": list(algebra.unit)}}
    if isinstance(algebra, (list, tuple)):
        return {"product": [rational_to_json(r) for r in algebra]}
    raise FormatError(f"cannot serialize {algebra!r}")


def hom_to_json(h: Hom) -> dict:
    return {
        "source": list(h.source.orders),
        "target": list(h.target.orders),
        "component_map": list(h.component_map),
    }
