"""JSON-friendly descriptions of ring handles, for serialising matrices and reports."""
from __future__ import annotations

from .errors import InvalidParameter
from .rings import (
    QQ,
    ZZ,
    FiniteField,
    FractionField,
    IntegerModRing,
    IntegerRing,
    RationalField,
    Ring,
    ResidueRing,
    intern,
)


def ring_descriptor(R: Ring) -> dict:
    from .numberfield import NumberField
    from .poly.dense import PolynomialRing
    from .poly.sparse import MPolyRing

    if isinstance(R, IntegerRing):
        return {"kind": "ZZ"}
    if isinstance(R, RationalField):
        return {"kind": "QQ"}
    if isinstance(R, IntegerModRing):
        return {"kind": "ZZ/n", "n": R.n}
    if isinstance(R, FiniteField):
        return {"kind": "GF", "p": R.p, "k": R.k, "var": R.var, "modulus": list(R.modulus)}
    if isinstance(R, PolynomialRing):
        return {"kind": "poly", "base": ring_descriptor(R.base), "var": R.var}
    if isinstance(R, MPolyRing):
        return {"kind": "mpoly", "base": ring_descriptor(R.base), "vars": list(R.vars)}
    if isinstance(R, FractionField):
        return {"kind": "frac", "base": ring_descriptor(R.base)}
    if isinstance(R, ResidueRing):
        return {"kind": "residue", "base": ring_descriptor(R.base), "modulus": str(R.modulus)}
    if isinstance(R, NumberField):
        return {"kind": "NF", "poly": list(R.f), "var": R.var}
    raise InvalidParameter(f"no descriptor for {R}")


def ring_from_descriptor(d: dict) -> Ring:
    from .numberfield import NumberField
    from .poly.dense import PolynomialRing
    from .poly.sparse import MPolyRing

    kind = d["kind"]
    if kind == "ZZ":
        return ZZ
    if kind == "QQ":
        return QQ
    if kind == "ZZ/n":
        return intern(IntegerModRing(d["n"]))
    if kind == "GF":
        return intern(FiniteField(d["p"], d["k"], d.get("var", "x"), modulus=d.get("modulus")))
    if kind == "poly":
        return intern(PolynomialRing(ring_from_descriptor(d["base"]), d["var"]))
    if kind == "mpoly":
        return intern(MPolyRing(ring_from_descriptor(d["base"]), tuple(d["vars"])))
    if kind == "frac":
        return intern(FractionField(ring_from_descriptor(d["base"])))
    if kind == "residue":
        P = ring_from_descriptor(d["base"])
        return intern(ResidueRing(P, P.parse(d["modulus"])))
    if kind == "NF":
        return intern(NumberField(d["poly"], d.get("var", "a")))
    raise InvalidParameter(f"unknown ring kind {kind!r}")
