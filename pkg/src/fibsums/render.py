"""Deterministic text, LaTeX and JSON renderings of formulas."""

from __future__ import annotations

import json
from fractions import Fraction

from .expansions import ExpansionTerm, Kind, PowerExpansion
from .shifted_sums import ClosedForm, ClosedFormAtom, Tag

FORMATS = ("text", "latex", "json")


def _ratio(c: Fraction) -> str:
    return f"{c.numerator}/{c.denominator}"


def _join_text(parts: list[tuple[Fraction, str]]) -> str:
    if not parts:
        return "0"
    out = []
    for i, (c, body) in enumerate(parts):
        mag = abs(c)
        mag_s = str(mag.numerator) if mag.denominator == 1 else _ratio(mag)
        piece = f"{mag_s}*{body}" if body else mag_s
        if i == 0:
            out.append(f"-{piece}" if c < 0 else piece)
        else:
            out.append(f" - {piece}" if c < 0 else f" + {piece}")
    return "".join(out)


def _latex_coeff(c: Fraction, first: bool, bare: bool) -> str:
    """Signed coefficient; ``bare`` means nothing follows (constant term)."""
    mag = abs(c)
    sgn = "-" if c < 0 else ("" if first else "+")
    if mag == 1 and not bare:
        return sgn
    if mag.denominator == 1:
        return f"{sgn}{mag.numerator}"
    return f"{sgn}\\frac{{{mag.numerator}}}{{{mag.denominator}}}"


def _latex_index(stride: int, shifted: bool) -> str:
    if shifted:
        return "n+1" if stride == 1 else f"{stride}(n+1)"
    return "n" if stride == 1 else f"{stride}n"


# closed forms


def _atom_text(a: ClosedFormAtom) -> str:
    parts = ["(-1)^n"] if a.sigma else []
    if a.tag is Tag.F_N1:
        parts.append(f"F({a.modulus}*(n+1))")
    elif a.tag is Tag.F_N:
        parts.append(f"F({a.modulus}*n)")
    elif a.tag is Tag.LINEAR:
        parts.append("(n+1)")
    return "*".join(parts)


def _atom_latex(a: ClosedFormAtom) -> str:
    s = "(-1)^{n}" if a.sigma else ""
    if a.tag in (Tag.F_N1, Tag.F_N):
        s += f"F_{{{_latex_index(a.modulus, a.tag is Tag.F_N1)}}}"
    elif a.tag is Tag.LINEAR:
        s += "(n+1)"
    return s


def closed_form_to_dict(cf: ClosedForm) -> dict:
    return {
        "atoms": [
            {"tag": a.tag.value, "modulus": a.modulus, "coeff": _ratio(a.coeff), "sign_exp": a.sigma}
            for a in cf.atoms
        ]
    }


def render_closed_form(cf: ClosedForm, fmt: str = "text") -> str:
    if fmt == "text":
        return _join_text([(a.coeff, _atom_text(a)) for a in cf.atoms])
    if fmt == "latex":
        if not cf.atoms:
            return "0"
        return "".join(
            _latex_coeff(a.coeff, i == 0, not _atom_latex(a)) + _atom_latex(a)
            for i, a in enumerate(cf.atoms)
        )
    if fmt == "json":
        return json.dumps(closed_form_to_dict(cf))
    raise ValueError(f"unknown format {fmt!r}")


# expansions


def _term_text(t: ExpansionTerm) -> str:
    parts = ["(-1)^n"] if t.sigma else []
    if t.kind is not Kind.CONST:
        idx = f"{t.stride}*(n+1)" if t.offset_one else f"{t.stride}*n"
        parts.append(f"{t.kind.value}({idx})")
    return "*".join(parts)


def _term_latex(t: ExpansionTerm) -> str:
    s = "(-1)^{n}" if t.sigma else ""
    if t.kind is not Kind.CONST:
        s += f"{t.kind.value}_{{{_latex_index(t.stride, t.offset_one)}}}"
    return s


def expansion_to_dict(e: PowerExpansion) -> dict:
    return {
        "sequence": e.sequence.value,
        "exponent": e.exponent,
        "form": e.form.value,
        "terms": [
            {
                "kind": t.kind.value,
                "stride": t.stride,
                "offset_one": t.offset_one,
                "coeff": _ratio(t.coeff),
                "sign_exp": t.sigma,
            }
            for t in e.terms
        ],
    }


def render_expansion(e: PowerExpansion, fmt: str = "text") -> str:
    if fmt == "text":
        return _join_text([(t.coeff, _term_text(t)) for t in e.terms])
    if fmt == "latex":
        if not e.terms:
            return "0"
        return "".join(
            _latex_coeff(t.coeff, i == 0, not _term_latex(t)) + _term_latex(t)
            for i, t in enumerate(e.terms)
        )
    if fmt == "json":
        return json.dumps(expansion_to_dict(e))
    raise ValueError(f"unknown format {fmt!r}")
