"""Lattice and fuzzy-set JSON documents.

A lattice document is ``{"name", "elements", "covers"}`` and nothing else;
elements are unique strings, covers are ``[lower, upper]`` pairs over them.
A fuzzy-set document is ``{"lattice", "memberships"}`` where ``lattice`` is
either a fixture name (``"m3"``, ``"chain3"``, ``"product(chain2,chain3)"``,
...) or an inline lattice document, and ``memberships`` maps every element
to a grade string — ``"num/den"`` or a decimal literal, both parsed
exactly.  Emission is canonical (sorted keys, lowest-terms grades, Hasse
covers in canonical order), so parse → emit is byte-stable.
"""

from __future__ import annotations

import json
from pathlib import Path

from .errors import FormatError, FuzzintError, InvalidGrade, LatticeMismatch, UnknownElement
from .fuzzysets import FuzzySet, as_grade, format_grade
from .lattice import FiniteLattice, format_element, standard_lattice


def _require_keys(doc: dict, keys: set[str], what: str) -> None:
    if not isinstance(doc, dict):
        raise FormatError(f"{what} must be a JSON object")
    extra = set(doc) - keys
    if extra:
        raise FormatError(f"{what} has unsupported fields: {', '.join(sorted(extra))}")
    missing = keys - set(doc)
    if missing:
        raise FormatError(f"{what} is missing fields: {', '.join(sorted(missing))}")


def lattice_from_json(doc) -> FiniteLattice:
    _require_keys(doc, {"name", "elements", "covers"}, "a lattice document")
    name = doc["name"]
    if not isinstance(name, str):
        raise FormatError("lattice name must be a string")
    elements = doc["elements"]
    if (not isinstance(elements, list) or not elements
            or not all(isinstance(e, str) for e in elements)):
        raise FormatError("elements must be a nonempty array of strings")
    if len(set(elements)) != len(elements):
        raise FormatError("element ids must be unique")
    covers = doc["covers"]
    if not isinstance(covers, list) or not all(
            isinstance(c, list) and len(c) == 2 and all(isinstance(e, str) for e in c)
            for c in covers):
        raise FormatError("covers must be an array of [lower, upper] string pairs")
    try:
        return FiniteLattice(elements, [tuple(c) for c in covers], name=name)
    except UnknownElement as exc:
        raise FormatError(f"cover refers to an undeclared element: {exc}") from exc


def lattice_to_json(lattice: FiniteLattice) -> dict:
    return {"name": lattice.name,
            "elements": [format_element(e) for e in lattice.elements],
            "covers": [[format_element(lo), format_element(hi)]
                       for lo, hi in lattice.covers()]}


def _lattice_reference(lattice: FiniteLattice):
    """Fixture name when it faithfully reproduces the lattice, else inline."""
    if lattice.name:
        try:
            fixture = standard_lattice(lattice.name)
        except (ValueError, FuzzintError):
            fixture = None
        if fixture is not None and fixture == lattice:
            return fixture.name
    return lattice_to_json(lattice)


def _resolve_lattice(ref, lattice: FiniteLattice | None) -> FiniteLattice:
    if isinstance(ref, str):
        if lattice is not None and ref == lattice.name:
            return lattice
        try:
            resolved = standard_lattice(ref)
        except ValueError as exc:
            raise FormatError(f"unknown lattice name {ref!r}") from exc
    elif isinstance(ref, dict):
        resolved = lattice_from_json(ref)
    else:
        raise FormatError("the lattice field must be a name or an inline lattice object")
    if lattice is not None:
        if resolved != lattice:
            raise LatticeMismatch(
                "the fuzzy set's lattice does not match the provided lattice")
        return lattice
    return resolved


def fuzzy_set_from_json(doc, lattice: FiniteLattice | None = None) -> FuzzySet:
    """Parse a fuzzy-set document; with ``lattice`` given, the document's
    lattice must match it."""
    _require_keys(doc, {"lattice", "memberships"}, "a fuzzy-set document")
    target = _resolve_lattice(doc["lattice"], lattice)
    raw = doc["memberships"]
    if not isinstance(raw, dict):
        raise FormatError("memberships must be an object")
    by_name = {format_element(e): e for e in target.elements}
    values = {}
    for key, grade in raw.items():
        if key not in by_name:
            raise FormatError(f"membership for unknown element {key!r}")
        if isinstance(grade, float):
            raise FormatError(
                f"grade for {key!r} is a JSON float; use a string for an exact value")
        if not isinstance(grade, (str, int)):
            raise FormatError(f"grade for {key!r} must be a string")
        try:
            values[by_name[key]] = as_grade(grade)
        except InvalidGrade as exc:
            raise FormatError(f"bad grade for {key!r}: {exc}") from exc
    missing = [name for name in by_name if name not in raw]
    if missing:
        raise FormatError("memberships must be total; missing: " + ", ".join(sorted(missing)))
    return FuzzySet(target, values)


def fuzzy_set_to_json(m: FuzzySet) -> dict:
    return {"lattice": _lattice_reference(m.lattice),
            "memberships": {format_element(e): format_grade(v)
                            for e, v in zip(m.lattice.elements, m.values)}}


def dumps_canonical(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _read_json(path) -> object:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path} is not valid JSON: {exc}") from exc


def load_lattice(path) -> FiniteLattice:
    return lattice_from_json(_read_json(path))


def load_fuzzy_set(path, lattice: FiniteLattice | None = None) -> FuzzySet:
    return fuzzy_set_from_json(_read_json(path), lattice)
