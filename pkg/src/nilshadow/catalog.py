"""Catalog of low-dimensional solvable Lie algebras and known actions.

The data lives in JSON files (default: the package's data/catalog
directory, overridable per instance), covering:

  algebras.json   - structure constants with named rational parameters
                    and their admissible domains,
  splittings.json - reference presentation of each semisimple splitting
                    (brackets in a renamed basis, plus the renaming),
  witnesses.json  - explicit simply transitive morphisms, stored as the
                    images of the adapted splitting basis,
  expected.json   - the reference existence verdict per (g, h) pair,
  samples.json    - fixed rational parameter samples used by the
                    verification harness.

Scalar entries are expressions over the entry's parameters, e.g.
"1-lambda" or "(1+sqrt(5))/2".
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Mapping, Optional, Sequence

from .affine import AffineAlgebra
from .linalg import Matrix, Vector
from .liealg import LieAlgebra
from .scalars import Scalar, parse_scalar

__all__ = [
    "Catalog",
    "CatalogEntry",
    "WitnessData",
    "OutOfDomainError",
    "UnknownAlgebraError",
    "default_catalog",
    "normalize_name",
]

_DATA_DIR = Path(__file__).parent / "data" / "catalog"


class OutOfDomainError(ValueError):
    """Parameter values outside the admissible domain of a catalog family."""


class UnknownAlgebraError(KeyError):
    pass


def normalize_name(name: str) -> str:
    out = name.lower().replace("prime", "p")
    for ch in " ,_-()":
        out = out.replace(ch, "")
    return out


# -- condition DSL ---------------------------------------------------------------------

_OPS = {
    "==": lambda a, b: a == b,
    "!=": lambda a, b: a != b,
    "<": lambda a, b: a < b,
    "<=": lambda a, b: a <= b,
    ">": lambda a, b: a > b,
    ">=": lambda a, b: a >= b,
}


def eval_condition(node, env: Mapping[str, Scalar]) -> bool:
    """Evaluate an {all/any/lhs-op-rhs} condition tree over exact scalars."""
    if node is None:
        return True
    if "all" in node:
        return all(eval_condition(child, env) for child in node["all"])
    if "any" in node:
        return any(eval_condition(child, env) for child in node["any"])
    lhs = parse_scalar(str(node["lhs"]), env)
    rhs = parse_scalar(str(node["rhs"]), env)
    op = node["op"]
    if op not in _OPS:
        raise ValueError(f"unknown condition operator {op!r}")
    return _OPS[op](lhs, rhs)


def condition_text(node) -> str:
    if node is None:
        return "always"
    if "all" in node:
        return "(" + " and ".join(condition_text(c) for c in node["all"]) + ")"
    if "any" in node:
        return "(" + " or ".join(condition_text(c) for c in node["any"]) + ")"
    return f"{node['lhs']} {node['op']} {node['rhs']}"


# -- entries ----------------------------------------------------------------------------


@dataclass
class CatalogEntry:
    name: str
    display: str
    dim: int
    param_names: list[str]
    domain: Optional[dict]
    brackets_raw: list
    basis: list[str]

    def check_domain(self, params: Mapping[str, Scalar]) -> None:
        missing = [p for p in self.param_names if p not in params]
        if missing:
            raise OutOfDomainError(f"{self.name}: missing parameter(s) {missing}")
        extra = [p for p in params if p not in self.param_names]
        if extra:
            raise OutOfDomainError(f"{self.name}: unexpected parameter(s) {extra}")
        for p, value in params.items():
            if not value.is_rational():
                raise OutOfDomainError(f"{self.name}: parameter {p} must be rational")
        if not eval_condition(self.domain, params):
            raise OutOfDomainError(
                f"{self.name}: parameters violate the domain {condition_text(self.domain)}"
            )

    def build(self, params: Mapping[str, Scalar]) -> LieAlgebra:
        self.check_domain(params)
        brackets: dict[tuple[int, int], Vector] = {}
        for i, j, terms in self.brackets_raw:
            v = [Scalar(0)] * self.dim
            for k, expr in terms:
                v[int(k)] = parse_scalar(str(expr), params)
            brackets[(int(i), int(j))] = Vector(v)
        return LieAlgebra(self.dim, brackets, names=self.basis, params=dict(params))


@dataclass
class WitnessData:
    g: str
    h: str
    when: Optional[dict]
    defs: dict[str, str]
    torus_raw: list
    shadow_raw: list

    def env(self, params: Mapping[str, Scalar]) -> dict[str, Scalar]:
        env = dict(params)
        for key, expr in self.defs.items():
            env[key] = parse_scalar(str(expr), env)
        return env

    def torus_matrices(self, params: Mapping[str, Scalar], n: int) -> list[Matrix]:
        env = self.env(params)
        return [_parse_matrix(raw, env, n) for raw in self.torus_raw]

    def shadow_images(self, params: Mapping[str, Scalar], n: int) -> list[tuple[Vector, Matrix]]:
        env = self.env(params)
        out = []
        for item in self.shadow_raw:
            v = Vector([parse_scalar(str(e), env) for e in item["v"]])
            d = _parse_matrix(item.get("D"), env, n)
            out.append((v, d))
        return out


def _parse_matrix(raw, env: Mapping[str, Scalar], n: int) -> Matrix:
    if raw is None:
        return Matrix.zeros(n, n)
    return Matrix([[parse_scalar(str(e), env) for e in row] for row in raw])


@dataclass
class SplittingReference:
    g: str
    nilshadow: str
    table_basis: Optional[list]  # renamed basis in adapted coordinates
    table_brackets: Optional[list]


class Catalog:
    """All catalog data, loaded once from a directory of JSON files."""

    def __init__(self, path: Optional[Path] = None):
        self.path = Path(path) if path is not None else _DATA_DIR
        self.entries: dict[str, CatalogEntry] = {}
        self._aliases: dict[str, str] = {}
        self.witnesses: list[WitnessData] = []
        self.expected_rows: list[dict] = []
        self.samples_rows: dict[str, list[dict[str, str]]] = {}
        self.splitting_refs: dict[str, SplittingReference] = {}
        self._affine_cache: dict[str, AffineAlgebra] = {}
        self._load()

    # -- loading ------------------------------------------------------------------

    def _read(self, name: str):
        with open(self.path / name, "r", encoding="utf-8") as fh:
            return json.load(fh)

    def _load(self) -> None:
        for item in self._read("algebras.json"):
            entry = CatalogEntry(
                name=item["name"],
                display=item.get("display", item["name"]),
                dim=int(item["dim"]),
                param_names=list(item.get("params", [])),
                domain=item.get("domain"),
                brackets_raw=item.get("brackets", []),
                basis=item.get("basis") or [f"e{i+1}" for i in range(int(item["dim"]))],
            )
            self.entries[entry.name] = entry
            # abelian R3/R4 are only reachable by their exact names, so the
            # case-folded keys stay free for the solvable families r3/r4
            if not (entry.name.startswith("R") and entry.name[1:].isdigit()):
                self._aliases[normalize_name(entry.name)] = entry.name
            for alias in item.get("aliases", []):
                self._aliases[normalize_name(alias)] = entry.name
        for item in self._read("witnesses.json"):
            self.witnesses.append(
                WitnessData(
                    g=item["g"],
                    h=item["h"],
                    when=item.get("when"),
                    defs=item.get("defs", {}),
                    torus_raw=item.get("torus", []),
                    shadow_raw=item["shadow"],
                )
            )
        self.expected_rows = self._read("expected.json")
        for item in self._read("samples.json"):
            self.samples_rows[item["g"]] = item["samples"]
        for item in self._read("splittings.json"):
            ref = SplittingReference(
                g=item["g"],
                nilshadow=item["nilshadow"],
                table_basis=item.get("table_basis"),
                table_brackets=item.get("table_brackets"),
            )
            self.splitting_refs[ref.g] = ref

    # -- access -------------------------------------------------------------------

    def resolve(self, name: str) -> str:
        if name in self.entries:
            return name
        key = normalize_name(name)
        if key not in self._aliases:
            raise UnknownAlgebraError(f"unknown catalog algebra {name!r}")
        return self._aliases[key]

    def entry(self, name: str) -> CatalogEntry:
        return self.entries[self.resolve(name)]

    def parse_params(self, entry: CatalogEntry, raw: Mapping[str, str]) -> dict[str, Scalar]:
        return {k: parse_scalar(str(v), {}) for k, v in raw.items()}

    def algebra(self, name: str, params: Optional[Mapping[str, Scalar]] = None) -> LieAlgebra:
        return self.entry(name).build(params or {})

    def affine_target(self, name: str) -> AffineAlgebra:
        """aff(h) for a (nilpotent) catalog target, cached."""
        canonical = self.resolve(name)
        if canonical not in self._affine_cache:
            self._affine_cache[canonical] = AffineAlgebra(self.algebra(canonical))
        return self._affine_cache[canonical]

    def witness_data(
        self, gname: str, params: Mapping[str, Scalar], hname: str
    ) -> Optional[WitnessData]:
        gname, hname = self.resolve(gname), self.resolve(hname)
        for wd in self.witnesses:
            if wd.g == gname and wd.h == hname and eval_condition(wd.when, params):
                return wd
        return None

    def expected_result(self, gname: str, params: Mapping[str, Scalar], hname: str) -> str:
        """Reference verdict (EXISTS / OBSTRUCTED) for an in-domain pair."""
        gname, hname = self.resolve(gname), self.resolve(hname)
        self.entry(gname).check_domain(params)
        for row in self.expected_rows:
            if row["g"] != gname or row["h"] != hname:
                continue
            for case in row["cases"]:
                if eval_condition(case.get("when"), params):
                    return case["verdict"]
        raise UnknownAlgebraError(f"no expected verdict recorded for ({gname}, {hname})")

    def samples(self, gname: str) -> list[dict[str, Scalar]]:
        gname = self.resolve(gname)
        rows = self.samples_rows.get(gname, [{}])
        return [{k: parse_scalar(str(v), {}) for k, v in row.items()} for row in rows]

    def classification_pairs(self) -> list[tuple[str, str]]:
        """All (g, h) pairs covered by the reference classification."""
        return [(row["g"], row["h"]) for row in self.expected_rows]


_default: Optional[Catalog] = None


def default_catalog() -> Catalog:
    global _default
    if _default is None:
        _default = Catalog()
    return _default
