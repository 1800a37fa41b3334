"""Instance files: one JSON document describing a full problem.

Schema (all keys required):

    {
      "field":    {"q": 5},
      "weight":   {"kind": "hamming"} | {"kind": "lee"}
                  | {"kind": "table", "values": [0, ...]},
      "poset":    {"elements": 3, "cover": [[1, 2], [2, 3]]},
      "labeling": [2, 1],
      "code":     {"kind": "generator", "rows": [[...], ...]}
                  | {"kind": "list", "words": [[...], ...]}
    }

Loading normalizes to canonical form (sorted cover pairs, int coercion),
so save(load(f)) is idempotent and load(save(x)) == x.  The digest of the
canonical JSON identifies an instance in reports.
"""

from __future__ import annotations

import hashlib
import json
import random
from dataclasses import dataclass
from pathlib import Path

from .blockspace import BlockSpace, Labeling
from .codes import Code
from .errors import ConsistencyError, ParseError
from .field import make_field
from .poset import Poset, from_cover_relations
from .weights import WeightFn, custom_weight, hamming_weight, lee_weight


@dataclass(frozen=True)
class Instance:
    q: int
    weight_kind: str  # "hamming" | "lee" | "table"
    weight_values: tuple[int, ...] | None
    poset_elements: int
    cover: tuple[tuple[int, int], ...]
    labeling: tuple[int, ...]
    code_kind: str  # "generator" | "list"
    code_rows: tuple[tuple[int, ...], ...]

    # construction -----------------------------------------------------------

    @classmethod
    def from_parts(cls, space: BlockSpace, code: Code) -> "Instance":
        if code.is_linear:
            kind, rows = "generator", code.generators
        else:
            kind, rows = "list", code.words
        w = space.weight
        return cls(
            q=space.q,
            weight_kind=w.name if w.name in ("hamming", "lee") else "table",
            weight_values=tuple(w.table) if w.name == "table" else None,
            poset_elements=space.s,
            cover=tuple(tuple(p) for p in space.poset.cover_pairs()),
            labeling=space.labeling.sizes,
            code_kind=kind,
            code_rows=tuple(tuple(r) for r in rows),
        )

    def build_space(self) -> BlockSpace:
        try:
            field = make_field(self.q)
        except Exception as e:
            raise ConsistencyError("field.q", str(e)) from e
        if self.weight_kind == "hamming":
            weight = hamming_weight(field)
        elif self.weight_kind == "lee":
            try:
                weight = lee_weight(field)
            except Exception as e:
                raise ConsistencyError("weight", str(e)) from e
        else:
            try:
                weight = custom_weight(field, self.weight_values)
            except Exception as e:
                raise ConsistencyError("weight.values", str(e)) from e
        try:
            poset = from_cover_relations(self.poset_elements, self.cover)
        except Exception as e:
            raise ConsistencyError("poset", str(e)) from e
        try:
            labeling = Labeling(self.labeling)
        except Exception as e:
            raise ConsistencyError("labeling", str(e)) from e
        if poset.s != labeling.s:
            raise ConsistencyError(
                "labeling",
                f"{labeling.s} blocks but the poset has {poset.s} elements",
            )
        return BlockSpace(poset, labeling, field, weight)

    def build(self) -> tuple[BlockSpace, Code]:
        space = self.build_space()
        try:
            if self.code_kind == "generator":
                code = Code.linear(space, self.code_rows)
            else:
                code = Code.explicit(space, self.code_rows)
        except Exception as e:
            raise ConsistencyError("code", str(e)) from e
        return space, code

    # serialization ------------------------------------------------------------

    def to_json_dict(self) -> dict:
        if self.weight_kind == "table":
            weight = {"kind": "table", "values": list(self.weight_values)}
        else:
            weight = {"kind": self.weight_kind}
        rows_key = "rows" if self.code_kind == "generator" else "words"
        return {
            "field": {"q": self.q},
            "weight": weight,
            "poset": {
                "elements": self.poset_elements,
                "cover": [list(p) for p in self.cover],
            },
            "labeling": list(self.labeling),
            "code": {"kind": self.code_kind, rows_key: [list(r) for r in self.code_rows]},
        }

    def canonical_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True, separators=(",", ":"))

    def digest(self) -> str:
        return hashlib.sha256(self.canonical_json().encode()).hexdigest()[:12]


def _require(cond: bool, field: str, reason: str) -> None:
    if not cond:
        raise ConsistencyError(field, reason)


def instance_from_json_dict(doc: dict) -> Instance:
    _require(isinstance(doc, dict), "document", "top level must be an object")
    for key in ("field", "weight", "poset", "labeling", "code"):
        _require(key in doc, key, "missing key")

    fld = doc["field"]
    _require(isinstance(fld, dict) and "q" in fld, "field", "expected {'q': int}")
    q = fld["q"]
    _require(isinstance(q, int) and q >= 2, "field.q", f"invalid q: {q!r}")

    w = doc["weight"]
    _require(isinstance(w, dict) and "kind" in w, "weight", "expected {'kind': ...}")
    kind = w["kind"]
    _require(kind in ("hamming", "lee", "table"), "weight.kind", f"unknown kind {kind!r}")
    values = None
    if kind == "table":
        _require("values" in w, "weight.values", "table weights need 'values'")
        values = tuple(int(v) for v in w["values"])
        _require(len(values) == q, "weight.values", f"need q={q} values, got {len(values)}")

    pos = doc["poset"]
    _require(
        isinstance(pos, dict) and "elements" in pos and "cover" in pos,
        "poset",
        "expected {'elements': int, 'cover': [[a,b],...]}",
    )
    elements = pos["elements"]
    _require(isinstance(elements, int) and elements >= 1, "poset.elements", "need >= 1")
    cover = tuple(sorted((int(a), int(b)) for a, b in pos["cover"]))

    lab = doc["labeling"]
    _require(isinstance(lab, list) and lab, "labeling", "expected a nonempty list")
    labeling = tuple(int(k) for k in lab)
    _require(
        len(labeling) == elements,
        "labeling",
        f"{len(labeling)} blocks but the poset has {elements} elements",
    )
    n = sum(labeling)

    code = doc["code"]
    _require(isinstance(code, dict) and "kind" in code, "code", "expected {'kind': ...}")
    ckind = code["kind"]
    _require(ckind in ("generator", "list"), "code.kind", f"unknown kind {ckind!r}")
    rows_key = "rows" if ckind == "generator" else "words"
    _require(rows_key in code, f"code.{rows_key}", "missing")
    rows = tuple(tuple(int(x) for x in row) for row in code[rows_key])
    for row in rows:
        _require(len(row) == n, f"code.{rows_key}", f"row length {len(row)} != n = {n}")
        _require(all(0 <= x < q for x in row), f"code.{rows_key}", "entries outside 0..q-1")
    if ckind == "list":
        _require(len(rows) >= 1, "code.words", "an explicit code needs at least one word")

    inst = Instance(
        q=q,
        weight_kind=kind,
        weight_values=values,
        poset_elements=elements,
        cover=cover,
        labeling=labeling,
        code_kind=ckind,
        code_rows=rows,
    )
    inst.build()  # surface deeper inconsistencies (bad q, invalid table, cycles)
    return inst


def loads_instance(text: str) -> Instance:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.lineno, e.msg) from e
    return instance_from_json_dict(doc)


def load_instance(path: str | Path) -> Instance:
    return loads_instance(Path(path).read_text())


def dumps_instance(inst: Instance) -> str:
    return inst.canonical_json() + "\n"


def save_instance(inst: Instance, path: str | Path) -> None:
    Path(path).write_text(dumps_instance(inst))


# seeded generation ------------------------------------------------------------


def derive_seed(*parts) -> int:
    """A stable 63-bit child seed from arbitrary labelled parts."""
    text = "|".join(str(p) for p in parts)
    return int.from_bytes(hashlib.sha256(text.encode()).digest()[:8], "big") >> 1


def random_linear_code(
    seed: int, q: int, poset: Poset, labeling: Labeling, dim: int
) -> Instance:
    """A seeded random generator-matrix instance; identical seed, identical file."""
    if dim < 0 or dim > labeling.n:
        raise ValueError(f"dim must be in 0..{labeling.n}")
    rng = random.Random(seed)
    rows = tuple(
        tuple(rng.randrange(q) for _ in range(labeling.n)) for _ in range(dim)
    )
    return Instance(
        q=q,
        weight_kind="hamming",
        weight_values=None,
        poset_elements=poset.s,
        cover=tuple(tuple(p) for p in poset.cover_pairs()),
        labeling=labeling.sizes,
        code_kind="generator",
        code_rows=rows,
    )


def instance_with_weight(inst: Instance, weight: WeightFn) -> Instance:
    """The same instance under another weight specification."""
    return Instance(
        q=inst.q,
        weight_kind=weight.name if weight.name in ("hamming", "lee") else "table",
        weight_values=tuple(weight.table) if weight.name == "table" else None,
        poset_elements=inst.poset_elements,
        cover=inst.cover,
        labeling=inst.labeling,
        code_kind=inst.code_kind,
        code_rows=inst.code_rows,
    )
