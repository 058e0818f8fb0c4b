"""Bookkeeping of relative homotopy invariants under Lutz twists.

A :class:`ContactClass` tracks, relative to a declared reference structure on
a fixed manifold, the 2-dimensional invariant as an integer vector over a
fixed H_1 basis and the 3-dimensional invariant as an integer (or
``UNDEFINED`` once the 2-dimensional invariant stops being comparable).
Knots enter only through their homology class and self-linking number.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from typing import Iterable, Sequence

from .errors import BadParameter, BasisMismatch
from .geometry.disks import DiskSpec


class _Undefined:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "UNDEFINED"

    def __reduce__(self):
        return (_Undefined, ())


UNDEFINED = _Undefined()


# ---------------------------------------------------------------------------
# knot diagrams

@dataclass(frozen=True)
class KnotDiagram:
    """Crossing signs of an oriented front projection."""

    signs: tuple[int, ...]
    name: str = ""

    def __post_init__(self):
        signs = tuple(int(s) for s in self.signs)
        if any(s not in (1, -1) for s in signs):
            raise BadParameter("crossing signs must be +1 or -1")
        object.__setattr__(self, "signs", signs)

    def mirror(self) -> "KnotDiagram":
        return KnotDiagram(tuple(-s for s in self.signs), f"mirror of {self.name}" if self.name else "")

    def __add__(self, other: "KnotDiagram") -> "KnotDiagram":
        return KnotDiagram(self.signs + other.signs)


def writhe(D: KnotDiagram) -> int:
    return sum(D.signs)


def self_linking(D: KnotDiagram) -> int:
    """Self-linking number of the transverse knot whose front is ``D``.

    For fronts in the standard structure on R^3 this equals the writhe.
    """
    return writhe(D)


# One negative kink: the standard front of the unknot used for the core twist.
UNKNOT_FRONT = KnotDiagram((-1,), "unknot front")
# Crossing signs of the right-handed trefoil front; three positive crossings
# and two negative ones, total writhe +1.
TREFOIL_FRONT = KnotDiagram((1, 1, 1, -1, -1), "right-handed trefoil front")


# ---------------------------------------------------------------------------
# classes

@dataclass(frozen=True)
class KnotClass:
    homology: tuple[int, ...]
    self_linking: int | None = None
    manifold: str | None = None
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "homology", tuple(int(x) for x in self.homology))
        if self.self_linking is not None and any(self.homology):
            raise BadParameter("self-linking is defined only for null-homologous knots")

    @property
    def null_homologous(self) -> bool:
        return not any(self.homology)

    @classmethod
    def from_diagram(cls, D: KnotDiagram, rank: int, manifold: str | None = None) -> "KnotClass":
        return cls((0,) * rank, self_linking(D), manifold, D.name)

    def to_json(self) -> dict:
        return {"homology": list(self.homology), "self_linking": self.self_linking,
                "manifold": self.manifold, "name": self.name}

    @classmethod
    def from_json(cls, data: dict) -> "KnotClass":
        return cls(tuple(data["homology"]), data.get("self_linking"), data.get("manifold"),
                   data.get("name", ""))


@dataclass(frozen=True)
class HistoryEntry:
    kind: str  # "lutz", "certify" or "reference"
    knot: KnotClass | None = None
    df0: int = 0
    f0: int | None = None
    assumptions: tuple[str, ...] = ()
    note: str = ""

    def to_json(self) -> dict:
        out = {"kind": self.kind}
        if self.knot is not None:
            out["knot"] = self.knot.to_json()
        if self.kind == "lutz":
            out["df0"] = self.df0
        if self.f0 is not None:
            out["f0"] = self.f0
        if self.assumptions:
            out["assumptions"] = list(self.assumptions)
        if self.note:
            out["note"] = self.note
        return out

    @classmethod
    def from_json(cls, data: dict) -> "HistoryEntry":
        knot = KnotClass.from_json(data["knot"]) if "knot" in data else None
        return cls(data["kind"], knot, int(data.get("df0", 0)), data.get("f0"),
                   tuple(data.get("assumptions", ())), data.get("note", ""))


@dataclass(frozen=True)
class ContactClass:
    manifold: str
    d2: tuple[int, ...]
    d3: object = 0  # int or UNDEFINED
    f0_bound: int | None = None
    history: tuple[HistoryEntry, ...] = ()
    base: tuple = ()  # (d2, d3, f0_bound) of the starting state

    def __post_init__(self):
        if self.d3 is not UNDEFINED and any(self.d2):
            raise BadParameter("d3 is only meaningful while d2 vanishes")
        if not self.base:
            object.__setattr__(self, "base", (self.d2, self.d3, self.f0_bound))

    @classmethod
    def new(cls, manifold: str, rank: int, f0: int | None = None) -> "ContactClass":
        return cls(manifold, (0,) * rank, 0, f0)

    @property
    def state(self) -> tuple:
        return (self.d2, self.d3, self.f0_bound)

    def to_json(self) -> dict:
        return {
            "manifold": self.manifold,
            "d2": list(self.d2),
            "d3": None if self.d3 is UNDEFINED else self.d3,
            "d3_defined": self.d3 is not UNDEFINED,
            "f0_bound": self.f0_bound,
            "history": [h.to_json() for h in self.history],
            "base": _state_json(self.base),
        }

    @classmethod
    def from_json(cls, data: dict) -> "ContactClass":
        """Rebuild by replaying the stored history from the stored base state."""
        b = data.get("base") or {"d2": data["d2"], "d3": 0, "f0_bound": data.get("f0_bound")}
        base = (tuple(b["d2"]), b["d3"] if b.get("d3_defined", True) else UNDEFINED, b["f0_bound"])
        history = tuple(HistoryEntry.from_json(h) for h in data.get("history", ()))
        state = base
        for entry in history:
            state = _step(state, entry)
        c = cls(data["manifold"], state[0], state[1], state[2], history, base)
        stored = (tuple(data["d2"]), UNDEFINED if not data.get("d3_defined", True) else data["d3"],
                  data.get("f0_bound"))
        if c.state != stored:
            raise BadParameter(f"stored state {stored} disagrees with replayed history {c.state}")
        return c

    @classmethod
    def loads(cls, text: str) -> "ContactClass":
        return cls.from_json(json.loads(text))

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)


def _state_json(state: tuple) -> dict:
    d2, d3, f0 = state
    return {"d2": list(d2), "d3": None if d3 is UNDEFINED else d3,
            "d3_defined": d3 is not UNDEFINED, "f0_bound": f0}


def _step(state: tuple, entry: HistoryEntry) -> tuple:
    d2, d3, f0 = state
    if entry.kind == "lutz":
        k = entry.knot
        d2 = tuple(a - b for a, b in zip(d2, k.homology))
        if not k.null_homologous:
            d3 = UNDEFINED
        elif d3 is not UNDEFINED:
            d3 = d3 + k.self_linking
        f0 = None if f0 is None else f0 + entry.df0
    elif entry.kind == "certify":
        f0 = entry.f0
    elif entry.kind == "reference":
        d2, d3 = (0,) * len(d2), 0
    else:
        raise BadParameter(f"unknown history entry {entry.kind!r}")
    return d2, d3, f0


def apply_lutz(
    c: ContactClass,
    k: KnotClass,
    df0: int = 0,
    assumptions: Sequence[str] = (),
    note: str = "",
) -> ContactClass:
    """Record a Lutz twist along a knot of class ``k``.

    ``df0`` is the change of the certified vertex count and is always given
    explicitly; a twist done inside an existing triangulation costs nothing.
    """
    if len(k.homology) != len(c.d2) or (k.manifold is not None and k.manifold != c.manifold):
        raise BasisMismatch(
            f"knot class over {k.manifold or '?'} (rank {len(k.homology)}) "
            f"does not match {c.manifold} (rank {len(c.d2)})"
        )
    if k.null_homologous and k.self_linking is None:
        raise BadParameter("a null-homologous knot needs a self-linking number")
    entry = HistoryEntry("lutz", k, int(df0), None, tuple(assumptions), note)
    d2, d3, f0 = _step(c.state, entry)
    return replace(c, d2=d2, d3=d3, f0_bound=f0, history=c.history + (entry,))


def certify(c: ContactClass, f0: int, note: str = "") -> ContactClass:
    """Record a vertex count certified by an explicit triangulation."""
    entry = HistoryEntry("certify", f0=int(f0), note=note)
    return replace(c, f0_bound=int(f0), history=c.history + (entry,))


def declare_reference(c: ContactClass, note: str = "") -> ContactClass:
    """Make the current structure the reference: both invariants reset to zero."""
    entry = HistoryEntry("reference", note=note)
    d2, d3, f0 = _step(c.state, entry)
    return replace(c, d2=d2, d3=d3, history=c.history + (entry,))


def replay(c: ContactClass) -> tuple:
    """Fold the history from the base state; equals ``c.state`` for valid ledgers."""
    state = c.base
    for entry in c.history:
        state = _step(state, entry)
    return state


# ---------------------------------------------------------------------------
# vertex-count formulas

def s3_vertex_bound(n: int) -> int:
    """Vertices of the triangulated 3-sphere carrying the structure with d3 = n."""
    n = int(n)
    return 3 * abs(n) + 4 if n else 10


def general_vertex_bound(f0: int, n: int) -> int:
    """Vertices after realizing d3 shift ``n`` on an ``f0``-vertex manifold."""
    f0, n = int(f0), int(n)
    if f0 < 5:
        raise BadParameter("a closed 3-manifold needs at least 5 vertices")
    return f0 + 3 * abs(n) if n else f0 + 6


T3_CORE_CLASS = (0, 0, 1)


def t3_ledger(n: int, r0: float) -> tuple[ContactClass, list[DiskSpec]]:
    """Ledger of the n-fold twisted structure on the 3-torus and its disks.

    The twists run along the vertical core circle; the k-th nested
    overtwisted disk has radius in ``(r0/(k+1), r0/k)``.
    """
    if not isinstance(n, int) or n < 0:
        raise BadParameter(f"n must be a non-negative integer, got {n!r}")
    if not 0.25 < r0 < 0.5:
        raise BadParameter(f"r0 must lie in (1/4, 1/2), got {r0!r}")
    c = ContactClass.new("t3", 3)
    K = KnotClass(T3_CORE_CLASS, None, "t3", "vertical core")
    for _ in range(n):
        c = apply_lutz(c, K, 0)
    if n == 1:
        c = certify(c, 40, "40-vertex 3-torus")
    elif n >= 2:
        c = certify(c, 8 * n ** 3, f"{8 * n ** 3}-vertex 3-torus")
    disks = [
        DiskSpec("core (1/2, 1/2, z)", r0 / (k + 1), r0 / k, k) for k in range(1, n + 1)
    ]
    return c, disks
