from __future__ import annotations

from typing import Iterable, Optional

from .algebra import Coefficients, FGModule

ZERO = FGModule()


class BigradedGroups:
    """Map ``(s, t) -> FGModule`` holding only nonzero entries.

    Equality compares rank and torsion at every bidegree; the metadata
    (reduced flag, coefficients, page) is informational.
    """

    def __init__(self, groups: dict, reduced: bool, coeff: Coefficients,
                 page: int = 2, flags: Optional[dict] = None):
        self.groups = {k: g for k, g in sorted(groups.items()) if not g.is_zero()}
        self.reduced = reduced
        self.coeff = coeff
        self.page = page
        self.flags = dict(flags or {})

    def __getitem__(self, key) -> FGModule:
        return self.groups.get(tuple(key), ZERO)

    def __iter__(self):
        return iter(self.groups.items())

    def __len__(self):
        return len(self.groups)

    def keys(self):
        return self.groups.keys()

    def table(self) -> dict:
        return {k: g.signature() for k, g in self.groups.items()}

    def ranks(self) -> dict:
        return {k: g.rank for k, g in self.groups.items()}

    def is_zero(self) -> bool:
        return not self.groups

    def total_rank(self) -> int:
        return sum(g.rank for g in self.groups.values())

    def __eq__(self, other):
        if isinstance(other, BigradedGroups):
            return self.table() == other.table()
        return NotImplemented

    def __repr__(self):
        body = ", ".join(f"{k}: {g}" for k, g in self.groups.items())
        tag = "reduced" if self.reduced else "unreduced"
        return f"<BigradedGroups E{self.page} {tag} over {self.coeff}: {{{body}}}>"

    def format_group(self, g: FGModule) -> str:
        if not self.coeff.is_field:
            return str(g)
        return str(self.coeff) + (f"^{g.rank}" if g.rank > 1 else "")

    def format_table(self, sep: str = "\n") -> str:
        if not self.groups:
            return "(all zero)"
        return sep.join(f"({s},{t}): {self.format_group(g)}" for (s, t), g in self.groups.items())

    @classmethod
    def from_table(cls, table: dict, reduced: bool, coeff: Coefficients,
                   page: int = 2) -> "BigradedGroups":
        return cls({k: FGModule(r, tor) for k, (r, tor) in table.items()},
                   reduced, coeff, page)


def direct_sum(parts: Iterable[BigradedGroups], reduced: bool,
               coeff: Coefficients) -> BigradedGroups:
    acc: dict = {}
    for part in parts:
        for k, g in part:
            acc[k] = acc[k] + g if k in acc else g
    return BigradedGroups(acc, reduced, coeff)
