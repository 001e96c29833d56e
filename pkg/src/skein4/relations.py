"""The defining relations of the skein algebra, oriented as rewrite rules.

Every base relation is closed under the rotation ``sigma``.  Each ordered
generator pair that may not appear in a basis monomial gets exactly one
rule; relation instances that would give a second rule for the same pair
are kept as *residues* (``lhs - rhs``) and serve as consistency checks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from .laurent import HalfLaurent
from .parse import parse_element
from .skeinfree import CENTRAL, GENERATORS, Generator, SkeinElement, gen, weight

__all__ = [
    "CENTRAL_KIND", "COMMUTING", "COMMUTATOR", "REDUCTION",
    "RelationInstance", "RewriteRule", "RuleTable", "BASE_RELATIONS",
    "build_rule_table", "relation_residues", "letter_rank", "adjacent_ok",
    "measure", "default_table",
]

CENTRAL_KIND = "central"
COMMUTING = "commuting"
COMMUTATOR = "commutator"
REDUCTION = "reduction"

_A = "(Q^2 + Q^-2)"

# (family, lhs, rhs); Q = q^(1/2), so q -> Q^2, qbar -> Q^-2, alpha -> _A
BASE_RELATIONS: list[tuple[str, str, str]] = [
    (COMMUTING, "t34*t12", "t12*t34"),
    (COMMUTING, "t123*t12", "t12*t123"),
    (COMMUTING, "t124*t12", "t12*t124"),
    (COMMUTING, "t123*t13", "t13*t123"),

    (COMMUTATOR, "t23*t12",
     "Q^-4*t12*t23 + (Q^2 - Q^-6)*t13 + (1 - Q^-4)*(t1*t3 + t2*t123)"),
    (COMMUTATOR, "t13*t12",
     "Q^4*t12*t13 + (Q^-2 - Q^6)*t23 + (1 - Q^4)*(t2*t3 + t1*t123)"),
    (COMMUTATOR, "t24*t12",
     "Q^-4*t12*t24 + (Q^2 - Q^-6)*t14 + (1 - Q^-4)*(t1*t4 + t2*t124)"),
    (COMMUTATOR, "t234*t14",
     "Q^4*t14*t234 + (Q^-2 - Q^6)*t123 + (1 - Q^4)*(t4*t0 + t1*t23)"),
    (COMMUTATOR, "t124*t34",
     "Q^-4*t34*t124 + (Q^2 - Q^-6)*t123 + (1 - Q^-4)*(t4*t0 + t3*t12)"),

    (REDUCTION, "t13*t24",
     f"{_A}*t0 + t1*t234 + t2*t134 + t3*t124 + t4*t123 + Q^4*t12*t34 + Q^-4*t14*t23"
     " + Q^2*t3*t4*t12 + Q^-2*t1*t4*t23 + Q^2*t1*t2*t34 + Q^-2*t2*t3*t14 + t1*t2*t3*t4"),
    (REDUCTION, "t24*t134",
     f"t234*t14 + t124*t34 - t4*t0 - {_A}*t123 - t1*t23 - t3*t12"
     " + t2*(Q^-2*t34*t14 - Q^-4*t13 - Q^-2*t4*t134) - Q^-2*t1*t2*t3"),
    (REDUCTION, "t134*t24",
     f"t14*t234 + t34*t124 - t4*t0 - {_A}*t123 - t1*t23 - t3*t12"
     " + t2*(Q^2*t14*t34 - Q^4*t13 - Q^2*t4*t134) - Q^2*t1*t2*t3"),
    (REDUCTION, "t123^2",
     "Q^-2*t12*t23*t13 - (t1*t2*t3 + Q^2*t1*t23 + Q^-2*t2*t13 + Q^-2*t3*t12)*t123"
     f" - t1^2 - t2^2 - t3^2 + {_A}^2 - Q^2*t2*t3*t23 - Q^-2*t1*t3*t13 - Q^-2*t1*t2*t12"
     " - Q^4*t23^2 - Q^-4*t13^2 - Q^-4*t12^2"),
    (REDUCTION, "t123*t234",
     "(t23 + Q^-2*t2*t3)*t0 + Q^-2*t12*t23*t34 - Q^-2*t3*t12*t234 - Q^-2*t2*t123*t34"
     " + Q^-4*t2*t124 + Q^-4*t3*t134 - Q^-4*t12*t24 - Q^-4*t13*t34"
     f" + Q^-4*({_A}*t14 + t1*t4)"),
    (REDUCTION, "t234*t123",
     "(t23 + Q^2*t2*t3)*t0 + Q^2*t34*t23*t12 - Q^2*t3*t234*t12 - Q^2*t2*t34*t123"
     " + Q^4*t2*t124 + Q^4*t3*t134 - Q^4*t24*t12 - Q^4*t34*t13"
     f" + Q^4*({_A}*t14 + t1*t4)"),
    (REDUCTION, "t123*t134",
     f"t13*t0 + t12*t14 + t23*t34 - t1*t124 - t3*t234 - {_A}*t24 - t2*t4"),
    (REDUCTION, "t0*t234",
     "Q^-2*(t23*t34 - Q^-2*t24 - t2*t4)*t124"
     " - (Q^2*t2*t34 + Q^-2*t3*t24 + Q^-2*t4*t23 + t2*t3*t4)*t0"
     " - Q^4*t34*t134 - Q^-4*t23*t123 - Q^-2*t3*t23*t12 - Q^2*t3*t14*t34"
     f" + Q^2*t1*t3^2 + Q^4*t3*t13 - t2*t12 - t4*t14 - {_A}*t1"),
    (REDUCTION, "t0^2",
     "Q^-2*t12*t234*t134 - (t1*t2*t34 + Q^2*t1*t234 + Q^-2*t2*t134 + Q^-2*t12*t34)*t0"
     f" - t1^2 - t2^2 - t34^2 + {_A}^2 - Q^2*t2*t34*t234 - Q^-2*t1*t34*t134"
     " - Q^-2*t1*t2*t12 - Q^4*t234^2 - Q^-4*t134^2 - Q^-4*t12^2"),
]


# -- canonical order of letters inside basis words ------------------------

_RANK = {}
for _g in GENERATORS:
    if _g.size == 1:
        _RANK[_g] = _g.index                     # t1 < t2 < t3 < t4
    elif _g.size == 2 and _g.is_light:
        _RANK[_g] = _g.index                     # t12 < t23 < t34 < t14
    elif _g.size == 2:
        _RANK[_g] = 8                            # t13, t24
    elif _g.size == 4:
        _RANK[_g] = 9                            # t0
    else:
        _RANK[_g] = 10                           # triples


def letter_rank(g: Generator) -> int:
    return _RANK[g]


def adjacent_ok(g: Generator, h: Generator) -> bool:
    """Whether ``g h`` may occur adjacently in a basis word."""
    rg, rh = _RANK[g], _RANK[h]
    if rg > rh:
        return False
    if rg == rh:
        return rg < 9 and g is h
    if rg == 8 and rh == 10:
        return set(g.holes) <= set(h.holes)
    if rg == 9 and rh == 10:
        return False
    return True


def inversions(w) -> int:
    r = [_RANK[g] for g in w]
    return sum(1 for i in range(len(r)) for j in range(i + 1, len(r)) if r[i] > r[j])


def measure(w) -> tuple[int, ...]:
    """Termination measure of a word, compared lexicographically."""
    a, b, c = weight(w)
    triples = sum(1 for g in w if g.size == 3)
    diag = sum(1 for g in w if g.size == 2 and g.is_heavy)
    return a, b, c, triples, diag, inversions(w)


# -- relation instances and rules -----------------------------------------

@dataclass(frozen=True)
class RelationInstance:
    family: str
    base: str          # e.g. "Eq(t23*t12)"
    rotation: int
    lhs: SkeinElement
    rhs: SkeinElement

    @property
    def residue(self) -> SkeinElement:
        return self.lhs - self.rhs

    @property
    def lhs_word(self) -> tuple:
        (w, _), = self.lhs.terms.items()
        return w


@dataclass(frozen=True)
class RewriteRule:
    lhs: tuple          # ordered pair of generators
    rhs: SkeinElement
    kind: str
    source: RelationInstance
    inverted: bool = False

    def apply(self) -> list[tuple[tuple, HalfLaurent]]:
        return list(self.rhs.terms.items())


@dataclass
class RuleTable:
    rules: dict = field(default_factory=dict)       # (g, h) -> RewriteRule
    instances: list = field(default_factory=list)   # every RelationInstance
    residues: list = field(default_factory=list)    # instances not chosen as rules

    def rule(self, g: Generator, h: Generator) -> RewriteRule | None:
        return self.rules.get((g, h))

    def rewrite(self, g: Generator, h: Generator):
        """Replacement terms for the adjacent pair ``g h``, or ``None`` if the
        pair is admissible in a basis word."""
        if adjacent_ok(g, h):
            return None
        if (g.is_central or h.is_central) and _RANK[g] > _RANK[h]:
            return _SWAP[(g, h)]
        rule = self.rules.get((g, h))
        if rule is None:
            raise LookupError(f"no rule for the pair {g.name}*{h.name}")
        return rule.terms

    def central_instances(self) -> list[RelationInstance]:
        return [i for i in self.instances if i.family == CENTRAL_KIND]


_SWAP = {(g, h): [((h, g), HalfLaurent.const(1))] for g in GENERATORS for h in GENERATORS}


def _instances() -> list[RelationInstance]:
    out = []
    seen = set()
    for c in CENTRAL:
        for g in GENERATORS:
            if g is c or frozenset((c, g)) in seen:
                continue
            seen.add(frozenset((c, g)))
            out.append(RelationInstance(CENTRAL_KIND, f"central({c.name})", 0,
                                        SkeinElement.word([c, g]), SkeinElement.word([g, c])))
    for family, lhs, rhs in BASE_RELATIONS:
        L, R = parse_element(lhs), parse_element(rhs)
        name = f"Eq({lhs})"
        for k in range(4):
            out.append(RelationInstance(family, name, k, L.rotate(k), R.rotate(k)))
    return out


def _invert_commutator(inst: RelationInstance) -> SkeinElement:
    # lhs g h = c * (h g) + tail   =>   h g = c^-1 * g h - c^-1 * tail
    g, h = inst.lhs_word
    c = inst.rhs.terms[(h, g)]
    cinv = c ** -1
    tail = SkeinElement((w, v) for w, v in inst.rhs.terms.items() if w != (h, g))
    return SkeinElement.word([g, h], cinv) - tail.scale(cinv)


def _check_rule(rule: RewriteRule) -> None:
    g, h = rule.lhs
    m = measure(rule.lhs)[:5]
    for w, c in rule.rhs.terms.items():
        if w == (h, g) and _RANK[h] < _RANK[g] and rule.kind in (COMMUTING, COMMUTATOR):
            if rule.kind == COMMUTATOR and c not in (HalfLaurent.monomial(4), HalfLaurent.monomial(-4)):
                raise ValueError(f"commutator rule {g.name}*{h.name} has swap coefficient {c}")
            continue
        if measure(w)[:5] >= m:
            raise ValueError(
                f"rule {g.name}*{h.name} does not decrease on {'*'.join(x.name for x in w)}")


def build_rule_table() -> RuleTable:
    table = RuleTable()
    for inst in _instances():
        table.instances.append(inst)
        if inst.family == CENTRAL_KIND:
            continue
        g, h = inst.lhs_word
        if inst.family == COMMUTING:
            key = (g, h) if _RANK[g] > _RANK[h] else (h, g)
            rhs = SkeinElement.word([key[1], key[0]])
            inverted = key != (g, h)
        elif inst.family == COMMUTATOR and adjacent_ok(g, h):
            key, rhs, inverted = (h, g), _invert_commutator(inst), True
        else:
            key, rhs, inverted = (g, h), inst.rhs, False
        if key in table.rules:
            table.residues.append(inst.residue)
            continue
        rule = RewriteRule(key, rhs, inst.family, inst, inverted)
        _check_rule(rule)
        object.__setattr__(rule, "terms", rule.apply())
        table.rules[key] = rule
    _check_complete(table)
    return table


def _check_complete(table: RuleTable) -> None:
    for g in GENERATORS:
        for h in GENERATORS:
            if adjacent_ok(g, h):
                continue
            if (g.is_central or h.is_central) and _RANK[g] > _RANK[h]:
                continue
            if (g, h) not in table.rules:
                raise ValueError(f"rule table incomplete: nothing rewrites {g.name}*{h.name}")


def relation_residues(table: RuleTable) -> list[SkeinElement]:
    """``lhs - rhs`` for every relation instance, rules and duplicates alike."""
    return [inst.residue for inst in table.instances]


@lru_cache(maxsize=None)
def default_table() -> RuleTable:
    return build_rule_table()
