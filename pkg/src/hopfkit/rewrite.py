"""Linear noncommutative rewriting on the free algebra over single-letter generators.

Words are Python strings (one character per generator, "" is the unit).  A
free-algebra element is a dict mapping words to nonzero FieldElements.  Each
rule sends a word to a linear combination of strictly smaller words, so
normal forms exist; confluence is certified by resolving every ambiguity.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .cyclo import ONE, FieldElement, field_element

__all__ = [
    "FreeElement",
    "Rule",
    "RewriteSystem",
    "Ambiguity",
    "ConfluenceReport",
    "normal_form",
    "check_confluence",
    "free_add",
    "free_mul",
    "word_power",
]

FreeElement = Dict[str, FieldElement]

DEFAULT_ALPHABET = "ABDXY"


def free_add(target: FreeElement, src: FreeElement, c: FieldElement = ONE) -> FreeElement:
    """target += c * src in place; returns target."""
    for w, v in src.items():
        t = target.get(w)
        nv = v * c if t is None else t + v * c
        if nv:
            target[w] = nv
        elif t is not None:
            del target[w]
    return target


def free_mul(u: FreeElement, v: FreeElement) -> FreeElement:
    """Product in the free algebra (concatenation, no rewriting)."""
    out: FreeElement = {}
    for w1, c1 in u.items():
        for w2, c2 in v.items():
            free_add(out, {w1 + w2: c1 * c2})
    return out


def word_power(letter: str, k: int) -> str:
    return letter * k


@dataclass(frozen=True)
class Rule:
    lhs: str
    rhs: Tuple[Tuple[str, FieldElement], ...]

    @classmethod
    def make(cls, lhs: str, rhs: FreeElement) -> "Rule":
        items = tuple(sorted((w, c) for w, c in rhs.items() if c))
        return cls(lhs, items)

    @property
    def rhs_dict(self) -> FreeElement:
        return dict(self.rhs)

    def __str__(self) -> str:
        return f"{_fmt_word(self.lhs)} -> {format_free(self.rhs_dict)}"


def _fmt_word(w: str) -> str:
    if not w:
        return "1"
    out, i = [], 0
    while i < len(w):
        j = i
        while j < len(w) and w[j] == w[i]:
            j += 1
        out.append(w[i] if j - i == 1 else f"{w[i]}^{j - i}")
        i = j
    return "".join(out)


def format_free(e: FreeElement) -> str:
    if not e:
        return "0"
    parts = []
    for w in sorted(e, key=lambda s: (len(s), s)):
        c = e[w]
        mono = _fmt_word(w)
        if c == 1:
            parts.append(mono)
        elif c == -1:
            parts.append("-" + mono)
        else:
            parts.append(f"({c})" + ("" if not w else "*" + mono))
    return " + ".join(parts).replace("+ -", "- ")


@dataclass
class Ambiguity:
    kind: str  # "overlap" or "inclusion"
    word: str
    rules: Tuple[int, int]
    branch1: FreeElement
    branch2: FreeElement
    name: Optional[str] = None

    @property
    def resolved(self) -> bool:
        return self.branch1 == self.branch2

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "overlap_word": self.word,
            "rules": list(self.rules),
            "branch1_nf": free_to_json(self.branch1),
            "branch2_nf": free_to_json(self.branch2),
            "resolved": self.resolved,
            "name": self.name,
        }


def free_to_json(e: FreeElement) -> List[list]:
    return [[w, c.to_json()] for w, c in sorted(e.items())]


@dataclass
class ConfluenceReport:
    ambiguities: List[Ambiguity] = field(default_factory=list)
    named: Dict[str, bool] = field(default_factory=dict)

    @property
    def confluent(self) -> bool:
        return all(a.resolved for a in self.ambiguities)

    @property
    def unresolved(self) -> List[Ambiguity]:
        return [a for a in self.ambiguities if not a.resolved]

    def to_json(self) -> dict:
        return {
            "confluent": self.confluent,
            "count": len(self.ambiguities),
            "named": dict(sorted(self.named.items())),
            "ambiguities": [a.to_json() for a in self.ambiguities],
        }


class RewriteSystem:
    """Oriented rules over a letter alphabet with a weighted degree-lex order.

    The order compares total weight first, then the words lexicographically
    using the alphabet order.  Rules are checked to be strictly decreasing.
    """

    def __init__(self, rules: Sequence[Rule], alphabet: str = DEFAULT_ALPHABET,
                 weights: Optional[Dict[str, int]] = None, named: Optional[Dict[str, str]] = None):
        self.rules: List[Rule] = list(rules)
        self.alphabet = alphabet
        self.weights = dict(weights) if weights else {c: 1 for c in alphabet}
        self._rank = {c: i for i, c in enumerate(alphabet)}
        # name -> overlap word that must appear among the ambiguities
        self.named = dict(named or {})
        self._by_last: Dict[str, List[Rule]] = {}
        for r in self.rules:
            if not r.lhs:
                raise ValueError("rule with empty left side")
            self._by_last.setdefault(r.lhs[-1], []).append(r)
        for lst in self._by_last.values():
            lst.sort(key=lambda r: -len(r.lhs))
        self._memo: Dict[Tuple[str, str], FreeElement] = {}
        bad = [r for r in self.rules if not self.is_decreasing(r)]
        if bad:
            raise ValueError("rules not order-decreasing: " + ", ".join(map(str, bad)))

    # -- order ------------------------------------------------------------
    def key(self, w: str) -> Tuple[int, Tuple[int, ...]]:
        return (sum(self.weights[c] for c in w), tuple(self._rank[c] for c in w))

    def less(self, u: str, v: str) -> bool:
        return self.key(u) < self.key(v)

    def is_decreasing(self, rule: Rule) -> bool:
        return all(self.less(w, rule.lhs) for w, _ in rule.rhs)

    # -- reduction --------------------------------------------------------
    def is_irreducible(self, w: str) -> bool:
        return not any(r.lhs in w for r in self.rules)

    def _append(self, u: str, letter: str) -> FreeElement:
        """Normal form of u + letter, where u is already irreducible."""
        key = (u, letter)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        v = u + letter
        rule = None
        for r in self._by_last.get(letter, ()):
            if v.endswith(r.lhs):
                rule = r
                break
        if rule is None:
            out = {v: ONE}
        else:
            prefix = v[: len(v) - len(rule.lhs)]
            out = {}
            for w, c in rule.rhs:
                free_add(out, self._extend({prefix: ONE}, w), c)
        self._memo[key] = out
        return out

    def _extend(self, e: FreeElement, word: str) -> FreeElement:
        """Normal form of e * word, for e already in normal form."""
        for letter in word:
            nxt: FreeElement = {}
            for u, c in e.items():
                free_add(nxt, self._append(u, letter), c)
            e = nxt
        return e

    def normal_form(self, e) -> FreeElement:
        """Normal form of a free element (a dict, or a single word)."""
        if isinstance(e, str):
            e = {e: ONE}
        out: FreeElement = {}
        for w, c in e.items():
            free_add(out, self._extend({"": ONE}, w), field_element(c))
        return out

    def multiply(self, u: FreeElement, v: FreeElement) -> FreeElement:
        """Normal form of u * v for normal u, v."""
        out: FreeElement = {}
        for w2, c2 in v.items():
            free_add(out, self._extend(dict(u), w2), c2)
        return out

    def random_normal_form(self, e: FreeElement, rng: random.Random) -> FreeElement:
        """Reduce by applying rules at randomly chosen redexes until none remain."""
        e = {w: field_element(c) for w, c in e.items() if c}
        while True:
            redexes = [(w, i, r) for w in e for r in self.rules
                       for i in _occurrences(w, r.lhs)]
            if not redexes:
                return e
            w, i, r = rng.choice(redexes)
            c = e.pop(w)
            pre, post = w[:i], w[i + len(r.lhs):]
            for t, d in r.rhs:
                free_add(e, {pre + t + post: c * d})

    # -- basis ------------------------------------------------------------
    def irreducible_words(self, limit: int = 100000) -> List[str]:
        """All irreducible words, found by breadth-first extension (finite case)."""
        seen = [""]
        frontier = [""]
        while frontier:
            nxt = []
            for u in frontier:
                for c in self.alphabet:
                    v = u + c
                    if self.is_irreducible(v):
                        nxt.append(v)
            seen.extend(nxt)
            if len(seen) > limit:
                raise ValueError("irreducible words exceed limit; algebra may be infinite")
            frontier = nxt
        return sorted(seen, key=self.key)

    # -- confluence -------------------------------------------------------
    def ambiguities(self) -> List[Tuple[str, str, int, int, int]]:
        """(kind, word, rule index 1, rule index 2, offset of rule 2 in word)."""
        out = []
        for i, r1 in enumerate(self.rules):
            for j, r2 in enumerate(self.rules):
                l1, l2 = r1.lhs, r2.lhs
                if i != j:
                    for pos in _occurrences(l1, l2):
                        out.append(("inclusion", l1, i, j, pos))
                for k in range(1, min(len(l1), len(l2))):
                    if l1[-k:] == l2[:k]:
                        out.append(("overlap", l1 + l2[k:], i, j, len(l1) - k))
        return out

    def check_confluence(self) -> ConfluenceReport:
        report = ConfluenceReport()
        for kind, word, i, j, pos in self.ambiguities():
            r1, r2 = self.rules[i], self.rules[j]
            b1: FreeElement = {}
            tail = word[len(r1.lhs):]
            for w, c in r1.rhs:
                free_add(b1, {w + tail: c})
            b2: FreeElement = {}
            pre, post = word[:pos], word[pos + len(r2.lhs):]
            for w, c in r2.rhs:
                free_add(b2, {pre + w + post: c})
            amb = Ambiguity(kind, word, (i, j), self.normal_form(b1), self.normal_form(b2))
            for name, nword in self.named.items():
                if nword == word and kind == "overlap":
                    amb.name = name
            report.ambiguities.append(amb)
        for name, nword in self.named.items():
            hits = [a for a in report.ambiguities if a.name == name]
            report.named[name] = bool(hits) and all(a.resolved for a in hits)
        return report

    def __str__(self) -> str:
        return "\n".join(str(r) for r in self.rules)


def _occurrences(w: str, sub: str) -> Iterable[int]:
    start = w.find(sub)
    while start != -1:
        yield start
        start = w.find(sub, start + 1)


def normal_form(e, rs: RewriteSystem) -> FreeElement:
    return rs.normal_form(e)


def check_confluence(rs: RewriteSystem) -> ConfluenceReport:
    return rs.check_confluence()
