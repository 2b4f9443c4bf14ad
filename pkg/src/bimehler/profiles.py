"""Marriage/affair profiles on labelled men and women.

A profile is a pair of partial matchings between men ``1..m`` and women
``1..n``: marriages (weight ``x``) and affairs (weight ``y``). Every person
has at most one spouse and at most one lover, so the union of both matchings
is a graph of maximum degree two whose connected components are lone people,
alternating paths and alternating cycles. This module enumerates profiles by
brute force, splits them into components, and gives the generating function
of each component shape.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from math import comb, factorial
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple

from .algebra import ONE, WeightPoly, X, Y
from .biegf import BiSeries, bs_inv_one_minus, bs_log_inv_one_minus, bs_term

__all__ = [
    "CASE_TAGS",
    "CASE_DESCRIPTIONS",
    "MARITAL_LIMIT",
    "FULL_LIMIT",
    "Profile",
    "Component",
    "ProfileError",
    "LimitExceededError",
    "UnknownCaseError",
    "profile_weight",
    "partial_matchings",
    "iter_profiles",
    "enumerate_marital",
    "enumerate_full",
    "decompose",
    "component_weight",
    "case_series",
    "all_components_series",
    "random_profile",
]

Pair = Tuple[int, int]

CASE_TAGS = ("I", "Ia", "II", "IIa", "III", "IIIa", "IV")

CASE_DESCRIPTIONS = {
    "I": "lone man, no spouse and no lover",
    "Ia": "lone woman, no spouse and no lover",
    "II": "path from a married, unloved man to a married, unloved woman",
    "IIa": "path from a loved, unmarried man to a loved, unmarried woman",
    "III": "path from a married, unloved man to a loved, unmarried man",
    "IIIa": "path from a married, unloved woman to a loved, unmarried woman",
    "IV": "closed cycle, everyone married and loved",
}

MARITAL_LIMIT = 6
FULL_LIMIT = 4


class ProfileError(ValueError):
    """A profile or component breaks the one-spouse / one-lover rules."""


class LimitExceededError(ValueError):
    pass


class UnknownCaseError(ValueError):
    pass


def _check_matching(pairs: Sequence[Pair], m: int, n: int, kind: str) -> None:
    men: Dict[int, Pair] = {}
    women: Dict[int, Pair] = {}
    for pair in pairs:
        if len(pair) != 2 or not all(isinstance(v, int) and not isinstance(v, bool) for v in pair):
            raise ProfileError(f"{kind} entry {pair!r} is not a (man, woman) pair of integers")
        man, woman = pair
        if not 1 <= man <= m:
            raise ProfileError(f"{kind} ({man}, {woman}): man {man} is not among men 1..{m}")
        if not 1 <= woman <= n:
            raise ProfileError(f"{kind} ({man}, {woman}): woman {woman} is not among women 1..{n}")
        if man in men:
            raise ProfileError(f"man {man} appears in two {kind}s: {men[man]} and {(man, woman)}")
        if woman in women:
            raise ProfileError(f"woman {woman} appears in two {kind}s: {women[woman]} and {(man, woman)}")
        men[man] = (man, woman)
        women[woman] = (man, woman)


@dataclass(frozen=True)
class Profile:
    """Marriages and affairs on men ``1..m`` and women ``1..n``; validated on construction."""

    m: int
    n: int
    marriages: FrozenSet[Pair] = frozenset()
    affairs: FrozenSet[Pair] = frozenset()

    def __post_init__(self):
        if not (isinstance(self.m, int) and isinstance(self.n, int)) or self.m < 0 or self.n < 0:
            raise ProfileError(f"population sizes must be nonnegative integers, got m={self.m!r}, n={self.n!r}")
        for kind, attr in (("marriage", "marriages"), ("affair", "affairs")):
            pairs = [tuple(p) for p in getattr(self, attr)]
            _check_matching(pairs, self.m, self.n, kind)
            object.__setattr__(self, attr, frozenset(pairs))

    @classmethod
    def from_dict(cls, data: dict) -> "Profile":
        if not isinstance(data, dict):
            raise ProfileError("profile must be a JSON object")
        try:
            m, n = data["m"], data["n"]
        except KeyError as exc:
            raise ProfileError(f"profile is missing field {exc.args[0]!r}") from None
        if not all(isinstance(v, int) and not isinstance(v, bool) and v >= 0 for v in (m, n)):
            raise ProfileError(f"m and n must be nonnegative integers, got m={m!r}, n={n!r}")
        lists = {}
        for key, kind in (("marriages", "marriage"), ("affairs", "affair")):
            raw = data.get(key, [])
            if not isinstance(raw, list):
                raise ProfileError(f"{key} must be a list of [man, woman] pairs")
            pairs = [tuple(p) if isinstance(p, list) else p for p in raw]
            # checked before the set conversion, which would merge a repeated pair
            _check_matching(pairs, m, n, kind)
            lists[key] = frozenset(pairs)
        return cls(m, n, lists["marriages"], lists["affairs"])

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "marriages": [list(p) for p in sorted(self.marriages)],
            "affairs": [list(p) for p in sorted(self.affairs)],
        }


def profile_weight(p: Profile) -> WeightPoly:
    """``x^(#marriages) * y^(#affairs)``."""
    return WeightPoly.monomial(len(p.marriages), len(p.affairs))


# -- brute-force enumeration -------------------------------------------------


def partial_matchings(m: int, n: int) -> Iterator[Tuple[Pair, ...]]:
    """Every partial matching between men ``1..m`` and women ``1..n``.

    Men are assigned in order; each either stays single or takes a woman
    nobody earlier has taken.
    """

    def assign(man: int, free: Tuple[int, ...], chosen: Tuple[Pair, ...]):
        if man > m:
            yield chosen
            return
        yield from assign(man + 1, free, chosen)
        for idx, woman in enumerate(free):
            yield from assign(man + 1, free[:idx] + free[idx + 1 :], chosen + ((man, woman),))

    yield from assign(1, tuple(range(1, n + 1)), ())


def _check_limit(m: int, n: int, limit: int) -> None:
    if m < 0 or n < 0:
        raise ValueError(f"sizes must be nonnegative, got ({m}, {n})")
    if m > limit or n > limit:
        raise LimitExceededError(f"({m}, {n}) exceeds the enumeration limit {limit}")


def iter_profiles(m: int, n: int) -> Iterator[Profile]:
    matchings = list(partial_matchings(m, n))
    for marriages, affairs in itertools.product(matchings, repeat=2):
        yield Profile(m, n, frozenset(marriages), frozenset(affairs))


def enumerate_marital(m: int, n: int, limit: int = MARITAL_LIMIT) -> WeightPoly:
    """Sum of ``x^size`` over all partial matchings, by exhaustive listing."""
    _check_limit(m, n, limit)
    counts: Dict[Tuple[int, int], int] = {}
    for matching in partial_matchings(m, n):
        key = (len(matching), 0)
        counts[key] = counts.get(key, 0) + 1
    return WeightPoly(counts)


def enumerate_full(m: int, n: int, limit: int = FULL_LIMIT) -> WeightPoly:
    """Sum of profile weights over every (marriage matching, affair matching) pair."""
    _check_limit(m, n, limit)
    counts: Dict[Tuple[int, int], int] = {}
    for profile in iter_profiles(m, n):
        for key in profile_weight(profile).terms:
            counts[key] = counts.get(key, 0) + 1
    return WeightPoly(counts)


def random_profile(m: int, n: int, rng: random.Random) -> Profile:
    """Marriages and affairs drawn independently, each uniform over all partial matchings."""

    def matching() -> FrozenSet[Pair]:
        sizes = range(min(m, n) + 1)
        weights = [comb(m, k) * comb(n, k) * factorial(k) for k in sizes]
        k = rng.choices(list(sizes), weights=weights)[0]
        men = rng.sample(range(1, m + 1), k)
        women = rng.sample(range(1, n + 1), k)
        return frozenset(zip(men, women))

    return Profile(m, n, matching(), matching())


# -- components --------------------------------------------------------------


@dataclass(frozen=True)
class Component:
    """One connected piece of a profile.

    ``men`` and ``women`` are listed in walk order, which pins down the edges:

    * II:   ``men[i]`` married to ``women[i]``, ``women[i]`` loves ``men[i+1]``
    * IIa:  same with marriage and affair exchanged
    * III:  as II, with one extra man at the end
    * IIIa: ``women[i]`` married to ``men[i]``, ``men[i]`` loves ``women[i+1]``
    * IV:   ``men[i]`` loves ``women[i]``, ``women[i]`` married to ``men[i+1 mod k]``
    """

    case: str
    k: Optional[int]
    men: Tuple[int, ...] = ()
    women: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "men", tuple(self.men))
        object.__setattr__(self, "women", tuple(self.women))
        if self.case not in CASE_TAGS:
            raise UnknownCaseError(f"unknown component case {self.case!r}")
        expected = _member_counts(self.case, self.k)
        if (len(self.men), len(self.women)) != expected:
            raise ProfileError(
                f"case {self.case} with k={self.k} needs {expected[0]} men and {expected[1]} women, "
                f"got {len(self.men)} and {len(self.women)}"
            )

    def marriages(self) -> List[Pair]:
        mm, ww, k = self.men, self.women, self.k
        if self.case in ("II", "III", "IIIa"):
            return [(mm[i], ww[i]) for i in range(k)]
        if self.case == "IIa":
            return [(mm[i + 1], ww[i]) for i in range(k - 1)]
        if self.case == "IV":
            return [(mm[(i + 1) % k], ww[i]) for i in range(k)]
        return []

    def affairs(self) -> List[Pair]:
        mm, ww, k = self.men, self.women, self.k
        if self.case == "II":
            return [(mm[i + 1], ww[i]) for i in range(k - 1)]
        if self.case in ("IIa", "IV"):
            return [(mm[i], ww[i]) for i in range(k)]
        if self.case == "III":
            return [(mm[i + 1], ww[i]) for i in range(k)]
        if self.case == "IIIa":
            return [(mm[i], ww[i + 1]) for i in range(k)]
        return []

    def to_dict(self) -> dict:
        return {
            "case": self.case,
            "k": self.k,
            "men": list(self.men),
            "women": list(self.women),
            "weight": str(component_weight(self)),
        }


def _member_counts(case: str, k: Optional[int]) -> Tuple[int, int]:
    if case == "I":
        return 1, 0
    if case == "Ia":
        return 0, 1
    if not isinstance(k, int) or k < 1:
        raise ProfileError(f"case {case} needs k >= 1, got {k!r}")
    if case == "III":
        return k + 1, k
    if case == "IIIa":
        return k, k + 1
    return k, k


def component_weight(c: Component) -> WeightPoly:
    if c.case in ("I", "Ia"):
        return ONE
    k = c.k
    if c.case == "II":
        return WeightPoly.monomial(k, k - 1)
    if c.case == "IIa":
        return WeightPoly.monomial(k - 1, k)
    return WeightPoly.monomial(k, k)


def decompose(p: Profile) -> List[Component]:
    """Split a profile into its connected components, each tagged with its case.

    Paths are unrolled first, starting from people with at most one partner;
    whatever is left lies on cycles. Components come out in order of their
    first-scanned member (men 1..m, then women 1..n), paths before cycles.
    """
    spouse: Dict[Tuple[str, int], Tuple[str, int]] = {}
    lover: Dict[Tuple[str, int], Tuple[str, int]] = {}
    for man, woman in p.marriages:
        spouse[("M", man)] = ("W", woman)
        spouse[("W", woman)] = ("M", man)
    for man, woman in p.affairs:
        lover[("M", man)] = ("W", woman)
        lover[("W", woman)] = ("M", man)
    links = {"x": spouse, "y": lover}
    people = [("M", i) for i in range(1, p.m + 1)] + [("W", j) for j in range(1, p.n + 1)]
    seen = set()
    out: List[Component] = []

    def walk(start, color):
        # returns visited vertices and edge colors, stopping at an end or back at start
        verts, colors = [start], []
        cur = start
        while cur in links[color]:
            nxt = links[color][cur]
            colors.append(color)
            if nxt == start:
                break
            verts.append(nxt)
            cur = nxt
            color = "y" if color == "x" else "x"
        return verts, colors

    for v in people:
        if v in seen:
            continue
        degree = (v in spouse) + (v in lover)
        if degree == 0:
            seen.add(v)
            out.append(Component("I" if v[0] == "M" else "Ia", None, *_split([v])))
        elif degree == 1:
            verts, colors = walk(v, "x" if v in spouse else "y")
            seen.update(verts)
            out.append(_classify_path(verts, colors))

    for v in people:
        if v in seen:
            continue
        # every remaining vertex has degree two and sits on a cycle; scanning men
        # first means v is the smallest-labelled man on it
        verts, colors = walk(v, "y")
        if len(colors) != len(verts) or colors[-1] != "x":
            raise ProfileError(f"person {v} has two partners but is not on a closed cycle")
        seen.update(verts)
        men, women = _split(verts)
        out.append(Component("IV", len(men), men, women))

    return out


def _split(verts) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    return tuple(l for s, l in verts if s == "M"), tuple(l for s, l in verts if s == "W")


def _classify_path(verts, colors) -> Component:
    first, last = verts[0][0], verts[-1][0]
    if first != last:
        # odd number of edges, so both end edges share a color; start at the man
        if first == "W":
            verts, colors = verts[::-1], colors[::-1]
        men, women = _split(verts)
        return Component("II" if colors[0] == "x" else "IIa", len(men), men, women)
    # both ends of one sex: start at the end whose edge is a marriage
    if colors[0] != "x":
        verts, colors = verts[::-1], colors[::-1]
    men, women = _split(verts)
    if first == "M":
        return Component("III", len(women), men, women)
    return Component("IIIa", len(men), men, women)


# -- generating functions of the component shapes ---------------------------


def case_series(tag: str, max_m: int, max_n: int) -> BiSeries:
    """Exponential generating function of one component shape, truncated.

    Each path or cycle on ``m`` men and ``n`` women can be labelled in
    ``m! n!`` ways (``m! n! / k`` for a ``k``-cycle), so the ordinary series
    are geometric in ``u = x y t s``:

    ========  =================================
    I         ``t``
    Ia        ``s``
    II        ``x t s / (1 - u)``
    IIa       ``y t s / (1 - u)``
    III       ``x y t^2 s / (1 - u)``
    IIIa      ``x y t s^2 / (1 - u)``
    IV        ``-log(1 - u)``
    ========  =================================
    """
    if tag not in CASE_TAGS:
        raise UnknownCaseError(f"unknown case {tag!r}; expected one of {', '.join(CASE_TAGS)}")
    one = WeightPoly.constant(1)
    if tag == "I":
        return bs_term(1, 0, one, max_m, max_n)
    if tag == "Ia":
        return bs_term(0, 1, one, max_m, max_n)
    xy = X * Y
    u = bs_term(1, 1, xy, max_m, max_n)
    if tag == "IV":
        return bs_log_inv_one_minus(u)
    # labelled coefficients: t^a s^b carries a! b!
    leading = {
        "II": bs_term(1, 1, X, max_m, max_n),
        "IIa": bs_term(1, 1, Y, max_m, max_n),
        "III": bs_term(2, 1, xy.scale(2), max_m, max_n),
        "IIIa": bs_term(1, 2, xy.scale(2), max_m, max_n),
    }[tag]
    return leading * bs_inv_one_minus(u)


def all_components_series(max_m: int, max_n: int) -> BiSeries:
    """Sum of the seven component series: every connected profile, weighted."""
    total = BiSeries(max_m, max_n)
    for tag in CASE_TAGS:
        total = total + case_series(tag, max_m, max_n)
    return total
