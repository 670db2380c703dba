"""Monomials and monomial ideals over a fixed variable universe.

All arithmetic is exact integer arithmetic on exponent vectors.  Ideals
are always stored through their unique minimal monomial generating set,
sorted by (total degree, exponent vector) with variable 1 in the most
significant position.  Variable indices are 0-based in code and 1-based
in the rendered form (position 0 prints as ``x1``).
"""

from __future__ import annotations

import itertools
import re
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import UniverseMismatch


class Monomial(tuple):
    """Exponent vector of a monomial, e.g. Monomial((2, 0, 1)) is x1^2*x3."""

    def __new__(cls, exponents: Iterable[int]):
        exps = tuple(int(e) for e in exponents)
        if any(e < 0 for e in exps):
            raise ValueError(f"negative exponent in {exps}")
        return super().__new__(cls, exps)

    @classmethod
    def unit(cls, nvars: int) -> "Monomial":
        return cls((0,) * nvars)

    @classmethod
    def variable(cls, index: int, nvars: int) -> "Monomial":
        if not 0 <= index < nvars:
            raise ValueError(f"variable index {index} outside universe of size {nvars}")
        return cls(tuple(1 if i == index else 0 for i in range(nvars)))

    @property
    def nvars(self) -> int:
        return len(self)

    def degree(self) -> int:
        return sum(self)

    def is_unit(self) -> bool:
        return not any(self)

    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self)

    def support(self) -> tuple[int, ...]:
        return tuple(i for i, e in enumerate(self) if e)

    def mul(self, other: "Monomial") -> "Monomial":
        _same_universe(self, other)
        return Monomial(a + b for a, b in zip(self, other))

    def pow(self, k: int) -> "Monomial":
        if k < 0:
            raise ValueError("negative power of a monomial")
        return Monomial(e * k for e in self)

    def divides(self, other: "Monomial") -> bool:
        _same_universe(self, other)
        return all(a <= b for a, b in zip(self, other))

    def div(self, other: "Monomial") -> "Monomial":
        """Exact quotient self / other; raises if the division is not exact."""
        _same_universe(self, other)
        if not other.divides(self):
            raise ValueError(f"{other.render()} does not divide {self.render()}")
        return Monomial(a - b for a, b in zip(self, other))

    def gcd(self, other: "Monomial") -> "Monomial":
        _same_universe(self, other)
        return Monomial(min(a, b) for a, b in zip(self, other))

    def lcm(self, other: "Monomial") -> "Monomial":
        _same_universe(self, other)
        return Monomial(max(a, b) for a, b in zip(self, other))

    def colon(self, other: "Monomial") -> "Monomial":
        """self : other = self / gcd(self, other)."""
        return self.div(self.gcd(other))

    def render(self) -> str:
        if self.is_unit():
            return "1"
        parts = []
        for i, e in enumerate(self):
            if e == 1:
                parts.append(f"x{i + 1}")
            elif e > 1:
                parts.append(f"x{i + 1}^{e}")
        return "*".join(parts)

    def __repr__(self) -> str:
        return f"Monomial({self.render()})"


_FACTOR_RE = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def parse_monomial(text: str, nvars: int) -> Monomial:
    """Parse the rendered form, e.g. 'x1^2*x3' with a fixed universe size."""
    text = text.strip().replace(" ", "")
    if text in ("1", ""):
        return Monomial.unit(nvars)
    exps = [0] * nvars
    for factor in text.split("*"):
        m = _FACTOR_RE.match(factor)
        if not m:
            raise ValueError(f"bad monomial factor {factor!r}")
        idx = int(m.group(1))
        if not 1 <= idx <= nvars:
            raise ValueError(f"variable x{idx} outside universe of size {nvars}")
        exps[idx - 1] += int(m.group(2) or 1)
    return Monomial(exps)


def _same_universe(a, b) -> None:
    if len(a) != len(b):
        raise UniverseMismatch(f"universe sizes differ: {len(a)} vs {len(b)}")


def _canon_key(t):
    # degree first, then lex with variable 1 most significant (x1*x2 before x2*x3)
    return (sum(t), tuple(-e for e in t))


def minimalize(gens: Sequence[Monomial]) -> tuple[Monomial, ...]:
    """Reduce a generating list to the unique minimal one, canonically sorted.

    A generator is dropped when another (distinct, after dedup) generator
    divides it.  Sorting by degree first means each candidate only needs to
    be tested against the already-kept lower-degree part of the list.
    """
    distinct = sorted(set(tuple(g) for g in gens), key=_canon_key)
    if not distinct:
        return ()
    nv = len(distinct[0])
    for t in distinct:
        if len(t) != nv:
            raise UniverseMismatch("mixed universe sizes in generator list")
    if len(distinct) <= 64:
        kept: list[tuple] = []
        for cand in distinct:
            if not any(all(a <= b for a, b in zip(k, cand)) for k in kept):
                kept.append(cand)
        return tuple(Monomial(t) for t in kept)
    # bulk path: single pass against the kept prefix, vectorized
    arr = np.array(distinct, dtype=np.int64)
    buf = np.empty_like(arr)
    k = 0
    keep_rows = []
    for i in range(arr.shape[0]):
        row = arr[i]
        if k and bool(np.any(np.all(buf[:k] <= row, axis=1))):
            continue
        buf[k] = row
        k += 1
        keep_rows.append(distinct[i])
    return tuple(Monomial(t) for t in keep_rows)


class MonomialIdeal:
    """A monomial ideal, stored via its minimal generators.

    The zero ideal has an empty generator tuple; the unit ideal is
    generated by the unit monomial.
    """

    __slots__ = ("nvars", "gens")

    def __init__(self, nvars: int, gens: Iterable = (), *, _minimal: bool = False):
        self.nvars = int(nvars)
        mono = [g if isinstance(g, Monomial) else Monomial(g) for g in gens]
        for g in mono:
            if g.nvars != self.nvars:
                raise UniverseMismatch(
                    f"generator {g.render()} has {g.nvars} variables, expected {self.nvars}"
                )
        self.gens = tuple(mono) if _minimal else minimalize(mono)

    @classmethod
    def zero(cls, nvars: int) -> "MonomialIdeal":
        return cls(nvars, (), _minimal=True)

    @classmethod
    def unit(cls, nvars: int) -> "MonomialIdeal":
        return cls(nvars, (Monomial.unit(nvars),), _minimal=True)

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return len(self.gens) == 1 and self.gens[0].is_unit()

    def __len__(self) -> int:
        return len(self.gens)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.gens)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MonomialIdeal)
            and self.nvars == other.nvars
            and self.gens == other.gens
        )

    def __hash__(self) -> int:
        return hash((self.nvars, self.gens))

    def __repr__(self) -> str:
        body = ", ".join(g.render() for g in self.gens) or "0"
        return f"MonomialIdeal({body})"

    def render(self) -> str:
        return "(" + (", ".join(g.render() for g in self.gens) or "0") + ")"

    def exponent_matrix(self) -> np.ndarray:
        if self.is_zero:
            return np.zeros((0, self.nvars), dtype=np.int64)
        return np.array([tuple(g) for g in self.gens], dtype=np.int64)


def parse_ideal(text: str, nvars: int) -> MonomialIdeal:
    """Parse a comma-separated generator list, optionally in parentheses."""
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    body = body.strip()
    if body in ("", "0"):
        return MonomialIdeal.zero(nvars)
    return MonomialIdeal(nvars, [parse_monomial(p, nvars) for p in body.split(",")])


def contains(a: MonomialIdeal, m: Monomial) -> bool:
    """Monomial membership: some minimal generator divides m."""
    if m.nvars != a.nvars:
        raise UniverseMismatch("monomial universe differs from ideal universe")
    return any(g.divides(m) for g in a.gens)


def ideal_contains(a: MonomialIdeal, b: MonomialIdeal) -> bool:
    """Inclusion b subseteq a, decided on minimal generators of b."""
    _check_pair(a, b)
    return all(contains(a, g) for g in b.gens)


def ideal_equal(a: MonomialIdeal, b: MonomialIdeal) -> bool:
    _check_pair(a, b)
    return a.gens == b.gens


def first_difference(a: MonomialIdeal, b: MonomialIdeal):
    """A witness monomial in exactly one of the two ideals, or None if equal.

    Returns (monomial, side) where side is 'left' or 'right' for the ideal
    that contains it.
    """
    _check_pair(a, b)
    for g in a.gens:
        if not contains(b, g):
            return g, "left"
    for g in b.gens:
        if not contains(a, g):
            return g, "right"
    return None


def ideal_sum(*ideals: MonomialIdeal) -> MonomialIdeal:
    if not ideals:
        raise ValueError("ideal_sum needs at least one ideal")
    nv = ideals[0].nvars
    gens: list[Monomial] = []
    for a in ideals:
        if a.nvars != nv:
            raise UniverseMismatch("summands live in different universes")
        gens.extend(a.gens)
    return MonomialIdeal(nv, gens)


def ideal_product(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    _check_pair(a, b)
    if a.is_zero or b.is_zero:
        return MonomialIdeal.zero(a.nvars)
    if len(a.gens) * len(b.gens) <= 256:
        gens = [g.mul(h) for g in a.gens for h in b.gens]
        return MonomialIdeal(a.nvars, gens)
    arr = (a.exponent_matrix()[:, None, :] + b.exponent_matrix()[None, :, :]).reshape(
        -1, a.nvars
    )
    return _ideal_from_rows(a.nvars, arr)


def ideal_power(a: MonomialIdeal, k: int) -> MonomialIdeal:
    if k < 0:
        raise ValueError("negative ideal power")
    if k == 0:
        return MonomialIdeal.unit(a.nvars)
    out = a
    for _ in range(k - 1):
        out = ideal_product(out, a)
    return out


def ideal_intersection(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    """Intersection via pairwise lcms of the generators."""
    _check_pair(a, b)
    if a.is_zero or b.is_zero:
        return MonomialIdeal.zero(a.nvars)
    if len(a.gens) * len(b.gens) <= 256:
        gens = [g.lcm(h) for g in a.gens for h in b.gens]
        return MonomialIdeal(a.nvars, gens)
    arr = np.maximum(
        a.exponent_matrix()[:, None, :], b.exponent_matrix()[None, :, :]
    ).reshape(-1, a.nvars)
    return _ideal_from_rows(a.nvars, arr)


def ideal_intersection_many(ideals: Sequence[MonomialIdeal]) -> MonomialIdeal:
    """Left-to-right fold of pairwise intersections."""
    if not ideals:
        raise ValueError("empty intersection is the unit ideal of an unknown universe")
    out = ideals[0]
    for a in ideals[1:]:
        out = ideal_intersection(out, a)
    return out


def ideal_colon(a: MonomialIdeal, d) -> MonomialIdeal:
    """Colon a : d for d a Monomial or a MonomialIdeal.

    Colon by an ideal is the intersection of colons by its generators;
    colon by the zero ideal is rejected.
    """
    if isinstance(d, Monomial):
        if d.nvars != a.nvars:
            raise UniverseMismatch("colon divisor universe differs")
        gens = [g.div(g.gcd(d)) for g in a.gens]
        return MonomialIdeal(a.nvars, gens)
    if isinstance(d, MonomialIdeal):
        _check_pair(a, d)
        if d.is_zero:
            raise ValueError("colon by the zero ideal is undefined here")
        return ideal_intersection_many([ideal_colon(a, g) for g in d.gens])
    raise TypeError(f"cannot colon by {type(d).__name__}")


def alpha_degree(a: MonomialIdeal) -> int:
    """alpha(a): least degree of a nonzero element (= of a minimal generator)."""
    if a.is_zero:
        raise ValueError("alpha degree of the zero ideal is undefined")
    return a.gens[0].degree()


def monomials_of_degree(
    nvars: int, degree: int, variables: Sequence[int] | None = None
) -> Iterator[Monomial]:
    """All monomials of the given total degree in the chosen variables (0-based)."""
    if degree < 0:
        raise ValueError("negative degree")
    chosen = tuple(range(nvars)) if variables is None else tuple(variables)
    for v in chosen:
        if not 0 <= v < nvars:
            raise ValueError(f"variable index {v} outside universe of size {nvars}")
    if degree == 0:
        yield Monomial.unit(nvars)
        return
    if not chosen:
        return
    for combo in itertools.combinations_with_replacement(chosen, degree):
        exps = [0] * nvars
        for v in combo:
            exps[v] += 1
        yield Monomial(exps)


def variable_power_ideal(
    nvars: int, variables: Sequence[int], t: int
) -> MonomialIdeal:
    """The t-th power of the prime generated by the chosen variables (0-based).

    t = 0 gives the unit ideal; an empty variable set with t >= 1 gives zero.
    """
    if t == 0:
        return MonomialIdeal.unit(nvars)
    gens = tuple(monomials_of_degree(nvars, t, variables))
    if not gens:
        return MonomialIdeal.zero(nvars)
    # generators of equal degree in disjoint-from-nothing variables are already minimal
    return MonomialIdeal(nvars, gens, _minimal=True) if _presorted(gens) else MonomialIdeal(nvars, gens)


def intersect_with_m_power(a: MonomialIdeal, t: int) -> MonomialIdeal:
    """a intersected with the t-th power of the maximal ideal (all variables).

    A monomial lies in m^t exactly when its degree is >= t, so each minimal
    generator g of a either survives as-is (deg g >= t) or contributes
    g * (every monomial of degree t - deg g).
    """
    if a.is_zero:
        return a
    gens: list[Monomial] = []
    for g in a.gens:
        deficit = t - g.degree()
        if deficit <= 0:
            gens.append(g)
        else:
            gens.extend(g.mul(w) for w in monomials_of_degree(a.nvars, deficit))
    return MonomialIdeal(a.nvars, gens)


def _presorted(gens: Sequence[Monomial]) -> bool:
    keys = [_canon_key(g) for g in gens]
    return all(keys[i] < keys[i + 1] for i in range(len(keys) - 1))


def _ideal_from_rows(nvars: int, rows: np.ndarray) -> MonomialIdeal:
    uniq = np.unique(rows, axis=0)
    return MonomialIdeal(nvars, [Monomial(map(int, r)) for r in uniq])


def _check_pair(a: MonomialIdeal, b: MonomialIdeal) -> None:
    if not isinstance(a, MonomialIdeal) or not isinstance(b, MonomialIdeal):
        raise TypeError("expected MonomialIdeal operands")
    if a.nvars != b.nvars:
        raise UniverseMismatch(f"universe sizes differ: {a.nvars} vs {b.nvars}")
