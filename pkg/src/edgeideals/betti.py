"""Multigraded Betti numbers, regularity, and the graded-piece fast paths.

beta_{i,b}(a) is the rank of reduced homology in dimension i-1 of the
upper-Koszul complex of a at the multidegree b.  Candidate multidegrees are
the closure of the generator exponent vectors under coordinatewise max
(every nonzero Betti multidegree is an lcm of generators).  Per multidegree
the complex lives on supp(b), so faces are bitmasks and cones are pruned
before any matrix work.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import LimitExceeded
from .graphs import Graph, induced_matching_number
from .homology import (
    DEFAULT_PRIME,
    SimplicialComplex,
    boundary_rank,
    homology_ranks,
)
from .monomials import (
    Monomial,
    MonomialIdeal,
    contains,
    ideal_sum,
    monomials_of_degree,
    variable_power_ideal,
)
from .symbolic import symbolic_power

DEFAULT_MAX_GENERATORS = 200
DEFAULT_MAX_CLOSURE = 20000
DEFAULT_MAX_SUPPORT = 16


def upper_koszul_complex(a: MonomialIdeal, b: Monomial) -> SimplicialComplex:
    """Faces are subsets t of supp(b) with x^(b-t) in a."""
    if a.is_zero:
        raise ValueError("upper-Koszul complex needs a nonzero ideal")
    support = b.support()
    faces = []
    for r in range(len(support) + 1):
        for sub in itertools.combinations(support, r):
            reduced = list(b)
            for i in sub:
                reduced[i] -= 1
            if contains(a, Monomial(reduced)):
                faces.append(frozenset(sub))
    return SimplicialComplex.from_faces(faces)


def lcm_closure(mat: np.ndarray, cap: int = DEFAULT_MAX_CLOSURE) -> list[tuple[int, ...]]:
    """Close generator exponent rows under coordinatewise max, deterministic order."""
    base = np.asarray(mat, dtype=np.int64)
    seen = {tuple(map(int, r)) for r in base}
    frontier = list(seen)
    while frontier:
        f = np.array(frontier, dtype=np.int64)
        cand = np.maximum(f[:, None, :], base[None, :, :]).reshape(-1, base.shape[1])
        fresh = {tuple(map(int, r)) for r in cand.tolist()} - seen
        if len(seen) + len(fresh) > cap:
            raise LimitExceeded(
                f"lcm closure exceeds {cap} multidegrees "
                f"({len(seen)} found, {len(fresh)} pending)"
            )
        seen |= fresh
        frontier = list(fresh)
    return sorted(seen, key=lambda t: (sum(t), t))


@dataclass(frozen=True)
class BettiTable:
    """Nonzero multigraded Betti numbers with the graded and reg views."""

    nvars: int
    field: str
    prime: int | None
    entries: tuple[tuple[int, Monomial, int], ...]

    def graded(self) -> dict[tuple[int, int], int]:
        out: dict[tuple[int, int], int] = {}
        for i, b, rank in self.entries:
            key = (i, b.degree())
            out[key] = out.get(key, 0) + rank
        return out

    @property
    def regularity(self) -> int:
        if not self.entries:
            raise ValueError("empty Betti table has no regularity")
        return max(b.degree() - i for i, b, _ in self.entries)

    @property
    def projective_dimension(self) -> int:
        return max(i for i, _, _ in self.entries)

    def rank(self, i: int, b: Monomial) -> int:
        for j, c, rank in self.entries:
            if j == i and c == b:
                return rank
        return 0

    def generator_count(self) -> int:
        return sum(rank for i, _, rank in self.entries if i == 0)

    def as_dict(self) -> dict:
        return {
            "field": self.field,
            "prime": self.prime,
            "regularity": self.regularity,
            "entries": [
                {"i": i, "b": list(b), "rank": rank} for i, b, rank in self.entries
            ],
            "graded": [
                {"i": i, "j": j, "rank": rank}
                for (i, j), rank in sorted(self.graded().items())
            ],
        }


def _membership_masks(b: tuple[int, ...], support: list[int], rows: np.ndarray) -> np.ndarray:
    """Boolean array over subsets of supp(b): x^(b-t) in the ideal."""
    k = len(support)
    taus = np.arange(1 << k, dtype=np.int64)
    member = np.zeros(1 << k, dtype=bool)
    barr = np.array(b, dtype=np.int64)
    fits = np.all(rows <= barr, axis=1)
    for g in rows[fits]:
        allowed = 0
        for pos, i in enumerate(support):
            if b[i] - g[i] >= 1:
                allowed |= 1 << pos
        member |= (taus & ~allowed) == 0
    return member


def _is_cone_masked(member: np.ndarray, k: int) -> bool:
    masks = np.nonzero(member)[0]
    if masks.size == 0:
        return False
    for pos in range(k):
        bit = 1 << pos
        if member[masks | bit].all():
            return True
    return False


def _homology_from_masks(
    member: np.ndarray, support: list[int], field: str, prime: int
) -> dict[int, int]:
    masks = np.nonzero(member)[0]
    if masks.size == 0:
        return {}
    by_dim: dict[int, list[tuple[int, ...]]] = {}
    for mask in map(int, masks):
        face = tuple(support[pos] for pos in range(len(support)) if mask >> pos & 1)
        by_dim.setdefault(len(face) - 1, []).append(face)
    for faces in by_dim.values():
        faces.sort()
    top = max(by_dim)
    ranks = {}
    bnd = {}
    for d in range(0, top + 2):
        bnd[d] = boundary_rank(by_dim.get(d - 1, []), by_dim.get(d, []), field, prime)
    for d in range(-1, top + 1):
        ranks[d] = len(by_dim.get(d, [])) - bnd.get(d, 0) - bnd.get(d + 1, 0)
    return {d: r for d, r in ranks.items() if r}


def betti_table(
    a: MonomialIdeal,
    field: str = "rational",
    prime: int = DEFAULT_PRIME,
    max_generators: int = DEFAULT_MAX_GENERATORS,
    max_closure: int = DEFAULT_MAX_CLOSURE,
    max_support: int = DEFAULT_MAX_SUPPORT,
) -> BettiTable:
    if a.is_zero:
        raise ValueError("Betti table of the zero ideal is undefined here")
    used_prime = prime if field == "prime" else None
    if a.is_unit:
        return BettiTable(a.nvars, field, used_prime, ((0, Monomial.unit(a.nvars), 1),))
    if len(a.gens) > max_generators:
        raise LimitExceeded(f"{len(a.gens)} generators exceed the {max_generators} cap")
    rows = a.exponent_matrix()
    entries: list[tuple[int, Monomial, int]] = []
    for b in lcm_closure(rows, max_closure):
        support = [i for i, e in enumerate(b) if e]
        if len(support) > max_support:
            raise LimitExceeded(
                f"multidegree support {len(support)} exceeds the {max_support} cap"
            )
        member = _membership_masks(b, support, rows)
        if _is_cone_masked(member, len(support)):
            continue
        mono = Monomial(b)
        for d, rank in _homology_from_masks(member, support, field, prime).items():
            entries.append((d + 1, mono, rank))
    entries.sort(key=lambda e: (e[0], e[1].degree(), tuple(-x for x in e[1])))
    return BettiTable(a.nvars, field, used_prime, tuple(entries))


def regularity(a: MonomialIdeal, **kwargs) -> int:
    """max over nonzero beta_{i,b} of deg(b) - i."""
    return betti_table(a, **kwargs).regularity


def quotient_regularity(a: MonomialIdeal, **kwargs) -> int:
    """Regularity of the quotient ring by a, i.e. regularity(a) - 1."""
    return regularity(a, **kwargs) - 1


def hochster_betti_table(
    a: MonomialIdeal,
    field: str = "rational",
    prime: int = DEFAULT_PRIME,
    max_vars: int = 8,
) -> BettiTable:
    """Independent oracle for squarefree ideals via complement-complex homology.

    The complex has the squarefree monomials outside the ideal as faces;
    beta_{i,W} is the reduced homology rank of its restriction to W in
    dimension |W|-i-2.  Exponential in the variable count, so capped.
    """
    if a.is_zero or a.is_unit:
        raise ValueError("oracle needs a proper nonzero ideal")
    if any(not g.is_squarefree() for g in a.gens):
        raise ValueError("oracle only applies to squarefree ideals")
    ground: set[int] = set()
    for g in a.gens:
        ground |= set(g.support())
    if len(ground) > max_vars:
        raise LimitExceeded(f"{len(ground)} variables exceed the {max_vars} oracle cap")
    ground_list = sorted(ground)
    nv = a.nvars
    faces = []
    for r in range(len(ground_list) + 1):
        for sub in itertools.combinations(ground_list, r):
            exps = [0] * nv
            for i in sub:
                exps[i] = 1
            if not contains(a, Monomial(exps)):
                faces.append(frozenset(sub))
    delta = SimplicialComplex.from_faces(faces)
    entries: list[tuple[int, Monomial, int]] = []
    for r in range(1, len(ground_list) + 1):
        for sub in itertools.combinations(ground_list, r):
            ranks = homology_ranks(delta.restrict(sub), field, prime)
            for d, rank in ranks.items():
                if not rank:
                    continue
                i = len(sub) - d - 2
                if i < 0:
                    continue
                exps = [0] * nv
                for v in sub:
                    exps[v] = 1
                entries.append((i, Monomial(exps), rank))
    entries.sort(key=lambda e: (e[0], e[1].degree(), tuple(-x for x in e[1])))
    used_prime = prime if field == "prime" else None
    return BettiTable(nv, field, used_prime, tuple(entries))


def quotient_graded_dimension(a: MonomialIdeal, degree: int) -> int:
    """Count of degree-d monomials outside the ideal (k-dimension of S/a)_d."""
    return sum(1 for m in monomials_of_degree(a.nvars, degree) if not contains(a, m))


def socle_regularity(g: Graph, s: int) -> int:
    """Regularity of S modulo (s-th symbolic power + m^2s) by degree counting.

    The quotient is Artinian, so its regularity is its top nonzero degree;
    the expected value is 2s-1.  A vanishing (2s-1)-piece or a surviving
    2s-piece raises with the evidence.
    """
    nv = g.vertex_count
    b = ideal_sum(
        symbolic_power(g, s), variable_power_ideal(nv, range(nv), 2 * s)
    )
    for m in monomials_of_degree(nv, 2 * s):
        if not contains(b, m):
            raise ValueError(
                f"degree-{2 * s} piece should vanish but contains {m.render()}"
            )
    top = quotient_graded_dimension(b, 2 * s - 1)
    if top == 0:
        raise ValueError(f"degree-{2 * s - 1} piece unexpectedly vanishes")
    return 2 * s - 1


@dataclass(frozen=True)
class BoundCheckResult:
    s: int
    nu_g: int
    symbolic_quotient_reg: int
    lower_bound: int
    lower_ok: bool
    colon_regs: tuple[int, ...]
    nu_h: int | None
    colon_ok: bool | None


def bound_checks(
    g: Graph,
    s: int,
    colon_ideals: Sequence[MonomialIdeal] = (),
    nu_h: int | None = None,
    **kwargs,
) -> BoundCheckResult:
    """Regularity lower bound for the symbolic power, plus colon upper bounds.

    Checks quotient reg of I^(s) >= 2s + nu(G) - 2.  Optionally, for colon
    ideals of the 'edge ideal plus variables' shape, checks quotient reg
    <= nu(H) (the caller supplies nu_h from the hypotheses report).
    """
    nu_g = induced_matching_number(g)[0]
    qreg = quotient_regularity(symbolic_power(g, s), **kwargs)
    lower = 2 * s + nu_g - 2
    colon_regs = tuple(quotient_regularity(q, **kwargs) for q in colon_ideals)
    colon_ok: bool | None = None
    if colon_ideals:
        if nu_h is None:
            raise ValueError("colon bound needs nu_h")
        colon_ok = all(r <= nu_h for r in colon_regs)
    return BoundCheckResult(
        s=s,
        nu_g=nu_g,
        symbolic_quotient_reg=qreg,
        lower_bound=lower,
        lower_ok=qreg >= lower,
        colon_regs=colon_regs,
        nu_h=nu_h,
        colon_ok=colon_ok,
    )
