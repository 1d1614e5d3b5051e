"""Finite enumeration of wall candidates for a target class and twist.

The scan runs over the integer lattice (r, kc, 2k^2 d, 6k^3 e) (with k read
as 1 when beta = 0), applying the numerical conditions first and the
integrality conditions last. Rationals are rebuilt only when the catalog is
assembled.
"""
from __future__ import annotations

import json
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterator, Optional

from .chern import ChernVector, TwistParameter, rat, rat_str, untwist
from .conditions import CandidateQuad, TargetClass, alpha0_squared

DEFAULT_BUDGET = 200_000_000
BUDGET_ENV = "WALLKIT_BUDGET"
INTEGRALITY_MODES = ("published", "untwisted")


class BudgetExceeded(RuntimeError):
    """The search space has more lattice cells than the configured cap."""

    def __init__(self, cells: int, budget: int):
        super().__init__(f"search space has {cells} cells, budget is {budget}")
        self.cells = cells
        self.budget = budget


class CatalogFormatError(ValueError):
    pass


@dataclass(frozen=True)
class EnumerationOptions:
    """Knobs for :func:`enumerate_walls`.

    ``min_alpha0_sq`` keeps walls with alpha0^2 >= the value (> when
    ``min_exclusive``). ``budget`` caps the number of (d, c, e) lattice cells;
    ``None`` reads ``$WALLKIT_BUDGET`` or falls back to ``DEFAULT_BUDGET``.
    ``integrality`` picks the beta = 1/k integrality test: ``"published"`` uses
    the published expressions (reproducing the published tables),
    ``"untwisted"`` the exact test on the untwisted character. Both agree for
    beta = 0. ``workers`` and ``budget`` never affect the catalog contents.
    """

    min_alpha0_sq: Optional[Fraction] = None
    min_exclusive: bool = False
    strict_upper_n2: bool = False
    integrality: str = "published"
    workers: int = 1
    budget: Optional[int] = None

    def __post_init__(self) -> None:
        if self.integrality not in INTEGRALITY_MODES:
            raise ValueError(f"integrality must be one of {INTEGRALITY_MODES}")
        if self.min_alpha0_sq is not None:
            object.__setattr__(self, "min_alpha0_sq", rat(self.min_alpha0_sq))
        if self.workers < 1:
            raise ValueError("workers must be >= 1")

    def resolved_budget(self) -> int:
        if self.budget is not None:
            return self.budget
        env = os.environ.get(BUDGET_ENV)
        return int(env) if env else DEFAULT_BUDGET

    def to_dict(self) -> dict[str, Any]:
        return {
            "min_alpha0_sq": None if self.min_alpha0_sq is None else rat_str(self.min_alpha0_sq),
            "min_exclusive": self.min_exclusive,
            "strict_n2": self.strict_upper_n2,
            "integrality": self.integrality,
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "EnumerationOptions":
        m = data.get("min_alpha0_sq")
        return cls(
            min_alpha0_sq=None if m is None else Fraction(m),
            min_exclusive=bool(data.get("min_exclusive", False)),
            strict_upper_n2=bool(data.get("strict_n2", False)),
            integrality=str(data.get("integrality", "published")),
        )


@dataclass(frozen=True)
class ScaledQuad:
    """Integer coordinates (r, kc, 2k^2 d, 6k^3 e) of a candidate."""

    m_r: int
    m_c: int
    m_d: int
    m_e: int

    def to_quad(self, tw: TwistParameter) -> CandidateQuad:
        _, sc, sd, se = tw.denominators
        return CandidateQuad(self.m_r, Fraction(self.m_c, sc), Fraction(self.m_d, sd), Fraction(self.m_e, se))

    @classmethod
    def from_quad(cls, q: CandidateQuad, tw: TwistParameter) -> "ScaledQuad":
        if not q.on_lattice(tw):
            raise ValueError(f"{q} is not on the lattice for beta={tw}")
        _, sc, sd, se = tw.denominators
        return cls(q.r, int(q.c * sc), int(q.d * sd), int(q.e * se))


@dataclass(frozen=True)
class SearchSlice:
    """All (m_c, m_e) cells for one value of m_d = 2k^2 d.

    ``bound`` is min{4d^2, 4(D-d)^2}; ``bound_scaled`` = k^4 * bound is an
    integer and N2 reads m_c * m_e <= bound_scaled.
    """

    m_d: int
    d: Fraction
    bound: Fraction
    bound_scaled: int
    e_min_num: int
    e_min_den: int
    min_exclusive: bool
    strict: bool

    def e_range(self, m_c: int) -> tuple[int, int]:
        hi = (self.bound_scaled - 1) // m_c if self.strict else self.bound_scaled // m_c
        # alpha0^2 = m_e / (k^2 m_c) >= a  <=>  m_e >= a k^2 m_c
        t = self.e_min_num * m_c
        if self.min_exclusive:
            lo = t // self.e_min_den + 1
        else:
            lo = -(-t // self.e_min_den)
        return max(lo, 1), hi

    def c_ranges(self) -> Iterator[tuple[int, int, int]]:
        """Yield ``(m_c, e_lo, e_hi)`` for every m_c with a nonempty m_e range."""
        m_c = 1
        while True:
            lo, hi = self.e_range(m_c)
            # lo is nondecreasing and hi nonincreasing in m_c
            if lo > hi:
                return
            yield m_c, lo, hi
            m_c += 1

    @property
    def c_max(self) -> int:
        last = 0
        for m_c, _, _ in self.c_ranges():
            last = m_c
        return last

    def cell_count(self) -> int:
        return sum(hi - lo + 1 for _, lo, hi in self.c_ranges())


@dataclass(frozen=True)
class SearchSpace:
    target: TargetClass
    twist: TwistParameter
    slices: tuple[SearchSlice, ...]

    @property
    def cells(self) -> int:
        return sum(s.cell_count() for s in self.slices)


def search_space(t: TargetClass, tw: TwistParameter, opts: Optional[EnumerationOptions] = None) -> SearchSpace:
    opts = opts or EnumerationOptions()
    k = tw.scale
    top = 2 * k * k * t.D
    if opts.min_alpha0_sq is None or opts.min_alpha0_sq <= 0:
        num, den, excl = 0, 1, False
    else:
        a = opts.min_alpha0_sq * k * k
        num, den, excl = a.numerator, a.denominator, opts.min_exclusive
    slices = []
    for m_d in range(1, top):
        d = Fraction(m_d, 2 * k * k)
        slices.append(SearchSlice(
            m_d=m_d,
            d=d,
            bound=min(4 * d * d, 4 * (t.D - d) ** 2),
            bound_scaled=min(m_d, top - m_d) ** 2,
            e_min_num=num,
            e_min_den=den,
            min_exclusive=excl,
            strict=opts.strict_upper_n2,
        ))
    return SearchSpace(t, tw, tuple(slices))


def _solve_linear(a: int, b: int, m: int) -> Optional[tuple[int, int]]:
    """Solutions of a*r = b (mod m) as ``(r0, step)``, or None."""
    a %= m
    b %= m
    g = math.gcd(a, m)
    if b % g:
        return None
    step = m // g
    if step == 1:
        return 0, 1
    return (b // g) * pow(a // g, -1, step) % step, step


def _ranks_betak(k: int, m_c: int, m_d: int, m_e: int, lo: int, hi: int, exact: bool) -> list[int]:
    k2 = k * k
    mod1 = 2 * k2
    mod3 = 6 * k2 * k
    # second integrality test is linear in r: (1 - k^2) r = -(m_e - k^2 m_c + 3 m_d + 3 m_c)
    sol = _solve_linear(1 - k2, -(m_e - k2 * m_c + 3 * m_d + 3 * m_c), mod3)
    if sol is None:
        return []
    r0, step = sol
    c2 = m_c * m_c
    base1 = m_d - c2
    base3 = 2 * m_e - 3 * m_c * m_d + c2 * m_c
    ranks = []
    for r in range(lo + (r0 - lo) % step, hi + 1, step):
        if (base1 + (1 - r) * (r + 2 * m_c)) % mod1:
            continue
        # published c^2 term is 6 m_c^2 (3r - 1); the exact one is 3 m_c^2 (r - 2)
        c2_term = 3 * c2 * (r - 2) if exact else 6 * c2 * (3 * r - 1)
        if (base3 + 3 * m_d * (2 - r) + c2_term
                + 3 * m_c * (2 + r * (r - 3)) + r * (r - 1) * (r - 2)) % mod3:
            continue
        ranks.append(r)
    return ranks


def _scan_slice(task: tuple) -> list[tuple[int, int, int, tuple[int, ...]]]:
    """Scan one m_d slice; returns ``(m_d, m_c, m_e, ranks)`` hits. Top-level for pickling."""
    sl, top, R, k, exact = task
    m_d = sl.m_d
    out = []
    for m_c, e_lo, e_hi in sl.c_ranges():
        hi_num = m_c * m_d
        lo_num = m_c * (top - m_d)
        parity_ok = (m_d - m_c * m_c) % 2 == 0
        for m_e in range(e_lo, e_hi + 1):
            hi = hi_num // m_e
            lo = -(lo_num // m_e) - R
            if lo > hi:
                continue
            if k is None:
                if not parity_ok or (m_e - m_c) % 6 or (2 * m_e - 3 * m_c * m_d + m_c**3) % 6:
                    continue
                ranks = tuple(range(lo, hi + 1))
            else:
                ranks = tuple(_ranks_betak(k, m_c, m_d, m_e, lo, hi, exact))
                if not ranks:
                    continue
            out.append((m_d, m_c, m_e, ranks))
    return out


@dataclass(frozen=True)
class WallCandidate:
    c: Fraction
    d: Fraction
    e: Fraction
    ranks: tuple[int, ...]
    alpha0_sq: Fraction
    chern_untwisted: tuple[ChernVector, ...]
    actual: Optional[bool] = None
    source: Optional[str] = None

    @property
    def key(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.d, self.c, self.e)

    def quads(self) -> Iterator[CandidateQuad]:
        for r in self.ranks:
            yield CandidateQuad(r, self.c, self.d, self.e)

    @classmethod
    def build(cls, c: Fraction, d: Fraction, e: Fraction, ranks, tw: TwistParameter,
              actual: Optional[bool] = None, source: Optional[str] = None) -> "WallCandidate":
        ranks = tuple(sorted(ranks))
        ch = tuple(untwist(ChernVector(Fraction(r), c, d, e), tw.beta) for r in ranks)
        return cls(c, d, e, ranks, alpha0_squared(c, e), ch, actual, source)

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "ranks": list(self.ranks),
            "c": rat_str(self.c),
            "d": rat_str(self.d),
            "e": rat_str(self.e),
            "alpha0_sq": rat_str(self.alpha0_sq),
            "ch": [v.to_json() for v in self.chern_untwisted],
        }
        if self.actual is not None:
            out["actual"] = self.actual
        if self.source is not None:
            out["source"] = self.source
        return out


@dataclass(frozen=True)
class WallCatalog:
    target: TargetClass
    twist: TwistParameter
    candidates: tuple[WallCandidate, ...]
    options: EnumerationOptions = field(default_factory=EnumerationOptions)

    @property
    def walls(self) -> dict[Fraction, list[int]]:
        """alpha0^2 -> candidate indices, keys in descending order."""
        index: dict[Fraction, list[int]] = {}
        for i, cand in enumerate(self.candidates):
            index.setdefault(cand.alpha0_sq, []).append(i)
        return {a: index[a] for a in sorted(index, reverse=True)}

    def __len__(self) -> int:
        return len(self.candidates)

    def to_dict(self) -> dict[str, Any]:
        return {
            "target": {"R": self.target.R, "D": self.target.D},
            "beta": rat_str(self.twist.beta),
            "options": self.options.to_dict(),
            "candidates": [c.to_dict() for c in self.candidates],
            "walls": {rat_str(a): idx for a, idx in self.walls.items()},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "WallCatalog":
        """Parse and validate a catalog or fixture document."""
        try:
            target = TargetClass(int(data["target"]["R"]), int(data["target"]["D"]))
            tw = TwistParameter.parse(str(data["beta"]))
            opts = EnumerationOptions.from_dict(data.get("options") or {})
            cands = []
            for raw in data["candidates"]:
                c, d, e = Fraction(raw["c"]), Fraction(raw["d"]), Fraction(raw["e"])
                ranks = [int(r) for r in raw["ranks"]]
                if not ranks:
                    raise CatalogFormatError(f"empty rank list for (c,d,e)=({c},{d},{e})")
                if ranks != sorted(set(ranks)):
                    raise CatalogFormatError(f"rank list not strictly increasing for ({c},{d},{e})")
                cand = WallCandidate.build(c, d, e, ranks, tw, raw.get("actual"), raw.get("source"))
                if "alpha0_sq" in raw and Fraction(raw["alpha0_sq"]) != cand.alpha0_sq:
                    raise CatalogFormatError(
                        f"alpha0_sq {raw['alpha0_sq']} != 6e/c = {cand.alpha0_sq} for ({c},{d},{e})")
                cands.append(cand)
        except CatalogFormatError:
            raise
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise CatalogFormatError(f"invalid catalog document: {exc}") from exc
        cands.sort(key=lambda w: w.key)
        return cls(target, tw, tuple(cands), opts)

    @classmethod
    def from_json(cls, text: str) -> "WallCatalog":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise CatalogFormatError(f"not JSON: {exc}") from exc
        return cls.from_dict(data)


def enumerate_walls(t: TargetClass, tw: TwistParameter, opts: Optional[EnumerationOptions] = None) -> WallCatalog:
    """Every (c, d, e) with c > 0 passing the numerical and integrality
    conditions, with its surviving rank list, in (d, c, e) order.

    Raises :class:`BudgetExceeded` before scanning if the lattice is larger
    than the budget.
    """
    opts = opts or EnumerationOptions()
    space = search_space(t, tw, opts)
    budget = opts.resolved_budget()
    cells = space.cells
    if cells > budget:
        raise BudgetExceeded(cells, budget)

    k = tw.scale
    top = 2 * k * k * t.D
    exact = opts.integrality == "untwisted"
    tasks = [(sl, top, t.R, tw.k, exact) for sl in space.slices]
    if opts.workers == 1 or len(tasks) <= 1:
        chunks = [_scan_slice(task) for task in tasks]
    else:
        with ProcessPoolExecutor(max_workers=opts.workers) as pool:
            chunks = list(pool.map(_scan_slice, tasks, chunksize=1))

    _, sc, sd, se = tw.denominators
    cands = [
        WallCandidate.build(Fraction(m_c, sc), Fraction(m_d, sd), Fraction(m_e, se), ranks, tw)
        for chunk in chunks
        for m_d, m_c, m_e, ranks in chunk
    ]
    cands.sort(key=lambda w: w.key)
    return WallCatalog(t, tw, tuple(cands), opts)


def distinct_walls(cat: WallCatalog) -> list[Fraction]:
    """Distinct alpha0^2 values, largest first."""
    return sorted({c.alpha0_sq for c in cat.candidates}, reverse=True)
