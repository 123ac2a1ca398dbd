"""The powerset functor from hyperrings to fuzzy rings, its quasi-inverse on
field-like fuzzy rings, unit fields, roundtrip checks, and the search for
strong extensions of weak morphisms.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .core import (
    CarrierTooLarge,
    bits,
    extend_hyperop,
    mask_mul,
    mask_of,
    powerset_cap,
    subset_order,
)
from .hyper import (
    AxiomReport,
    FiniteHyperring,
    Violation,
    _report,
    check_hom,
    make_hyperring,
)
from .fuzzy import (
    ClosureCertificate,
    FiniteFuzzyRing,
    MorphismTable,
    check_strong_morphism,
    check_weak_morphism,
    make_fuzzy_ring,
    weak_iso,
)


@dataclass(frozen=True)
class PowersetFuzzyRing:
    """F(R): the fuzzy ring on the nonempty subsets of a hyperring R.

    The carrier indexes subset masks of R (empty mask included when R is
    partial); `embed` maps base elements to their singleton indices.
    """

    base: FiniteHyperring
    fuzzy: FiniteFuzzyRing
    masks: tuple[int, ...]
    index: dict[int, int] = field(hash=False)
    embed: tuple[int, ...]


def F_obj(r: FiniteHyperring) -> PowersetFuzzyRing:
    """Subsets of R with union-extended addition and elementwise product;
    nulls are the subsets containing 0, epsilon is the singleton {-1}."""
    if r.n > powerset_cap():
        raise CarrierTooLarge(
            f"carrier {r.n} over powerset cap {powerset_cap()}"
            " (override with HYPERALG_MAX_POWERSET)"
        )
    masks = subset_order(r.n, include_empty=r.partial)
    index = {m: i for i, m in enumerate(masks)}
    m = len(masks)
    add = [[0] * m for _ in range(m)]
    mul = [[0] * m for _ in range(m)]
    for i, mi in enumerate(masks):
        for j in range(i, m):
            mj = masks[j]
            s = index[extend_hyperop(r.add, mi, mj)]
            p = index[mask_mul(r.mul, mi, mj)]
            add[i][j] = add[j][i] = s
            mul[i][j] = mul[j][i] = p
    k0 = mask_of(i for i, mk in enumerate(masks) if mk & 1)
    eps = index[1 << r.neg[1]]
    fuzzy = make_fuzzy_ring(add, mul, k0, epsilon=eps, name=f"F({r.name or '?'})")
    embed = tuple(index[1 << x] for x in range(r.n))
    return PowersetFuzzyRing(r, fuzzy, tuple(masks), index, embed)


def F_mor(f, fr, fs, verify: bool = True) -> MorphismTable:
    """Elementwise image map F(f): A -> f(A), verified strong; the source
    and target may be given as hyperrings or as their powerset rings."""
    if isinstance(fr, FiniteHyperring):
        fr = F_obj(fr)
    if isinstance(fs, FiniteHyperring):
        fs = F_obj(fs)
    f = tuple(f)
    g = []
    for mk in fr.masks:
        g.append(fs.index[mask_of(f[x] for x in bits(mk))])
    cert = (
        check_strong_morphism(fr.fuzzy, fs.fuzzy, g)
        if verify
        else ClosureCertificate(True, None, 0)
    )
    return MorphismTable("strong", tuple(enumerate(g)), cert)


def is_field_like(k: FiniteFuzzyRing) -> AxiomReport:
    """Every pair of units must admit c in units u {0} with a+b+c null."""
    v: list[Violation] = []
    completions = list(k.units) + [0]
    for a, b in itertools.combinations_with_replacement(k.units, 2):
        ab = k.add[a][b]
        if not any(k.is_null(k.add[ab][c]) for c in completions):
            v.append(("field-like", (a, b)))
    return _report(v)


def G_obj(k: FiniteFuzzyRing) -> FiniteHyperring:
    """Hyperfield on units u {0} with a+b = {c : a+b+eps*c null}.

    When K is not field-like some hypersums are empty and the result is a
    partial hyperfield (the partial flag is set).
    """
    carrier = [0, 1] + sorted(u for u in k.units if u != 1)
    idx = {x: i for i, x in enumerate(carrier)}
    m = len(carrier)
    partial = not is_field_like(k).passed
    add = [[0] * m for _ in range(m)]
    mul = [[0] * m for _ in range(m)]
    for i, a in enumerate(carrier):
        for j, b in enumerate(carrier):
            ab = k.add[a][b]
            add[i][j] = mask_of(
                idx[c] for c in carrier if k.is_null(k.add[ab][k.mul[k.epsilon][c]])
            )
            mul[i][j] = idx[k.mul[a][b]]
    return make_hyperring(add, mul, partial=partial, name=f"G({k.name or '?'})")


def g_carrier(k: FiniteFuzzyRing) -> tuple[int, ...]:
    """Carrier of G(K) as indices of K, in G's element order."""
    return tuple([0, 1] + sorted(u for u in k.units if u != 1))


def G_mor(
    f: dict[int, int], k: FiniteFuzzyRing, l: FiniteFuzzyRing
) -> tuple[int, ...]:
    """Extend a weak morphism by 0 -> 0 to a map G(K) -> G(L)."""
    src, dst = g_carrier(k), g_carrier(l)
    dst_idx = {x: i for i, x in enumerate(dst)}
    return tuple(dst_idx[f[x]] if x != 0 else 0 for x in src)


def unit_field(r: FiniteHyperring) -> FiniteHyperring:
    """The partial hyperfield R^x u {0}: sums intersected with the carrier."""
    carrier = [0, 1] + sorted(u for u in r.units if u != 1)
    idx = {x: i for i, x in enumerate(carrier)}
    m = len(carrier)
    add = [[0] * m for _ in range(m)]
    mul = [[0] * m for _ in range(m)]
    for i, a in enumerate(carrier):
        for j, b in enumerate(carrier):
            add[i][j] = mask_of(idx[c] for c in bits(r.add[a][b]) if c in idx)
            mul[i][j] = idx[r.mul[a][b]]
    return make_hyperring(add, mul, partial=True, name=f"unitfield({r.name or '?'})")


def unit_field_z() -> FiniteHyperring:
    """The unit field of the integers: {0, 1, -1} with 1+1 and (-1)+(-1)
    empty and 1+(-1) = {0}."""
    add = (
        (0b001, 0b010, 0b100),
        (0b010, 0b000, 0b001),
        (0b100, 0b001, 0b000),
    )
    mul = ((0, 0, 0), (0, 1, 2), (0, 2, 1))
    return make_hyperring(add, mul, partial=True, name="unitfield(Z)")


# ---------------------------------------------------------------------------
# roundtrips


@dataclass(frozen=True)
class RoundtripReport:
    passed: bool
    detail: str = ""

    def __bool__(self) -> bool:
        return self.passed


def check_roundtrips(k: FiniteHyperring) -> RoundtripReport:
    """G(F(k)) must equal k table-for-table under the singleton relabeling,
    with the identity a strict hom both ways."""
    fk = F_obj(k)
    gfk = G_obj(fk.fuzzy)
    if gfk.n != k.n:
        return RoundtripReport(False, f"carrier size {gfk.n} != {k.n}")
    # G's carrier order is [0, 1, other units sorted]; for a hyperfield the
    # singleton indices sort like the base elements, so the identity map is
    # the canonical relabeling.
    ident = tuple(range(k.n))
    if gfk.add != k.add or gfk.mul != k.mul:
        return RoundtripReport(False, "tables differ")
    fwd = check_hom(ident, k, gfk, strict=True)
    back = check_hom(ident, gfk, k, strict=True)
    if not (fwd.passed and back.passed):
        return RoundtripReport(False, "identity not a strict iso")
    return RoundtripReport(True)


def check_roundtrips_fuzzy(k: FiniteFuzzyRing) -> RoundtripReport:
    """K^x = (F(G(K)))^x via singletons must be a weak iso both ways."""
    gk = G_obj(k)
    fgk = F_obj(gk)
    carrier = g_carrier(k)
    alpha = {}
    for u in k.units:
        gi = carrier.index(u)
        alpha[u] = fgk.embed[gi]
    inv = {y: x for x, y in alpha.items()}
    fwd = check_weak_morphism(k, fgk.fuzzy, alpha)
    back = check_weak_morphism(fgk.fuzzy, k, inv)
    if not (fwd.accepted and back.accepted):
        return RoundtripReport(False, "unit map not a weak iso")
    return RoundtripReport(True)


# ---------------------------------------------------------------------------
# strong extension search


@dataclass(frozen=True)
class ExtensionSearchConfig:
    budget: int = 200_000  # DFS nodes
    full_check_limit: int = 200  # complete candidates run through the closure


@dataclass(frozen=True)
class ExtensionSearchResult:
    verdict: str  # "extends" | "refuted" | "unknown"
    witness: tuple[int, ...] | None = None
    nodes: int = 0
    full_checks: int = 0


def _unit_orbits(k: FiniteFuzzyRing) -> list[list[int]]:
    seen = set()
    orbits = []
    for x in range(k.n):
        if x in seen:
            continue
        orb = sorted({k.mul[u][x] for u in k.units})
        seen.update(orb)
        orbits.append(orb)
    return orbits


def strong_extension_search(
    k: FiniteFuzzyRing,
    l: FiniteFuzzyRing,
    unit_map: dict[int, int],
    cfg: ExtensionSearchConfig = ExtensionSearchConfig(),
) -> ExtensionSearchResult:
    """Does an accepted weak morphism extend to a strong morphism K -> L?

    The multiplicativity condition forces g on unit multiples, so candidates
    are enumerated per unit-orbit, subject to stabilizer consistency and
    preservation of nullity; complete candidates are verified by the closure
    decision.  Exhausting the space refutes; exhausting the budget is
    reported as unknown.
    """
    cert = check_weak_morphism(k, l, unit_map)
    if not cert.accepted:
        # strong morphisms restrict to weak morphisms, so a unit map that is
        # not weak cannot extend; the violating pair is the witness
        return ExtensionSearchResult("refuted", cert.violating, 0, 0)
    g: list[int | None] = [None] * k.n
    g[0] = 0
    for a, fa in unit_map.items():
        g[a] = fa
    orbits = [o for o in _unit_orbits(k) if g[o[0]] is None]

    # candidate values per orbit representative: stabilizer-consistent and
    # null-preserving (a null element must map to a null element, by the
    # strong condition with a single summand)
    def candidates(rep: int) -> list[int]:
        stab = [u for u in k.units if k.mul[u][rep] == rep]
        out = []
        for val in range(l.n):
            if k.is_null(rep) and not l.is_null(val):
                continue
            if any(l.mul[unit_map[u]][val] != val for u in stab):
                continue
            out.append(val)
        return out

    cand = {o[0]: candidates(o[0]) for o in orbits}
    orbits.sort(key=lambda o: len(cand[o[0]]))
    # pairwise null sums used for pruning partial assignments
    null_pairs = [
        (a, b)
        for a in range(k.n)
        for b in range(a, k.n)
        if k.is_null(k.add[a][b]) and not (k.is_null(a) or k.is_null(b))
    ]

    def assign_orbit(rep: int, val: int) -> list[tuple[int, int]]:
        updates = []
        for u in k.units:
            x = k.mul[u][rep]
            y = l.mul[unit_map[u]][val]
            if g[x] is None:
                g[x] = y
                updates.append((x, y))
            elif g[x] != y:
                for z, _ in updates:
                    g[z] = None
                return []
        return updates or [(-1, -1)]  # sentinel: nothing new but consistent

    state = {"nodes": 0, "checks": 0, "exhausted": False}

    def consistent() -> bool:
        for a, b in null_pairs:
            ga, gb = g[a], g[b]
            if ga is not None and gb is not None and not l.is_null(l.add[ga][gb]):
                return False
        return True

    def dfs(i: int) -> tuple[int, ...] | None:
        if state["nodes"] >= cfg.budget or state["checks"] >= cfg.full_check_limit:
            state["exhausted"] = True
            return None
        if i == len(orbits):
            state["checks"] += 1
            full = tuple(g)  # all slots assigned here
            if check_strong_morphism(k, l, full).accepted:
                return full
            return None
        rep = orbits[i][0]
        for val in cand[rep]:
            state["nodes"] += 1
            if state["nodes"] >= cfg.budget:
                state["exhausted"] = True
                return None
            updates = assign_orbit(rep, val)
            if not updates:
                continue
            if consistent():
                found = dfs(i + 1)
                if found is not None:
                    return found
            for x, _ in updates:
                if x >= 0:
                    g[x] = None
            if state["exhausted"]:
                return None
        return None

    witness = dfs(0)
    if witness is not None:
        return ExtensionSearchResult("extends", witness, state["nodes"], state["checks"])
    if state["exhausted"]:
        return ExtensionSearchResult("unknown", None, state["nodes"], state["checks"])
    return ExtensionSearchResult("refuted", None, state["nodes"], state["checks"])
