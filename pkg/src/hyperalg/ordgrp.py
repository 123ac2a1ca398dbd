"""The ordered-group hyperfield H over (Z, +), its companion fuzzy ring K
on singletons and down-intervals, window-bounded verification of their
agreement, and Zariski systems.

All infinite-carrier claims are checked on symmetric windows [-B, B]; every
report speaks only about the window it was computed on.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .hyper import AxiomReport, Violation, _report

# OGElem: an integer, or None for Bottom (the adjoined absorbing zero,
# smaller than every group element).
OGElem = int | None
BOTTOM: OGElem = None


def og_le(x: OGElem, y: OGElem) -> bool:
    if x is None:
        return True
    return y is not None and x <= y


def og_max(x: OGElem, y: OGElem) -> OGElem:
    return y if og_le(x, y) else x


def og_mul(x: OGElem, y: OGElem) -> OGElem:
    if x is None or y is None:
        return BOTTOM
    return x + y


@dataclass(frozen=True)
class OGSubset:
    """A singleton {upper} or the down-interval [Bottom, upper].

    DownInterval(Bottom) is normalised to Singleton(Bottom): both denote
    the one-element set {Bottom}.
    """

    tag: str  # "sing" | "down"
    upper: OGElem

    def __post_init__(self):
        if self.tag not in ("sing", "down"):
            raise ValueError(f"bad tag {self.tag!r}")

    def __str__(self) -> str:
        u = "_|_" if self.upper is None else str(self.upper)
        return "{%s}" % u if self.tag == "sing" else "[_|_, %s]" % u


def singleton(v: OGElem) -> OGSubset:
    return OGSubset("sing", v)


def down(v: OGElem) -> OGSubset:
    return OGSubset("sing", v) if v is None else OGSubset("down", v)


KG_ZERO = singleton(BOTTOM)
KG_ONE = singleton(0)
KG_EPSILON = singleton(0)  # -1 = 1 in H, so epsilon is the identity singleton


# ---------------------------------------------------------------------------
# the hyperfield H


def hgamma_add(x: OGElem, y: OGElem) -> OGSubset:
    """max of the two if distinct; the down-interval [Bottom, x] if equal."""
    if x == y:
        return down(x)
    return singleton(og_max(x, y))


def hgamma_mul(x: OGElem, y: OGElem) -> OGElem:
    return og_mul(x, y)


def hgamma_neg(x: OGElem) -> OGElem:
    """Every element is its own additive inverse (Bottom lies in x + x)."""
    return x


# ---------------------------------------------------------------------------
# the fuzzy ring K


def kgamma_add(a: OGSubset, b: OGSubset) -> OGSubset:
    if a.tag == "sing" and b.tag == "sing":
        # equal singletons sum to the down-interval, matching x + x in H
        if a.upper == b.upper:
            return down(a.upper)
        return singleton(og_max(a.upper, b.upper))
    if a.tag == "sing":  # b is a down-interval
        return b if og_le(a.upper, b.upper) else a
    if b.tag == "sing":
        return a if og_le(b.upper, a.upper) else b
    return a if og_le(b.upper, a.upper) else b


def kgamma_mul(a: OGSubset, b: OGSubset) -> OGSubset:
    u = og_mul(a.upper, b.upper)
    if a.tag == "sing" and b.tag == "sing":
        return singleton(u)
    return down(u)


def kgamma_is_null(a: OGSubset) -> bool:
    """Null elements are exactly the subsets containing Bottom."""
    return a.tag == "down" or a.upper is None


def kgamma_is_unit(a: OGSubset) -> bool:
    return a.tag == "sing" and a.upper is not None


def kgamma_add_many(elems) -> OGSubset:
    acc = KG_ZERO
    for e in elems:
        acc = kgamma_add(acc, e)
    return acc


def og_subset_contains(a: OGSubset, b: OGSubset) -> bool:
    """Set containment a <= b of the denoted subsets of Z u {Bottom}."""
    if a.tag == "sing":
        if b.tag == "sing":
            return a.upper == b.upper
        return og_le(a.upper, b.upper)
    return b.tag == "down" and og_le(a.upper, b.upper)


# ---------------------------------------------------------------------------
# window realizations: OGSubset values as concrete frozensets over the
# finite carrier {Bottom} u [-W, W]; Bottom is represented by None


def window_elements(b: int) -> list[OGElem]:
    return [BOTTOM, *range(-b, b + 1)]


def window_subsets(b: int) -> list[OGSubset]:
    out = [KG_ZERO]
    out += [singleton(v) for v in range(-b, b + 1)]
    out += [down(v) for v in range(-b, b + 1)]
    return out


def kgamma_embed(a: OGSubset, window: int) -> frozenset:
    """Realize a symbolic value as the window-restricted concrete subset;
    this is the inclusion of K into the powerset fuzzy ring of H."""
    if a.tag == "sing":
        return frozenset([a.upper])
    return frozenset([BOTTOM, *range(-window, (a.upper or 0) + 1)])


def _set_add(x: frozenset, y: frozenset, window: int) -> frozenset:
    out = set()
    for a, b in itertools.product(x, y):
        out |= kgamma_embed(hgamma_add(a, b), window)
    return frozenset(out)


def _set_mul(x: frozenset, y: frozenset) -> frozenset:
    return frozenset(og_mul(a, b) for a, b in itertools.product(x, y))


def _set_sum(elems: list[frozenset], window: int) -> frozenset:
    acc = frozenset([BOTTOM])
    for e in elems:
        acc = _set_add(acc, e, window)
    return acc


# ---------------------------------------------------------------------------
# window-bounded verification


def check_window_hypergroup(b: int = 4) -> AxiomReport:
    """Canonical-hypergroup laws for H on all tuples drawn from [-B, B]."""
    v: list[Violation] = []
    elems = window_elements(b)
    sing = {x: frozenset([x]) for x in elems}
    for x, y in itertools.product(elems, repeat=2):
        if hgamma_add(x, y) != hgamma_add(y, x):
            v.append(("commutativity", (x, y)))
        if kgamma_embed(hgamma_add(x, BOTTOM), b) != sing[x]:
            v.append(("identity", (x,)))
        # unique inverses: Bottom in x + y iff y = x
        if (BOTTOM in kgamma_embed(hgamma_add(x, y), b)) != (x == y):
            v.append(("inverses", (x, y)))
    for x, y, z in itertools.product(elems, repeat=3):
        l = _set_add(kgamma_embed(hgamma_add(x, y), b), sing[z], b)
        r = _set_add(sing[x], kgamma_embed(hgamma_add(y, z), b), b)
        if l != r:
            v.append(("associativity", (x, y, z)))
        # reversibility: x in y + z iff z in x + (-y), and -y = y
        if (x in kgamma_embed(hgamma_add(y, z), b)) != (
            z in kgamma_embed(hgamma_add(y, x), b)
        ):
            v.append(("reversibility", (x, y, z)))
    return _report(v)


def check_window_doubly_distributive(b: int = 4) -> AxiomReport:
    """(x+y)(z+w) = xz + xw + yz + yw for all window quadruples, evaluated
    symbolically (sums and products of singletons and down-intervals)."""
    v: list[Violation] = []
    elems = window_elements(b)
    for x, y, z, w in itertools.product(elems, repeat=4):
        lhs = kgamma_mul(hgamma_add(x, y), hgamma_add(z, w))
        rhs = kgamma_add_many(
            singleton(og_mul(p, q)) for p, q in ((x, z), (x, w), (y, z), (y, w))
        )
        if lhs != rhs:
            v.append(("double-distributivity", (x, y, z, w)))
            if len(v) >= 5:
                break
    return _report(v)


def check_window_closure(b: int = 4) -> AxiomReport:
    """Every iterated hypersum of window elements is a singleton or a
    down-interval (restricted to the window)."""
    v: list[Violation] = []
    elems = window_elements(b)
    representable = {kgamma_embed(a, b) for a in window_subsets(b)}
    family = {frozenset([x]) for x in elems}
    frontier = list(family)
    while frontier:
        s = frontier.pop()
        for a in elems:
            t = _set_add(s, frozenset([a]), b)
            if t not in family:
                family.add(t)
                frontier.append(t)
    def sort_key(f):
        return sorted(-2 * b - 1 if e is None else e for e in f)

    for s in sorted(family, key=sort_key):
        if s not in representable:
            v.append(("closure-shape", tuple(sort_key(s))))
    return _report(v)


def check_fbar_hgamma_iso_kgamma(b: int) -> AxiomReport:
    """The symbolic K operations agree with the concrete set-level (mask
    level) operations of the powerset construction on the window, nulls
    correspond, and epsilon is the identity singleton."""
    if b < 1:
        raise ValueError("window must be >= 1")
    v: list[Violation] = []
    rep = check_window_closure(b)
    v.extend(rep.violations)
    subs = window_subsets(b)
    for a, c in itertools.product(subs, repeat=2):
        s = kgamma_add(a, c)
        if kgamma_embed(s, b) != _set_add(kgamma_embed(a, b), kgamma_embed(c, b), b):
            v.append(("add-agrees", (str(a), str(c))))
        p = kgamma_mul(a, c)
        # products can leave the window; realize the factors at width 3B so
        # that every product landing in [-2B, 2B] is produced, then compare
        # inside [-2B, 2B]
        w2 = 2 * b

        def clip(s):
            return frozenset(e for e in s if e is None or -w2 <= e <= w2)

        if clip(kgamma_embed(p, 3 * b)) != clip(
            _set_mul(kgamma_embed(a, 3 * b), kgamma_embed(c, 3 * b))
        ):
            v.append(("mul-agrees", (str(a), str(c))))
    for a in subs:
        if kgamma_is_null(a) != (BOTTOM in kgamma_embed(a, b)):
            v.append(("nulls-correspond", (str(a),)))
    if kgamma_add(KG_ONE, KG_EPSILON) != down(0) or not kgamma_is_null(down(0)):
        v.append(("epsilon", ()))
    return _report(v)


def check_window_fuzzy_axioms(b: int = 4) -> AxiomReport:
    """Fuzzy-ring laws for the symbolic K, quantifiers bounded to window
    subsets (uppers in [-B, B])."""
    v: list[Violation] = []
    subs = window_subsets(b)
    units = [a for a in subs if kgamma_is_unit(a)]
    nul = kgamma_is_null

    def w(label, *args):
        v.append((label, tuple(str(x) for x in args)))

    for x, y in itertools.product(subs, repeat=2):
        if kgamma_add(x, y) != kgamma_add(y, x):
            w("FR0-add-comm", x, y)
        if kgamma_mul(x, y) != kgamma_mul(y, x):
            w("FR0-mul-comm", x, y)
    for x in subs:
        if kgamma_add(x, KG_ZERO) != x:
            w("FR0-add-id", x)
        if kgamma_mul(x, KG_ONE) != x:
            w("FR0-mul-id", x)
        if kgamma_mul(x, KG_ZERO) != KG_ZERO:
            w("FR1", x)
    for x, y, z in itertools.product(subs, repeat=3):
        if kgamma_add(kgamma_add(x, y), z) != kgamma_add(x, kgamma_add(y, z)):
            w("FR0-add-assoc", x, y, z)
        if kgamma_mul(kgamma_mul(x, y), z) != kgamma_mul(x, kgamma_mul(y, z)):
            w("FR0-mul-assoc", x, y, z)
    # FR2: units distribute over +
    for u in units:
        for x, y in itertools.product(subs, repeat=2):
            if kgamma_mul(u, kgamma_add(x, y)) != kgamma_add(
                kgamma_mul(u, x), kgamma_mul(u, y)
            ):
                w("FR2", u, x, y)
    # FR3
    if kgamma_mul(KG_EPSILON, KG_EPSILON) != KG_ONE:
        w("FR3")
    # FR4: nulls closed under + and absorb under x
    for x, y in itertools.product(subs, repeat=2):
        if nul(x) and nul(y) and not nul(kgamma_add(x, y)):
            w("FR4-add-closed", x, y)
        if nul(y) and not nul(kgamma_mul(x, y)):
            w("FR4-mul-absorbing", x, y)
    # FR5
    for u in units:
        if nul(kgamma_add(KG_ONE, u)) != (u == KG_EPSILON):
            w("FR5", u)
    # FR6: a+b, c+d null => ac + eps*bd null
    null_pairs = [
        (x, y) for x, y in itertools.product(subs, repeat=2) if nul(kgamma_add(x, y))
    ]
    for (a, bb), (c, d) in itertools.product(null_pairs, repeat=2):
        val = kgamma_add(
            kgamma_mul(a, c), kgamma_mul(KG_EPSILON, kgamma_mul(bb, d))
        )
        if not nul(val):
            w("FR6", a, bb, c, d)
    # FR7: a + b(c+d) null => a + bc + bd null
    for a, bb, c, d in itertools.product(subs, repeat=4):
        if nul(kgamma_add(a, kgamma_mul(bb, kgamma_add(c, d)))):
            rhs = kgamma_add(
                kgamma_add(a, kgamma_mul(bb, c)), kgamma_mul(bb, d)
            )
            if not nul(rhs):
                w("FR7", a, bb, c, d)
    return _report(v[:25]) if v else _report(v)


# ---------------------------------------------------------------------------
# Zariski systems


@dataclass(frozen=True)
class ZariskiSystem:
    """Points M with a multiplicatively closed family of functions M -> K
    such that every point has a function with non-null value there.

    Functions are stored as value tuples aligned with `points`; coefficient
    "kgamma" means symbolic OGSubset values, "window" means concrete
    frozenset values inside the powerset fuzzy ring of a window of H.
    """

    points: tuple
    functions: tuple[tuple, ...]
    coefficient: str = "kgamma"
    window: int = 0

    def is_null_value(self, val) -> bool:
        if self.coefficient == "kgamma":
            return kgamma_is_null(val)
        return BOTTOM in val

    def mul_values(self, x, y):
        if self.coefficient == "kgamma":
            return kgamma_mul(x, y)
        return _window_normalize(_set_mul(x, y), self.window)


def _window_normalize(s: frozenset, window: int) -> frozenset:
    """Re-truncate a concrete subset into the window realization family:
    a set containing Bottom denotes a down-interval, so refill it from the
    window floor up to its maximum element."""
    if BOTTOM not in s:
        return s
    tops = [e for e in s if e is not None]
    if not tops:
        return s
    return frozenset([BOTTOM, *range(-window, max(tops) + 1)])


def generate_zariski(points, generators, cap: int = 1000) -> ZariskiSystem:
    """Close a generating list of symbolic functions under pointwise
    products; errors if the closure exceeds the cap (products of nonzero
    singletons can grow without bound)."""
    fns = list(dict.fromkeys(tuple(f) for f in generators))
    frontier = list(fns)
    while frontier:
        f = frontier.pop()
        for g in list(fns):
            prod = tuple(kgamma_mul(x, y) for x, y in zip(f, g))
            if prod not in fns:
                if len(fns) >= cap:
                    raise ValueError("multiplicative closure exceeds cap")
                fns.append(prod)
                frontier.append(prod)
    return ZariskiSystem(tuple(points), tuple(fns), "kgamma")


def check_zariski(s: ZariskiSystem) -> AxiomReport:
    v: list[Violation] = []
    fns = set(s.functions)
    for f, g in itertools.combinations_with_replacement(s.functions, 2):
        prod = tuple(s.mul_values(x, y) for x, y in zip(f, g))
        if prod not in fns:
            v.append(("Z1-mul-closed", (str(f), str(g))))
    for i, p in enumerate(s.points):
        if not any(not s.is_null_value(f[i]) for f in s.functions):
            v.append(("Z2-nonnull-function", (p,)))
    return _report(v)


def pushforward_zariski(s: ZariskiSystem, window: int) -> ZariskiSystem:
    """Compose every function with the inclusion of K into the window
    powerset fuzzy ring of H."""
    if s.coefficient != "kgamma":
        raise ValueError("pushforward expects symbolic coefficients")
    fns = tuple(
        tuple(kgamma_embed(val, window) for val in f) for f in s.functions
    )
    return ZariskiSystem(s.points, fns, "window", window)


def zero_set(s: ZariskiSystem, t) -> frozenset:
    """Points where every function of t takes a null value."""
    t = list(t)
    for f in t:
        if f not in s.functions:
            raise ValueError("zero_set: function not in the system")
    return frozenset(
        p
        for i, p in enumerate(s.points)
        if all(s.is_null_value(f[i]) for f in t)
    )


# ---------------------------------------------------------------------------
# the demifield side: H as a partial demifield, and the inclusion example


def check_demifield_morphism_to_hz(p, values: tuple[OGSubset, ...]) -> AxiomReport:
    """Is `values` (one symbolic K-value per semiring element of the partial
    demifield p) a morphism into the ordered-group demifield?

    Checks: semiring homomorphism for + and x, and the hyperfield
    restriction is a (containment) homomorphism into H.
    """
    v: list[Violation] = []
    m = len(p.family)
    for i, j in itertools.combinations_with_replacement(range(m), 2):
        if values[p.add[i][j]] != kgamma_add(values[i], values[j]):
            v.append(("semiring-add", (i, j)))
        if values[p.mul[i][j]] != kgamma_mul(values[i], values[j]):
            v.append(("semiring-mul", (i, j)))
    f = p.hyperfield
    emb = p.embedding
    if values[emb[0]] != KG_ZERO:
        v.append(("zero", ()))
    if values[emb[1]] != KG_ONE:
        v.append(("one", ()))
    from .core import bits

    for a, c in itertools.product(range(f.n), repeat=2):
        target = kgamma_add(values[emb[a]], values[emb[c]])
        for x in bits(f.add[a][c]):
            if not og_subset_contains(values[emb[x]], target):
                v.append(("hyperfield-restriction", (a, c, x)))
    return _report(v)


def strict_homs_krasner_to_hz(window: int = 4) -> tuple[list, AxiomReport]:
    """Search for strict homomorphisms from the two-element hyperfield with
    1+1={0,1} into H, with the image of 1 ranging over the window.

    Strictness requires the image of 1+1 to equal, as a set, the hypersum of
    the images; the former has two elements while the latter is an infinite
    down-interval, so the search provably returns no candidates."""
    found = []
    witnesses: list[Violation] = []
    for g1 in range(-window, window + 1):
        if g1 != 0:
            continue  # g(1) must be the multiplicative identity
        image = frozenset([BOTTOM, g1])  # g({0,1}), elementwise
        target = kgamma_embed(hgamma_add(g1, g1), window)
        if image == target:
            found.append({0: BOTTOM, 1: g1})
        else:
            witnesses.append(("strictness", (g1,)))
    return found, _report(witnesses)
