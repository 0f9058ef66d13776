"""Finite categories as explicit composition tables, and the constructions
on them the rest of the package needs: functors, natural transformations,
(co)products, exponentials, comma-style fibrant replacements (mapping
cylinders and iso-commas), bounded pushouts, and exhaustive enumeration.

Everything is validated eagerly and exhaustively; all categories here are
small enough that explicit tables are the honest representation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .util import skey, ssorted


class CapExceeded(Exception):
    """A bounded construction (pushout closure) ran past its caps."""


# ---------------------------------------------------------------------------
# categories


class FinCat:
    """A finite category: objects, morphisms with endpoints, identities and
    a total composition table ``comp[(g, f)] = g after f``."""

    def __init__(self, name, objects, morphisms, identity, comp):
        self.name = name
        self.objects = tuple(ssorted(objects))
        self.morphisms = dict(morphisms)  # mid -> (dom, cod)
        self.identity = dict(identity)  # obj -> mid
        self.comp = dict(comp)  # (g, f) -> g.f
        self._key = None
        self._hom_idx = None

    def dom(self, m):
        return self.morphisms[m][0]

    def cod(self, m):
        return self.morphisms[m][1]

    def id(self, x):
        return self.identity[x]

    def compose(self, g, f):
        return self.comp[(g, f)]

    def compose_chain(self, *ms):
        """Compose ms[0] . ms[1] . ... (classical order)."""
        out = ms[0]
        for m in ms[1:]:
            out = self.comp[(out, m)]
        return out

    def mids(self):
        return ssorted(self.morphisms)

    def hom(self, x, y):
        if self._hom_idx is None:
            idx = {}
            for m in self.mids():
                idx.setdefault(self.morphisms[m], []).append(m)
            self._hom_idx = idx
        return list(self._hom_idx.get((x, y), ()))

    def is_identity(self, m):
        return self.identity.get(self.dom(m)) == m

    def nonidentity(self):
        return [m for m in self.mids() if not self.is_identity(m)]

    def inverse(self, m):
        x, y = self.morphisms[m]
        for n in self.hom(y, x):
            if self.comp[(n, m)] == self.identity[x] and self.comp[(m, n)] == self.identity[y]:
                return n
        return None

    def isos(self):
        return [m for m in self.mids() if self.inverse(m) is not None]

    def key(self):
        if self._key is None:
            self._key = (
                self.objects,
                tuple(sorted(self.morphisms.items(), key=skey)),
                tuple(sorted(self.identity.items(), key=skey)),
                tuple(sorted(self.comp.items(), key=skey)),
            )
        return self._key

    def __eq__(self, other):
        return isinstance(other, FinCat) and (
            set(self.objects) == set(other.objects)
            and self.morphisms == other.morphisms
            and self.identity == other.identity
            and self.comp == other.comp
        )

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"FinCat({self.name}, {len(self.objects)} obj, {len(self.morphisms)} mor)"


def validate_category(c: FinCat):
    """Return a list of violation strings; empty means the tables present a
    category (identities, totality of composition, units, associativity)."""
    bad = []
    for x in c.objects:
        i = c.identity.get(x)
        if i is None or c.morphisms.get(i) != (x, x):
            bad.append(f"identity of {x!r} missing or mistyped")
    for m, (d, co) in c.morphisms.items():
        if d not in c.objects or co not in c.objects:
            bad.append(f"morphism {m!r} has endpoints outside objects")
    pairs = set()
    for g in c.morphisms:
        for f in c.morphisms:
            if c.dom(g) == c.cod(f):
                pairs.add((g, f))
                h = c.comp.get((g, f))
                if h is None:
                    bad.append(f"composition missing at ({g!r}, {f!r})")
                elif c.morphisms.get(h) != (c.dom(f), c.cod(g)):
                    bad.append(f"composite of ({g!r}, {f!r}) mistyped")
    for k in c.comp:
        if k not in pairs:
            bad.append(f"composition defined at non-composable {k!r}")
    if bad:
        return bad
    for m in c.morphisms:
        if c.comp[(m, c.identity[c.dom(m)])] != m:
            bad.append(f"right unit fails at {m!r}")
        if c.comp[(c.identity[c.cod(m)], m)] != m:
            bad.append(f"left unit fails at {m!r}")
    for h in c.morphisms:
        for g in c.morphisms:
            if c.dom(h) != c.cod(g):
                continue
            for f in c.morphisms:
                if c.dom(g) != c.cod(f):
                    continue
                if c.comp[(c.comp[(h, g)], f)] != c.comp[(h, c.comp[(g, f)])]:
                    bad.append(f"associativity fails at ({h!r}, {g!r}, {f!r})")
    return bad


def assert_valid(c: FinCat):
    bad = validate_category(c)
    if bad:
        raise ValueError(f"invalid category {c.name}: " + "; ".join(bad[:5]))
    return c


def build_cat(name, objects, gens, rules):
    """Assemble a FinCat from non-identity morphisms ``gens`` (mid -> (dom,
    cod)) and a composition table ``rules`` on non-identity pairs; identity
    morphisms ('id', x) and unit compositions are filled in."""
    identity = {x: ("id", x) for x in objects}
    morphisms = {("id", x): (x, x) for x in objects}
    morphisms.update(gens)
    comp = {}
    for g in morphisms:
        for f in morphisms:
            if morphisms[g][0] != morphisms[f][1]:
                continue
            if f in identity.values():
                comp[(g, f)] = g
            elif g in identity.values():
                comp[(g, f)] = f
            else:
                comp[(g, f)] = rules[(g, f)]
    return assert_valid(FinCat(name, objects, morphisms, identity, comp))


# standard small categories ------------------------------------------------


def cat_empty():
    return FinCat("empty", [], {}, {}, {})


def discrete(objs, name=None):
    return build_cat(name or f"disc{len(objs)}", list(objs), {}, {})


def cat_terminal():
    return discrete(["*"], name="1")


def walking_arrow():
    return build_cat("2", [0, 1], {"a": (0, 1)}, {})


def parallel_pair():
    return build_cat("pp", [0, 1], {"a": (0, 1), "b": (0, 1)}, {})


def interval():
    # free-standing isomorphism
    gens = {"u": (0, 1), "v": (1, 0)}
    rules = {("v", "u"): ("id", 0), ("u", "v"): ("id", 1)}
    return build_cat("iso", [0, 1], gens, rules)


def indiscrete(n, name=None):
    objs = list(range(n))
    gens = {("e", i, j): (i, j) for i in objs for j in objs if i != j}
    rules = {}
    for i in objs:
        for j in objs:
            for k in objs:
                if i != j and j != k:
                    g, f = ("e", j, k), ("e", i, j)
                    rules[(g, f)] = ("id", i) if i == k else ("e", i, k)
    return build_cat(name or f"ind{n}", objs, gens, rules)


def chain(n):
    """The poset 0 < 1 < ... < n-1 as a category."""
    objs = list(range(n))
    gens = {("le", i, j): (i, j) for i in objs for j in objs if i < j}
    rules = {}
    for i in objs:
        for j in objs:
            for k in objs:
                if i < j < k:
                    rules[(("le", j, k), ("le", i, j))] = ("le", i, k)
    return build_cat(f"chain{n}", objs, gens, rules)


def cyclic_group(n):
    gens = {("g", i): ("*", "*") for i in range(1, n)}
    rules = {}
    for i in range(1, n):
        for j in range(1, n):
            k = (i + j) % n
            rules[(("g", j), ("g", i))] = ("id", "*") if k == 0 else ("g", k)
    return build_cat(f"Z{n}", ["*"], gens, rules)


# ---------------------------------------------------------------------------
# functors and natural transformations


class Functor:
    def __init__(self, src, dst, ob, mor, name=""):
        self.src = src
        self.dst = dst
        self.ob = dict(ob)
        self.mor = dict(mor)
        self.name = name
        self._key = None

    def __call__(self, m):
        return self.mor[m]

    def on_ob(self, x):
        return self.ob[x]

    def key(self):
        if self._key is None:
            self._key = (
                self.src.key(),
                self.dst.key(),
                tuple(sorted(self.ob.items(), key=skey)),
                tuple(sorted(self.mor.items(), key=skey)),
            )
        return self._key

    def __eq__(self, other):
        return isinstance(other, Functor) and (
            self.ob == other.ob
            and self.mor == other.mor
            and self.src == other.src
            and self.dst == other.dst
        )

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"Functor({self.name or '?'}: {self.src.name} -> {self.dst.name})"


def validate_functor(f: Functor):
    bad = []
    for x in f.src.objects:
        if f.ob.get(x) not in f.dst.objects:
            bad.append(f"object {x!r} unmapped")
    for m, (d, c) in f.src.morphisms.items():
        fm = f.mor.get(m)
        if fm is None or f.dst.morphisms.get(fm) != (f.ob.get(d), f.ob.get(c)):
            bad.append(f"morphism {m!r} unmapped or mistyped")
    if bad:
        return bad
    for x in f.src.objects:
        if f.mor[f.src.id(x)] != f.dst.id(f.ob[x]):
            bad.append(f"identity not preserved at {x!r}")
    for (g, h), c in f.src.comp.items():
        if f.dst.comp[(f.mor[g], f.mor[h])] != f.mor[c]:
            bad.append(f"composition not preserved at ({g!r}, {h!r})")
    return bad


def mk_functor(src, dst, ob, mor, name=""):
    f = Functor(src, dst, ob, mor, name)
    bad = validate_functor(f)
    if bad:
        raise ValueError(f"invalid functor {name}: " + "; ".join(bad[:5]))
    return f


def identity_functor(c: FinCat):
    return Functor(c, c, {x: x for x in c.objects}, {m: m for m in c.morphisms}, f"id_{c.name}")


def compose_functors(g: Functor, f: Functor):
    assert g.src == f.dst, "functors not composable"
    return Functor(
        f.src,
        g.dst,
        {x: g.ob[f.ob[x]] for x in f.src.objects},
        {m: g.mor[f.mor[m]] for m in f.src.morphisms},
        f"{g.name}.{f.name}",
    )


def constant_functor(src, dst, obj, name=""):
    return Functor(
        src,
        dst,
        {x: obj for x in src.objects},
        {m: dst.id(obj) for m in src.morphisms},
        name or f"const_{obj}",
    )


def is_injective_on_objects(f: Functor):
    vals = [f.ob[x] for x in f.src.objects]
    return len(set(vals)) == len(vals)


def is_surjective_on_objects(f: Functor):
    return set(f.ob.values()) >= set(f.dst.objects)


def is_full(f: Functor):
    for x in f.src.objects:
        for y in f.src.objects:
            img = {f.mor[m] for m in f.src.hom(x, y)}
            if not set(f.dst.hom(f.ob[x], f.ob[y])) <= img:
                return False
    return True


def is_faithful(f: Functor):
    for x in f.src.objects:
        for y in f.src.objects:
            hs = f.src.hom(x, y)
            if len({f.mor[m] for m in hs}) != len(hs):
                return False
    return True


def is_fully_faithful(f: Functor):
    return is_full(f) and is_faithful(f)


def is_iso_functor(f: Functor):
    return (
        len(f.src.objects) == len(f.dst.objects)
        and is_surjective_on_objects(f)
        and is_injective_on_objects(f)
        and is_fully_faithful(f)
    )


def inverse_functor(f: Functor):
    assert is_iso_functor(f)
    return Functor(
        f.dst,
        f.src,
        {v: k for k, v in f.ob.items()},
        {v: k for k, v in f.mor.items()},
        f"{f.name}^-1",
    )


class NatTrans:
    def __init__(self, src: Functor, dst: Functor, comp, name=""):
        self.src = src
        self.dst = dst
        self.comp = dict(comp)  # obj of src.src -> mid in src.dst
        self.name = name

    def at(self, x):
        return self.comp[x]

    def key(self):
        return (self.src.key(), self.dst.key(), tuple(sorted(self.comp.items(), key=skey)))

    def __eq__(self, other):
        return isinstance(other, NatTrans) and (
            self.comp == other.comp and self.src == other.src and self.dst == other.dst
        )

    def __hash__(self):
        return hash(self.key())


def validate_nattrans(a: NatTrans):
    bad = []
    f, g = a.src, a.dst
    if f.src != g.src or f.dst != g.dst:
        return ["functors not parallel"]
    d = f.dst
    for x in f.src.objects:
        m = a.comp.get(x)
        if m is None or d.morphisms.get(m) != (f.ob[x], g.ob[x]):
            bad.append(f"component at {x!r} missing or mistyped")
    if bad:
        return bad
    for m, (x, y) in f.src.morphisms.items():
        if d.comp[(a.comp[y], f.mor[m])] != d.comp[(g.mor[m], a.comp[x])]:
            bad.append(f"naturality fails at {m!r}")
    return bad


def mk_nattrans(src, dst, comp, name=""):
    a = NatTrans(src, dst, comp, name)
    bad = validate_nattrans(a)
    if bad:
        raise ValueError(f"invalid transformation {name}: " + "; ".join(bad[:5]))
    return a


def vcompose_nattrans(b: NatTrans, a: NatTrans):
    assert a.dst == b.src
    d = a.src.dst
    return NatTrans(a.src, b.dst, {x: d.comp[(b.comp[x], a.comp[x])] for x in a.comp})


# ---------------------------------------------------------------------------
# enumeration


def enumerate_functors(
    src, dst, ob_map=None, mor_map=None, predicate=None, limit=None, ob_pool=None, mor_pool=None
):
    """Yield all functors src -> dst extending the partial object map
    ``ob_map`` and partial morphism map ``mor_map``, optionally filtered.
    ``ob_pool``/``mor_pool`` restrict the candidates per object/morphism."""
    ob_map = dict(ob_map or {})
    mor_map = dict(mor_map or {})
    objs = list(src.objects)
    free_objs = [x for x in objs if x not in ob_map]
    nonid = src.nonidentity()
    count = 0
    pools = [
        (ob_pool.get(x, dst.objects) if ob_pool else dst.objects) for x in free_objs
    ]
    for choice in itertools.product(*pools):
        ob = dict(ob_map)
        ob.update(dict(zip(free_objs, choice)))
        cands = []
        ok = True
        for m in nonid:
            d, c = src.morphisms[m]
            pool = dst.hom(ob[d], ob[c])
            if mor_pool and m in mor_pool:
                pool = [p for p in pool if p in mor_pool[m]]
            if m in mor_map:
                pool = [mor_map[m]] if mor_map[m] in pool else []
            if not pool:
                ok = False
                break
            cands.append((m, pool))
        if not ok:
            continue
        for pick in itertools.product(*[p for _, p in cands]):
            mor = {m: v for (m, _), v in zip(cands, pick)}
            for x in objs:
                mor[src.id(x)] = dst.id(ob[x])
            good = True
            for (g, h), c in src.comp.items():
                if dst.comp[(mor[g], mor[h])] != mor[c]:
                    good = False
                    break
            if not good:
                continue
            f = Functor(src, dst, ob, mor)
            if predicate is None or predicate(f):
                yield f
                count += 1
                if limit is not None and count >= limit:
                    return


def all_functors(src, dst):
    return list(enumerate_functors(src, dst))


def all_nattrans(f: Functor, g: Functor):
    """All natural transformations f => g (exhaustive, with naturality
    pruning as components are chosen)."""
    d = f.dst
    objs = list(f.src.objects)
    out = []

    def rec(i, comp):
        if i == len(objs):
            out.append(NatTrans(f, g, comp))
            return
        x = objs[i]
        for m in d.hom(f.ob[x], g.ob[x]):
            comp[x] = m
            ok = True
            for mm, (a, b) in f.src.morphisms.items():
                if a in comp and b in comp:
                    if d.comp[(comp[b], f.mor[mm])] != d.comp[(g.mor[mm], comp[a])]:
                        ok = False
                        break
            if ok:
                rec(i + 1, dict(comp))
        comp.pop(x, None)

    rec(0, {})
    return out


def find_functor_iso(c: FinCat, d: FinCat):
    """An isomorphism of categories c -> d, or None."""
    if len(c.objects) != len(d.objects) or len(c.morphisms) != len(d.morphisms):
        return None
    for f in enumerate_functors(c, d, predicate=is_iso_functor, limit=1):
        return f
    return None


def arrow_iso(f: Functor, g: Functor, top=None, bot=None):
    """A pair (h, k) of category isomorphisms with k . f == g . h, i.e. an
    isomorphism f -> g in the category of arrows; None if there is none.
    ``top``/``bot`` optionally pin one leg."""
    tops = [top] if top is not None else enumerate_functors(f.src, g.src, predicate=is_iso_functor)
    for h in tops:
        want = compose_functors(g, h)
        bots = (
            [bot]
            if bot is not None
            else enumerate_functors(f.dst, g.dst, predicate=is_iso_functor)
        )
        for k in bots:
            if compose_functors(k, f) == want:
                return (h, k)
    return None


# ---------------------------------------------------------------------------
# products, coproducts, pullbacks


def product(c: FinCat, d: FinCat):
    objs = [(x, y) for x in c.objects for y in d.objects]
    mors = {
        (m, n): ((c.dom(m), d.dom(n)), (c.cod(m), d.cod(n)))
        for m in c.morphisms
        for n in d.morphisms
    }
    ident = {(x, y): (c.id(x), d.id(y)) for (x, y) in objs}
    comp = {}
    for (m2, n2) in mors:
        for (m1, n1) in mors:
            if c.dom(m2) == c.cod(m1) and d.dom(n2) == d.cod(n1):
                comp[((m2, n2), (m1, n1))] = (c.comp[(m2, m1)], d.comp[(n2, n1)])
    p = FinCat(f"({c.name}x{d.name})", objs, mors, ident, comp)
    pi1 = Functor(p, c, {o: o[0] for o in objs}, {m: m[0] for m in mors}, "pi1")
    pi2 = Functor(p, d, {o: o[1] for o in objs}, {m: m[1] for m in mors}, "pi2")
    return p, pi1, pi2


def pair_functor(f: Functor, g: Functor, prod=None):
    """The induced functor X -> C x D from f: X -> C, g: X -> D."""
    assert f.src == g.src
    p = prod if prod is not None else product(f.dst, g.dst)[0]
    return Functor(
        f.src,
        p,
        {x: (f.ob[x], g.ob[x]) for x in f.src.objects},
        {m: (f.mor[m], g.mor[m]) for m in f.src.morphisms},
        f"<{f.name},{g.name}>",
    )


def product_functor(f: Functor, g: Functor, src=None, dst=None):
    """f x g between the product categories."""
    p = src if src is not None else product(f.src, g.src)[0]
    q = dst if dst is not None else product(f.dst, g.dst)[0]
    return Functor(
        p,
        q,
        {(x, y): (f.ob[x], g.ob[y]) for (x, y) in p.objects},
        {(m, n): (f.mor[m], g.mor[n]) for (m, n) in p.morphisms},
        f"{f.name}x{g.name}",
    )


def swap_functor(p: FinCat, q: FinCat):
    """The symmetry C x D -> D x C (p must be a product category built by
    ``product`` and q the product in the other order)."""
    return Functor(
        p,
        q,
        {(x, y): (y, x) for (x, y) in p.objects},
        {(m, n): (n, m) for (m, n) in p.morphisms},
        "swap",
    )


def coproduct(c: FinCat, d: FinCat):
    objs = [("L", x) for x in c.objects] + [("R", y) for y in d.objects]
    mors = {}
    for m, (a, b) in c.morphisms.items():
        mors[("L", m)] = (("L", a), ("L", b))
    for m, (a, b) in d.morphisms.items():
        mors[("R", m)] = (("R", a), ("R", b))
    ident = {("L", x): ("L", c.id(x)) for x in c.objects}
    ident.update({("R", y): ("R", d.id(y)) for y in d.objects})
    comp = {}
    for (t2, m2) in mors:
        for (t1, m1) in mors:
            if t1 != t2:
                continue
            base = c if t1 == "L" else d
            if base.dom(m2) == base.cod(m1):
                comp[((t2, m2), (t1, m1))] = (t1, base.comp[(m2, m1)])
    s = FinCat(f"({c.name}+{d.name})", objs, mors, ident, comp)
    inl = Functor(c, s, {x: ("L", x) for x in c.objects}, {m: ("L", m) for m in c.morphisms}, "inl")
    inr = Functor(d, s, {y: ("R", y) for y in d.objects}, {m: ("R", m) for m in d.morphisms}, "inr")
    return s, inl, inr


def copair_functor(f: Functor, g: Functor, cop, inl, inr, dst):
    """The induced functor out of a coproduct built by ``coproduct``."""
    ob = {}
    mor = {}
    for x in f.src.objects:
        ob[("L", x)] = f.ob[x]
    for y in g.src.objects:
        ob[("R", y)] = g.ob[y]
    for m in f.src.morphisms:
        mor[("L", m)] = f.mor[m]
    for m in g.src.morphisms:
        mor[("R", m)] = g.mor[m]
    return Functor(cop, dst, ob, mor, f"[{f.name},{g.name}]")


def subcategory(c: FinCat, objs, mors, name=None):
    objs = set(objs)
    mors = set(mors) | {c.id(x) for x in objs}
    morphisms = {m: c.morphisms[m] for m in mors}
    for m, (d, co) in morphisms.items():
        assert d in objs and co in objs, "subcategory morphism endpoints missing"
    comp = {}
    for g in mors:
        for f in mors:
            if c.dom(g) == c.cod(f):
                h = c.comp[(g, f)]
                assert h in mors, "subcategory not closed under composition"
                comp[(g, f)] = h
    sub = FinCat(name or f"{c.name}|sub", objs, morphisms, {x: c.id(x) for x in objs}, comp)
    incl = Functor(sub, c, {x: x for x in objs}, {m: m for m in mors}, "incl")
    return sub, incl


def pullback(f: Functor, g: Functor):
    """Pullback of f: X -> Z <- Y :g as a subcategory of X x Y."""
    p, pi1, pi2 = product(f.src, g.src)
    objs = [(x, y) for (x, y) in p.objects if f.ob[x] == g.ob[y]]
    mors = [(m, n) for (m, n) in p.morphisms if f.mor[m] == g.mor[n]]
    sub, incl = subcategory(p, objs, mors, name=f"pb({f.name},{g.name})")
    q1 = compose_functors(pi1, incl)
    q2 = compose_functors(pi2, incl)
    return sub, q1, q2


# ---------------------------------------------------------------------------
# exponentials


@dataclass
class ExponentialCat:
    base: FinCat  # C in C^K
    exponent: FinCat  # K
    cat: FinCat = field(default=None)
    functors: list = field(default_factory=list)
    nats: dict = field(default_factory=dict)  # mid -> NatTrans
    index: dict = field(default_factory=dict)  # Functor -> obj id

    def ob_of(self, fun: Functor):
        return self.index[fun]

    def fun_of(self, obj):
        return self.functors[obj[1]]

    def nat_of(self, mid):
        return self.nats[mid]

    def mid_of(self, nat: NatTrans):
        i = self.index[nat.src]
        j = self.index[nat.dst]
        return ("n", i[1], j[1], tuple(sorted(nat.comp.items(), key=skey)))


def exponential(k: FinCat, c: FinCat):
    """The functor category C^K with objects all functors K -> C and
    morphisms all natural transformations."""
    funs = all_functors(k, c)
    exp = ExponentialCat(base=c, exponent=k, functors=funs)
    objs = [("F", i) for i in range(len(funs))]
    exp.index = {f: ("F", i) for i, f in enumerate(funs)}
    mors = {}
    for i, f in enumerate(funs):
        for j, g in enumerate(funs):
            for a in all_nattrans(f, g):
                mid = ("n", i, j, tuple(sorted(a.comp.items(), key=skey)))
                mors[mid] = (("F", i), ("F", j))
                exp.nats[mid] = a
    ident = {}
    for i, f in enumerate(funs):
        a = NatTrans(f, f, {x: c.id(f.ob[x]) for x in k.objects})
        ident[("F", i)] = exp.mid_of(a)
    comp = {}
    for m2, (d2, c2) in mors.items():
        for m1, (d1, c1) in mors.items():
            if d2 == c1:
                comp[(m2, m1)] = exp.mid_of(vcompose_nattrans(exp.nats[m2], exp.nats[m1]))
    exp.cat = FinCat(f"{c.name}^{k.name}", objs, mors, ident, comp)
    return exp


def curry(h: Functor, exp: ExponentialCat, prod_parts):
    """Transpose h: D x K -> C to D -> C^K.  ``prod_parts`` is (DxK, D, K)
    with DxK built by ``product``."""
    dk, d, k = prod_parts
    ob = {}
    for x in d.objects:
        fx = Functor(
            k,
            exp.base,
            {y: h.ob[(x, y)] for y in k.objects},
            {n: h.mor[(d.id(x), n)] for n in k.morphisms},
        )
        ob[x] = exp.index[fx]
    mor = {}
    for m, (x0, x1) in d.morphisms.items():
        a = NatTrans(
            exp.fun_of(ob[x0]),
            exp.fun_of(ob[x1]),
            {y: h.mor[(m, k.id(y))] for y in k.objects},
        )
        mor[m] = exp.mid_of(a)
    return Functor(d, exp.cat, ob, mor, f"curry({h.name})")


def uncurry(t: Functor, exp: ExponentialCat, prod_parts):
    """Transpose t: D -> C^K to D x K -> C."""
    dk, d, k = prod_parts
    c = exp.base
    ob = {(x, y): exp.fun_of(t.ob[x]).ob[y] for (x, y) in dk.objects}
    mor = {}
    for (m, n), ((x0, y0), (x1, y1)) in dk.morphisms.items():
        a = exp.nat_of(t.mor[m])
        mor[(m, n)] = c.comp[(a.comp[y1], exp.fun_of(t.ob[x0]).mor[n])]
    return Functor(dk, c, ob, mor, f"uncurry({t.name})")


def precompose_functor(expB: ExponentialCat, expA: ExponentialCat, i: Functor):
    """Restriction C^B -> C^A along i: A -> B."""
    assert expB.base == expA.base and i.dst == expB.exponent and i.src == expA.exponent
    ob = {}
    mor = {}
    for o in expB.cat.objects:
        f = expB.fun_of(o)
        ob[o] = expA.index[compose_functors(f, i)]
    for mid in expB.cat.morphisms:
        a = expB.nat_of(mid)
        b = NatTrans(
            expA.fun_of(ob[expB.cat.dom(mid)]),
            expA.fun_of(ob[expB.cat.cod(mid)]),
            {x: a.comp[i.ob[x]] for x in i.src.objects},
        )
        mor[mid] = expA.mid_of(b)
    return Functor(expB.cat, expA.cat, ob, mor, f"res_{i.name}")


def postcompose_functor(expX: ExponentialCat, expY: ExponentialCat, f: Functor):
    """f . (-): X^K -> Y^K along f: X -> Y."""
    assert expX.exponent == expY.exponent and f.src == expX.base and f.dst == expY.base
    ob = {}
    mor = {}
    for o in expX.cat.objects:
        ob[o] = expY.index[compose_functors(f, expX.fun_of(o))]
    for mid in expX.cat.morphisms:
        a = expX.nat_of(mid)
        b = NatTrans(
            expY.fun_of(ob[expX.cat.dom(mid)]),
            expY.fun_of(ob[expX.cat.cod(mid)]),
            {x: f.mor[a.comp[x]] for x in a.comp},
        )
        mor[mid] = expY.mid_of(b)
    return Functor(expX.cat, expY.cat, ob, mor, f"post_{f.name}")


def adjunction_check(k: FinCat, m: FinCat, n: FinCat):
    """Check the product/exponential transposition bijection
    Cat(k x m, n) ~ Cat(m, n^k) by explicit currying; returns a report."""
    km, _, _ = product(m, k)  # note: functors m x k -> n, exponent on right
    exp = exponential(k, n)
    parts = (km, m, k)
    direct = all_functors(km, n)
    curried = {}
    for h in direct:
        t = curry(h, exp, parts)
        back = uncurry(t, exp, parts)
        if back != h:
            return {"ok": False, "reason": "uncurry . curry != id", "at": h.name}
        curried[t.key()] = h
    transposed = all_functors(m, exp.cat)
    if len(direct) != len(transposed):
        return {
            "ok": False,
            "reason": "cardinality mismatch",
            "direct": len(direct),
            "transposed": len(transposed),
        }
    for t in transposed:
        if t.key() not in curried:
            return {"ok": False, "reason": "transpose not surjective"}
    return {"ok": True, "count": len(direct)}


# ---------------------------------------------------------------------------
# mapping cylinder and iso-comma replacements


@dataclass
class CylinderData:
    """Mapping cylinder of f: A -> B.  Objects are ('A', a) and ('B', b);
    hom(x, y) is the hom-set of B between the images.  ``into`` is the
    fully-faithful-complement leg A -> cyl, ``proj`` the fully faithful
    projection cyl -> B."""

    f: Functor
    cat: FinCat
    into: Functor
    proj: Functor

    def gx(self, x):
        return self.f.ob[x[1]] if x[0] == "A" else x[1]


def mapping_cylinder(f: Functor):
    a, b = f.src, f.dst
    objs = [("A", x) for x in a.objects] + [("B", y) for y in b.objects]

    def g_ob(x):
        return f.ob[x[1]] if x[0] == "A" else x[1]

    mors = {}
    for x in objs:
        for y in objs:
            for m in b.hom(g_ob(x), g_ob(y)):
                mors[(x, y, m)] = (x, y)
    ident = {x: (x, x, b.id(g_ob(x))) for x in objs}
    by_cod = {}
    for m in mors:
        by_cod.setdefault(m[1], []).append(m)
    comp = {}
    for (x2, y2, m2) in mors:
        for (x1, y1, m1) in by_cod.get(x2, ()):
            comp[((x2, y2, m2), (x1, y1, m1))] = (x1, y2, b.comp[(m2, m1)])
    cat = FinCat(f"cyl({f.name})", objs, mors, ident, comp)
    into = Functor(
        a,
        cat,
        {x: ("A", x) for x in a.objects},
        {m: (("A", a.dom(m)), ("A", a.cod(m)), f.mor[m]) for m in a.morphisms},
        "cyl_in",
    )
    proj = Functor(
        cat,
        b,
        {x: g_ob(x) for x in objs},
        {(x, y, m): m for (x, y, m) in mors},
        "cyl_proj",
    )
    return CylinderData(f=f, cat=cat, into=into, proj=proj)


def cylinder_map(src: CylinderData, dst: CylinderData, u: Functor, v: Functor):
    """Functorial action on cylinders of a commuting square (u, v) from
    src.f to dst.f: sends ('A', a) to ('A', u a), ('B', b) to ('B', v b)."""

    def ob(x):
        return ("A", u.ob[x[1]]) if x[0] == "A" else ("B", v.ob[x[1]])

    return Functor(
        src.cat,
        dst.cat,
        {x: ob(x) for x in src.cat.objects},
        {(x, y, m): (ob(x), ob(y), v.mor[m]) for (x, y, m) in src.cat.morphisms},
        "cyl_map",
    )


@dataclass
class IsoCommaData:
    """Iso-comma replacement of f: A -> B.  Objects are pairs (a, beta)
    with beta: f(a) -> b invertible in B; morphisms are pairs of morphisms
    (u: a -> a', w: b -> b') making the evident square commute."""

    f: Functor
    cat: FinCat
    into: Functor
    proj: Functor


def iso_comma(f: Functor):
    a, b = f.src, f.dst
    isos = b.isos()
    inv = {beta: b.inverse(beta) for beta in isos}
    objs = [(x, beta) for x in a.objects for beta in isos if b.dom(beta) == f.ob[x]]
    hom_idx = {}
    for u, (x, y) in a.morphisms.items():
        hom_idx.setdefault((x, y), []).append(u)
    mors = {}
    for (x, beta) in objs:
        for (y, gamma) in objs:
            for u in hom_idx.get((x, y), ()):
                # w is forced: gamma . f(u) . beta^{-1}
                w = b.compose_chain(gamma, f.mor[u], inv[beta])
                mors[((x, beta), (y, gamma), (u, w))] = ((x, beta), (y, gamma))
    ident = {(x, beta): ((x, beta), (x, beta), (a.id(x), b.id(b.cod(beta)))) for (x, beta) in objs}
    by_cod = {}
    for m in mors:
        by_cod.setdefault(m[1], []).append(m)
    comp = {}
    for m2 in mors:
        for m1 in by_cod.get(m2[0], ()):
            (u2, w2), (u1, w1) = m2[2], m1[2]
            comp[(m2, m1)] = (m1[0], m2[1], (a.comp[(u2, u1)], b.comp[(w2, w1)]))
    cat = FinCat(f"icm({f.name})", objs, mors, ident, comp)
    into = Functor(
        a,
        cat,
        {x: (x, b.id(f.ob[x])) for x in a.objects},
        {
            u: ((a.dom(u), b.id(f.ob[a.dom(u)])), (a.cod(u), b.id(f.ob[a.cod(u)])), (u, f.mor[u]))
            for u in a.morphisms
        },
        "icm_in",
    )
    proj = Functor(
        cat,
        b,
        {(x, beta): b.cod(beta) for (x, beta) in objs},
        {m: m[2][1] for m in mors},
        "icm_proj",
    )
    return IsoCommaData(f=f, cat=cat, into=into, proj=proj)


def iso_comma_map(src: IsoCommaData, dst: IsoCommaData, u: Functor, v: Functor):
    """Functorial action on iso-commas of a commuting square (u, v)."""

    def ob(o):
        return (u.ob[o[0]], v.mor[o[1]])

    return Functor(
        src.cat,
        dst.cat,
        {o: ob(o) for o in src.cat.objects},
        {(x, y, (p, w)): (ob(x), ob(y), (u.mor[p], v.mor[w])) for (x, y, (p, w)) in src.cat.morphisms},
        "icm_map",
    )


# ---------------------------------------------------------------------------
# bounded pushouts


class _DSU:
    def __init__(self):
        self.parent = {}

    def add(self, x):
        if x not in self.parent:
            self.parent[x] = x

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            # deterministic representative
            lo, hi = sorted((rx, ry), key=skey)
            self.parent[hi] = lo
            return True
        return False


@dataclass
class PushoutData:
    cat: FinCat
    inl: Functor  # from f.dst
    inr: Functor  # from g.dst
    span: tuple  # (f, g)


def pushout_bounded(f: Functor, g: Functor, max_morphisms=10000, max_word_len=16):
    """Pushout of categories B <-f- A -g-> C by bounded congruence closure.

    Objects are glued by union-find; morphisms are congruence classes of
    composable words in the non-identity morphisms of B and C.  Raises
    CapExceeded if closure does not stabilize within the caps."""
    assert f.src == g.src
    a, b, c = f.src, f.dst, g.dst

    # --- objects
    odsu = _DSU()
    for x in b.objects:
        odsu.add(("B", x))
    for x in c.objects:
        odsu.add(("C", x))
    for x in a.objects:
        odsu.union(("B", f.ob[x]), ("C", g.ob[x]))

    def oc(tag, x):
        return odsu.find((tag, x))

    # --- generators
    gdom, gcod = {}, {}
    for m in b.nonidentity():
        gdom[("B", m)] = oc("B", b.dom(m))
        gcod[("B", m)] = oc("B", b.cod(m))
    for m in c.nonidentity():
        gdom[("C", m)] = oc("C", c.dom(m))
        gcod[("C", m)] = oc("C", c.cod(m))

    def wdom(w):
        return gdom[w[0]]

    def wcod(w):
        return gcod[w[-1]]

    # tokens: ('id', objclass) or non-empty word tuple (diagrammatic order)
    mdsu = _DSU()
    known = set()

    def register(tok):
        if tok not in known:
            known.add(tok)
            mdsu.add(tok)
            if len(known) > max_morphisms:
                raise CapExceeded("morphism cap exceeded in pushout closure")

    for x in {odsu.find(k) for k in odsu.parent}:
        register(("id", x))
    for gid in gdom:
        register((gid,))

    def word_of(tag, base, m):
        if base.is_identity(m):
            return ("id", oc(tag, base.dom(m)))
        return ((tag, m),)

    def relate(t1, t2):
        register(t1)
        register(t2)
        return mdsu.union(t1, t2)

    # seed relations: composition tables of both legs, span identification
    for (m2, m1), m3 in b.comp.items():
        if b.is_identity(m2) or b.is_identity(m1):
            continue
        relate((("B", m1), ("B", m2)), word_of("B", b, m3))
    for (m2, m1), m3 in c.comp.items():
        if c.is_identity(m2) or c.is_identity(m1):
            continue
        relate((("C", m1), ("C", m2)), word_of("C", c, m3))
    for m in a.nonidentity():
        relate(word_of("B", b, f.mor[m]), word_of("C", c, g.mor[m]))

    def is_id_tok(tok):
        return len(tok) == 2 and tok[0] == "id" and not isinstance(tok[0], tuple)

    def tok_order(tok):
        return (0 if is_id_tok(tok) else len(tok), skey(tok))

    def current_reps():
        classes = {}
        for t in known:
            classes.setdefault(mdsu.find(t), []).append(t)
        return {cls: min(ts, key=tok_order) for cls, ts in classes.items()}

    def reachable(w, reps_by_class):
        """All words reachable from w by replacing a known subword with its
        class representative (non-length-increasing), including w."""
        seen = set()
        queue = [w]
        while queue:
            word = queue.pop()
            if word in seen:
                continue
            if len(seen) > 4000:
                raise CapExceeded("rewrite space cap exceeded in pushout closure")
            seen.add(word)
            n = len(word)
            for i in range(n):
                for jx in range(i + 1, n + 1):
                    sub = word[i:jx]
                    if sub in known:
                        rep = reps_by_class.get(mdsu.find(sub), sub)
                        mid = () if is_id_tok(rep) else rep
                        if mid != sub and len(mid) <= len(sub):
                            nxt = word[:i] + mid + word[jx:]
                            if nxt and nxt not in seen:
                                queue.append(nxt)
        return seen

    # congruence closure: alternately re-reduce every known word and close
    # representative pairs under composition, until a global fixpoint
    for _ in range(500):
        changed = False
        reps_by_class = current_reps()
        for w in [t for t in list(known) if not is_id_tok(t)]:
            for r in reachable(w, reps_by_class):
                if r in known and mdsu.union(w, r):
                    changed = True
        reps_by_class = current_reps()
        items = sorted(reps_by_class.values(), key=skey)
        for u in items:
            for v in items:
                uw = () if is_id_tok(u) else u
                vw = () if is_id_tok(v) else v
                ucod = u[1] if is_id_tok(u) else wcod(u)
                vdom = v[1] if is_id_tok(v) else wdom(v)
                if ucod != vdom:
                    continue
                w = uw + vw
                if not w:
                    continue
                if len(w) > max_word_len:
                    raise CapExceeded("word length cap exceeded in pushout closure")
                if w not in known:
                    hits = [r for r in reachable(w, reps_by_class) if r in known]
                    register(w)
                    changed = True
                    for r in hits:
                        mdsu.union(w, r)
        if not changed:
            break
    else:
        raise CapExceeded("pushout closure did not stabilize")

    # assemble the category
    reps = current_reps()
    objs = sorted({odsu.find(k) for k in odsu.parent}, key=skey)
    morphisms = {}
    ident = {}
    for cls, rep in reps.items():
        if is_id_tok(rep):
            morphisms[rep] = (rep[1], rep[1])
            ident[rep[1]] = rep
        else:
            morphisms[rep] = (wdom(rep), wcod(rep))
    def class_of(w):
        if w in known:
            return mdsu.find(w)
        hits = [r for r in reachable(w, reps) if r in known]
        if not hits:
            raise CapExceeded("composite not resolved at pushout fixpoint")
        return mdsu.find(hits[0])

    comp = {}
    for r2, (d2, c2) in morphisms.items():
        for r1, (d1, c1) in morphisms.items():
            if d2 == c1:
                w = (() if is_id_tok(r1) else r1) + (() if is_id_tok(r2) else r2)
                if not w:
                    comp[(r2, r1)] = r1
                else:
                    comp[(r2, r1)] = reps[class_of(w)]
    cat = FinCat(f"po({b.name},{c.name})", objs, morphisms, ident, comp)
    bad = validate_category(cat)
    if bad:
        raise CapExceeded("pushout closure produced a non-category: " + bad[0])

    def leg(tag, base):
        ob = {x: oc(tag, x) for x in base.objects}
        mor = {}
        for m in base.morphisms:
            if base.is_identity(m):
                mor[m] = ident[oc(tag, base.dom(m))]
            else:
                mor[m] = reps[mdsu.find(((tag, m),))]
        return Functor(base, cat, ob, mor, f"po_in{tag}")

    return PushoutData(cat=cat, inl=leg("B", b), inr=leg("C", c), span=(f, g))


def pushout_factor(po: PushoutData, u: Functor, w: Functor):
    """The induced functor out of the pushout, from a cocone (u from B,
    w from C) with u . f == w . g.  Validated before returning."""
    f, g = po.span
    assert compose_functors(u, f) == compose_functors(w, g), "not a cocone"
    t = u.dst
    ob = {}
    for x in po.cat.objects:
        # any preimage determines the value
        val = None
        for y in u.src.objects:
            if po.inl.ob[y] == x:
                val = u.ob[y]
                break
        if val is None:
            for y in w.src.objects:
                if po.inr.ob[y] == x:
                    val = w.ob[y]
                    break
        ob[x] = val
    mor = {}
    for m in po.cat.morphisms:
        if po.cat.is_identity(m):
            mor[m] = t.id(ob[po.cat.dom(m)])
        else:
            out = t.id(ob[po.cat.dom(m)])
            for tag, base_m in m:
                piece = u.mor[base_m] if tag == "B" else w.mor[base_m]
                out = t.comp[(piece, out)]
            mor[m] = out
    return mk_functor(po.cat, t, ob, mor, "po_factor")


def pushout_universal_check(po: PushoutData, u: Functor, w: Functor):
    """Check the pushout's universal property against one cocone: the
    induced functor exists, is a functor, and commutes with both legs."""
    h = pushout_factor(po, u, w)
    return compose_functors(h, po.inl) == u and compose_functors(h, po.inr) == w
