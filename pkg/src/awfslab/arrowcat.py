"""Squares between functors (morphisms of the arrow category of Cat),
generator families with marked squares, and extensional lifting functions
against such families."""

from __future__ import annotations

from dataclasses import dataclass, field

from .fincat import Functor, compose_functors, enumerate_functors
from .util import skey


@dataclass(frozen=True)
class Square:
    """A square (top, bot): f => g in the arrow category: functors
    top: dom f -> dom g and bot: cod f -> cod g with g . top == bot . f."""

    f: Functor
    g: Functor
    top: Functor
    bot: Functor

    def is_valid(self):
        return (
            self.top.src == self.f.src
            and self.top.dst == self.g.src
            and self.bot.src == self.f.dst
            and self.bot.dst == self.g.dst
            and compose_functors(self.g, self.top) == compose_functors(self.bot, self.f)
        )

    def key(self):
        return (self.f.key(), self.g.key(), self.top.key(), self.bot.key())

    def __eq__(self, other):
        return isinstance(other, Square) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())


def mk_square(f, g, top, bot):
    s = Square(f, g, top, bot)
    if not s.is_valid():
        raise ValueError("square does not commute or is mistyped")
    return s


def square_compose(s2: Square, s1: Square):
    """Horizontal (arrow-category) composite s2 . s1 : f => h given
    s1: f => g and s2: g => h."""
    assert s1.g == s2.f, "squares not composable"
    return Square(
        s1.f,
        s2.g,
        compose_functors(s2.top, s1.top),
        compose_functors(s2.bot, s1.bot),
    )


def identity_square(f: Functor):
    from .fincat import identity_functor

    return Square(f, f, identity_functor(f.src), identity_functor(f.dst))


# ---------------------------------------------------------------------------
# generator families


@dataclass
class GeneratorCategory:
    """A finite family of generating arrows together with marked squares
    between them (the identity squares are implicit)."""

    arrows: dict = field(default_factory=dict)  # name -> Functor
    squares: list = field(default_factory=list)  # (src_name, dst_name, p, q)

    def validate(self):
        bad = []
        for (sn, dn, p, q) in self.squares:
            j1, j2 = self.arrows[sn], self.arrows[dn]
            if not Square(j1, j2, p, q).is_valid():
                bad.append(f"marked square {sn} -> {dn} does not commute")
        return bad


def lifting_problems(j: Functor, f: Functor):
    """All squares (a, b): j => f, as pairs of functors."""
    out = []
    for a in enumerate_functors(j.src, f.src):
        fa = compose_functors(f, a)
        for b in enumerate_functors(j.dst, f.dst):
            if compose_functors(b, j) == fa:
                out.append((a, b))
    return sorted(out, key=lambda ab: (skey(ab[0].key()), skey(ab[1].key())))


def is_lift(j: Functor, f: Functor, a: Functor, b: Functor, phi: Functor):
    return compose_functors(phi, j) == a and compose_functors(f, phi) == b


class LiftingFunction:
    """A choice of diagonal filler for every lifting problem of every
    generator against a fixed target arrow."""

    def __init__(self, gens: GeneratorCategory, target: Functor, table=None):
        self.gens = gens
        self.target = target
        self.table = dict(table or {})  # (name, a, b) -> Functor

    def lift(self, name, a, b):
        return self.table[(name, a, b)]

    def set_lift(self, name, a, b, phi):
        self.table[(name, a, b)] = phi

    def key(self):
        return tuple(
            sorted(
                ((n, a.key(), b.key(), phi.key()) for (n, a, b), phi in self.table.items()),
                key=skey,
            )
        )

    def __eq__(self, other):
        return isinstance(other, LiftingFunction) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())


def liftfun_validate(lf: LiftingFunction):
    """Violations of: totality, the lift equations, and coherence with
    every marked square of the generator family."""
    bad = []
    f = lf.target
    for name, j in lf.gens.arrows.items():
        for (a, b) in lifting_problems(j, f):
            phi = lf.table.get((name, a, b))
            if phi is None:
                bad.append({"law": "total", "at": name})
            elif not is_lift(j, f, a, b, phi):
                bad.append({"law": "lift", "at": name})
    if bad:
        return bad
    for (sn, dn, p, q) in lf.gens.squares:
        jd = lf.gens.arrows[dn]
        for (a, b) in lifting_problems(jd, f):
            phi = lf.table[(dn, a, b)]
            a2 = compose_functors(a, p)
            b2 = compose_functors(b, q)
            phi2 = lf.table[(sn, a2, b2)]
            if phi2 != compose_functors(phi, q):
                bad.append({"law": "coherence", "at": (sn, dn)})
    return bad


def liftfun_compose(lf_f: LiftingFunction, lf_g: LiftingFunction):
    """Composite lifting function for g . f from lifting functions for
    f: X -> Y and g: Y -> Z: solve against g first, then against f."""
    f, g = lf_f.target, lf_g.target
    assert f.dst == g.src and lf_f.gens is lf_g.gens or lf_f.gens.arrows.keys() == lf_g.gens.arrows.keys()
    gf = compose_functors(g, f)
    out = LiftingFunction(lf_f.gens, gf)
    for name, j in lf_f.gens.arrows.items():
        for (a, b) in lifting_problems(j, gf):
            psi = lf_g.lift(name, compose_functors(f, a), b)
            out.set_lift(name, a, b, lf_f.lift(name, a, psi))
    return out


def all_lifting_functions(gens: GeneratorCategory, f: Functor, limit=None):
    """Enumerate every coherent lifting function for f against the family
    (exhaustive search with coherence filtering)."""
    names = sorted(gens.arrows, key=skey)
    problems = []
    for name in names:
        j = gens.arrows[name]
        for (a, b) in lifting_problems(j, f):
            cands = [
                phi
                for phi in enumerate_functors(j.dst, f.src)
                if is_lift(j, f, a, b, phi)
            ]
            problems.append((name, a, b, cands))
    results = []

    def coherent_so_far(table):
        for (sn, dn, p, q) in gens.squares:
            jd = gens.arrows[dn]
            for (a, b) in lifting_problems(jd, f):
                phi = table.get((dn, a, b))
                if phi is None:
                    continue
                a2, b2 = compose_functors(a, p), compose_functors(b, q)
                phi2 = table.get((sn, a2, b2))
                if phi2 is not None and phi2 != compose_functors(phi, q):
                    return False
        return True

    def rec(i, table):
        if limit is not None and len(results) >= limit:
            return
        if i == len(problems):
            results.append(LiftingFunction(gens, f, table))
            return
        name, a, b, cands = problems[i]
        for phi in cands:
            table[(name, a, b)] = phi
            if coherent_so_far(table):
                rec(i + 1, dict(table))
        table.pop((name, a, b), None)

    rec(0, {})
    return results
