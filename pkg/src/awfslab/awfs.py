"""The factorization engine: functorial factorizations on Cat with a
comonad structure on the left half and a monad structure on the right half,
the mixed distributive law between them, (co)algebra structures with their
composition laws, chosen lifts, and morphisms of the whole structure.

All laws are checked as equalities of squares in the arrow category,
evaluated arrow by arrow over explicit corpora."""

from __future__ import annotations

from dataclasses import dataclass, field

from .arrowcat import LiftingFunction, Square, lifting_problems, square_compose
from .fincat import Functor, compose_functors, identity_functor


class FunFactorization:
    """A functorial factorization: ``factor(f)`` returns (Lf, Rf) with
    f == Rf . Lf, and ``sq_action(f, g, u, v)`` the middle-category functor
    E f -> E g induced by a square (u, v): f => g."""

    def __init__(self, name, factor, sq_action):
        self.name = name
        self._factor = factor
        self._sq_action = sq_action
        self._fcache = {}
        self._scache = {}

    def L(self, f: Functor) -> Functor:
        return self._pair(f)[0]

    def R(self, f: Functor) -> Functor:
        return self._pair(f)[1]

    def E(self, f: Functor):
        return self._pair(f)[0].dst

    def _pair(self, f):
        k = f.key()
        if k not in self._fcache:
            lf, rf = self._factor(f)
            assert lf.src == f.src and rf.dst == f.dst and lf.dst == rf.src
            assert compose_functors(rf, lf) == f, f"factorization fails on {f}"
            self._fcache[k] = (lf, rf)
        return self._fcache[k]

    def Esq(self, f, g, u, v) -> Functor:
        k = (f.key(), g.key(), u.key(), v.key())
        if k not in self._scache:
            self._scache[k] = self._sq_action(f, g, u, v)
        return self._scache[k]

    # the endofunctors of the arrow category, on squares
    def L_sq(self, sq: Square) -> Square:
        e = self.Esq(sq.f, sq.g, sq.top, sq.bot)
        return Square(self.L(sq.f), self.L(sq.g), sq.top, e)

    def R_sq(self, sq: Square) -> Square:
        e = self.Esq(sq.f, sq.g, sq.top, sq.bot)
        return Square(self.R(sq.f), self.R(sq.g), e, sq.bot)


class AwfsData(FunFactorization):
    """A functorial factorization together with the comultiplication
    ``delta(f): E f -> E(L f)`` and multiplication ``mu(f): E(R f) -> E f``
    making the left half a comonad, the right half a monad, and the pair
    (delta, mu) a distributive law."""

    def __init__(self, name, factor, sq_action, delta, mu):
        super().__init__(name, factor, sq_action)
        self._delta = delta
        self._mu = mu
        self._dcache = {}
        self._mcache = {}

    def delta(self, f):
        k = f.key()
        if k not in self._dcache:
            self._dcache[k] = self._delta(f)
        return self._dcache[k]

    def mu(self, f):
        k = f.key()
        if k not in self._mcache:
            self._mcache[k] = self._mu(f)
        return self._mcache[k]

    # canonical squares -----------------------------------------------------
    def counit(self, f) -> Square:
        return Square(self.L(f), f, identity_functor(f.src), self.R(f))

    def comult(self, f) -> Square:
        return Square(self.L(f), self.L(self.L(f)), identity_functor(f.src), self.delta(f))

    def unit(self, f) -> Square:
        return Square(f, self.R(f), self.L(f), identity_functor(f.dst))

    def mult(self, f) -> Square:
        return Square(self.R(self.R(f)), self.R(f), self.mu(f), identity_functor(f.dst))

    def distrib(self, f) -> Square:
        return Square(self.L(self.R(f)), self.R(self.L(f)), self.delta(f), self.mu(f))


def _sq_eq(name, at, s1: Square, s2: Square, out):
    if s1.top != s2.top or s1.bot != s2.bot:
        out.append({"law": name, "at": at})


def validate_awfs(w: AwfsData, arrows, pairs=(), deep=True):
    """Check every structural law on each arrow of ``arrows``:
    factorization, functoriality of the square action (on ``pairs`` of
    composable squares), comonad and monad laws, and the distributive law
    compatibilities.  Returns a list of violations."""
    bad = []
    for idx, f in enumerate(arrows):
        at = f.name or idx
        if compose_functors(w.R(f), w.L(f)) != f:
            bad.append({"law": "factor", "at": at})
            continue
        if not w.counit(f).is_valid() or not w.unit(f).is_valid():
            bad.append({"law": "unit-typing", "at": at})
            continue
        if not w.comult(f).is_valid():
            bad.append({"law": "comult-typing", "at": at})
            continue
        if not w.mult(f).is_valid():
            bad.append({"law": "mult-typing", "at": at})
            continue
        # comonad laws
        lf = w.L(f)
        _sq_eq(
            "comonad-counit-1",
            at,
            square_compose(w.counit(lf), w.comult(f)),
            Square(lf, lf, identity_functor(lf.src), identity_functor(lf.dst)),
            bad,
        )
        _sq_eq(
            "comonad-counit-2",
            at,
            square_compose(w.L_sq(w.counit(f)), w.comult(f)),
            Square(lf, lf, identity_functor(lf.src), identity_functor(lf.dst)),
            bad,
        )
        _sq_eq(
            "comonad-coassoc",
            at,
            square_compose(w.comult(lf), w.comult(f)),
            square_compose(w.L_sq(w.comult(f)), w.comult(f)),
            bad,
        )
        # monad laws
        rf = w.R(f)
        _sq_eq(
            "monad-unit-1",
            at,
            square_compose(w.mult(f), w.unit(rf)),
            Square(rf, rf, identity_functor(rf.src), identity_functor(rf.dst)),
            bad,
        )
        _sq_eq(
            "monad-unit-2",
            at,
            square_compose(w.mult(f), w.R_sq(w.unit(f))),
            Square(rf, rf, identity_functor(rf.src), identity_functor(rf.dst)),
            bad,
        )
        _sq_eq(
            "monad-assoc",
            at,
            square_compose(w.mult(f), w.mult(rf)),
            square_compose(w.mult(f), w.R_sq(w.mult(f))),
            bad,
        )
        if not deep:
            continue
        # distributive law
        lam = w.distrib(f)
        if not lam.is_valid():
            bad.append({"law": "distrib-typing", "at": at})
            continue
        _sq_eq(
            "distrib-counit",
            at,
            square_compose(w.R_sq(w.counit(f)), lam),
            w.counit(rf),
            bad,
        )
        _sq_eq(
            "distrib-unit",
            at,
            square_compose(lam, w.L_sq(w.unit(f))),
            w.unit(lf),
            bad,
        )
        _sq_eq(
            "distrib-comult",
            at,
            square_compose(w.R_sq(w.comult(f)), lam),
            square_compose(w.distrib(lf), square_compose(w.L_sq(lam), w.comult(rf))),
            bad,
        )
        _sq_eq(
            "distrib-mult",
            at,
            square_compose(lam, w.L_sq(w.mult(f))),
            square_compose(w.mult(lf), square_compose(w.R_sq(lam), w.distrib(rf))),
            bad,
        )
    # functoriality of the square action on supplied composable squares
    for idx, (s1, s2) in enumerate(pairs):
        e21 = w.Esq(
            s1.f,
            s2.g,
            compose_functors(s2.top, s1.top),
            compose_functors(s2.bot, s1.bot),
        )
        step = compose_functors(w.Esq(s1.g, s2.g, s2.top, s2.bot), w.Esq(s1.f, s1.g, s1.top, s1.bot))
        if e21 != step:
            bad.append({"law": "square-action-functorial", "at": idx})
    for f in arrows:
        ide = w.Esq(f, f, identity_functor(f.src), identity_functor(f.dst))
        if ide != identity_functor(w.E(f)):
            bad.append({"law": "square-action-identity", "at": f.name})
    return bad


# ---------------------------------------------------------------------------
# coalgebras and algebras


@dataclass(frozen=True)
class Coalgebra:
    """A coalgebra (f, s) for the left comonad: s: cod f -> E f."""

    f: Functor
    s: Functor

    def key(self):
        return (self.f.key(), self.s.key())


@dataclass(frozen=True)
class Algebra:
    """An algebra (g, t) for the right monad: t: E g -> dom g."""

    g: Functor
    t: Functor

    def key(self):
        return (self.g.key(), self.t.key())


def coalg_validate(w: AwfsData, c: Coalgebra):
    bad = []
    f, s = c.f, c.s
    if s.src != f.dst or s.dst != w.E(f):
        return [{"law": "coalg-typing", "at": f.name}]
    if compose_functors(s, f) != w.L(f):
        bad.append({"law": "coalg-section-left", "at": f.name})
    if compose_functors(w.R(f), s) != identity_functor(f.dst):
        bad.append({"law": "coalg-retract", "at": f.name})
    lhs = compose_functors(w.delta(f), s)
    rhs = compose_functors(w.Esq(f, w.L(f), identity_functor(f.src), s), s)
    if lhs != rhs:
        bad.append({"law": "coalg-comult", "at": f.name})
    return bad


def alg_validate(w: AwfsData, a: Algebra):
    bad = []
    g, t = a.g, a.t
    if t.src != w.E(g) or t.dst != g.src:
        return [{"law": "alg-typing", "at": g.name}]
    if compose_functors(t, w.L(g)) != identity_functor(g.src):
        bad.append({"law": "alg-section", "at": g.name})
    if compose_functors(g, t) != w.R(g):
        bad.append({"law": "alg-over", "at": g.name})
    lhs = compose_functors(t, w.Esq(w.R(g), g, t, identity_functor(g.dst)))
    rhs = compose_functors(t, w.mu(g))
    if lhs != rhs:
        bad.append({"law": "alg-mult", "at": g.name})
    return bad


def coalg_compose(w: AwfsData, c1: Coalgebra, c2: Coalgebra) -> Coalgebra:
    """Composite coalgebra on j . i from coalgebras on i: X -> Y and
    j: Y -> Z."""
    i, s = c1.f, c1.s
    j, t = c2.f, c2.s
    assert i.dst == j.src
    ji = compose_functors(j, i)
    # square (1, j): i => ji, then (E(1,j) . s, 1): j => R(ji)
    e1j = w.Esq(i, ji, identity_functor(i.src), j)
    u = compose_functors(e1j, s)
    big = w.Esq(j, w.R(ji), u, identity_functor(j.dst))
    s_comp = compose_functors(w.mu(ji), compose_functors(big, t))
    return Coalgebra(ji, s_comp)


def alg_compose(w: AwfsData, a1: Algebra, a2: Algebra) -> Algebra:
    """Composite algebra on g . f from algebras on f: X -> Y and
    g: Y -> Z."""
    f, s = a1.g, a1.t
    g, t = a2.g, a2.t
    assert f.dst == g.src
    gf = compose_functors(g, f)
    # (f, 1): gf => g, whiskered to (1, E(f,1)): L(gf) => Lg . f,
    # then (1, t): Lg . f => f
    ef1 = w.Esq(gf, g, f, identity_functor(g.dst))
    lgf = compose_functors(w.L(g), f)
    step1 = w.Esq(w.L(gf), lgf, identity_functor(f.src), ef1)
    step2 = w.Esq(lgf, f, identity_functor(f.src), t)
    m = compose_functors(s, compose_functors(step2, compose_functors(step1, w.delta(gf))))
    return Algebra(gf, m)


def chosen_lift(w: AwfsData, c: Coalgebra, a: Algebra, u: Functor, v: Functor) -> Functor:
    """The canonical diagonal filler for a lifting problem (u, v): c.f =>
    a.g determined by the coalgebra and algebra structures."""
    assert Square(c.f, a.g, u, v).is_valid(), "not a lifting problem"
    return compose_functors(a.t, compose_functors(w.Esq(c.f, a.g, u, v), c.s))


def alg_to_liftfun(w: AwfsData, a: Algebra, gens, gen_coalgebras) -> LiftingFunction:
    """The lifting function induced by an algebra: every generator problem
    is solved by the chosen lift through the generator's coalgebra
    structure."""
    lf = LiftingFunction(gens, a.g)
    for name, j in gens.arrows.items():
        c = gen_coalgebras[name]
        for (u, v) in lifting_problems(j, a.g):
            lf.set_lift(name, u, v, chosen_lift(w, c, a, u, v))
    return lf


# ---------------------------------------------------------------------------
# morphisms of factorization systems


def awfs_morphism_validate(src: AwfsData, dst: AwfsData, xi, arrows):
    """xi maps each arrow f to a functor E_src f -> E_dst f.  Checks the
    two triangle laws and the two (co)multiplication pentagons on each
    arrow.  Returns violations."""
    bad = []
    for f in arrows:
        at = f.name
        x = xi(f)
        if x.src != src.E(f) or x.dst != dst.E(f):
            bad.append({"law": "xi-typing", "at": at})
            continue
        if compose_functors(x, src.L(f)) != dst.L(f):
            bad.append({"law": "xi-triangle-left", "at": at})
        if compose_functors(dst.R(f), x) != src.R(f):
            bad.append({"law": "xi-triangle-right", "at": at})
        # comultiplication pentagon
        xl = xi(src.L(f))
        el = dst.Esq(src.L(f), dst.L(f), identity_functor(f.src), x)
        lhs = compose_functors(dst.delta(f), x)
        rhs = compose_functors(el, compose_functors(xl, src.delta(f)))
        if lhs != rhs:
            bad.append({"law": "xi-comult-pentagon", "at": at})
        # multiplication pentagon
        xr = xi(src.R(f))
        er = dst.Esq(src.R(f), dst.R(f), x, identity_functor(f.dst))
        lhs = compose_functors(dst.mu(f), compose_functors(er, xr))
        rhs = compose_functors(x, src.mu(f))
        if lhs != rhs:
            bad.append({"law": "xi-mult-pentagon", "at": at})
    return bad


def coalg_pushforward(dst: AwfsData, xi, c: Coalgebra) -> Coalgebra:
    """Transport a coalgebra along a morphism of factorizations."""
    return Coalgebra(c.f, compose_functors(xi(c.f), c.s))


def alg_pullback(src: AwfsData, xi, a: Algebra) -> Algebra:
    """Transport an algebra backwards along a morphism of factorizations."""
    return Algebra(a.g, compose_functors(a.t, xi(a.g)))
