"""Exhaustive law checking for props, and relation checking for presentations.

Morphisms are interned to integer ids so that the laws can be compared in
bulk with numpy once the needed composition and sum tables are filled in.
Every table cell is computed by the prop's own ``compose``/``monoidal_sum``.
"""
from __future__ import annotations

import numpy as np

from ..report import CheckReport
from .base import Prop, eval_prop_term
from .terms import PropPresentation


STRIDE = 1 << 10


class _Pool:
    """Interned morphisms.  An id encodes ``core * STRIDE + k``, where ``k``
    counts the inert closed components split off by ``Prop.scalar_split``."""

    def __init__(self, prop: Prop):
        self.prop = prop
        self.core_ids: dict = {}
        self.cores: list = []
        self.memo: dict = {}

    def intern(self, f) -> int:
        core, k = self.prop.scalar_split(f)
        if not 0 <= k < STRIDE:
            raise OverflowError(f"{k} inert components exceed the pool stride")
        i = self.core_ids.get(core)
        if i is None:
            i = len(self.cores)
            self.core_ids[core] = i
            self.cores.append(core)
        return i * STRIDE + k

    def intern_all(self, fs) -> np.ndarray:
        return np.fromiter((self.intern(f) for f in fs), dtype=np.int64, count=len(fs))

    def morphism(self, i: int):
        core, k = divmod(int(i), STRIDE)
        return self.prop.with_scalar(self.cores[core], k)

    def _core_op(self, kind: str, cx: int, cy: int) -> int:
        key = (kind, cx, cy)
        out = self.memo.get(key)
        if out is None:
            a, b = self.cores[cx], self.cores[cy]
            f = self.prop.compose(a, b) if kind == "c" else self.prop.monoidal_sum(a, b)
            out = self.memo[key] = self.intern(f)
        return out

    def op(self, kind: str, x: int, y: int) -> int:
        cx, kx = divmod(int(x), STRIDE)
        cy, ky = divmod(int(y), STRIDE)
        return self._core_op(kind, cx, cy) + kx + ky

    def table(self, kind: str, xs, ys) -> np.ndarray:
        """``out[i, j]`` is the id of ``xs[i] ; ys[j]`` (or their sum)."""
        xs = np.asarray(xs, dtype=np.int64)
        ys = np.asarray(ys, dtype=np.int64)
        cx, kx = np.divmod(xs, STRIDE)
        cy, ky = np.divmod(ys, STRIDE)
        ucx, inv_x = np.unique(cx, return_inverse=True)
        ucy, inv_y = np.unique(cy, return_inverse=True)
        cores = np.empty((len(ucx), len(ucy)), dtype=np.int64)
        ucy_list = [int(c) for c in ucy]
        for r, c1 in enumerate(ucx):
            c1 = int(c1)
            cores[r] = [self._core_op(kind, c1, c2) for c2 in ucy_list]
        out = cores[inv_x.reshape(-1)[:, None], inv_y.reshape(-1)[None, :]]
        out += kx[:, None] + ky[None, :]
        if out.size and (out % STRIDE).max() >= STRIDE - 1:
            raise OverflowError("inert component count near the pool stride")
        return out

    def show(self, i: int) -> str:
        return self.prop.render(self.morphism(i))


def _first_mismatch(lhs: np.ndarray, rhs: np.ndarray):
    bad = np.argwhere(lhs != rhs)
    return None if len(bad) == 0 else tuple(int(v) for v in bad[0])


class _PropLawChecker:
    def __init__(self, prop: Prop, arity_bound: int, size_bound: int | None):
        self.prop = prop
        self.n = arity_bound
        self.size_bound = size_bound
        self.pool = _Pool(prop)
        self.homs: dict[tuple[int, int], np.ndarray] = {}
        self.report = CheckReport(f"prop-axioms/{prop.name}",
                                  {"max_arity": arity_bound, "size_bound": size_bound})

    def hom(self, m: int, n: int) -> np.ndarray:
        if (m, n) not in self.homs:
            self.homs[m, n] = self.pool.intern_all(self.prop.enumerate_hom(m, n, self.size_bound))
        return self.homs[m, n]

    def ident(self, n: int) -> int:
        return self.pool.intern(self.prop.identity(n))

    def braid(self, m: int, n: int) -> int:
        return self.pool.intern(self.prop.braiding(m, n))

    def fail(self, law: str, anchor: str, **named):
        self.report.add(law, anchor, False, {k: self.pool.show(v) if isinstance(v, int) else str(v)
                                             for k, v in named.items()})

    def run(self) -> CheckReport:
        rng = range(self.n + 1)
        self.check_identity(rng)
        self.check_associativity(rng)
        self.check_sum_laws(rng)
        self.check_interchange(rng)
        self.check_braiding(rng)
        if type(self.prop).scalar_split is not Prop.scalar_split:
            self.check_inert_components(rng)
        self.report.add("hom-sizes", "hom-sets are enumerable within the bounds",
                        True if self.homs else None)
        return self.report.sorted()

    def check_identity(self, rng):
        p, anchor = self.pool, "identities are units for composition"
        for a in rng:
            for b in rng:
                for f in self.hom(a, b):
                    f = int(f)
                    if p.op("c", self.ident(a), f) != f:
                        return self.fail("identity", anchor, f=f, left=p.op("c", self.ident(a), f))
                    if p.op("c", f, self.ident(b)) != f:
                        return self.fail("identity", anchor, f=f, right=p.op("c", f, self.ident(b)))
        self.report.add("identity", anchor, True)

    def check_associativity(self, rng):
        p, anchor = self.pool, "composition is associative"
        for a in rng:
            for b in rng:
                E_ab = self.hom(a, b)
                for c in rng:
                    E_bc = self.hom(b, c)
                    if not len(E_ab) or not len(E_bc):
                        continue
                    fg = p.table("c", E_ab, E_bc)
                    u_fg, inv_fg = np.unique(fg, return_inverse=True)
                    inv_fg = inv_fg.reshape(fg.shape)
                    for d in rng:
                        E_cd = self.hom(c, d)
                        if not len(E_cd):
                            continue
                        gh = p.table("c", E_bc, E_cd)
                        u_gh, inv_gh = np.unique(gh, return_inverse=True)
                        inv_gh = inv_gh.reshape(gh.shape)
                        left = p.table("c", u_fg, E_cd)
                        right = p.table("c", E_ab, u_gh)
                        for i in range(len(E_ab)):
                            bad = _first_mismatch(left[inv_fg[i]], right[i][inv_gh])
                            if bad is not None:
                                j, k = bad
                                return self.fail("associativity", anchor, f=int(E_ab[i]),
                                                 g=int(E_bc[j]), h=int(E_cd[k]))
        self.report.add("associativity", anchor, True)

    def check_sum_laws(self, rng):
        p = self.pool
        anchor = "monoidal sum is strictly associative and unital on morphisms"
        zero = self.ident(0)
        for a in rng:
            for b in rng:
                for f in self.hom(a, b):
                    f = int(f)
                    if p.op("s", f, zero) != f or p.op("s", zero, f) != f:
                        return self.fail("sum-unit", anchor, f=f)
        for m in rng:
            for n in range(self.n + 1 - m):
                if p.op("s", self.ident(m), self.ident(n)) != self.ident(m + n):
                    return self.fail("sum-unit", anchor, sum=f"id {m} + id {n}")
        self.report.add("sum-unit", anchor, True)

        splits = [(x, y, z) for x in rng for y in rng for z in rng if x + y + z <= self.n]
        for a1, a2, a3 in splits:
            for b1, b2, b3 in splits:
                E1, E2, E3 = self.hom(a1, b1), self.hom(a2, b2), self.hom(a3, b3)
                if not (len(E1) and len(E2) and len(E3)):
                    continue
                s12 = p.table("s", E1, E2)
                s23 = p.table("s", E2, E3)
                u12, inv12 = np.unique(s12, return_inverse=True)
                u23, inv23 = np.unique(s23, return_inverse=True)
                inv12, inv23 = inv12.reshape(s12.shape), inv23.reshape(s23.shape)
                left = p.table("s", u12, E3)
                right = p.table("s", E1, u23)
                for i in range(len(E1)):
                    bad = _first_mismatch(left[inv12[i]], right[i][inv23])
                    if bad is not None:
                        j, k = bad
                        return self.fail("sum-associativity", anchor, f=int(E1[i]),
                                         g=int(E2[j]), h=int(E3[k]))
        self.report.add("sum-associativity", anchor, True)

    def check_interchange(self, rng):
        anchor = "interchange law (f+g);(h+k) = (f;h)+(g;k)"
        for a1 in rng:
            for b1 in rng:
                for c1 in rng:
                    for a2 in range(self.n + 1 - a1):
                        for b2 in range(self.n + 1 - b1):
                            for c2 in range(self.n + 1 - c1):
                                w = self._interchange_block(a1, b1, c1, a2, b2, c2)
                                if w is not None:
                                    return self.fail("interchange", anchor, **w)
        self.report.add("interchange", anchor, True)

    def _interchange_block(self, a1, b1, c1, a2, b2, c2):
        p = self.pool
        F, H = self.hom(a1, b1), self.hom(b1, c1)
        G, K = self.hom(a2, b2), self.hom(b2, c2)
        if not (len(F) and len(G) and len(H) and len(K)):
            return None
        fg = p.table("s", F, G)
        hk = p.table("s", H, K)
        u_fg, inv_fg = np.unique(fg, return_inverse=True)
        u_hk, inv_hk = np.unique(hk, return_inverse=True)
        inv_fg, inv_hk = inv_fg.reshape(fg.shape), inv_hk.reshape(hk.shape)
        lhs_t = p.table("c", u_fg, u_hk)
        fh = p.table("c", F, H)
        gk = p.table("c", G, K)
        u_fh, inv_fh = np.unique(fh, return_inverse=True)
        u_gk, inv_gk = np.unique(gk, return_inverse=True)
        inv_fh, inv_gk = inv_fh.reshape(fh.shape), inv_gk.reshape(gk.shape)
        rhs_t = p.table("s", u_fh, u_gk)
        for i in range(len(F)):
            for k in range(len(H)):
                # rows: g, columns: k'
                lhs = lhs_t[inv_fg[i][:, None], inv_hk[k][None, :]]
                rhs = rhs_t[inv_fh[i, k]][inv_gk]
                bad = _first_mismatch(lhs, rhs)
                if bad is not None:
                    j, l = bad
                    return {"f": int(F[i]), "g": int(G[j]), "h": int(H[k]), "k": int(K[l])}
        return None

    def check_braiding(self, rng):
        p = self.pool
        anchor = "braidings are self-inverse"
        for m in rng:
            for n in range(self.n + 1 - m):
                if p.op("c", self.braid(m, n), self.braid(n, m)) != self.ident(m + n):
                    return self.fail("braiding-inverse", anchor, braid=self.braid(m, n))
        self.report.add("braiding-inverse", anchor, True)

        anchor = "braidings are built from smaller braidings"
        for m in rng:
            for n in rng:
                for k in rng:
                    if m + n + k > self.n:
                        continue
                    lhs = self.braid(m, n + k)
                    rhs = p.op("c", p.op("s", self.braid(m, n), self.ident(k)),
                               p.op("s", self.ident(n), self.braid(m, k)))
                    if lhs != rhs:
                        return self.fail("braiding-hexagon", anchor, lhs=lhs, rhs=rhs)
        self.report.add("braiding-hexagon", anchor, True)

        anchor = "braiding is natural: (f+g);braid = braid;(g+f)"
        for a1 in rng:
            for a2 in range(self.n + 1 - a1):
                for b1 in rng:
                    for b2 in range(self.n + 1 - b1):
                        F, G = self.hom(a1, b1), self.hom(a2, b2)
                        if not (len(F) and len(G)):
                            continue
                        fg = p.table("s", F, G)
                        gf = p.table("s", G, F).T
                        lhs = p.table("c", fg.ravel(), [self.braid(b1, b2)]).reshape(fg.shape)
                        rhs = p.table("c", [self.braid(a1, a2)], gf.ravel()).reshape(gf.shape)
                        bad = _first_mismatch(lhs, rhs)
                        if bad is not None:
                            i, j = bad
                            return self.fail("braiding-naturality", anchor,
                                             f=int(F[i]), g=int(G[j]))
        self.report.add("braiding-naturality", anchor, True)


    def check_inert_components(self, rng):
        """The tables above work on cores; confirm against direct evaluation
        that closed components never interact with the rest of a morphism."""
        p, prop = self.pool, self.prop
        anchor = "closed components pass unchanged through composition and sum"
        for a in rng:
            for b in rng:
                for c in rng:
                    F, G = self.hom(a, b), self.hom(b, c)
                    table = p.table("c", F, G)
                    for i, f in enumerate(F):
                        mf = p.morphism(f)
                        for j, g in enumerate(G):
                            if p.intern(prop.compose(mf, p.morphism(g))) != table[i, j]:
                                return self.fail("inert-components", anchor, f=int(f), g=int(g))
        for a1 in rng:
            for b1 in rng:
                for a2 in range(self.n + 1 - a1):
                    for b2 in range(self.n + 1 - b1):
                        F, G = self.hom(a1, b1), self.hom(a2, b2)
                        table = p.table("s", F, G)
                        for i, f in enumerate(F):
                            mf = p.morphism(f)
                            for j, g in enumerate(G):
                                if p.intern(prop.monoidal_sum(mf, p.morphism(g))) != table[i, j]:
                                    return self.fail("inert-components", anchor,
                                                     f=int(f), g=int(g))
        self.report.add("inert-components", anchor, True)


def check_prop_axioms(prop: Prop, arity_bound: int = 3, size_bound: int | None = None) -> CheckReport:
    """Check the strict symmetric monoidal laws on every enumerated morphism.

    A law instance is included when every object it mentions, including
    sums of arities, is at most ``arity_bound``.  ``size_bound`` is passed
    through to ``enumerate_hom`` (the apex bound for cospans).
    """
    if not prop.can_enumerate():
        raise ValueError(f"{prop.name} cannot enumerate its hom-sets")
    return _PropLawChecker(prop, arity_bound, size_bound).run()


def check_presentation_functor(pres: PropPresentation, target: Prop, images) -> CheckReport:
    """Evaluate both sides of every relation in ``target`` and compare them."""
    report = CheckReport(f"presentation/{pres.name or 'anonymous'}->{target.name}", {})
    for name, g in pres.generators.items():
        img = images[name] if not callable(images) else images(g)
        ok = (target.dom(img), target.cod(img)) == (g.dom, g.cod)
        report.add(f"generator/{name}", "generator images have the declared arity", ok,
                   None if ok else {"image": target.render(img),
                                    "expected": f"{g.dom}->{g.cod}"})
    if not report.passed:
        return report
    for idx, rel in enumerate(pres.relations, 1):
        lhs = eval_prop_term(rel.lhs, target, images)
        rhs = eval_prop_term(rel.rhs, target, images)
        ok = target.equal(lhs, rhs)
        report.add(f"relation/{idx:02d}", f"relation {rel}", ok,
                   None if ok else {"lhs": target.render(lhs), "rhs": target.render(rhs)})
    return report
