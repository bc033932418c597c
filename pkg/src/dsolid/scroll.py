"""Exact construction and verification of quartic branch data on the scroll.

The scroll Y in P^n is the union of 2-planes over the degree-(n-2)
rational normal curve; it is parametrized by

    (u0, u1, s, a, b) -> (z_j = s u0^{n-2-j} u1^j  for j <= n-2,
                          z_{n-1} = a, z_n = b).

A quartic instance consists of n-2 distinct fiber points (none at (0:1)),
the induced linear form f, and a quadric Q whose restriction to the last
plane has symmetric rank exactly two.  The branch quartic is

    F = z0 z_{n-1} z_n f - Q^2,

and every verification below is a literal polynomial identity over Q; no
floating point is used anywhere (conic sample points may live in a real
quadratic extension).
"""

from __future__ import annotations

import functools
import json
import random
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .poly import Exponent, MultiPoly
from .qfield import QuadExt, eval_poly_at, sqrt_fraction

# parametrization variable order
U0, U1, S, A, B = range(5)


class InstanceError(ValueError):
    """Invalid roots or quadric for a quartic instance."""


class RidgeDegenerate(RuntimeError):
    """The quadric vanishes on the ridge line; cone-curve count excluded."""


Root = tuple[Fraction, Fraction]


def _norm_root(r) -> Root:
    p, q = r
    p, q = Fraction(p), Fraction(q)
    if p == 0 and q == 0:
        raise InstanceError("(0:0) is not a point")
    return (p, q)


def _proj_equal(r1: Root, r2: Root) -> bool:
    return r1[0] * r2[1] - r1[1] * r2[0] == 0


@dataclass(frozen=True)
class ScrollParam:
    """The standard parametrization of the scroll in P^n."""

    n: int

    @property
    def nvars(self) -> int:
        return self.n + 1

    def monomial_images(self) -> dict[int, tuple[Fraction, Exponent]]:
        n = self.n
        out: dict[int, tuple[Fraction, Exponent]] = {}
        for j in range(n - 1):
            exp = [0, 0, 0, 0, 0]
            exp[U0], exp[U1], exp[S] = n - 2 - j, j, 1
            out[j] = (Fraction(1), tuple(exp))
        out[n - 1] = (Fraction(1), (0, 0, 0, 1, 0))
        out[n] = (Fraction(1), (0, 0, 0, 0, 1))
        return out

    def compose(self, p: MultiPoly) -> MultiPoly:
        """p(z0..zn) pulled back to the (u0,u1,s,a,b) chart."""
        if p.nvars != self.nvars:
            raise InstanceError("polynomial does not live on the ambient space")
        return p.substitute_monomials(5, self.monomial_images())

    def fiber_images(self, lam: Root) -> dict[int, tuple[Fraction, Exponent]]:
        """Substitution onto the plane over a fiber point: variables (s,a,b)."""
        n = self.n
        p, q = _norm_root(lam)
        out: dict[int, tuple[Fraction, Exponent]] = {}
        for j in range(n - 1):
            out[j] = (p ** (n - 2 - j) * q**j, (1, 0, 0))
        out[n - 1] = (Fraction(1), (0, 1, 0))
        out[n] = (Fraction(1), (0, 0, 1))
        return out


def linear_form_from_roots(n: int, roots: list) -> MultiPoly:
    """The unique (up to scale) linear form in z0..z_{n-2} vanishing on the
    fibers over the given n-2 distinct points, none of which may be (0:1).

    Coefficients are read off the expanded binary form with those roots.
    """
    rs = [_norm_root(r) for r in roots]
    if len(rs) != n - 2:
        raise InstanceError(f"need exactly {n-2} roots, got {len(rs)}")
    for r in rs:
        if r[0] == 0:
            raise InstanceError("the point (0:1) is reserved for the splitting fiber")
    for i in range(len(rs)):
        for j in range(i + 1, len(rs)):
            if _proj_equal(rs[i], rs[j]):
                raise InstanceError(f"repeated root {rs[i]}")
    # product of (p_i u1 - q_i u0) over the roots, in variables (u0, u1)
    form = MultiPoly.const(2, 1)
    for p, q in rs:
        form = form * MultiPoly.from_terms(2, [((0, 1), p), ((1, 0), -q)])
    coeffs = {}
    for exp, c in form.terms.items():
        # u0^{n-2-j} u1^j corresponds to z_j
        j = exp[1]
        coeffs[j] = c
    out = MultiPoly.from_terms(
        n + 1, [(_unit_exp(n + 1, j), c) for j, c in coeffs.items()]
    )
    return out


def _unit_exp(nvars: int, j: int) -> Exponent:
    e = [0] * nvars
    e[j] = 1
    return tuple(e)


def ideal_member(p: MultiPoly, n: int) -> bool:
    """Membership in the scroll ideal: the pullback vanishes identically.

    Valid because the scroll is irreducible and the parametrization is
    dominant.  The input must be homogeneous.
    """
    if not p.is_homogeneous():
        raise InstanceError("ideal membership is only defined for homogeneous input")
    return ScrollParam(n).compose(p).is_zero()


def hankel_generators(n: int) -> list[MultiPoly]:
    """All 2x2 minors of the 2 x (n-2) catalecticant matrix of z0..z_{n-2}."""
    if n < 4:
        raise InstanceError(f"n must be at least 4, got {n}")
    nv = n + 1
    out = []
    for i in range(n - 2):
        for j in range(i + 1, n - 2):
            zi, zj = _unit_exp(nv, i), _unit_exp(nv, j)
            zi1, zj1 = _unit_exp(nv, i + 1), _unit_exp(nv, j + 1)
            minor = MultiPoly.from_terms(
                nv,
                [
                    (tuple(x + y for x, y in zip(zi, zj1)), 1),
                    (tuple(x + y for x, y in zip(zi1, zj)), -1),
                ],
            )
            out.append(minor)
    return out


def splitting_matrix(n: int, q: MultiPoly) -> list[list[Fraction]]:
    """Symmetric 3x3 matrix of Q restricted to the last plane
    (coordinates z_{n-2}, z_{n-1}, z_n)."""
    idxs = [n - 2, n - 1, n]
    m = [[Fraction(0)] * 3 for _ in range(3)]
    for r in range(3):
        for c in range(r, 3):
            e = [0] * (n + 1)
            e[idxs[r]] += 1
            e[idxs[c]] += 1
            v = q.coefficient(tuple(e))
            if r == c:
                m[r][r] = v
            else:
                m[r][c] = m[c][r] = v / 2
    return m


def _matrix_rank3(m: list[list[Fraction]]) -> int:
    det = (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )
    if det != 0:
        return 3
    for r in range(3):
        for c in range(3):
            r2, c2 = (r + 1) % 3, (c + 1) % 3
            if m[r][c] * m[r2][c2] - m[r][c2] * m[r2][c] != 0:
                return 2
    if any(m[r][c] != 0 for r in range(3) for c in range(3)):
        return 1
    return 0


@dataclass(frozen=True)
class QuarticInstance:
    """Roots, linear form, quadric and assembled quartic for one scroll."""

    n: int
    roots: tuple[Root, ...]
    f: MultiPoly
    q: MultiPoly
    big_f: MultiPoly


def build_instance(n: int, roots: list, q: MultiPoly) -> QuarticInstance:
    """Assemble F = z0 z_{n-1} z_n f - Q^2 after validating the quadric.

    The restriction of Q to the last plane must be a symmetric rank-2
    conic (rank 3 would make the splitting fiber irreducible; rank <= 1 a
    double line); Q must not vanish identically on the scroll.
    """
    f = linear_form_from_roots(n, roots)
    if q.nvars != n + 1:
        raise InstanceError("quadric does not live on the ambient space")
    if q.is_zero() or not q.is_homogeneous() or q.total_degree() != 2:
        raise InstanceError("Q must be a nonzero homogeneous quadric")
    if ideal_member(q, n):
        raise InstanceError("degenerate Q: vanishes identically on the scroll")
    rank = _matrix_rank3(splitting_matrix(n, q))
    if rank == 3:
        raise InstanceError("splitting conic has rank 3: the end fiber would not split")
    if rank <= 1:
        raise InstanceError("splitting conic degenerates to a double line (rank <= 1)")
    nv = n + 1
    z0zn1zn = MultiPoly.monomial(
        nv, tuple(a + b + c for a, b, c in zip(_unit_exp(nv, 0), _unit_exp(nv, n - 1), _unit_exp(nv, n)))
    )
    big_f = z0zn1zn * f - q * q
    assert big_f.is_homogeneous() and big_f.total_degree() == 4
    return QuarticInstance(n=n, roots=tuple(_norm_root(r) for r in roots), f=f, q=q, big_f=big_f)


def fiber_restrict(p: MultiPoly, n: int, lam: Root) -> MultiPoly:
    """Restriction of p to the plane over a fiber point, in variables (s,a,b)."""
    return p.substitute_monomials(3, ScrollParam(n).fiber_images(lam))


def double_conic_verify(inst: QuarticInstance, rng: random.Random | None = None) -> bool:
    """Tangency of the plane sections along conics.

    Every special fiber (the n-2 roots and the splitting fiber at (0:1))
    must satisfy F + Q^2 = 0 identically after restriction; a generic
    fiber must not be a perfect square (the residual is nonzero); both
    cone sections satisfy the same identity; the splitting conic has
    symmetric rank exactly two.
    """
    n = inst.n
    rng = rng or random.Random(0)
    specials = list(inst.roots) + [(Fraction(0), Fraction(1))]
    for lam in specials:
        fr = fiber_restrict(inst.big_f, n, lam)
        qr = fiber_restrict(inst.q, n, lam)
        if not (fr + qr * qr).is_zero():
            return False
    # generic fiber: the residual is z0 z_{n-1} z_n f, nonzero off the roots
    for _ in range(64):
        lam = (Fraction(1), Fraction(rng.randint(-50, 50)))
        if all(not _proj_equal(lam, r) for r in inst.roots):
            break
    else:
        raise RuntimeError("no generic fiber point found")
    fr = fiber_restrict(inst.big_f, n, lam)
    qr = fiber_restrict(inst.q, n, lam)
    if (fr + qr * qr).is_zero():
        return False
    # cone sections: z_{n-1} = 0 and z_n = 0
    for drop in (n - 1, n):
        images = ScrollParam(n).monomial_images()
        images = dict(images)
        images[drop] = (Fraction(0), (0, 0, 0, 0, 0))
        cf = inst.big_f.substitute_monomials(5, images)
        cq = inst.q.substitute_monomials(5, images)
        if not (cf + cq * cq).is_zero():
            return False
    return _matrix_rank3(splitting_matrix(n, inst.q)) == 2


def splitting_conic_rank(inst: QuarticInstance) -> int:
    return _matrix_rank3(splitting_matrix(inst.n, inst.q))


def double_curve_degree(
    inst: QuarticInstance, side: str, rng: random.Random | None = None, attempts: int = 12
) -> int:
    """Degree of the double curve on a cone section of the scroll.

    side 'n' is the cone z_{n-1} = 0, side 'n+1' the cone z_n = 0.  The
    curve {Q = 0} on the cone is intersected with a generic hyperplane by
    eliminating the fiber coordinates with a resultant; the count (with
    multiplicity) is the degree of the resulting binary form.
    """
    n = inst.n
    rng = rng or random.Random(1)
    if side not in ("n", "n+1"):
        raise InstanceError("side must be 'n' or 'n+1'")
    drop = n - 1 if side == "n" else n
    keep = n if side == "n" else n - 1
    ridge = _ridge_restriction(inst.q, n)
    if ridge.is_zero():
        raise RidgeDegenerate("Q contains the ridge line; degree count excluded")
    # pull Q to the cone chart (u0, u1, s, c): c is the kept last coordinate
    images: dict[int, tuple[Fraction, Exponent]] = {}
    for j in range(n - 1):
        images[j] = (Fraction(1), (n - 2 - j, j, 1, 0))
    images[drop] = (Fraction(0), (0, 0, 0, 0))
    images[keep] = (Fraction(1), (0, 0, 0, 1))
    qc = inst.q.substitute_monomials(4, images)
    # coefficients of s^2, s c, c^2 as binary forms in (u0, u1)
    spans = {2: {}, 1: {}, 0: {}}
    for exp, coef in qc.terms.items():
        spans[exp[2]][(exp[0], exp[1])] = coef
    aa = MultiPoly(2, dict(spans[2]))
    bb = MultiPoly(2, dict(spans[1]))
    cc = MultiPoly(2, dict(spans[0]))
    for _ in range(attempts):
        dd = MultiPoly.from_terms(
            2, [((n - 2 - j, j), rng.randint(-9, 9)) for j in range(n - 1)]
        )
        ee = MultiPoly.const(2, rng.randint(1, 9))
        # resultant of (A s^2 + B s c + C c^2, D s + E c) in (s, c)
        res = aa * ee * ee - bb * dd * ee + cc * dd * dd
        if not res.is_zero():
            if not res.is_homogeneous():
                raise RuntimeError("resultant lost homogeneity")
            return res.total_degree()
    raise RidgeDegenerate("no generic hyperplane found; intersection is degenerate")


def _ridge_restriction(q: MultiPoly, n: int) -> MultiPoly:
    """Q restricted to the ridge line z0 = .. = z_{n-2} = 0."""
    images: dict[int, tuple[Fraction, Exponent]] = {}
    for j in range(n - 1):
        images[j] = (Fraction(0), (0, 0))
    images[n - 1] = (Fraction(1), (1, 0))
    images[n] = (Fraction(1), (0, 1))
    return q.substitute_monomials(2, images)


class ProbeExcluded(ValueError):
    """The splitting fiber is excluded from the tangency probe."""


@functools.lru_cache(maxsize=32)
def _pullback_fiber_derivative(inst: "QuarticInstance") -> MultiPoly:
    """d/du1 of the quartic pulled back to the parametrization chart."""
    return ScrollParam(inst.n).compose(inst.big_f).derivative(U1)


def smoothness_probe(
    inst: QuarticInstance,
    root_index: int,
    samples: int = 8,
    rng: random.Random | None = None,
    max_attempts: int = 400,
) -> bool:
    """First-order transversality of the branch quartic along one double conic.

    At sample points of the conic over the root, the derivative of F along
    the fiber direction must not vanish; with a simple root it reduces to
    a nonzero constant times s^2 a b, so failures detect repeated roots.
    Sample points are exact, possibly in a quadratic extension; points on
    coordinate degeneracies are resampled.
    """
    n = inst.n
    rng = rng or random.Random(2)
    if not 0 <= root_index < len(inst.roots):
        raise ProbeExcluded("probe only runs over the simple tangency fibers")
    lam = inst.roots[root_index]
    p, qq = lam
    if p == 0:
        raise ProbeExcluded("the splitting fiber is excluded from the probe")
    # derivative of the pulled-back quartic along u1, evaluated at the fiber
    dbig = _pullback_fiber_derivative(inst)
    h = dbig.substitute_monomials(
        3,
        {
            U0: (p, (0, 0, 0)),
            U1: (qq, (0, 0, 0)),
            S: (Fraction(1), (1, 0, 0)),
            A: (Fraction(1), (0, 1, 0)),
            B: (Fraction(1), (0, 0, 1)),
        },
    )
    conic = fiber_restrict(inst.q, n, lam)  # in (s, a, b)
    got = 0
    for _ in range(max_attempts):
        if got >= samples:
            break
        t = Fraction(rng.randint(-40, 40), rng.randint(1, 7))
        if t == 0:
            continue
        # solve conic(1, t, b) = 0 for b
        line = conic.substitute_monomials(
            1, {0: (Fraction(1), (0,)), 1: (t, (0,)), 2: (Fraction(1), (1,))}
        )
        gamma = line.coefficient((2,))
        beta = line.coefficient((1,))
        alpha = line.coefficient((0,))
        points: list[Fraction | QuadExt] = []
        if gamma == 0:
            if beta == 0:
                continue
            points = [-alpha / beta]
        else:
            disc = beta * beta - 4 * gamma * alpha
            root = sqrt_fraction(disc)
            if isinstance(root, Fraction):
                points = [(-beta + root) / (2 * gamma), (-beta - root) / (2 * gamma)]
            else:
                inv = Fraction(1, 2) / gamma
                points = [
                    (root + (-beta)) * inv,
                    ((-1) * root + (-beta)) * inv,
                ]
        for b in points:
            if got >= samples:
                break
            bz = b.is_zero() if isinstance(b, QuadExt) else b == 0
            if bz:
                continue  # coordinate degeneracy: resample
            pt = [Fraction(1), t, b]
            check = eval_poly_at(conic, pt)
            cz = check.is_zero() if isinstance(check, QuadExt) else check == 0
            assert cz, "sample point is not on the conic"
            val = eval_poly_at(h, pt)
            vz = val.is_zero() if isinstance(val, QuadExt) else val == 0
            if vz:
                return False
            got += 1
    if got < samples:
        raise RuntimeError("could not collect enough conic sample points")
    return True


# -- instance generation and serialization ------------------------------------


def random_instance(n: int, rng: random.Random) -> QuarticInstance:
    """Seeded random instance with the splitting constraint built in."""
    for _ in range(200):
        vals = rng.sample(range(-60, 61), n - 2)
        roots = [(Fraction(1), Fraction(v)) for v in vals]
        # rank-2 restriction: product of two independent linear forms in the
        # last three coordinates, with both end squares present
        v = [rng.randint(-5, 5) for _ in range(3)]
        w = [rng.randint(-5, 5) for _ in range(3)]
        indep = any(v[i] * w[j] - v[j] * w[i] != 0 for i in range(3) for j in range(3))
        if not indep or v[1] * w[1] == 0 or v[2] * w[2] == 0:
            continue
        nv = n + 1
        last3 = [n - 2, n - 1, n]
        lin_v = MultiPoly.from_terms(nv, [(_unit_exp(nv, j), c) for j, c in zip(last3, v)])
        lin_w = MultiPoly.from_terms(nv, [(_unit_exp(nv, j), c) for j, c in zip(last3, w)])
        q = lin_v * lin_w
        extra = []
        for i in range(0, n - 2):
            for j in range(i, n + 1):
                c = rng.randint(-4, 4)
                if c:
                    e = [0] * nv
                    e[i] += 1
                    e[j] += 1
                    extra.append((tuple(e), c))
        q = q + MultiPoly.from_terms(nv, extra)
        try:
            return build_instance(n, roots, q)
        except InstanceError:
            continue
    raise RuntimeError("failed to generate a valid instance")


def instance_to_json(inst: QuarticInstance) -> dict:
    def poly_json(p: MultiPoly) -> dict[str, str]:
        return {
            ",".join(map(str, exp)): f"{c.numerator}/{c.denominator}"
            for exp, c in sorted(p.terms.items())
        }

    return {
        "n": inst.n,
        "roots": [[str(p), str(q)] for p, q in inst.roots],
        "Q": poly_json(inst.q),
        "f": poly_json(inst.f),
        "F": poly_json(inst.big_f),
    }


def instance_from_json(data: dict) -> QuarticInstance:
    n = int(data["n"])

    def poly_from(d: dict[str, str]) -> MultiPoly:
        terms = []
        for k, v in d.items():
            exp = tuple(int(x) for x in k.split(","))
            num, den = v.split("/")
            terms.append((exp, Fraction(int(num), int(den))))
        return MultiPoly.from_terms(n + 1, terms)

    roots = [(Fraction(p), Fraction(q)) for p, q in data["roots"]]
    inst = build_instance(n, roots, poly_from(data["Q"]))
    # round-trip integrity: the stored derived data must match exactly
    if poly_from(data["f"]) != inst.f or poly_from(data["F"]) != inst.big_f:
        raise InstanceError("stored derived polynomials do not match the rebuilt instance")
    return inst


def write_instance(inst: QuarticInstance, path: str | Path) -> None:
    Path(path).write_text(json.dumps(instance_to_json(inst), indent=1, sort_keys=True))


def read_instance(path: str | Path) -> QuarticInstance:
    return instance_from_json(json.loads(Path(path).read_text()))


# -- dimension formulas --------------------------------------------------------


@dataclass(frozen=True)
class ModuliRecord:
    n: int
    k: int
    h1_tangent_threefold: int
    h1_tangent_surface: int
    h0_anticanonical: int
    h1_anticanonical: int
    stratum_dim: int
    smallest_stratum_dim: int
    pencil_member_family_dim: int
    moduli_dim: int
    consistent: bool


def moduli_formulas(n: int, k: int) -> ModuliRecord:
    """Closed-form dimension bookkeeping for the family and its strata.

    Checks the internal identities: the member-family dimension n+4 drops
    by h0 of the anticanonical twist (one) to the moduli dimension n+3,
    and consecutive strata dimensions differ by two.
    """
    if n < 4:
        raise ValueError(f"n must be at least 4, got {n}")
    if not 2 <= k <= n:
        raise ValueError(f"stratum index k={k} outside 2..{n}")
    h1_theta_z = 7 * n - 15
    h1_theta_s = 4 * n - 6
    h0_antik = 1
    h1_antik = 2 * n - 8
    stratum = 3 * n - 2 * k - 2 if k < n else n - 1
    smallest = (n + 4) - 5
    family = n + 4
    moduli = n + 3
    consistent = (
        family - h0_antik == moduli
        and smallest == n - 1
        and all(
            (3 * n - 2 * kk - 2) - (3 * n - 2 * (kk + 1) - 2) == 2 for kk in range(2, n - 1)
        )
        # raw configuration strata drop by two as well
        and all(
            (3 * n - 2 * (kk - 2)) - (3 * n - 2 * (kk + 1 - 2)) == 2 for kk in range(2, n)
        )
    )
    return ModuliRecord(
        n=n,
        k=k,
        h1_tangent_threefold=h1_theta_z,
        h1_tangent_surface=h1_theta_s,
        h0_anticanonical=h0_antik,
        h1_anticanonical=h1_antik,
        stratum_dim=stratum,
        smallest_stratum_dim=smallest,
        pencil_member_family_dim=family,
        moduli_dim=moduli,
        consistent=consistent,
    )
