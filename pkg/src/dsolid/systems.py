"""Linear-system arithmetic on the blown-up surface S.

Riemann-Roch, greedy fixed-component stripping against the anticanonical
cycle, the movable-part invariants of the (n-2)-fold anticanonical system,
and the restriction table of the distinguished non-real half-bundle.  The
stripping fixpoint is order-independent (verified by the test suite, not
assumed).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .lattice import BlowupTower, DivisorClass, LatticeError


class StrippingDivergence(RuntimeError):
    """The negative-pairing fixpoint exceeded its multiplicity cap."""


@dataclass(frozen=True)
class StrippingResult:
    """Fixed multiplicities per cycle component plus the movable remainder."""

    fixed: dict[str, int]
    movable: DivisorClass

    def fixed_nonzero(self) -> dict[str, int]:
        return {k: v for k, v in self.fixed.items() if v}


@dataclass(frozen=True)
class HalfClass:
    """A class known to be divisible by two, together with its exact half."""

    double: DivisorClass
    half: DivisorClass

    def __post_init__(self) -> None:
        if self.half.scale(2) != self.double:
            raise LatticeError("half does not double to the stated class")

    @staticmethod
    def of(double: DivisorClass) -> "HalfClass":
        if any(c % 2 for c in double.coeffs):
            raise LatticeError("class is not divisible by two")
        return HalfClass(double, DivisorClass(double.basis, tuple(c // 2 for c in double.coeffs)))


def riemann_roch(tower: BlowupTower, cls: DivisorClass) -> int:
    """Euler characteristic 1 + (L.L - L.K)/2 of a line bundle class."""
    k = tower.canonical
    q = cls.dot(cls) - cls.dot(k)
    if q % 2:
        raise LatticeError("L.L - L.K is odd: class is not integral for this surface")
    return 1 + q // 2


def strip_fixed_components(
    cls: DivisorClass,
    components: dict[str, DivisorClass],
    order: list[str] | None = None,
    cap_factor: int = 4,
) -> StrippingResult:
    """Greedy negative-pairing fixpoint.

    While some component pairs negatively with the running class, add one
    copy of it to the fixed part and subtract.  ``order`` only changes the
    selection sequence; the fixpoint itself is order independent.  A
    per-component multiplicity cap of 4n (the cycle has 2(n-1) components)
    guards against divergent inputs.
    """
    names = order if order is not None else sorted(components)
    if set(names) != set(components):
        raise LatticeError("order must be a permutation of the component names")
    cap = cap_factor * (len(components) // 2 + 1)
    fixed = {nm: 0 for nm in components}
    current = cls
    while True:
        hit = None
        for nm in names:
            if current.dot(components[nm]) < 0:
                hit = nm
                break
        if hit is None:
            return StrippingResult(fixed, current)
        fixed[hit] += 1
        if fixed[hit] > cap:
            raise StrippingDivergence(
                f"component {hit} stripped more than {cap} times; input is not bounded below"
            )
        current = current - components[hit]


def anticanonical_fixed_part(tower: BlowupTower) -> dict[str, int]:
    """Expected fixed multiplicities of the (n-2)-fold anticanonical system."""
    n = tower.n
    out = {f"C{i}": 0 for i in range(1, n)}
    out.update({f"Cb{i}": 0 for i in range(1, n)})
    out["C1"] = out["Cb1"] = n - 3
    for i in range(2, n - 1):
        out[f"C{i}"] = out[f"Cb{i}"] = n - 1 - i
    return out


def pluri_anticanonical_stripping(tower: BlowupTower, order: list[str] | None = None) -> StrippingResult:
    cls = (-tower.canonical).scale(tower.n - 2)
    return strip_fixed_components(cls, tower.cycle_classes(), order=order)


def confluence_orders(tower: BlowupTower, shuffles: int, seed: int = 0) -> bool:
    """Re-run the pluri-anticanonical stripping under random orders; all agree."""
    rng = random.Random(seed)
    ref = pluri_anticanonical_stripping(tower)
    names = tower.cycle_names()
    for _ in range(shuffles):
        order = names[:]
        rng.shuffle(order)
        res = pluri_anticanonical_stripping(tower, order=order)
        if res.fixed != ref.fixed or res.movable != ref.movable:
            return False
    return True


@dataclass(frozen=True)
class MovableInvariants:
    square: int
    degree_on_c2: int
    arithmetic_genus: int
    component_degrees: tuple[int, ...]


def movable_invariants(tower: BlowupTower) -> MovableInvariants:
    """Numerical invariants of the movable part of the (n-2)-fold system."""
    res = pluri_anticanonical_stripping(tower)
    mov = res.movable
    k = tower.canonical
    square = mov.dot(mov)
    pa = 1 + Fraction(square + mov.dot(k), 2)
    assert pa.denominator == 1
    degs = tuple(mov.dot(tower.tracked[f"C{i}"]) for i in range(1, tower.n))
    return MovableInvariants(square, mov.dot(tower.tracked["C2"]), int(pa), degs)


def alpha_restriction(tower: BlowupTower, j: int) -> DivisorClass:
    """Restriction to S of the j-th degree-two generator: e_j - eb_j."""
    return tower.basis.unit(f"e{j}") - tower.basis.unit(f"eb{j}")


def half_bundle_on_surface(tower: BlowupTower, swap_first_two: bool = False) -> HalfClass:
    """The distinguished non-real half of the (n-2)-fold system, restricted to S.

    Its double is (n-2)(-K) minus the weighted alpha combination with
    weight n-2 on the first generator (or the second when swapped) and
    n-4 on all others.
    """
    n = tower.n
    special = 2 if swap_first_two else 1
    alpha = tower.basis.zero()
    for j in range(1, n + 1):
        w = n - 2 if j == special else n - 4
        alpha = alpha + alpha_restriction(tower, j).scale(w)
    double = (-tower.canonical).scale(n - 2) - alpha
    return HalfClass.of(double)


def m_restriction_table(tower: BlowupTower) -> dict[str, int]:
    """Degrees of the half-bundle on every cycle component.

    Expected: -(n-2)(n-3) on C1, 0 on middle C_i, 1 on C_{n-1};
    0 on barred components except n-3 on Cb_{n-1}.
    """
    m = half_bundle_on_surface(tower).half
    return {nm: m.dot(c) for nm, c in tower.cycle_classes().items()}


def expected_m_restrictions(n: int) -> dict[str, int]:
    out = {}
    for i in range(1, n):
        out[f"C{i}"] = -(n - 2) * (n - 3) if i == 1 else (1 if i == n - 1 else 0)
        out[f"Cb{i}"] = n - 3 if i == n - 1 else 0
    return out


def half_bundle_fixed_part(tower: BlowupTower) -> StrippingResult:
    """Stripping fixpoint of the half-bundle restriction."""
    return strip_fixed_components(half_bundle_on_surface(tower).half, tower.cycle_classes())


def expected_half_bundle_fixed(n: int) -> dict[str, int]:
    """Lower bound for the half-bundle fixed part: unbarred components only."""
    out = {"C1": n - 3}
    for i in range(2, n - 1):
        out[f"C{i}"] = n - 1 - i
    return out


def degree_one_restriction(tower: BlowupTower, i: int) -> HalfClass:
    """Class on S cut by the i-th degree-one divisor containing C1.

    Computed as half of -K minus the signed alpha sum whose single flipped
    sign sits at position n-i+1 (all plus signs for i = n-1).
    """
    n = tower.n
    if not 1 <= i <= n - 1:
        raise LatticeError(f"index {i} outside 1..{n-1}")
    acc = -tower.canonical
    for j in range(1, n + 1):
        eps = -1 if (i <= n - 2 and j == n - i + 1) else 1
        acc = acc - alpha_restriction(tower, j).scale(eps)
    return HalfClass.of(acc)


def cycle_arcs(tower: BlowupTower) -> dict[tuple[int, ...], list[tuple[str, ...]]]:
    """All proper contiguous arcs of the cycle, keyed by their class vector."""
    names = tower.cycle_names()
    m = len(names)
    out: dict[tuple[int, ...], list[tuple[str, ...]]] = {}
    for start in range(m):
        total = tower.basis.zero()
        members: list[str] = []
        for step in range(m - 1):
            nm = names[(start + step) % m]
            total = total + tower.tracked[nm]
            members.append(nm)
            out.setdefault(total.coeffs, []).append(tuple(members))
    return out


def half_cycle_chern_check(tower: BlowupTower, i: int) -> tuple[bool, tuple[str, ...]]:
    """Match the i-th degree-one class against a contiguous half of the cycle.

    Returns (found, arc).  The matching arc is located by exhaustive search
    and must contain C1; no orientation is guessed.
    """
    target = degree_one_restriction(tower, i).half
    arcs = cycle_arcs(tower).get(target.coeffs, [])
    with_c1 = [a for a in arcs if "C1" in a]
    if not with_c1:
        return False, ()
    return True, with_c1[0]
