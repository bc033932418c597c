"""Incidence model of the resolved threefold and its pairing table.

The space carries a pencil fibration with parameter line Lambda and a
cylinder E of 2(n-1) exceptional components E_1..E_{n-1}, Eb_1..Eb_{n-1}
glued along seam curves; 2(n-1) ordinary double points sit on the seams
and are resolved by fixed small-resolution choices.  Intersection theory
is reduced to an integer pairing between divisor symbols

    T (the pencil pullback), E_j, Eb_j

and curve symbols

    C[i,j], Cb[i,j]   pencil-fiber sections of the components,
    G[i], Gb[i]       seam curves,
    D[i], Db[i]       small-resolution exceptional curves,
    L[i]              fixed lines of the fibration.

Entries follow from transversality counts plus normal-bundle degrees; the
latter are solved as an integer linear system from projection-formula
constraints and a small anchor set.  Completion must be unique and
integral; anything else is a hard error.
"""

from __future__ import annotations

import functools
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .axioms import AxiomRegistry
from .lattice import build_surface, anticanonical_degree

Curve = tuple  # ("C", i, j) | ("Cb", i, j) | ("G", i) | ("Gb", i) | ("D", i) | ("Db", i) | ("L", i)


class CompletionError(RuntimeError):
    """Pairing-table completion failed (inconsistent or non-unique system)."""


def curve_name(c: Curve) -> str:
    kind = c[0]
    if kind in ("C", "Cb"):
        return f"{kind}[{c[1]},{c[2]}]"
    return f"{kind}[{c[1]}]"


def conjugate_curve(c: Curve) -> Curve:
    kind = c[0]
    if kind == "L":
        return c
    flip = {"C": "Cb", "Cb": "C", "G": "Gb", "Gb": "G", "D": "Db", "Db": "D"}
    return (flip[kind],) + c[1:]


def conjugate_divisor(d: str) -> str:
    if d == "T":
        return "T"
    if d.startswith("Eb"):
        return "E" + d[2:]
    if d.startswith("E"):
        return "Eb" + d[1:]
    if d.startswith("Sp"):
        return "Sm" + d[2:]
    if d.startswith("Sm"):
        return "Sp" + d[2:]
    raise ValueError(d)


@dataclass(frozen=True)
class OdpPoint:
    """An ordinary double point on a seam: four incident divisors, one blown pair."""

    name: str
    fiber: int
    seam: Curve
    divisors: tuple[str, str, str, str]
    blown_pair: tuple[str, str]

    @property
    def exceptional(self) -> Curve:
        return ("D", self.fiber) if self.name.startswith("p") and not self.name.startswith("pb") else ("Db", self.fiber)


@dataclass
class IncidenceComplex:
    """Symbols, containments and transversal meets of the resolved threefold."""

    n: int
    divisors: list[str] = field(default_factory=list)
    curves: list[Curve] = field(default_factory=list)
    odps: list[OdpPoint] = field(default_factory=list)
    # per exceptional divisor: blown points as (fiber, seam-side, odp name)
    blown: dict[str, list[tuple[int, str, str]]] = field(default_factory=dict)
    # anticanonical degrees of the downstairs cycle components, keyed by j
    section_rhs: dict[str, int] = field(default_factory=dict)

    # -- structure ----------------------------------------------------------

    def exceptional_divisors(self) -> list[str]:
        n = self.n
        return [f"E{j}" for j in range(1, n)] + [f"Eb{j}" for j in range(1, n)]

    def neighbors(self, div: str) -> tuple[str, str]:
        """(minus-seam neighbor, plus-seam neighbor) around the cylinder."""
        n = self.n
        side = "Eb" if div.startswith("Eb") else "E"
        j = int(div[len(side):])
        other = "E" if side == "Eb" else "Eb"
        minus = f"{side}{j-1}" if j > 1 else f"{other}{n-1}"
        plus = f"{side}{j+1}" if j < n - 1 else f"{other}1"
        return minus, plus

    def pic_basis(self, div: str) -> list[str]:
        return ["s", "f"] + [f"d:{name}" for _, _, name in self.blown[div]]

    def home(self, c: Curve) -> str | None:
        """The exceptional divisor containing the curve, if any."""
        kind = c[0]
        n = self.n
        if kind == "C":
            return f"E{c[2]}"
        if kind == "Cb":
            return f"Eb{c[2]}"
        if kind in ("G", "Gb"):
            return None  # seams live in two components; handled separately
        if kind == "D":
            return f"E{c[1]}" if c[1] <= n - 2 else "Eb1"
        if kind == "Db":
            return f"Eb{c[1]}" if c[1] <= n - 2 else "E1"
        if kind == "L":
            return None
        raise ValueError(c)

    def seam_hosts(self, c: Curve) -> tuple[str, str]:
        """Both components containing a seam curve."""
        n = self.n
        kind, i = c
        side = "E" if kind == "G" else "Eb"
        other = "Eb" if kind == "G" else "E"
        a = f"{side}{i}"
        b = f"{side}{i+1}" if i < n - 1 else f"{other}1"
        return a, b

    def curve_class(self, div: str, c: Curve) -> dict[str, int]:
        """Class of a contained curve in the Picard basis of ``div``."""
        kind = c[0]
        cls = {}
        if kind in ("C", "Cb"):
            cls["s"] = 1
            for fiber, _, name in self.blown[div]:
                if fiber == c[1]:
                    cls[f"d:{name}"] = -1
            return cls
        if kind in ("G", "Gb"):
            cls["f"] = 1
            for _, _, name in self.blown[div]:
                odp = next(o for o in self.odps if o.name == name)
                if odp.seam == c:
                    cls[f"d:{name}"] = -1
            return cls
        if kind in ("D", "Db"):
            odp = next(o for o in self.odps if o.exceptional == c)
            return {f"d:{odp.name}": 1}
        raise ValueError(c)

    def meets(self, c: Curve) -> dict[str, int]:
        """Transversal meeting counts with exceptional divisors not containing c."""
        n = self.n
        kind = c[0]
        if kind in ("C", "Cb"):
            i, j = c[1], c[2]
            div = self.home(c)
            mn, pl = self.neighbors(div)
            out = {}
            blocked_minus = any(f == i and side == "minus" for f, side, _ in self.blown[div])
            blocked_plus = any(f == i and side == "plus" for f, side, _ in self.blown[div])
            if not blocked_minus:
                out[mn] = 1
            if not blocked_plus:
                out[pl] = 1
            return out
        if kind in ("G", "Gb"):
            return {}
        if kind in ("D", "Db"):
            odp = next(o for o in self.odps if o.exceptional == c)
            others = [d for d in odp.divisors if d not in odp.blown_pair]
            return {d: 1 for d in others if d in self.blown}  # only E/Eb enter the table
        if kind == "L":
            i = c[1]
            return {f"E{i}": 1, f"Eb{i}": 1}
        raise ValueError(c)

    def is_contracted(self, c: Curve) -> bool:
        """True iff the blowdown to the original threefold contracts the curve."""
        return c[0] in ("G", "Gb", "D", "Db")

    def t_degree(self, c: Curve) -> int:
        """Degree of the pencil pullback T on the curve: 1 on seams, 0 in fibers."""
        return 1 if c[0] in ("G", "Gb") else 0

    def fiber_cycle(self, i: int) -> list[Curve]:
        """Cycle of fiber curves over the i-th reducible pencil member."""
        n = self.n
        nodes: list[Curve] = []
        for j in range(1, n):
            nodes.append(("C", i, j))
            if j == i:
                nodes.append(("D", i))
        for j in range(1, n):
            nodes.append(("Cb", i, j))
            if j == i:
                nodes.append(("Db", i))
        return nodes

    def generic_fiber_index(self, div: str) -> int:
        blownf = {f for f, _, _ in self.blown[div]}
        return next(i for i in range(1, self.n) if i not in blownf)


def build_incidence(n: int) -> IncidenceComplex:
    """Generate divisors, curves, ODP records and meeting data for given n."""
    if n < 4:
        raise ValueError(f"n must be at least 4, got {n}")
    cx = IncidenceComplex(n=n)
    es = [f"E{j}" for j in range(1, n)]
    ebs = [f"Eb{j}" for j in range(1, n)]
    cx.divisors = ["T"] + es + ebs + [f"Sp{i}" for i in range(1, n)] + [f"Sm{i}" for i in range(1, n)]

    for i in range(1, n):
        plus_div = f"E{i+1}" if i < n - 1 else "Eb1"
        pair = (f"Sp{i}", f"E{i}") if i <= n - 2 else (f"Sm{n-1}", "Eb1")
        cx.odps.append(
            OdpPoint(f"p{i}", i, ("G", i), (f"Sp{i}", f"Sm{i}", f"E{i}", plus_div), pair)
        )
        plus_div_b = f"Eb{i+1}" if i < n - 1 else "E1"
        pair_b = (f"Sm{i}", f"Eb{i}") if i <= n - 2 else (f"Sp{n-1}", "E1")
        cx.odps.append(
            OdpPoint(f"pb{i}", i, ("Gb", i), (f"Sm{i}", f"Sp{i}", f"Eb{i}", plus_div_b), pair_b)
        )

    cx.blown = {d: [] for d in es + ebs}
    for odp in cx.odps:
        target = odp.blown_pair[1]
        # position of the ODP on the blown component: its own seam side
        a, b = cx.seam_hosts(odp.seam)
        side = "plus" if target == a else "minus"
        cx.blown[target].append((odp.fiber, side, odp.name))

    for i in range(1, n):
        for j in range(1, n):
            cx.curves.append(("C", i, j))
            cx.curves.append(("Cb", i, j))
        cx.curves.append(("G", i))
        cx.curves.append(("Gb", i))
        cx.curves.append(("D", i))
        cx.curves.append(("Db", i))
        cx.curves.append(("L", i))

    tower = build_surface(n)
    for j in range(1, n):
        cx.section_rhs[f"C{j}"] = anticanonical_degree(tower, f"C{j}")
        cx.section_rhs[f"Cb{j}"] = anticanonical_degree(tower, f"Cb{j}")
    return cx


@dataclass
class PairingTable:
    """Completed integer pairing (divisor symbol x curve symbol) with provenance."""

    complex: IncidenceComplex
    entries: dict[tuple[str, Curve], int] = field(default_factory=dict)
    provenance: dict[tuple[str, Curve], str] = field(default_factory=dict)
    nu: dict[tuple[str, str], int] = field(default_factory=dict)

    def value(self, div: str, c: Curve) -> int:
        return self.entries[(div, c)]

    def degree(self, coeffs: dict[str, int | Fraction], c: Curve) -> Fraction:
        """Degree of a formal divisor combination on a curve."""
        total = Fraction(0)
        for d, co in coeffs.items():
            if co:
                total += Fraction(co) * self.entries[(d, c)]
        return total

    def section_self_intersection(self, c: Curve) -> int:
        """(c^2) inside the degree-one surface through c, via the cross rule."""
        return self.entries[(self.complex.home(c), c)]

    def to_json(self) -> dict:
        return {
            "n": self.complex.n,
            "entries": {
                f"{d}|{curve_name(c)}": v for (d, c), v in sorted(self.entries.items(), key=repr)
            },
            "provenance": {
                f"{d}|{curve_name(c)}": p
                for (d, c), p in sorted(self.provenance.items(), key=repr)
            },
        }


def _anchor_equations(cx: IncidenceComplex) -> list[tuple[str, dict[tuple[str, str], int], int]]:
    """Anchor constraints on normal-bundle degrees.

    The two-point component E1 pins its full ruling data (degree 1-n on
    the full fiber class, -1 on its first exceptional curve, 0 on both
    seams); middle components pin their exceptional curve and strict
    section at -1; the untouched end component pins its section ruling at
    -1.  The second end-seam value is deliberately left to the solver and
    reported (see the seam-anchor flag).
    """
    n = cx.n
    eqs = []
    p1 = next(name for f, side, name in cx.blown["E1"] if (f, side) == (1, "plus"))
    pb = next(name for f, side, name in cx.blown["E1"] if side == "minus")
    eqs.append(("anchor E1 full fiber", {("E1", "s"): 1}, 1 - n))
    eqs.append(("anchor E1 first exceptional", {("E1", f"d:{p1}"): 1}, -1))
    eqs.append(("anchor E1 plus seam", {("E1", "f"): 1, ("E1", f"d:{p1}"): -1}, 0))
    eqs.append(("anchor E1 minus seam", {("E1", "f"): 1, ("E1", f"d:{pb}"): -1}, 0))
    for i in range(2, n - 1):
        d = next(name for _, _, name in cx.blown[f"E{i}"])
        eqs.append((f"anchor E{i} exceptional", {(f"E{i}", f"d:{d}"): 1}, -1))
        eqs.append(
            (f"anchor E{i} strict section", {(f"E{i}", "s"): 1, (f"E{i}", f"d:{d}"): -1}, -1)
        )
    eqs.append((f"anchor E{n-1} section", {(f"E{n-1}", "s"): 1}, -1))
    # conjugate side mirrors by the real structure (p_i <-> pb_i)
    def conj_sym(b: str) -> str:
        if not b.startswith("d:"):
            return b
        name = b[2:]
        return "d:p" + name[2:] if name.startswith("pb") else "d:pb" + name[1:]

    mirrored = []
    for label, lhs, rhs in eqs:
        mlhs = {(conjugate_divisor(d), conj_sym(b)): c for (d, b), c in lhs.items()}
        mirrored.append((label + " (conj)", mlhs, rhs))
    return eqs + mirrored


def _projection_equations(cx: IncidenceComplex) -> list[tuple[str, dict[tuple[str, str], int], int]]:
    """Pullback-degree constraints for every tracked curve.

    Contracted curves pair to zero against the pulled-back pencil class
    T + sum(E) + sum(Eb); fiber sections pair to the anticanonical degree
    of their image component.
    """
    eqs = []
    for c in cx.curves:
        if c[0] == "L":
            continue  # lines meet the cylinder transversally; no unknowns involved
        lhs: dict[tuple[str, str], int] = {}
        const = cx.t_degree(c)
        if c[0] in ("G", "Gb"):
            a, b = cx.seam_hosts(c)
            for div in (a, b):
                for sym, coeff in cx.curve_class(div, c).items():
                    lhs[(div, sym)] = lhs.get((div, sym), 0) + coeff
        else:
            div = cx.home(c)
            for sym, coeff in cx.curve_class(div, c).items():
                lhs[(div, sym)] = lhs.get((div, sym), 0) + coeff
            const += sum(cx.meets(c).values())
        if c[0] in ("C", "Cb"):
            rhs = cx.section_rhs[("C" if c[0] == "C" else "Cb") + str(c[2])]
        else:
            rhs = 0
        eqs.append((f"projection {curve_name(c)}", lhs, rhs - const))
    return eqs


def _solve(
    unknowns: list[tuple[str, str]],
    eqs: list[tuple[str, dict[tuple[str, str], int], int]],
) -> dict[tuple[str, str], int]:
    """Gaussian elimination over Q with uniqueness and integrality checks."""
    index = {u: k for k, u in enumerate(unknowns)}
    rows: list[list[Fraction]] = []
    labels: list[str] = []
    for label, lhs, rhs in eqs:
        row = [Fraction(0)] * (len(unknowns) + 1)
        for u, c in lhs.items():
            row[index[u]] += c
        row[-1] = Fraction(rhs)
        rows.append(row)
        labels.append(label)
    m = len(unknowns)
    pivots: dict[int, int] = {}
    r = 0
    for col in range(m):
        piv = next((k for k in range(r, len(rows)) if rows[k][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        labels[r], labels[piv] = labels[piv], labels[r]
        inv = 1 / rows[r][col]
        rows[r] = [x * inv for x in rows[r]]
        for k in range(len(rows)):
            if k != r and rows[k][col] != 0:
                f = rows[k][col]
                rows[k] = [x - f * y for x, y in zip(rows[k], rows[r])]
        pivots[col] = r
        r += 1
    bad = [labels[k] for k in range(r, len(rows)) if rows[k][-1] != 0]
    if bad:
        raise CompletionError(f"inconsistent constraints: {bad}")
    free = [unknowns[c] for c in range(m) if c not in pivots]
    if free:
        raise CompletionError(f"under-determined completion; free unknowns: {free}")
    out = {}
    for col, rr in pivots.items():
        v = rows[rr][-1]
        if v.denominator != 1:
            raise CompletionError(f"non-integral solution for {unknowns[col]}: {v}")
        out[unknowns[col]] = int(v)
    return out


def complete_pairings(cx: IncidenceComplex, shuffle_seed: int | None = None) -> PairingTable:
    """Solve all pairings from anchors, transversality and projection constraints.

    The completed table is unique; permuting the constraint order (via
    ``shuffle_seed``) must not change it.
    """
    unknowns = [
        (div, sym) for div in cx.exceptional_divisors() for sym in cx.pic_basis(div)
    ]
    eqs = _anchor_equations(cx) + _projection_equations(cx)
    # drop duplicate rows (parallel fibers impose literally identical constraints)
    seen: set = set()
    unique_eqs = []
    for label, lhs, rhs in eqs:
        key = (frozenset(lhs.items()), rhs)
        if key not in seen:
            seen.add(key)
            unique_eqs.append((label, lhs, rhs))
    eqs = unique_eqs
    if shuffle_seed is not None:
        rng = random.Random(shuffle_seed)
        rng.shuffle(eqs)
    nu = _solve(unknowns, eqs)

    table = PairingTable(complex=cx, nu=nu)
    anchored_cells = _anchored_cells(cx)
    for c in cx.curves:
        homes: list[str] = []
        if c[0] in ("G", "Gb"):
            homes = list(cx.seam_hosts(c))
        elif cx.home(c) is not None:
            homes = [cx.home(c)]
        meet = cx.meets(c)
        for div in ["T"] + cx.exceptional_divisors():
            key = (div, c)
            if div == "T":
                table.entries[key] = cx.t_degree(c)
                table.provenance[key] = "anchored"
            elif div in homes:
                val = sum(co * nu[(div, sym)] for sym, co in cx.curve_class(div, c).items())
                table.entries[key] = val
                table.provenance[key] = "anchored" if key in anchored_cells else "derived"
            elif div in meet:
                table.entries[key] = meet[div]
                table.provenance[key] = "inferred"
            else:
                table.entries[key] = 0
                table.provenance[key] = "inferred"
    _verify_equivariance(table)
    return table


def _anchored_cells(cx: IncidenceComplex) -> set[tuple[str, Curve]]:
    n = cx.n
    cells: set[tuple[str, Curve]] = set()
    for i in range(2, n - 1):
        cells.add((f"E{i}", ("D", i)))
        cells.add((f"E{i}", ("C", i, i)))
        cells.add((f"Eb{i}", ("Db", i)))
        cells.add((f"Eb{i}", ("Cb", i, i)))
    for dv, dcurve in (("E1", ("D", 1)), ("Eb1", ("Db", 1))):
        cells.add((dv, dcurve))
    cells.add(("E1", ("G", 1)))
    cells.add(("E1", ("Gb", n - 1)))
    cells.add(("Eb1", ("Gb", 1)))
    cells.add(("Eb1", ("G", n - 1)))
    cells.add((f"E{n-1}", ("C", n - 1, n - 1)))
    cells.add((f"Eb{n-1}", ("Cb", n - 1, n - 1)))
    return cells


def _verify_equivariance(table: PairingTable) -> None:
    cx = table.complex
    for (div, c), v in table.entries.items():
        vv = table.entries[(conjugate_divisor(div), conjugate_curve(c))]
        if v != vv:
            raise CompletionError(f"conjugation equivariance fails at ({div},{curve_name(c)})")


@functools.lru_cache(maxsize=None)
def completed_table(n: int) -> PairingTable:
    """Cached incidence complex + completed pairing table for a given n."""
    return complete_pairings(build_incidence(n))


def seam_anchor_resolution(table: PairingTable) -> dict:
    """Resolved value of the ambiguous end-seam anchor.

    The end seam G[n-1] lies in E_{n-1} and Eb_1; only one of the two
    normal degrees is pinned by the written anchors.  The solver's value
    on the E_{n-1} side is reported, together with whether reading the
    ambiguous anchor as (E_{n-1}, G[n-1]) = -1 is consistent.
    """
    n = table.complex.n
    solved = table.value(f"E{n-1}", ("G", n - 1))
    return {
        "cell": f"E{n-1}|G[{n-1}]",
        "solved": solved,
        "literal_reading_consistent": solved == -1,
        "other_side": table.value("Eb1", ("G", n - 1)),
    }


# ----------------------------------------------------------------------------
# Formal bundle expressions on the resolved threefold
# ----------------------------------------------------------------------------


@dataclass(frozen=True)
class BundleExpression:
    """Formal rational combination of divisor symbols on a named stage."""

    stage: str
    coeffs: dict[str, Fraction]

    @staticmethod
    def make(stage: str, **coeffs: int | Fraction) -> "BundleExpression":
        return BundleExpression(stage, {k: Fraction(v) for k, v in coeffs.items() if v})

    def __add__(self, other: "BundleExpression") -> "BundleExpression":
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, Fraction(0)) + v
            if out[k] == 0:
                del out[k]
        return BundleExpression(self.stage, out)

    def __sub__(self, other: "BundleExpression") -> "BundleExpression":
        return self + other.scale(-1)

    def scale(self, c: int | Fraction) -> "BundleExpression":
        c = Fraction(c)
        return BundleExpression(self.stage, {k: c * v for k, v in self.coeffs.items() if c * v})

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, BundleExpression)
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.stage, frozenset(self.coeffs.items())))

    def diff(self, other: "BundleExpression") -> dict[str, Fraction]:
        keys = set(self.coeffs) | set(other.coeffs)
        return {
            k: self.coeffs.get(k, Fraction(0)) - other.coeffs.get(k, Fraction(0))
            for k in keys
            if self.coeffs.get(k, Fraction(0)) != other.coeffs.get(k, Fraction(0))
        }


def adjusted_bundle(n: int) -> BundleExpression:
    """The adjusted pluri-anticanonical bundle on the resolved space.

    Written directly over T and the cylinder components: (n-2)T + (E1+Eb1)
    + sum_{j>=2} (j-1)(E_j + Eb_j).
    """
    co: dict[str, int] = {"T": n - 2, "E1": 1, "Eb1": 1}
    for j in range(2, n):
        co[f"E{j}"] = j - 1
        co[f"Eb{j}"] = j - 1
    return BundleExpression.make("Z1", **co)


def adjusted_bundle_from_definition(n: int) -> BundleExpression:
    """Same bundle from its definition: (n-2) mu*F minus the fixed multiplicities,
    with mu*F expanded as T + sum of all cylinder components."""
    co: dict[str, Fraction] = {"T": Fraction(n - 2)}
    for j in range(1, n):
        co[f"E{j}"] = Fraction(n - 2)
        co[f"Eb{j}"] = Fraction(n - 2)
    expr = BundleExpression("Z1", co)
    sub: dict[str, int] = {"E1": n - 3, "Eb1": n - 3}
    for j in range(2, n - 1):
        sub[f"E{j}"] = n - 1 - j
        sub[f"Eb{j}"] = n - 1 - j
    return expr - BundleExpression.make("Z1", **sub)


def kernel_bundle(n: int) -> BundleExpression:
    """The kernel of restriction to the pencil members plus the cylinder."""
    co = {}
    for i in range(3, n):
        co[f"E{i}"] = i - 2
        co[f"Eb{i}"] = i - 2
    return BundleExpression.make("Z1", **co)


# ----------------------------------------------------------------------------
# Verification operations
# ----------------------------------------------------------------------------


def expected_cylinder_tables(n: int) -> dict[str, dict[int, int]]:
    return {
        "C": {i: (0 if i in (1, 2, n - 1) else -1) for i in range(1, n)},
        "D": {i: (0 if i == 1 else (n - 3 if i == n - 1 else 1)) for i in range(1, n)},
        "G": {i: (n - 2 - i if i <= n - 2 else 0) for i in range(1, n)},
    }


def cylinder_tables_verify(table: PairingTable) -> tuple[dict[str, dict[int, tuple[int, int]]], bool]:
    """Reproduce the three degree tables of the adjusted bundle on the cylinder.

    Returns ({'C': {i: (computed, expected)}, 'D': ..., 'G': ...}, all_match);
    the bundle expression identity (direct form vs definition) is verified
    first as a formal vector equality.
    """
    cx = table.complex
    n = cx.n
    l1 = adjusted_bundle(n)
    if adjusted_bundle_from_definition(n) != l1:
        raise CompletionError("adjusted bundle: definition and direct form disagree")
    exp = expected_cylinder_tables(n)
    out: dict[str, dict[int, tuple[int, int]]] = {"C": {}, "D": {}, "G": {}}
    ok = True
    for i in range(1, n):
        for kind, curve in (("C", ("C", i, i)), ("D", ("D", i)), ("G", ("G", i))):
            got = int(table.degree(l1.coeffs, curve))
            gotb = int(table.degree(l1.coeffs, conjugate_curve(curve)))
            want = exp[kind][i]
            out[kind][i] = (got, want)
            if got != want or gotb != want:
                ok = False
    return out, ok


def divisor_trivial(table: PairingTable, expr: BundleExpression, div: str) -> bool:
    """True iff the expression has degree zero on every curve inside ``div``."""
    cx = table.complex
    for c in cx.curves:
        inside = cx.home(c) == div or (c[0] in ("G", "Gb") and div in cx.seam_hosts(c))
        if inside and table.degree(expr.coeffs, c) != 0:
            return False
    return True


def triviality_check(table: PairingTable) -> bool:
    """Adjusted bundle is trivial on both end components of the cylinder."""
    n = table.complex.n
    l1 = adjusted_bundle(n)
    return divisor_trivial(table, l1, f"E{n-1}") and divisor_trivial(table, l1, f"Eb{n-1}")


def cascade_schedule(n: int) -> list[tuple[int, int]]:
    """Subtraction order for the kernel bundle: sweep r handles components
    n-r .. n-1, ascending, for r = 1 .. n-3."""
    steps = []
    for r in range(1, n - 2):
        for j in range(n - r, n):
            steps.append((r, j))
    return steps


def cascade_precondition_check(
    table: PairingTable, expr: BundleExpression | None = None
) -> tuple[bool, list[tuple[int, int, int]]]:
    """Replay the kernel-bundle subtraction schedule.

    At each step the running expression must have degree -1 on the generic
    section ruling of the target component (the arithmetic forcing the
    stepwise vanishing).  Returns (ok, [(sweep, target, degree), ...]).
    """
    cx = table.complex
    n = cx.n
    current = expr if expr is not None else kernel_bundle(n)
    trace = []
    ok = True
    for r, j in cascade_schedule(n):
        gen = cx.generic_fiber_index(f"E{j}")
        deg = table.degree(current.coeffs, ("C", gen, j))
        degb = table.degree(current.coeffs, ("Cb", gen, j))
        trace.append((r, j, int(deg)))
        if deg != -1 or degb != -1:
            ok = False
        current = current - BundleExpression.make("Z1", **{f"E{j}": 1, f"Eb{j}": 1})
    if any(current.coeffs.values()):
        ok = False
    return ok, trace


@dataclass(frozen=True)
class LedgerResult:
    value: int
    total: int
    axioms_used: tuple[str, ...]


def restriction_ledger_h0(
    table: PairingTable, registry: AxiomRegistry, members: int | None = None
) -> LedgerResult:
    """Section count over the normal-crossing restriction divisor.

    Bookkeeping: 2 (cylinder sections) + 3 per pencil member - 2 glueing
    conditions per member; the member count defaults to n-2.  The kernel
    contributes one more section for the total.  Degree preconditions that
    are mechanically checkable are checked; the genuinely cohomological
    inputs are consumed from the axiom registry and reported.
    """
    cx = table.complex
    n = cx.n
    k = members if members is not None else n - 2
    l1 = adjusted_bundle(n)
    if not triviality_check(table):
        raise CompletionError("cylinder end components are not trivial for the adjusted bundle")
    # extension preconditions: section-ruling degree 0 away from the second
    # component (whose unique positive direction carries the two-seam map)
    for j in range(1, n - 1):
        gen = cx.generic_fiber_index(f"E{j}")
        want = 1 if j == 2 else 0
        if table.degree(l1.coeffs, ("C", gen, j)) != want:
            raise CompletionError(f"extension degree precondition fails on E{j}")
    used = [
        registry.consume("rank.h0-net-on-member", "restriction-ledger").id,
        registry.consume("rank.restriction-isos", "restriction-ledger").id,
        registry.consume("rank.difference-surjective", "restriction-ledger").id,
    ]
    value = 2 + 3 * k - 2 * k
    used.append(registry.consume("rank.kernel-acyclic", "restriction-ledger").id)
    used.append(registry.consume("rank.structure-sheaf-cohomology", "restriction-ledger").id)
    return LedgerResult(value=value, total=value + 1, axioms_used=tuple(used))


def half_bundle_adjustment_coeffs(n: int) -> dict[str, int]:
    """Fixed-part multiplicities subtracted from the pulled-back half bundle."""
    sub = {"E1": n - 3}
    for j in range(2, n - 1):
        sub[f"E{j}"] = n - 1 - j
    return sub


def m1_tables_verify(
    table: PairingTable, pull_degrees: dict[str, int]
) -> tuple[dict[str, dict[int, tuple[int, int]]], bool]:
    """Degree tables of the adjusted half bundle on the cylinder.

    ``pull_degrees`` carries the downstairs restriction table (keys C1..,
    Cb1..); contracted curves pull back to degree zero.  Also asserts
    triviality on the n components Eb_1..Eb_{n-1} and E_{n-1}.
    """
    cx = table.complex
    n = cx.n
    sub = half_bundle_adjustment_coeffs(n)

    def deg(curve: Curve) -> int:
        kind = curve[0]
        if kind == "C":
            base = pull_degrees[f"C{curve[2]}"]
        elif kind == "Cb":
            base = pull_degrees[f"Cb{curve[2]}"]
        else:
            base = 0
        return base - int(table.degree(sub, curve))

    exp = {
        "C": {i: (0 if i in (1, 2, n - 1) else -1) for i in range(1, n)},
        "Cb": {i: 0 for i in range(1, n)},
        "D": {i: (0 if i in (1, n - 1) else 1) for i in range(1, n)},
        "Db": {i: (n - 3 if i == n - 1 else 0) for i in range(1, n)},
        "G": {i: (0 if i == n - 1 else n - i - 2) for i in range(1, n)},
        "Gb": {i: 0 for i in range(1, n)},
    }
    out: dict[str, dict[int, tuple[int, int]]] = {k: {} for k in exp}
    ok = True
    for i in range(1, n):
        for kind in exp:
            curve: Curve = (kind, i, i) if kind in ("C", "Cb") else (kind, i)
            got = deg(curve)
            out[kind][i] = (got, exp[kind][i])
            if got != exp[kind][i]:
                ok = False
    return out, ok


# -- formal bundle algebra ----------------------------------------------------


def _vec(**co: int | Fraction) -> dict[str, Fraction]:
    return {k: Fraction(v) for k, v in co.items() if v}


def _vadd(a: dict[str, Fraction], b: dict[str, Fraction], s: int | Fraction = 1) -> dict[str, Fraction]:
    out = dict(a)
    s = Fraction(s)
    for k, v in b.items():
        out[k] = out.get(k, Fraction(0)) + s * v
        if out[k] == 0:
            del out[k]
    return out


def degree_one_chern(n: int, i: int) -> dict[str, Fraction]:
    """Global class of the i-th degree-one divisor containing C1: half of F
    minus the signed half-sum of the alpha generators (sign flip at n-i+1;
    no flip for i = n-1)."""
    co = {"F": Fraction(1, 2)}
    for j in range(1, n + 1):
        eps = -1 if (i <= n - 2 and j == n - i + 1) else 1
        co[f"a{j}"] = Fraction(-eps, 2)
    return co


def half_bundle_class(n: int, swap_first_two: bool = False) -> dict[str, Fraction]:
    special = 2 if swap_first_two else 1
    co = {"F": Fraction(n - 2, 2)}
    for j in range(1, n + 1):
        w = n - 2 if j == special else n - 4
        if w:
            co[f"a{j}"] = Fraction(-w, 2)
    return co


def bundle_algebra_verify(n: int) -> dict[str, dict]:
    """Coefficient-exact verification of the formal bundle identities.

    Checks, as vectors over explicit symbol bases: the direct form of the
    adjusted bundle; the sum of the degree-one Chern classes; the pullback
    rule summed over the degree-one divisors; the collapse of the half-
    bundle kernel to a single alpha generator plus cylinder terms; the
    kernel-bundle identity; and the rewriting of the half bundle through
    the end degree-one divisor.
    """
    res: dict[str, dict] = {}

    # 1. adjusted bundle: definition vs direct form
    d = adjusted_bundle_from_definition(n).diff(adjusted_bundle(n))
    res["adjusted-direct"] = {"ok": not d, "diff": d}

    # 2. sum of degree-one classes over i = 1..n-2
    total: dict[str, Fraction] = {}
    for i in range(1, n - 1):
        total = _vadd(total, degree_one_chern(n, i))
    want = {"F": Fraction(n - 2, 2), "a1": Fraction(-(n - 2), 2), "a2": Fraction(-(n - 2), 2)}
    for j in range(3, n + 1):
        if n != 4:
            want[f"a{j}"] = Fraction(-(n - 4), 2)
    res["degree-one-sum"] = {"ok": total == want, "diff": _vadd(total, want, -1)}

    # 3. pullback rule summed: sum mu*(Sm_i) - per-arc cylinder subtractions
    lhs: dict[str, Fraction] = {}
    for i in range(1, n - 1):
        lhs = _vadd(lhs, _vec(**{f"muSm{i}": 1}))
        arc = _vec(**{f"E{j}": 1 for j in range(1, i + 1)})
        arc = _vadd(arc, _vec(**{f"Eb{j}": 1 for j in range(i + 1, n)}))
        lhs = _vadd(lhs, arc, -1)
    rhs: dict[str, Fraction] = {}
    for i in range(1, n - 1):
        rhs = _vadd(rhs, _vec(**{f"muSm{i}": 1}))
    rhs = _vadd(rhs, _vec(**{f"E{j}": n - 1 - j for j in range(1, n)}), -1)
    rhs = _vadd(rhs, _vec(**{f"Eb{j}": j - 1 for j in range(1, n)}), -1)
    res["pullback-sum"] = {"ok": lhs == rhs, "diff": _vadd(lhs, rhs, -1)}

    # 4. collapse: the half-bundle kernel equals mu*a2 - sum E_i + sum (i-2) Eb_i
    coll: dict[str, Fraction] = {}
    m = half_bundle_class(n)
    coll = _vadd(coll, {f"mu:{k}": v for k, v in m.items()})
    coll = _vadd(coll, _vec(**half_bundle_adjustment_coeffs(n)), -1)
    coll = _vadd(coll, _vec(**{f"E{j}": 1 for j in range(1, n)}), -1)
    coll = _vadd(coll, _vec(**{f"Eb{j}": 1 for j in range(1, n)}), -1)
    for i in range(1, n - 1):
        chern = {f"mu:{k}": v for k, v in degree_one_chern(n, i).items()}
        arc = _vadd(
            _vec(**{f"E{j}": 1 for j in range(1, i + 1)}),
            _vec(**{f"Eb{j}": 1 for j in range(i + 1, n)}),
        )
        coll = _vadd(coll, _vadd(chern, arc, -1), -1)
    want4 = _vec(**{"mu:a2": 1})
    want4 = _vadd(want4, _vec(**{f"E{j}": 1 for j in range(2, n)}), -1)
    want4 = _vadd(want4, _vec(**{f"Eb{j}": j - 2 for j in range(1, n)}))
    res["kernel-collapse"] = {"ok": coll == want4, "diff": _vadd(coll, want4, -1)}

    # 5. kernel bundle: L1 - sum_k S_k - cylinder = sum_{i>=3} (i-2)(E_i + Eb_i),
    #    with the strict member class S_k = mu*F - cylinder = T
    l1 = dict(adjusted_bundle_from_definition(n).coeffs)
    kk = dict(l1)
    kk = _vadd(kk, _vec(T=1), -(n - 2))
    kk = _vadd(kk, _vec(**{f"E{j}": 1 for j in range(1, n)}), -1)
    kk = _vadd(kk, _vec(**{f"Eb{j}": 1 for j in range(1, n)}), -1)
    want5 = dict(kernel_bundle(n).coeffs)
    res["kernel-bundle"] = {"ok": kk == want5, "diff": _vadd(kk, want5, -1)}

    # 6. rewrite of the half bundle through the end degree-one divisor:
    #    (n-2)/2 F - alpha/2 = F + (n-4) Sm_{n-1} - a1
    lhs6 = half_bundle_class(n)
    rhs6 = _vadd(_vec(F=1), degree_one_chern(n, n - 1), n - 4)
    rhs6 = _vadd(rhs6, _vec(a1=1), -1)
    res["end-divisor-rewrite"] = {"ok": lhs6 == rhs6, "diff": _vadd(lhs6, rhs6, -1)}

    res["ok"] = all(v["ok"] for k, v in res.items() if k != "ok")
    return res


def rr_threefold(chern_numbers: dict[str, int | Fraction]) -> Fraction:
    """Euler characteristic of a degree-zero twist from threefold Riemann-Roch.

    Inputs: a3 = alpha^3, a2c1 = alpha^2 c1, ac = alpha (c1^2 + c2),
    c1c2 = c1 c2.
    """
    return (
        Fraction(chern_numbers["a3"], 6)
        + Fraction(chern_numbers["a2c1"], 4)
        + Fraction(chern_numbers["ac"], 12)
        + Fraction(chern_numbers["c1c2"], 24)
    )


def nonvan_ledgers(table: PairingTable, registry: AxiomRegistry) -> dict:
    """Restriction ledgers of the half bundle on the degree-one divisors.

    Verifies the end-divisor rewrite, the displayed restriction (weight n-3
    on the shared arc, 1 on the complementary arc, -1 on the auxiliary
    (-1)-curve), the adjusted form with staircase weights j-2, and the
    degree-zero ledger against the last barred component, for every i.
    """
    cx = table.complex
    n = cx.n
    registry.consume("anchor.deg-one-pairings", "pencil-ledgers")
    registry.consume("rank.h0-half-bundle-on-deg-one", "pencil-ledgers")
    alg = bundle_algebra_verify(n)
    tec_ok = alg["end-divisor-rewrite"]["ok"]

    rest_ok = True
    ledger_values = {}
    for i in range(1, n - 1):
        # displayed restriction: sum_{j>i} Cb_j + (n-3) sum_{j<=i} C_j - e1'
        rest9 = _vec(**{f"Cb{j}": 1 for j in range(i + 1, n)})
        rest9 = _vadd(rest9, _vec(**{f"C{j}": n - 3 for j in range(1, i + 1)}))
        rest9 = _vadd(rest9, _vec(e1p=1), -1)
        # assembled: arc + (n-4) * shared arc - e1'
        asm = _vadd(
            _vec(**{f"C{j}": 1 for j in range(1, i + 1)}),
            _vec(**{f"Cb{j}": 1 for j in range(i + 1, n)}),
        )
        asm = _vadd(asm, _vec(**{f"C{j}": 1 for j in range(1, i + 1)}), n - 4)
        asm = _vadd(asm, _vec(e1p=1), -1)
        if rest9 != asm:
            rest_ok = False
        # adjusted: lifted restriction minus the fixed-part coefficients
        lift = _vadd(rest9, _vec(Dbi=1))
        subtr = _vec(**{f"C{j}": (n - 3 if j == 1 else n - 1 - j) for j in range(1, min(i, n - 2) + 1)})
        rest11 = _vadd(lift, subtr, -1)
        want = _vec(**{f"C{j}": j - 2 for j in range(3, i + 1)})
        want = _vadd(want, _vec(Dbi=1))
        want = _vadd(want, _vec(**{f"Cb{j}": 1 for j in range(i + 1, n)}))
        want = _vadd(want, _vec(e1p=1), -1)
        if rest11 != want:
            rest_ok = False
        # ledger: (Cb_{n-1}, Db_i + sum_{j>i} Cb_j - e1') inside the i-th surface
        self_int = table.value(f"Eb{n-1}", ("Cb", i, n - 1))
        neighbor = 1  # the unique adjacent component of the moving part
        ledger = self_int + neighbor - 0
        ledger_values[i] = ledger
        if ledger != 0:
            rest_ok = False
    return {
        "tec_ok": tec_ok,
        "rest_ok": rest_ok,
        "ledgers": ledger_values,
        "tec_end_coeff": n - 4,
        "rest_arc_coeff": n - 3,
    }


def irreducibility_guard(n: int) -> dict:
    """Coefficient functional separating the half bundle from decomposables.

    phi(doubled class) = coefficient of a1 minus coefficient of a2.  It
    vanishes on F-multiples and on every degree-one divisor class, but is
    -2 (resp. +2) on the doubled half bundle and its swap.
    """
    def phi(co: dict[str, Fraction]) -> Fraction:
        return 2 * (co.get("a1", Fraction(0)) - co.get("a2", Fraction(0)))

    deg_one = {i: phi(degree_one_chern(n, i)) for i in range(1, n)}
    out = {
        "phi_F": 0,
        "phi_degree_one": {i: int(v) for i, v in deg_one.items()},
        "phi_half": int(phi(half_bundle_class(n))),
        "phi_half_swapped": int(phi(half_bundle_class(n, swap_first_two=True))),
    }
    out["ok"] = (
        all(v == 0 for v in deg_one.values())
        and out["phi_half"] == -2
        and out["phi_half_swapped"] == 2
    )
    return out
