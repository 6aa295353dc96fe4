"""Arithmetic criterion for the Sylow pi-theorem in finite simple groups.

A simple group satisfies D_pi exactly when the pair (G, pi) matches one of
Conditions I-VII.  Condition I covers the trivial cases, Condition II is a
sporadic lookup, and Conditions III-VII are arithmetic in the Lie
parameters q, p, the rank, multiplicative orders e(q, r) and the Weyl
group order.  Each evaluator returns a report with the symbol bindings it
used, so a verdict is auditable.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .arith import eps_mod4, is_fermat_prime, mult_order, prime_divisors, r_part
from .catalog import (
    SUZUKI_REE,
    SimpleGroupId,
    ensure_valid,
    pi_effective,
    prime_power,
    spectrum_within,
    weyl_order,
)


@dataclass
class ConditionReport:
    condition: str
    holds: bool
    subcase: int | None = None
    bindings: dict = field(default_factory=dict)

    def describe(self) -> str:
        name = f"Condition {self.condition}"
        if self.subcase is not None:
            name += f"({self.subcase})"
        return name


@dataclass
class Verdict:
    dpi: bool
    witness: ConditionReport | None
    group: SimpleGroupId
    pi_effective: frozenset[int]

    def witness_text(self) -> str:
        if self.witness is None:
            return "no condition holds"
        return self.witness.describe()


# Condition II: sporadic groups G with D_pi for 2 not in pi, keyed by the
# possible values of pi ^ pi(G).
CONDITION_II_ITEMS: tuple[tuple[str, tuple[frozenset[int], ...]], ...] = (
    ("M11", (frozenset({5, 11}),)),
    ("M12", (frozenset({5, 11}),)),
    ("M22", (frozenset({5, 11}),)),
    ("M23", (frozenset({5, 11}), frozenset({11, 23}))),
    ("M24", (frozenset({5, 11}), frozenset({11, 23}))),
    ("J1", (frozenset({3, 5}), frozenset({3, 7}), frozenset({3, 19}), frozenset({5, 11}))),
    ("J4", (frozenset({5, 7}), frozenset({5, 11}), frozenset({5, 31}),
            frozenset({7, 29}), frozenset({7, 43}))),
    ("ON", (frozenset({5, 11}), frozenset({5, 31}))),
    ("Ly", (frozenset({11, 67}),)),
    ("Ru", (frozenset({7, 29}),)),
    ("Co1", (frozenset({11, 23}),)),
    ("Co2", (frozenset({11, 23}),)),
    ("Co3", (frozenset({11, 23}),)),
    ("Fi23", (frozenset({11, 23}),)),
    ("Fi24'", (frozenset({11, 23}),)),
    ("B", (frozenset({11, 23}), frozenset({23, 47}))),
    ("M", (frozenset({23, 47}), frozenset({29, 59}))),
)


def _effective(gid: SimpleGroupId, pi: frozenset[int]) -> frozenset[int]:
    return pi_effective(gid, pi)


def condition_I(gid: SimpleGroupId, pi: frozenset[int]) -> ConditionReport:
    ensure_valid(gid)
    eff = pi_effective(gid, pi)
    holds = spectrum_within(gid, pi) or len(eff) <= 1
    return ConditionReport("I", holds, bindings={"pi_effective": sorted(eff)})


def condition_II(gid: SimpleGroupId, pi: frozenset[int]) -> ConditionReport:
    ensure_valid(gid)
    if gid.family != "Spor":
        return ConditionReport("II", False)
    eff = _effective(gid, pi)
    for idx, (name, sets) in enumerate(CONDITION_II_ITEMS, start=1):
        if gid.name == name and eff in sets:
            return ConditionReport("II", True, subcase=idx,
                                   bindings={"pi_effective": sorted(eff)})
    return ConditionReport("II", False)


def _lie_parameters(gid: SimpleGroupId):
    """(q, p, n) for a Lie id, or None otherwise."""
    if gid.family != "Lie":
        return None
    p, _ = prime_power(gid.q)
    return gid.q, p, gid.n


def condition_III(gid: SimpleGroupId, pi: frozenset[int]) -> ConditionReport:
    """Defining characteristic case: p in pi, the rest of pi inside
    pi(q - 1), and no prime of pi dividing the Weyl group order."""
    ensure_valid(gid)
    params = _lie_parameters(gid)
    if params is None:
        return ConditionReport("III", False)
    q, p, n = params
    if p not in pi:
        return ConditionReport("III", False)
    # For the Suzuki/Ree families the Weyl group of the ambient root system
    # has order divisible by the characteristic (2 or 3), so the coprimality
    # clause can never hold; short-circuit instead of querying weyl_order.
    if gid.lie_type in SUZUKI_REE:
        return ConditionReport("III", False, bindings={"p": p})
    eff = pi_effective(gid, pi)
    tau = eff - {p}
    bindings = {"p": p, "tau": sorted(tau)}
    if not tau <= prime_divisors(q - 1):
        return ConditionReport("III", False, bindings=bindings)
    w = weyl_order(gid.lie_type, n)
    bindings["weyl_order"] = w
    holds = all(w % s != 0 for s in eff)
    return ConditionReport("III", holds, bindings=bindings)


def _odd_gate(gid: SimpleGroupId, pi: frozenset[int]):
    """Shared gate of Conditions IV and V: Lie type other than the
    Suzuki/Ree families, 2 and p outside pi, pi ^ pi(G) nonempty.
    Returns (q, r, tau) or None."""
    params = _lie_parameters(gid)
    if params is None or gid.lie_type in SUZUKI_REE:
        return None
    q, p, _ = params
    if 2 in pi or p in pi:
        return None
    eff = pi_effective(gid, pi)
    if not eff:
        return None
    r = min(eff)
    return q, r, eff - {r}


def condition_IV(gid: SimpleGroupId, pi: frozenset[int]) -> ConditionReport:
    """Cross-characteristic case with two distinct multiplicative orders
    a = e(q, r) and b = e(q, t) among the primes of pi."""
    ensure_valid(gid)
    gate = _odd_gate(gid, pi)
    if gate is None:
        return ConditionReport("IV", False)
    q, r, tau = gate
    a = mult_order(q, r)
    n, t_lie = gid.n, gid.lie_type

    def floors_eq(delta: int) -> bool:
        return n // (r - 1) == n // r + delta

    orders = {s: mult_order(q, s) for s in tau}
    for t in sorted(tau):
        b = orders[t]
        if b == a:
            continue
        bindings = {"r": r, "a": a, "t": t, "b": b, "tau": sorted(tau)}
        all_b = all(orders[s] == b for s in tau)
        a_or_b = all(orders[s] in (a, b) for s in tau)
        if t_lie == "A" and a == r - 1 and b == r and r_part(q ** (r - 1) - 1, r) == r and all_b:
            if floors_eq(0):
                return ConditionReport("IV", True, subcase=1, bindings=bindings)
            if floors_eq(1) and n % r == r - 1:
                return ConditionReport("IV", True, subcase=2, bindings=bindings)
        if t_lie == "2A" and b == 2 * r and r_part(q ** (r - 1) - 1, r) == r and all_b:
            if r % 4 == 1 and a == r - 1:
                if floors_eq(0):
                    return ConditionReport("IV", True, subcase=3, bindings=bindings)
                if floors_eq(1) and n % r == r - 1:
                    return ConditionReport("IV", True, subcase=5, bindings=bindings)
            if r % 4 == 3 and a == (r - 1) // 2:
                if floors_eq(0):
                    return ConditionReport("IV", True, subcase=4, bindings=bindings)
                if floors_eq(1) and n % r == r - 1:
                    return ConditionReport("IV", True, subcase=6, bindings=bindings)
        if t_lie == "2D" and a_or_b:
            if a % 2 == 1 and n == b == 2 * a:
                return ConditionReport("IV", True, subcase=7, bindings=bindings)
            if b % 2 == 1 and n == a == 2 * b:
                return ConditionReport("IV", True, subcase=8, bindings=bindings)
    return ConditionReport("IV", False)


def condition_V(gid: SimpleGroupId, pi: frozenset[int]) -> ConditionReport:
    """Cross-characteristic case with a single multiplicative order
    c = e(q, t) shared by every prime t of pi."""
    ensure_valid(gid)
    gate = _odd_gate(gid, pi)
    if gate is None:
        return ConditionReport("V", False)
    q, r, tau = gate
    c = mult_order(q, r)
    if any(mult_order(q, s) != c for s in tau):
        return ConditionReport("V", False)
    n, t_lie = gid.n, gid.lie_type
    bindings = {"r": r, "c": c, "tau": sorted(tau)}

    def report(subcase: int, holds: bool = True) -> ConditionReport:
        return ConditionReport("V", holds, subcase=subcase if holds else None,
                               bindings=bindings)

    if t_lie == "A":
        return report(1, all(n < c * s for s in tau))
    if t_lie == "2A":
        if c % 4 == 0:
            return report(2, all(n < c * s for s in tau))
        if c % 4 == 2:
            return report(3, all(2 * n < c * s for s in tau))
        return report(4, all(n < 2 * c * s for s in tau))
    if t_lie in ("B", "C", "D", "2D"):
        if c % 2 == 1 and t_lie in ("B", "C", "2D") and all(2 * n < c * s for s in tau):
            return report(5)
        if c % 2 == 0 and t_lie in ("B", "C", "D") and all(n < c * s for s in tau):
            return report(6)
        if c % 2 == 0 and t_lie == "D" and all(2 * n <= c * s for s in tau):
            return report(7)
        if c % 2 == 1 and t_lie == "2D" and all(n <= c * s for s in tau):
            return report(8)
        return ConditionReport("V", False, bindings=bindings)
    if t_lie == "3D4":
        return report(9)
    if t_lie == "E6":
        return report(10, not (r == 3 and c == 1 and ({5, 13} & tau)))
    if t_lie == "2E6":
        return report(11, not (r == 3 and c == 2 and ({5, 13} & tau)))
    if t_lie == "E7":
        ok = not (r == 3 and c in (1, 2) and ({5, 7, 13} & tau))
        ok = ok and not (r == 5 and c in (1, 2) and 7 in tau)
        return report(12, ok)
    if t_lie == "E8":
        ok = not (r == 3 and c in (1, 2) and ({5, 7, 13} & tau))
        ok = ok and not (r == 5 and c in (1, 2) and ({7, 31} & tau))
        return report(13, ok)
    if t_lie == "G2":
        return report(14)
    if t_lie == "F4":
        return report(15, not (r == 3 and c == 1 and 13 in tau))
    return ConditionReport("V", False, bindings=bindings)


def _suzuki_ree_sets(t_lie: str, q: int) -> list[frozenset[int]]:
    """The alternative prime sets of Condition VI, one per torus-order
    expression; each +/- expands to its own set."""
    if t_lie == "2B2":
        m = (q.bit_length() - 2) // 2  # q = 2^(2m+1)
        h = 2 ** (m + 1)
        return [prime_divisors(q - 1), prime_divisors(q + h + 1), prime_divisors(q - h + 1)]
    if t_lie == "2G2":
        f = 1
        qq = q
        while qq % 3 == 0 and qq > 3:
            qq //= 3
            f += 1
        m = (f - 1) // 2
        h = 3 ** (m + 1)
        return [prime_divisors(q - 1) - {2},
                prime_divisors(q + h + 1) - {2},
                prime_divisors(q - h + 1) - {2}]
    if t_lie == "2F4":
        m = (q.bit_length() - 2) // 2
        h = 2 ** (m + 1)       # 2^(m+1)
        g = 2 ** (3 * m + 2)   # 2^(3m+2)
        return [
            prime_divisors(q * q + 1),
            prime_divisors(q * q - 1),
            prime_divisors(q + h + 1),
            prime_divisors(q - h + 1),
            prime_divisors(q * q + g - h - 1),
            prime_divisors(q * q - g + h - 1),
            prime_divisors(q * q + g + q + h - 1),
            prime_divisors(q * q - g + q - h - 1),
        ]
    raise ValueError(f"{t_lie} is not a Suzuki/Ree type")


def condition_VI(gid: SimpleGroupId, pi: frozenset[int]) -> ConditionReport:
    """Suzuki and Ree groups: pi ^ pi(G) inside a single torus prime set."""
    ensure_valid(gid)
    if gid.family != "Lie" or gid.lie_type not in SUZUKI_REE:
        return ConditionReport("VI", False)
    eff = _effective(gid, pi)
    subcase = {"2B2": 1, "2G2": 2, "2F4": 3}[gid.lie_type]
    for target in _suzuki_ree_sets(gid.lie_type, gid.q):
        if eff <= target:
            return ConditionReport("VI", True, subcase=subcase,
                                   bindings={"pi_effective": sorted(eff),
                                             "set": sorted(target)})
    return ConditionReport("VI", False, bindings={"pi_effective": sorted(eff)})


def condition_VII(gid: SimpleGroupId, pi: frozenset[int]) -> ConditionReport:
    """Even case: 2 in pi, 3 and p outside pi, the odd part of pi inside
    pi(q - eps), plus per-family thresholds (Fermat primes are held to the
    stricter bound)."""
    ensure_valid(gid)
    params = _lie_parameters(gid)
    if params is None:
        return ConditionReport("VII", False)
    q, p, n = params
    if 2 not in pi or 3 in pi or p in pi:
        return ConditionReport("VII", False)
    tau = pi_effective(gid, pi) - {2}
    eps = eps_mod4(q)  # q is odd here since p != 2
    bindings = {"eps": eps, "tau": sorted(tau)}
    if not tau <= prime_divisors(q - eps):
        return ConditionReport("VII", False, bindings=bindings)
    phi = frozenset(t for t in tau if is_fermat_prime(t))
    bindings["phi"] = sorted(phi)
    t_lie = gid.lie_type

    def report(subcase: int, holds: bool) -> ConditionReport:
        return ConditionReport("VII", holds, subcase=subcase if holds else None,
                               bindings=bindings)

    if t_lie in ("A", "2A"):
        return report(1, all(s > n for s in tau) and all(t > n + 1 for t in phi))
    if t_lie == "B":
        return report(2, all(s > 2 * n + 1 for s in tau))
    if t_lie == "C":
        return report(3, all(s > n for s in tau) and all(t > 2 * n + 1 for t in phi))
    if t_lie in ("D", "2D"):
        return report(4, all(s > 2 * n for s in tau))
    if t_lie in ("G2", "2G2"):
        return report(5, 7 not in tau)
    if t_lie == "F4":
        return report(6, not ({5, 7} & tau))
    if t_lie in ("E6", "2E6"):
        return report(7, not ({5, 7} & tau))
    if t_lie == "E7":
        return report(8, not ({5, 7, 11} & tau))
    if t_lie == "E8":
        return report(9, not ({5, 7, 11, 13} & tau))
    if t_lie == "3D4":
        return report(10, 7 not in tau)
    return ConditionReport("VII", False, bindings=bindings)


_CONDITIONS = (
    condition_I,
    condition_II,
    condition_III,
    condition_IV,
    condition_V,
    condition_VI,
    condition_VII,
)


def decide_dpi_simple(gid: SimpleGroupId, pi: frozenset[int]) -> Verdict:
    """D_pi verdict for a simple group: true iff some condition holds.

    The witness is the first holding condition in the order I..VII; the
    order is a presentation choice only.
    """
    ensure_valid(gid)
    eff = _effective(gid, pi)
    for cond in _CONDITIONS:
        report = cond(gid, pi)
        if report.holds:
            return Verdict(True, report, gid, eff)
    return Verdict(False, None, gid, eff)


def dpi23_shortcut(gid: SimpleGroupId, pi: frozenset[int]) -> bool | None:
    """When 2 and 3 both lie in pi ^ pi(G), D_pi reduces to the containment
    pi(G) within pi.  Returns None when the shortcut does not apply."""
    ensure_valid(gid)
    if not {2, 3} <= pi_effective(gid, pi):
        return None
    return spectrum_within(gid, pi)
