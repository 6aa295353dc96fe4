"""Identification of finite simple groups: parameter validation, orders,
prime spectra and Weyl-group orders.

A group is named by a `SimpleGroupId`: an alternating degree, a sporadic
Atlas name (the Tits group counts as sporadic here), or a Lie family with
rank/field parameters.  Order formulas are the standard product formulas
for the simple quotients (the center order is divided out per family).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .arith import prime_divisors

LIE_TYPES = (
    "A", "2A", "B", "C", "D", "2D",
    "3D4", "E6", "2E6", "E7", "E8", "F4", "2F4", "G2", "2G2", "2B2",
)
# families whose rank is part of the identifier
RANKED_TYPES = ("A", "2A", "B", "C", "D", "2D")
# Suzuki/Ree families: odd power of the defining characteristic
SUZUKI_REE = {"2B2": 2, "2G2": 3, "2F4": 2}

SPORADIC_ORDERS: dict[str, int] = {
    "M11": 7_920,
    "M12": 95_040,
    "M22": 443_520,
    "M23": 10_200_960,
    "M24": 244_823_040,
    "J1": 175_560,
    "J2": 604_800,
    "J3": 50_232_960,
    "J4": 86_775_571_046_077_562_880,
    "HS": 44_352_000,
    "McL": 898_128_000,
    "He": 4_030_387_200,
    "Ru": 145_926_144_000,
    "Suz": 448_345_497_600,
    "ON": 460_815_505_920,
    "Co1": 4_157_776_806_543_360_000,
    "Co2": 42_305_421_312_000,
    "Co3": 495_766_656_000,
    "Fi22": 64_561_751_654_400,
    "Fi23": 4_089_470_473_293_004_800,
    "Fi24'": 1_255_205_709_190_661_721_292_800,
    "HN": 273_030_912_000_000,
    "Ly": 51_765_179_004_000_000,
    "Th": 90_745_943_887_872_000,
    "B": 4_154_781_481_226_426_191_177_580_544_000_000,
    "M": 808_017_424_794_512_875_886_459_904_961_710_757_005_754_368_000_000_000,
    "2F4(2)'": 17_971_200,
}

SPORADIC_ALIASES = {
    "M(23)": "Fi23",
    "M(24)'": "Fi24'",
    "Fi24": "Fi24'",
    "F24'": "Fi24'",
    "O'N": "ON",
    "T": "2F4(2)'",
    "Tits": "2F4(2)'",
}

_EXCEPTIONAL_WEYL = {
    "G2": 12,
    "F4": 1152,
    "E6": 51840,
    "E7": 2903040,
    "E8": 696729600,
    # twisted types: order of the Weyl group of the ambient root system
    "3D4": 192,
    "2E6": 51840,
}


@dataclass(frozen=True)
class SimpleGroupId:
    """Identifier of a finite simple group.

    family is "Alt", "Spor" or "Lie".  Alt carries n; Spor carries name;
    Lie carries lie_type, q, and (for classical types) the linear rank n,
    so lie("A", q, n=2) is A_1(q) = PSL(2, q).
    """

    family: str
    n: int | None = None
    q: int | None = None
    lie_type: str | None = None
    name: str | None = None

    def __str__(self) -> str:
        if self.family == "Alt":
            return f"Alt({self.n})"
        if self.family == "Spor":
            return str(self.name)
        if self.lie_type in RANKED_TYPES:
            return f"{self.lie_type}({self.n},{self.q})"
        return f"{self.lie_type}({self.q})"

    def spec(self) -> str:
        """Render in the CLI group-spec grammar."""
        if self.family == "Alt":
            return f"Alt:{self.n}"
        if self.family == "Spor":
            return f"Spor:{self.name}"
        if self.lie_type in RANKED_TYPES:
            return f"Lie:{self.lie_type}:{self.n}:{self.q}"
        return f"Lie:{self.lie_type}:{self.q}"


@dataclass(frozen=True)
class GroupFacts:
    order: int
    spectrum: frozenset[int]
    characteristic: int | None
    weyl_order: int | None


def alt(n: int) -> SimpleGroupId:
    return SimpleGroupId(family="Alt", n=n)


def sporadic(name: str) -> SimpleGroupId:
    return SimpleGroupId(family="Spor", name=SPORADIC_ALIASES.get(name, name))


def lie(lie_type: str, q: int, n: int | None = None) -> SimpleGroupId:
    return SimpleGroupId(family="Lie", lie_type=lie_type, q=q, n=n)


def prime_power(q) -> tuple[int, int] | None:
    """Return (p, f) with q = p^f, or None if q is not a prime power."""
    if not isinstance(q, int) or q < 2:
        return None
    for p in range(2, q + 1):
        if p * p > q:
            break
        if q % p == 0:
            f = 0
            m = q
            while m % p == 0:
                m //= p
                f += 1
            return (p, f) if m == 1 else None
    return (q, 1)  # q itself prime


def validate(gid: SimpleGroupId) -> str | None:
    """Return None if gid names a simple group, else the violated constraint."""
    if gid.family == "Alt":
        if gid.n is None or gid.n < 5:
            return f"Alt({gid.n}): alternating groups are simple only for n >= 5"
        return None
    if gid.family == "Spor":
        if gid.name not in SPORADIC_ORDERS:
            return f"unknown sporadic group name {gid.name!r}"
        return None
    if gid.family != "Lie":
        return f"unknown family {gid.family!r}"

    t, n, q = gid.lie_type, gid.n, gid.q
    if t not in LIE_TYPES:
        return f"unknown Lie type {t!r}"
    pf = prime_power(q)
    if pf is None:
        return f"q = {q} is not a prime power"
    p, f = pf
    if t in RANKED_TYPES:
        if n is None:
            return f"type {t} needs a rank parameter"
    elif n is not None:
        return f"type {t} takes no rank parameter"

    if t in SUZUKI_REE:
        char = SUZUKI_REE[t]
        if p != char or f % 2 == 0 or f < 3:
            return f"{t} requires q = {char}^(2m+1) with m >= 1"
        return None
    if t == "A":
        if n < 2:
            return "A(n-1,q) requires n >= 2"
        if (n, q) in ((2, 2), (2, 3)):
            return f"A(1,{q}) is not simple"
        return None
    if t == "2A":
        if n < 3:
            return "2A(n-1,q) requires n >= 3"
        if (n, q) == (3, 2):
            return "2A(2,2) is not simple"
        return None
    if t in ("B", "C"):
        if n < 2:
            return f"{t}(n,q) requires n >= 2"
        if n == 2 and q == 2:
            return f"{t}2(2) is not simple"
        return None
    if t in ("D", "2D"):
        if n < 4:
            return f"{t}(n,q) requires n >= 4"
        return None
    if t == "G2" and q < 3:
        return "G2(2) is not simple"
    return None


def ensure_valid(gid: SimpleGroupId) -> None:
    reason = validate(gid)
    if reason is not None:
        raise ValueError(reason)


def weyl_order(lie_type: str, n: int | None = None) -> int:
    """Order of the Weyl group; for twisted classical types this is the
    Weyl group of the ambient untwisted root system."""
    if lie_type in SUZUKI_REE:
        raise ValueError(f"Weyl order is not defined here for {lie_type}")
    if lie_type in _EXCEPTIONAL_WEYL:
        return _EXCEPTIONAL_WEYL[lie_type]
    if n is None:
        raise ValueError(f"type {lie_type} needs a rank")
    if lie_type in ("A", "2A"):
        return math.factorial(n)
    if lie_type in ("B", "C"):
        return 2**n * math.factorial(n)
    if lie_type in ("D", "2D"):
        return 2 ** (n - 1) * math.factorial(n)
    raise ValueError(f"unknown Lie type {lie_type!r}")


def _lie_order(t: str, n: int | None, q: int) -> int:
    if t == "A":
        o = q ** (n * (n - 1) // 2)
        for i in range(2, n + 1):
            o *= q**i - 1
        return o // math.gcd(n, q - 1)
    if t == "2A":
        o = q ** (n * (n - 1) // 2)
        for i in range(2, n + 1):
            o *= q**i - (-1) ** i
        return o // math.gcd(n, q + 1)
    if t in ("B", "C"):
        o = q ** (n * n)
        for i in range(1, n + 1):
            o *= q ** (2 * i) - 1
        return o // math.gcd(2, q - 1)
    if t == "D":
        o = q ** (n * (n - 1)) * (q**n - 1)
        for i in range(1, n):
            o *= q ** (2 * i) - 1
        return o // math.gcd(4, q**n - 1)
    if t == "2D":
        o = q ** (n * (n - 1)) * (q**n + 1)
        for i in range(1, n):
            o *= q ** (2 * i) - 1
        return o // math.gcd(4, q**n + 1)
    if t == "G2":
        return q**6 * (q**6 - 1) * (q**2 - 1)
    if t == "F4":
        return q**24 * (q**12 - 1) * (q**8 - 1) * (q**6 - 1) * (q**2 - 1)
    if t == "E6":
        o = q**36
        for d in (12, 9, 8, 6, 5, 2):
            o *= q**d - 1
        return o // math.gcd(3, q - 1)
    if t == "2E6":
        o = q**36 * (q**9 + 1) * (q**5 + 1)
        for d in (12, 8, 6, 2):
            o *= q**d - 1
        return o // math.gcd(3, q + 1)
    if t == "E7":
        o = q**63
        for d in (18, 14, 12, 10, 8, 6, 2):
            o *= q**d - 1
        return o // math.gcd(2, q - 1)
    if t == "E8":
        o = q**120
        for d in (30, 24, 20, 18, 14, 12, 8, 2):
            o *= q**d - 1
        return o
    if t == "3D4":
        return q**12 * (q**8 + q**4 + 1) * (q**6 - 1) * (q**2 - 1)
    if t == "2B2":
        return q**2 * (q**2 + 1) * (q - 1)
    if t == "2G2":
        return q**3 * (q**3 + 1) * (q - 1)
    if t == "2F4":
        return q**12 * (q**6 + 1) * (q**4 - 1) * (q**3 + 1) * (q - 1)
    raise ValueError(f"unknown Lie type {t!r}")


def facts(gid: SimpleGroupId) -> GroupFacts:
    """Exact order, prime spectrum, characteristic and Weyl order.

    Factors the order, so this can fail for huge Lie parameters; callers
    that only need divisibility should use pi_effective / spectrum_within.
    """
    ensure_valid(gid)
    order = order_of(gid)
    if gid.family in ("Alt", "Spor"):
        return GroupFacts(order, prime_divisors(order), None, None)
    p, _ = prime_power(gid.q)
    w = None if gid.lie_type in SUZUKI_REE else weyl_order(gid.lie_type, gid.n)
    return GroupFacts(order, prime_divisors(order), p, w)


def order_of(gid: SimpleGroupId) -> int:
    """Group order without factoring it (cheap even for huge groups)."""
    ensure_valid(gid)
    if gid.family == "Alt":
        return math.factorial(gid.n) // 2
    if gid.family == "Spor":
        return SPORADIC_ORDERS[gid.name]
    return _lie_order(gid.lie_type, gid.n, gid.q)


def pi_effective(gid: SimpleGroupId, pi) -> frozenset[int]:
    """pi ^ pi(G) by direct divisibility (avoids factoring the order)."""
    order = order_of(gid)
    return frozenset(s for s in pi if order % s == 0)


def spectrum_within(gid: SimpleGroupId, pi) -> bool:
    """Whether pi(G) is contained in pi, again without factoring."""
    m = order_of(gid)
    for s in pi:
        while m % s == 0:
            m //= s
    return m == 1


def parse_group(spec: str) -> SimpleGroupId:
    """Parse the group-spec grammar: Alt:n | Spor:Name | Lie:type[:n]:q."""
    parts = spec.strip().split(":")
    kind = parts[0]
    try:
        if kind == "Alt" and len(parts) == 2:
            return alt(int(parts[1]))
        if kind == "Spor" and len(parts) >= 2:
            return sporadic(":".join(parts[1:]))
        if kind == "Lie":
            t = parts[1]
            if t in RANKED_TYPES and len(parts) == 4:
                return lie(t, int(parts[3]), n=int(parts[2]))
            if t not in RANKED_TYPES and len(parts) == 3:
                return lie(t, int(parts[2]))
    except (ValueError, IndexError) as exc:
        raise ValueError(f"cannot parse group spec {spec!r}: {exc}") from None
    raise ValueError(f"cannot parse group spec {spec!r}")
