"""Conditions I-VII and the top-level simple-group D_pi decision."""

import itertools

import pytest

from sylowpi.catalog import alt, facts, lie, sporadic
from sylowpi.criterion import (
    CONDITION_II_ITEMS,
    condition_I,
    condition_II,
    condition_III,
    condition_IV,
    condition_V,
    condition_VI,
    condition_VII,
    decide_dpi_simple,
    dpi23_shortcut,
)


def test_condition_I():
    assert condition_I(alt(5), frozenset({2, 3, 5, 7})).holds      # pi(G) in pi
    assert condition_I(alt(5), frozenset({5, 7})).holds            # singleton eff
    assert condition_I(alt(5), frozenset({7, 11})).holds           # empty eff
    assert not condition_I(alt(5), frozenset({2, 3})).holds


def test_condition_II_items():
    assert len(CONDITION_II_ITEMS) == 17
    assert sum(len(sets) for _, sets in CONDITION_II_ITEMS) == 29
    r = condition_II(sporadic("J1"), frozenset({3, 19}))
    assert r.holds and r.subcase == 6
    r = condition_II(sporadic("M"), frozenset({29, 59}))
    assert r.holds and r.subcase == 17
    r = condition_II(sporadic("M(23)"), frozenset({11, 23}))
    assert r.holds and r.subcase == 14
    assert not condition_II(sporadic("M11"), frozenset({2, 3})).holds
    assert not condition_II(alt(11), frozenset({5, 11})).holds
    # membership is by pi ^ pi(G), so extra primes outside pi(G) are harmless
    assert condition_II(sporadic("M11"), frozenset({5, 11, 13})).holds


def test_condition_III():
    # p = 11 in pi, tau = {5} in pi(10), Weyl order 2 coprime to {5,11}
    r = condition_III(lie("A", 11, n=2), frozenset({5, 11}))
    assert r.holds
    # 2 divides every nontrivial Weyl order, so characteristic 2 never works
    assert not condition_III(lie("A", 8, n=2), frozenset({2, 7})).holds
    assert not condition_III(lie("A", 4, n=2), frozenset({2, 3})).holds
    # tau must lie in pi(q-1)
    assert not condition_III(lie("A", 11, n=2), frozenset({3, 11})).holds
    # characteristic must belong to pi
    assert not condition_III(lie("A", 11, n=2), frozenset({3, 5})).holds
    # Suzuki/Ree characteristic divides the ambient Weyl order
    assert not condition_III(lie("2B2", 8), frozenset({2, 7})).holds
    assert not condition_III(lie("2G2", 27), frozenset({3, 13})).holds
    assert not condition_III(alt(5), frozenset({2, 3})).holds


def test_condition_IV_linear():
    # PSL(3,5): r=3, a=e(5,3)=2=r-1, t=31, b=e(5,31)=3=r, (5^2-1)_3=3,
    # [3/2]=[3/3]: item 1
    r = condition_IV(lie("A", 5, n=3), frozenset({3, 31}))
    assert r.holds and r.subcase == 1
    # PSL(5,5): same orders, [5/2]=[5/3]+1 and 5 = -1 mod 3: item 2
    r = condition_IV(lie("A", 5, n=5), frozenset({3, 31}))
    assert r.holds and r.subcase == 2
    # PSL(4,5) fails both floor clauses
    assert not condition_IV(lie("A", 5, n=4), frozenset({3, 31})).holds


def test_condition_IV_orthogonal():
    # 2D6(3): r=7 with a=e(3,7)=6=n, t=13 with b=e(3,13)=3 odd, n=a=2b: item 8
    r = condition_IV(lie("2D", 3, n=6), frozenset({7, 13}))
    assert r.holds and r.subcase == 8
    assert not condition_IV(lie("2D", 3, n=5), frozenset({7, 13})).holds


def test_condition_IV_gates():
    assert not condition_IV(lie("A", 5, n=3), frozenset({2, 3, 31})).holds  # 2 in pi
    assert not condition_IV(lie("A", 5, n=3), frozenset({3, 5, 31})).holds  # p in pi
    assert not condition_IV(lie("A", 5, n=3), frozenset({3})).holds         # tau empty
    assert not condition_IV(lie("2B2", 8), frozenset({5, 13})).holds
    assert not condition_IV(sporadic("M11"), frozenset({5, 11})).holds


def test_condition_V():
    # PSL(2,16): r=3, c=e(16,3)=1, e(16,5)=1, n=2 < 1*5: item 1
    r = condition_V(lie("A", 16, n=2), frozenset({3, 5}))
    assert r.holds and r.subcase == 1
    # PSL(6,16): inequality n < cs fails (6 >= 5)
    assert not condition_V(lie("A", 16, n=6), frozenset({3, 5})).holds
    # G2(16): no extra clause, item 14
    r = condition_V(lie("G2", 16), frozenset({3, 5}))
    assert r.holds and r.subcase == 14
    # 3D4(16): no extra clause, item 9
    r = condition_V(lie("3D4", 16), frozenset({3, 5}))
    assert r.holds and r.subcase == 9
    # orders must agree across all of tau
    assert not condition_V(lie("A", 4, n=2), frozenset({3, 5})).holds


def test_condition_V_exceptional_exclusions():
    # E6(16): r=3, c=1, 13 | 16^3-1 so e(16,13)=1 -> excluded pair
    assert not condition_V(lie("E6", 16), frozenset({3, 13})).holds
    r = condition_V(lie("E6", 16), frozenset({3, 7}))  # e(16,7)? 16=2 mod 7 -> 3
    assert not r.holds or r.subcase == 10
    # F4(16): r=3, c=1, 13 excluded
    assert not condition_V(lie("F4", 16), frozenset({3, 13})).holds
    # E8(16): r=3, c=1, 5 excluded
    assert not condition_V(lie("E8", 16), frozenset({3, 5})).holds


def test_condition_VI():
    # 2B2(8): the +/- sets are separate: {5} and {13} work, {5,13} does not
    assert condition_VI(lie("2B2", 8), frozenset({7})).holds
    assert condition_VI(lie("2B2", 8), frozenset({5})).holds
    assert condition_VI(lie("2B2", 8), frozenset({13})).holds
    assert not condition_VI(lie("2B2", 8), frozenset({5, 13})).holds
    # 2G2(27): pi(26) minus {2} = {13}
    assert condition_VI(lie("2G2", 27), frozenset({13})).holds
    assert not condition_VI(lie("2G2", 27), frozenset({2, 13})).holds
    # 2F4(8): pi(q^2+1) = {5,13}, pi(q^2-1) = {3,7},
    # pi(q^2+2^5-2^2-1) = pi(91) = {7,13}
    assert condition_VI(lie("2F4", 8), frozenset({5, 13})).holds
    assert condition_VI(lie("2F4", 8), frozenset({3, 7})).holds
    assert condition_VI(lie("2F4", 8), frozenset({7, 13})).holds
    assert not condition_VI(lie("2F4", 8), frozenset({3, 5})).holds
    assert not condition_VI(lie("A", 8, n=2), frozenset({7})).holds


def test_condition_VII():
    # PSL(2,41): eps=+1, tau={5} in pi(40), 5>n=2, Fermat 5>n+1=3: item 1
    r = condition_VII(lie("A", 41, n=2), frozenset({2, 5}))
    assert r.holds and r.subcase == 1
    # B3(43): eps=-1, tau={11} in pi(44), 11 > 2n+1 = 7: item 2
    r = condition_VII(lie("B", 43, n=3), frozenset({2, 11}))
    assert r.holds and r.subcase == 2
    # B5(43): 11 > 11 fails
    assert not condition_VII(lie("B", 43, n=5), frozenset({2, 11})).holds
    # 3D4(29): 7 divides q-eps = 28 but item 10 forbids 7 in tau
    assert not condition_VII(lie("3D4", 29), frozenset({2, 7})).holds
    # gates: 3 in pi, p in pi, 2 missing
    assert not condition_VII(lie("A", 41, n=2), frozenset({2, 3, 5})).holds
    assert not condition_VII(lie("A", 41, n=2), frozenset({2, 41})).holds
    assert not condition_VII(lie("A", 41, n=2), frozenset({5})).holds
    # tau must divide q - eps (eps chosen so that 4 | q - eps)
    assert not condition_VII(lie("A", 41, n=2), frozenset({2, 7})).holds
    # vacuous tau holds
    assert condition_VII(lie("A", 7, n=2), frozenset({2})).holds


def test_decide_dpi_simple_witnesses():
    v = decide_dpi_simple(sporadic("M11"), frozenset({5, 11}))
    assert v.dpi and v.witness.condition == "II" and v.witness.subcase == 1
    v = decide_dpi_simple(alt(5), frozenset({2, 3}))
    assert not v.dpi and v.witness is None
    v = decide_dpi_simple(alt(9), frozenset({3}))
    assert v.dpi and v.witness.condition == "I"
    v = decide_dpi_simple(lie("A", 11, n=2), frozenset({5, 11}))
    assert v.dpi and v.witness.condition == "III"
    v = decide_dpi_simple(lie("2B2", 8), frozenset({5}))
    assert v.dpi and v.witness.condition == "I"  # lowest-numbered witness wins


def test_dpi23_shortcut():
    assert dpi23_shortcut(alt(7), frozenset({2, 3, 5, 7})) is True
    assert dpi23_shortcut(alt(7), frozenset({2, 3, 5})) is False
    assert dpi23_shortcut(alt(7), frozenset({2, 5})) is None


def test_shortcut_coherence_on_corpus():
    ids = [alt(5), alt(6), lie("A", 7, n=2), lie("A", 8, n=2),
           lie("A", 9, n=2), lie("A", 11, n=2), sporadic("M11"), sporadic("J1")]
    for gid in ids:
        spectrum = sorted(facts(gid).spectrum)
        for k in range(len(spectrum) + 1):
            for combo in itertools.combinations(spectrum, k):
                pi = frozenset(combo)
                short = dpi23_shortcut(gid, pi)
                if short is not None:
                    assert short == decide_dpi_simple(gid, pi).dpi, (gid, pi)


def test_gate_disjointness_with_2_and_3():
    """With 2 and 3 both in pi, only Condition I can fire."""
    ids = [alt(6), lie("A", 7, n=2), lie("A", 9, n=2), sporadic("M11"),
           lie("2B2", 8), lie("G2", 4)]
    for gid in ids:
        spectrum = sorted(facts(gid).spectrum)
        for k in range(len(spectrum) + 1):
            for combo in itertools.combinations(spectrum, k):
                pi = frozenset(combo) | {2, 3}
                for cond in (condition_II, condition_III, condition_IV,
                             condition_V, condition_VI, condition_VII):
                    assert not cond(gid, pi).holds, (gid, pi, cond.__name__)


def test_invalid_group_rejected():
    with pytest.raises(ValueError):
        decide_dpi_simple(alt(4), frozenset({2}))
    with pytest.raises(ValueError):
        decide_dpi_simple(lie("A", 3, n=2), frozenset({2}))
