"""Group identification, validation, order formulas and Weyl orders."""

import math

import pytest

from sylowpi.catalog import (
    SPORADIC_ORDERS,
    alt,
    facts,
    lie,
    parse_group,
    prime_power,
    sporadic,
    validate,
    weyl_order,
)


def test_prime_power():
    assert prime_power(8) == (2, 3)
    assert prime_power(9) == (3, 2)
    assert prime_power(7) == (7, 1)
    assert prime_power(12) is None
    assert prime_power(1) is None


def test_validate_alternating():
    assert validate(alt(5)) is None
    assert validate(alt(4)) is not None


def test_validate_lie_exclusions():
    # non-simple small parameter pairs are rejected
    assert validate(lie("A", 2, n=2)) is not None   # PSL(2,2)
    assert validate(lie("A", 3, n=2)) is not None   # PSL(2,3)
    assert validate(lie("2A", 2, n=3)) is not None  # PSU(3,2)
    assert validate(lie("B", 2, n=2)) is not None
    assert validate(lie("C", 2, n=2)) is not None
    assert validate(lie("G2", 2)) is not None
    assert validate(lie("A", 4, n=2)) is None
    assert validate(lie("G2", 3)) is None
    # Suzuki/Ree need an odd power of the right characteristic
    assert validate(lie("2B2", 8)) is None
    assert validate(lie("2B2", 2)) is not None
    assert validate(lie("2B2", 4)) is not None
    assert validate(lie("2G2", 27)) is None
    assert validate(lie("2G2", 3)) is not None
    assert validate(lie("2F4", 8)) is None
    assert validate(lie("D", 7, n=3)) is not None   # rank too small


def test_orders_classical():
    # |PSL(2,q)| = q(q^2-1)/gcd(2,q-1)
    for q in (4, 5, 7, 8, 9, 11):
        expected = q * (q * q - 1) // math.gcd(2, q - 1)
        assert facts(lie("A", q, n=2)).order == expected
    assert facts(lie("A", 2, n=3)).order == 168      # PSL(3,2)
    assert facts(lie("2A", 3, n=3)).order == 6048    # PSU(3,3)
    assert facts(lie("B", 3, n=2)).order == 25920    # PSp(4,3)
    assert facts(lie("C", 2, n=3)).order == 1451520  # PSp(6,2)
    assert facts(lie("D", 2, n=4)).order == 174182400
    assert facts(lie("2D", 2, n=4)).order == 197406720


def test_orders_exceptional():
    assert facts(lie("G2", 3)).order == 4245696
    assert facts(lie("2B2", 8)).order == 29120
    assert facts(lie("2G2", 27)).order == 10073444472
    assert facts(lie("3D4", 2)).order == 211341312
    assert facts(lie("F4", 2)).order == 3311126603366400
    assert facts(lie("E6", 2)).order == 214841575522005575270400


def test_alternating_and_sporadic_facts():
    a5 = facts(alt(5))
    assert a5.order == 60 and a5.spectrum == {2, 3, 5}
    assert a5.characteristic is None and a5.weyl_order is None
    m11 = facts(sporadic("M11"))
    assert m11.order == 7920 and m11.spectrum == {2, 3, 5, 11}
    assert facts(sporadic("Tits")).order == SPORADIC_ORDERS["2F4(2)'"]
    assert facts(sporadic("O'N")).order == SPORADIC_ORDERS["ON"]
    assert facts(sporadic("M(23)")).order == SPORADIC_ORDERS["Fi23"]


def test_sporadic_spectra_spot_checks():
    assert facts(sporadic("J1")).spectrum == {2, 3, 5, 7, 11, 19}
    assert facts(sporadic("Ly")).spectrum == {2, 3, 5, 7, 11, 31, 37, 67}
    assert facts(sporadic("M")).spectrum == {2, 3, 5, 7, 11, 13, 17, 19, 23,
                                             29, 31, 41, 47, 59, 71}


def test_weyl_orders():
    assert weyl_order("A", 5) == 120
    assert weyl_order("2A", 4) == 24
    assert weyl_order("B", 3) == 48
    assert weyl_order("C", 2) == 8
    assert weyl_order("D", 4) == 192
    assert weyl_order("2D", 4) == 192
    assert weyl_order("E8") == 696729600
    assert weyl_order("3D4") == 192
    with pytest.raises(ValueError):
        weyl_order("2B2")
    with pytest.raises(ValueError):
        weyl_order("2G2")


def test_lie_facts_carry_characteristic_and_weyl():
    f = facts(lie("A", 8, n=2))
    assert f.characteristic == 2 and f.weyl_order == 2
    f = facts(lie("2G2", 27))
    assert f.characteristic == 3 and f.weyl_order is None


def test_parse_group_round_trip():
    for spec in ("Alt:7", "Spor:M11", "Lie:A:2:7", "Lie:2A:4:3",
                 "Lie:G2:4", "Lie:2B2:8"):
        gid = parse_group(spec)
        assert gid.spec() == spec
        assert parse_group(gid.spec()) == gid


def test_parse_group_rejects_garbage():
    for bad in ("Alt", "Alt:x", "Lie:A:7", "Lie:G2:2:3", "Foo:1", ""):
        with pytest.raises(ValueError):
            parse_group(bad)
