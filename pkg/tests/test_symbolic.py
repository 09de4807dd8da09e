import pytest

from ellquartic.symbolic import FAMILIES, family_checks, verify_symbolic_suite


def test_all_families_certified():
    res = verify_symbolic_suite(seed=0, points=10)
    assert {c.family for c in res.checks} == set(FAMILIES)
    for c in res.checks:
        assert c.certified, c.name
        assert res.passed(c), c.name


@pytest.mark.parametrize("family", FAMILIES)
def test_mutation_fails_only_its_family(family):
    res = verify_symbolic_suite(seed=0, points=5, mutate=family)
    assert not res.family_passed(family)
    for other in FAMILIES:
        if other != family:
            assert res.family_passed(other)


def test_unknown_mutation():
    with pytest.raises(KeyError):
        verify_symbolic_suite(mutate="nosuch")


def test_strangeness_is_identically_zero():
    (c,) = family_checks("strangeness")
    assert c.target.is_zero()


def test_certificates_are_explicit():
    for fam in ("morphisms", "pencil"):
        for c in family_checks(fam):
            if c.expect_member and c.generators:
                assert len(c.quotients) == len(c.generators)
