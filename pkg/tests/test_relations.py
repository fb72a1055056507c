import pytest

from mcg.words import GenusContext
from mcg.relations import relation_check, relators


@pytest.mark.parametrize("g", [1, 2, 3, 4])
def test_every_relator_maps_to_identity(g):
    report = relation_check(GenusContext(g))
    assert report.ok
    assert report.failures == []
    assert report.to_dict()["checked"] == len(report.results)


def test_relator_families_present():
    families = {family for family, _, _ in relators(GenusContext(4))}
    assert families == {"commute", "braid", "iota_square", "chain_power", "iota_central", "sigma_chain"}


def test_genus_one_has_no_sigma_relators():
    families = {family for family, _, _ in relators(GenusContext(1))}
    assert "sigma_chain" not in families


def test_commutation_instances_counted():
    n = GenusContext(2).num_zeta
    commute = [r for r in relators(GenusContext(2)) if r[0] == "commute"]
    assert len(commute) == (n - 1) * (n - 2) // 2
