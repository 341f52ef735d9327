import bettisplit as bs


def test_torus_homology():
    torus = bs.corpus_load("torus7")
    assert torus.n == 7
    assert torus.dim == 2
    assert bs.f_vector(torus) == [1, 7, 21, 14]
    for field in ("Q", "Fp:2", "Fp:3"):
        assert bs.reduced_betti_all(torus, field) == [0, 0, 2, 1]
    assert bs.orientability(torus) == "orientable"


def test_disk_splittings():
    disk = bs.corpus_load("disk4")
    # {123, 245} vs {234, 345}: homology splitting but not Betti
    dec = bs.decompose(disk, [0, 2])
    assert bs.is_homology_splitting(disk, dec, "Q")["yes"]
    report = bs.is_betti_splitting(disk, dec, "Q")
    assert not report["yes"]
    assert report["witness"]["i"] == 1 and report["witness"]["j"] == 4
    # {123, 234} vs {245, 345}: Betti splitting
    good = bs.decompose(disk, [0, 1])
    assert bs.is_betti_splitting(disk, good, "Q")["yes"]
    assert bs.is_betti_splitting_recursive(disk, good, "Q")["yes"]


def test_dual_ideal_roundtrip():
    disk = bs.corpus_load("disk4")
    n, gens = bs.alexander_dual_ideal(disk)
    assert n == 5
    assert bs.complex_from_ideal(n, gens) == disk
    table = bs.graded_betti(disk, "Q")
    assert table[(0, 2)] == 4
    assert (1, 4) not in table


def test_probability():
    disk = bs.corpus_load("disk4")
    report = bs.splitting_probability(disk, "Q", "betti")
    assert (report["hits"], report["total"]) == (4, 7)
    facet = bs.splitting_probability(disk, "Q", "facet")
    assert (facet["hits"], facet["total"]) == (3, 4)


def test_klein_field_dependence():
    klein = bs.corpus_load("klein8")
    assert bs.reduced_betti(klein, 2, "Fp:2") == 1
    assert bs.reduced_betti(klein, 2, "Q") == 0
    assert bs.orientability(klein) == "non_orientable"
    assert len(bs.essential_facets(klein, "Fp:2")) == 16
    assert bs.essential_facets(klein, "Q") == []
