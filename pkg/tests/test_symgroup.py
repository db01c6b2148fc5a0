import math
import random

import pytest

from symsod.partitions import Partition, partition_count
from symsod.symgroup import (
    PermModule,
    Permutation,
    YoungPair,
    conjugacy_class_count,
    cycle_type,
    induction_invariance_check,
    invariant_dimension,
    natural_module,
    random_orbit_module,
    regular_module,
    symmetric_group,
    trivial_module,
    validate_subgroup,
    young_coset_reps,
    young_subgroup,
)


def test_permutation_basics():
    p = Permutation((2, 3, 1))
    assert p(1) == 2 and p(3) == 1
    assert (p * p.inverse()) == Permutation.identity(3)
    with pytest.raises(ValueError):
        Permutation((1, 1, 2))


def test_cycle_type_examples():
    assert cycle_type(Permutation.identity(4)) == Partition((1, 1, 1, 1))
    assert cycle_type(Permutation((2, 1, 4, 3))) == Partition((2, 2))
    assert cycle_type(Permutation((2, 3, 4, 5, 1))) == Partition((5,))


def test_conjugacy_class_count_small():
    assert conjugacy_class_count(1) == 1
    assert conjugacy_class_count(3) == 3
    assert conjugacy_class_count(6) == 11


@pytest.mark.parametrize("n", range(1, 8))
def test_class_count_by_exhaustive_classification(n):
    types = {cycle_type(p) for p in symmetric_group(n)}
    assert len(types) == conjugacy_class_count(n) == partition_count(n)


def test_young_subgroup_order():
    assert len(young_subgroup(YoungPair(4, 2))) == math.factorial(2) * math.factorial(2)
    assert len(young_subgroup(YoungPair(5, 0))) == math.factorial(5)


def test_coset_reps_trivial_quotient():
    assert young_coset_reps(YoungPair(4, 0)) == [Permutation.identity(4)]
    assert young_coset_reps(YoungPair(4, 4)) == [Permutation.identity(4)]


def test_coset_reps_degree_2():
    reps = young_coset_reps(YoungPair(2, 1))
    assert len(reps) == 2
    assert reps[0] == Permutation.identity(2)


def test_coset_reps_4_2_bijection_onto_subsets():
    reps = young_coset_reps(YoungPair(4, 2))
    assert len(reps) == 6
    images = {frozenset((r(3), r(4))) for r in reps}
    assert len(images) == 6


@pytest.mark.parametrize("n", range(1, 7))
def test_coset_reps_exhaustive_properties(n):
    for i in range(n + 1):
        pair = YoungPair(n, i)
        reps = young_coset_reps(pair)
        subgroup = set(young_subgroup(pair))
        assert len(reps) == math.comb(n, i)
        assert reps[0] == Permutation.identity(n)
        # pairwise distinct cosets
        for j, a in enumerate(reps):
            for b in reps[j + 1 :]:
                assert a.inverse() * b not in subgroup
        # lexicographically minimal in their coset
        for rep in reps:
            assert rep.images == min((rep * h).images for h in subgroup)


def test_validate_subgroup_rejects_non_closed():
    good = young_subgroup(YoungPair(3, 1))
    validate_subgroup(good)
    bad = [Permutation.identity(3), Permutation((2, 3, 1))]  # no inverse closure
    with pytest.raises(ValueError):
        validate_subgroup(bad)


def test_perm_module_validation_rejects_non_action():
    group = symmetric_group(3)
    with pytest.raises(ValueError):
        PermModule(group, [1, 2, 3], lambda g, b: 1)  # identity does not fix 2


def test_invariant_dimension_examples():
    s4 = symmetric_group(4)
    assert invariant_dimension(trivial_module(s4), s4) == 1
    assert invariant_dimension(natural_module(s4, 4), s4) == 1
    h = young_subgroup(YoungPair(4, 2))
    assert invariant_dimension(natural_module(h, 4), h) == 2


def test_invariant_dimension_matches_orbit_count_oracle():
    rng = random.Random(5)
    for n in (3, 4, 5):
        for i in range(n + 1):
            h = young_subgroup(YoungPair(n, i))
            for _ in range(5):
                module = random_orbit_module(h, n, rng)
                burnside = invariant_dimension(module, h)
                orbits = module.orbit_count(h)
                assert burnside == orbits


def test_induction_check_trivial_module():
    for n in range(1, 6):
        for i in range(n + 1):
            pair = YoungPair(n, i)
            report = induction_invariance_check(pair, trivial_module(young_subgroup(pair)))
            assert report
            assert report.induced_invariant_dim == report.subgroup_invariant_dim == 1


def test_induction_check_natural_module_4_2():
    pair = YoungPair(4, 2)
    report = induction_invariance_check(pair, natural_module(young_subgroup(pair), 4))
    assert report
    assert report.induced_invariant_dim == 2


def test_induction_check_regular_modules():
    for n in range(1, 6):
        for i in range(n + 1):
            pair = YoungPair(n, i)
            report = induction_invariance_check(pair, regular_module(young_subgroup(pair)))
            assert report
            assert report.subgroup_invariant_dim == 1


def test_induction_check_random_battery_small():
    rng = random.Random(0)
    for n in (2, 3, 4):
        for i in range(n + 1):
            pair = YoungPair(n, i)
            h = young_subgroup(pair)
            for _ in range(6):
                assert induction_invariance_check(pair, random_orbit_module(h, n, rng))


def test_induction_check_rejects_wrong_group():
    pair = YoungPair(4, 2)
    module = trivial_module(symmetric_group(4))
    with pytest.raises(ValueError):
        induction_invariance_check(pair, module)
