from itertools import permutations

import pytest
from hypothesis import given, settings

from moorehodgson import Instance, Job, OracleCapError, PreconditionError, SequenceError, solve
from moorehodgson import _backend
from moorehodgson.generator import suite
from moorehodgson.oracle import (
    brute_force,
    check_induction_step,
    check_lemma1,
    check_prop1,
    feasible_on_time,
    rejection_choice,
)

from strategies import instances


def min_late_over_permutations(inst, weighted=False):
    """opt straight from the definition: every schedule, every completion time."""
    best = None
    for order in permutations(inst.jobs):
        load, late = 0, 0
        for job in order:
            load += job.p
            if load > job.d:
                late += job.w if weighted else 1
        best = late if best is None else min(best, late)
    return best or 0


class TestFeasibleOnTime:
    def test_moore_final_set(self, moore):
        assert feasible_on_time(moore, {1, 2, 4, 5, 7, 8})

    def test_moore_first_prefix(self, moore):
        assert not feasible_on_time(moore, {1, 2, 3})

    def test_empty(self, moore):
        assert feasible_on_time(moore, set())

    def test_unknown_id(self, moore):
        with pytest.raises(SequenceError):
            feasible_on_time(moore, {99})


class TestBruteForce:
    def test_moore(self, moore, backend):
        result = brute_force(moore, backend=backend)
        assert result.min_objective == 2
        assert feasible_on_time(moore, result.witness_on_time)
        assert len(result.witness_on_time) == 6

    def test_single_late_job(self):
        result = brute_force(Instance([Job(1, 5, 3)]))
        assert result.min_objective == 1
        assert result.witness_on_time == frozenset()

    def test_moore_weighted(self, moore_weighted, backend):
        result = brute_force(moore_weighted, weighted=True, all_optimal=True, backend=backend)
        assert result.min_objective == 8
        # the weighted optimum is unique here
        assert result.all_optimal_on_time_sets == (frozenset({1, 2, 4, 5, 7, 8}),)

    def test_cap(self):
        inst = Instance.from_columns([1] * 21, [0] * 21)
        with pytest.raises(OracleCapError):
            brute_force(inst)
        assert brute_force(inst.without(21), cap=20).min_objective == 20

    def test_all_optimal_sets_moore(self, moore):
        sets = brute_force(moore, all_optimal=True).all_optimal_on_time_sets
        assert frozenset({1, 2, 4, 5, 7, 8}) in sets
        assert all(feasible_on_time(moore, s) and len(s) == 6 for s in sets)

    @settings(max_examples=200)
    @given(instances(max_n=6))
    def test_matches_permutation_enumeration(self, inst):
        assert brute_force(inst).min_objective == min_late_over_permutations(inst)
        assert brute_force(inst, weighted=True).min_objective == min_late_over_permutations(inst, True)

    @given(instances(max_n=9))
    def test_witness_valid_and_maximal(self, inst):
        result = brute_force(inst, weighted=True)
        witness = result.witness_on_time
        assert feasible_on_time(inst, witness)
        assert result.min_objective == inst.total_weight - sum(inst.by_id[j].w for j in witness)
        for job in inst.jobs:
            if job.id not in witness and job.w > 0:
                assert not feasible_on_time(inst, witness | {job.id})

    @given(instances(max_n=9))
    def test_deletion_monotone(self, inst):
        opt = brute_force(inst).min_objective
        for job in inst.jobs:
            sub = brute_force(inst.without(job.id)).min_objective
            assert sub <= opt <= sub + 1

    @pytest.mark.skipif("compiled" not in _backend.available(), reason="extension not built")
    def test_backends_agree(self):
        for inst in suite(3, 200, 12):
            a = brute_force(inst, weighted=True, all_optimal=True, backend="compiled")
            b = brute_force(inst, weighted=True, all_optimal=True, backend="python")
            assert a == b


class TestProofChecks:
    def test_prop1_moore(self, moore):
        assert check_prop1(moore)

    def test_prop1_loose(self):
        assert check_prop1(Instance.from_columns([3, 4, 5], [12, 12, 12]))

    def test_lemma1_moore(self, moore):
        assert rejection_choice(moore) == (3, 3)
        assert check_lemma1(moore)

    def test_lemma1_identical_jobs(self):
        assert check_lemma1(Instance.from_columns([2, 2], [1, 1]))

    def test_induction_moore(self, moore):
        assert brute_force(moore).min_objective == 2
        assert brute_force(moore.without(3)).min_objective == 1
        assert check_induction_step(moore)

    def test_induction_single_late_job(self):
        assert check_induction_step(Instance([Job(1, 5, 3)]))

    def test_need_a_late_job(self):
        inst = Instance.from_columns([1, 1], [5, 5])
        with pytest.raises(PreconditionError):
            check_lemma1(inst)
        with pytest.raises(PreconditionError):
            check_induction_step(inst)

    def test_first_choice_matches_solver(self):
        for inst in suite(8, 200, 10):
            choice = rejection_choice(inst)
            rejected = solve(inst)[0].rejected
            assert (choice is None) == (rejected == ())
            if choice:
                assert choice[1] == rejected[0]

    @given(instances(max_n=8))
    def test_all_checks_hold(self, inst):
        assert check_prop1(inst)
        if rejection_choice(inst) is not None:
            assert check_lemma1(inst)
            assert check_induction_step(inst)
