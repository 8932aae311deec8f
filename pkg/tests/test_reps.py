import random
from fractions import Fraction

import pytest

from baxcheck.exactnum import FieldMatrix, RatFunc
from baxcheck.ncalg import relations_for
from baxcheck.reps import (
    Rep,
    builtin_rep,
    check_relations,
    classify_scalar,
    correspondence_check,
    flip_rep,
    verify_scalar,
)


def test_a3_satisfies_relations_with_fully_symbolic_parameters():
    # measured scope: all five relations vanish for symbolic a, b, c, mu
    rep = builtin_rep("A3_2dim")
    report = check_relations(rep, relations_for("A", 3))
    assert report.passed, report.residuals


def test_a3_generators_square_to_zero():
    rep = builtin_rep("A3_2dim", c=1, mu=Fraction(1, 2))
    for i in (1, 2):
        m = rep.matrices[i]
        assert (m * m).is_zero


def test_b3_and_c3_pass_their_relations():
    b3 = builtin_rep("B3_2dim")
    assert check_relations(b3, relations_for("B", 3)).passed
    c3 = builtin_rep("C3_2dim")
    assert check_relations(c3, relations_for("C", 3)).passed
    # this family is bilateral: the same matrices satisfy both orientations
    assert check_relations(b3, relations_for("C", 3)).passed
    assert check_relations(c3, relations_for("B", 3)).passed


def test_flip_rep_maps_b_to_c_and_preserves_a():
    b3 = builtin_rep("B3_2dim")
    assert check_relations(flip_rep(b3), relations_for("C", 3)).passed
    a3 = builtin_rep("A3_2dim")
    assert check_relations(flip_rep(a3), relations_for("A", 3)).passed
    assert flip_rep(flip_rep(b3)).matrices[1] == b3.matrices[1]


def test_hecke_std_quadratic_and_tensor_braid():
    rep = builtin_rep("Hecke3_std")
    assert check_relations(rep, relations_for("Hecke", 3)).passed
    s = rep.matrices[1]
    ident = FieldMatrix.identity(2, RatFunc.one(rep.params))
    s_left, s_right = s.kron(ident), ident.kron(s)
    assert s_left * s_right * s_left == s_right * s_left * s_right


def test_hecke_burau_has_distinct_generators():
    rep = builtin_rep("Hecke3_burau")
    assert check_relations(rep, relations_for("Hecke", 3)).passed
    assert rep.matrices[1] != rep.matrices[2]


def test_hecke_reps_also_satisfy_b_relations():
    # the parameter-free quotient sits between the braid and Hecke algebras
    rep = builtin_rep("Hecke3_burau")
    assert check_relations(rep, relations_for("B", 3)).passed


def test_uniform_scalar_passes_braid_and_cubic_algebras():
    lam = builtin_rep("scalar")
    for algebra in ("Braid", "A", "B", "C"):
        assert check_relations(lam, relations_for(algebra, 3)).passed, algebra


def test_scalar_hecke_needs_eigenvalue_normalization():
    assert check_relations(builtin_rep("scalar", values=["q", "q"]), relations_for("Hecke", 3)).passed
    assert check_relations(builtin_rep("scalar", values=[1, 1]), relations_for("Hecke", 3)).passed
    assert not check_relations(builtin_rep("scalar"), relations_for("Hecke", 3)).passed


def test_random_dense_pair_fails_a_relations():
    rng = random.Random(42)
    symbols = ()
    rows = lambda: [[RatFunc.const(symbols, Fraction(rng.randint(-5, 5))) for _ in range(2)] for _ in range(2)]
    rep = Rep(3, 2, symbols, {1: FieldMatrix.from_rows(rows()), 2: FieldMatrix.from_rows(rows())})
    report = check_relations(rep, relations_for("A", 3, {"a": 1, "b": 1, "c": 1}))
    assert report.status == "fail"
    assert any(size for _, size in report.residuals)


def test_classify_scalar_families():
    classes = classify_scalar("A", {"a": 1, "b": 0, "c": 1})
    assert classes[0].kind == "uniform"
    assert classes[1].values == (Fraction(-1), Fraction(0), Fraction(1))
    assert classify_scalar("B")[1].values == (Fraction(0), Fraction(1))
    assert classify_scalar("C")[1].values == (Fraction(0), Fraction(1))
    # a = 0, b != 0: the nonzero value is c/b
    assert classify_scalar("A", {"a": 0, "b": 1, "c": 2})[1].values == (Fraction(0), Fraction(2))
    # irrational roots are reported symbolically
    assert classify_scalar("A", {"a": 1, "b": 1, "c": 1})[1].values is None
    # a = b = 0: only the zero value remains
    assert classify_scalar("A", {"a": 0, "b": 0, "c": 5})[1].values == (Fraction(0),)
    with pytest.raises(ValueError):
        classify_scalar("A", {"a": 0, "b": 0, "c": 0})
    with pytest.raises(ValueError):
        classify_scalar("Hecke")


def test_verify_scalar_examples():
    params = {"a": 1, "b": 0, "c": 1}
    assert verify_scalar([Fraction(1), Fraction(-1)], "A", params)
    assert not verify_scalar([Fraction(1), Fraction(2)], "A", params)
    assert verify_scalar([Fraction(1), Fraction(0)], "B")
    assert not verify_scalar([Fraction(2), Fraction(0)], "B")


def test_zero_pattern_matches_brute_force_for_a012():
    # spot-check of the c/b classification against direct relation evaluation
    params = {"a": 0, "b": 1, "c": 2}
    grid = [Fraction(n) for n in range(-2, 4)]
    predicted = {(u, v) for u in grid for v in grid if u == v or {u, v} <= {Fraction(0), Fraction(2)}}
    actual = {(u, v) for u in grid for v in grid if verify_scalar([u, v], "A", params)}
    assert actual == predicted


def test_correspondence_hecke_in_A():
    for name in ("Hecke3_std", "Hecke3_burau"):
        report = correspondence_check("hecke_in_A", builtin_rep(name))
        assert report.passed, (name, report.residuals)


def test_correspondence_hecke_in_A_rejects_non_hecke_rep():
    report = correspondence_check("hecke_in_A", builtin_rep("A3_2dim"))
    assert report.status == "error"
    assert any("precondition" in note for note in report.notes)


def test_correspondence_braid_coset():
    rep = builtin_rep("Hecke3_burau")
    # the cubic coset relations hold exactly at b = 1 and b = q
    for b in (Fraction(1), "q"):
        report = correspondence_check("braid_coset_to_A", rep, b=b)
        assert report.passed, (b, report.residuals)
    # a generic symbolic b fails the precondition
    report = correspondence_check("braid_coset_to_A", rep, b="b")
    assert report.status == "error"


def test_correspondence_b_to_a_shift():
    rep = builtin_rep("B3_2dim")
    for b in (Fraction(1), Fraction(2), "b"):  # holds for symbolic b as well
        report = correspondence_check("B_to_A_shift", rep, b=b)
        assert report.passed, report.residuals
    with pytest.raises(ValueError):
        correspondence_check("B_to_A_shift", rep, b=Fraction(0))


def test_correspondence_unknown_kind():
    with pytest.raises(ValueError):
        correspondence_check("bogus", builtin_rep("B3_2dim"))


def test_builtin_rejects_unknown():
    with pytest.raises(ValueError):
        builtin_rep("nope")
    with pytest.raises(ValueError):
        builtin_rep("A3_2dim", q=1)
    with pytest.raises(ValueError):
        builtin_rep("scalar", values=[1, 2, 3])  # three values for n=3


def test_scalar_uniform_rep_is_trivial_correspondence():
    lam = builtin_rep("scalar", values=[1, 1])
    assert correspondence_check("hecke_in_A", lam, q=Fraction(1)).passed
    assert correspondence_check("braid_coset_to_A", lam, b=Fraction(3)).passed
    assert correspondence_check("B_to_A_shift", lam, b=Fraction(2)).passed


def test_rep_serialization_shape():
    rep = builtin_rep("B3_2dim", nu=Fraction(2), mu=Fraction(1, 3))
    record = rep.serialize()
    assert record["n"] == 3 and record["dim"] == 2
    assert set(record["matrices"]) == {"1", "2"}
    assert record["matrices"]["1"][1][0] == "2"


def test_evaluate_at_point():
    rep = builtin_rep("B3_2dim")
    mats = rep.evaluate({"nu": Fraction(2), "mu": Fraction(3)})
    assert mats[1][0, 0] == 6
