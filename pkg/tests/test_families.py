import os
from fractions import Fraction

import pytest

from SturmLiouville import BaseCallback, CaseTag, ListCallback, Mode, Polynomial, TensorboardCallback, WeightForm
from SturmLiouville.Families import FAMILIES, BaseFamily, ChebyshevFamily, ConfluentFamily, HermiteFamily, \
    JacobiFamily, LaguerreFamily, LegendreFamily, family_by_name


class WrongWeightFamily(BaseFamily):
    def __init__(self):
        super().__init__("wrong", Polynomial([1, 0, -1]), Polynomial([0, -2]))

    def expected_weight(self) -> WeightForm:
        return WeightForm(exp_arg=Polynomial([0, -1]))

    def expected_eigenvalue(self, n: int) -> Fraction:
        return Fraction(-n * (n + 1))


class WrongEigenvalueFamily(LegendreFamily):
    def expected_eigenvalue(self, n: int) -> Fraction:
        return Fraction(-n * n)


@pytest.mark.parametrize("family", [LegendreFamily(), LaguerreFamily(), HermiteFamily(), ConfluentFamily(2),
                                    ChebyshevFamily(1), ChebyshevFamily(2), JacobiFamily(-3, Fraction(1, 2))])
def test_check_family(family):
    family.check_family(20)
    assert family.classify().is_admissible


def test_check_family_rejects_wrong_closed_forms():
    with pytest.raises(AssertionError):
        WrongWeightFamily().check_family(5)
    with pytest.raises(AssertionError):
        WrongEigenvalueFamily().check_family(5)


def test_cases_of_the_classical_families():
    assert LegendreFamily().classify().case_tag is CaseTag.CASE_I
    assert LaguerreFamily().classify().case_tag is CaseTag.CASE_III
    assert ConfluentFamily(2).classify().case_tag is CaseTag.CASE_III
    assert HermiteFamily().classify().case_tag is CaseTag.CASE_IV
    assert ChebyshevFamily(1).classify().mode is Mode.INESSENTIAL_SINGULARITY
    assert not ConfluentFamily(Fraction(1, 2)).classify().is_admissible


def test_family_by_name():
    assert set(FAMILIES) == {"legendre", "laguerre", "hermite", "confluent", "chebyshev", "jacobi"}
    jacobi = family_by_name("Jacobi", alpha="-4", beta="0")
    assert (jacobi.alpha, jacobi.beta) == (-4, 0)
    assert family_by_name("chebyshev", kind=2).name == "chebyshev2"
    assert family_by_name("confluent", c="3/2").parameter == Fraction(3, 2)
    with pytest.raises(ValueError):
        family_by_name("bessel")
    with pytest.raises(ValueError):
        ChebyshevFamily(3)


def test_list_callback_forwards():
    class Recorder(BaseCallback):
        def __init__(self):
            super().__init__()
            self.events = []

        def on_run_start(self, locals: dict):
            self.events.append("start")

        def on_step(self, locals: dict):
            self.events.append(locals["step"])

        def on_run_end(self, locals: dict):
            self.events.append("end")

    first, second = Recorder(), Recorder()
    callbacks = ListCallback([first, second])
    callbacks.on_run_start({})
    callbacks.on_step({"step": 1})
    callbacks.on_run_end({})
    assert first.events == second.events == ["start", 1, "end"]
    assert callbacks[1] is second

    nested = ListCallback([None, callbacks, Recorder()])
    assert len(nested) == 3
    assert nested[0] is first
    assert len(ListCallback([None])) == 0


def test_tensorboard_callback(tmp_path):
    with pytest.raises(AssertionError):
        TensorboardCallback()
    callback = TensorboardCallback(str(tmp_path), prefix="test")
    callback.on_run_start({"n_max": 3, "tol": 1e-10})
    callback.on_step({"criterion": "orthogonality", "passed": True, "details": "ok"})
    callback.on_step({"deviation": 1e-12})
    callback.on_run_end({})
    assert callback.total_steps == 2
    assert any(name.startswith("events.out.tfevents") for name in os.listdir(tmp_path))
