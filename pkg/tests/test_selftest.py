import json

from SturmLiouville import BaseCallback
from SturmLiouville.Cli.Report import dumps
from SturmLiouville.Cli.SelfTest import SelfTest, golden_families


class StepRecorder(BaseCallback):
    def __init__(self):
        super().__init__()
        self.steps = []

    def on_step(self, locals: dict):
        self.steps.append((locals["criterion"], locals["passed"]))


def small_suite(**kwargs) -> SelfTest:
    return SelfTest(n_max=4, numeric_n_max=2, grid_size=4, n_random=20, **kwargs)


def test_golden_families():
    assert [family.name for family in golden_families()] == \
        ["legendre", "laguerre", "hermite", "confluent", "chebyshev1", "jacobi"]


def test_suite_passes():
    recorder = StepRecorder()
    result = small_suite().run(callback=recorder, progress_bar=False)
    assert result.passed, [c for c in result.criteria if not c.passed]
    assert [name for name, _ in recorder.steps] == [name for name, _ in small_suite().criteria()]
    assert all(passed for _, passed in recorder.steps)


def test_injected_fault_is_detected():
    result = small_suite(inject_fault=True).run(progress_bar=False)
    assert not result.passed
    failed = [c.name for c in result.criteria if not c.passed]
    assert failed == ["orthogonality"]


def test_result_json():
    result = small_suite(seed=7).run(progress_bar=False)
    report = json.loads(dumps(result.to_json()))
    assert report["passed"] is True
    assert len(report["criteria"]) == 8
    assert set(report["criteria"][0]) == {"name", "passed", "details"}


def test_individual_criteria():
    suite = small_suite()
    assert "-28" in suite.negative_controls()
    assert "differs" in suite.fourth_order_example()
    assert "agree" in suite.classification_dispatch()
