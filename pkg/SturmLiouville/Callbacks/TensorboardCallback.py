from typing import Union

from torch.utils.tensorboard import SummaryWriter

from SturmLiouville.Callbacks.BaseCallback import BaseCallback


class TensorboardCallback(BaseCallback):
    """ Logs self-test criteria and cross-validation deviations. """
    def __init__(self,
                 logdir: Union[str, None] = None,
                 tensorboard: Union[None, SummaryWriter] = None,
                 prefix="selftest"):
        """ Constructor for TensorboardCallback. Either logdir  or tensorboard must be provided, but not both"""
        assert logdir is not None or tensorboard is not None, "Either logdir or tensorboard must be provided"
        assert logdir is None or tensorboard is None, "Only one of logdir or tensorboard can be provided"
        super(TensorboardCallback, self).__init__()
        if logdir is not None:
            self.tensorboard = SummaryWriter(logdir)
        else:
            self.tensorboard = tensorboard
        self.total_steps = 0
        self.prefix = prefix

    def on_run_start(self, locals: dict):
        """ Logs run parameters at the start of the run. """
        # a writer can be shared by several runs. Only log parameters once.
        if self.total_steps == 0:
            for key in ("n_max", "tol", "seed", "grid_size", "n_random", "inject_fault"):
                if key in locals:
                    self.tensorboard.add_text(f"{self.prefix}/{key}", str(locals[key]), 0)

    def on_step(self, locals: dict):
        """ Logs the outcome of a criterion or of a cross-validated entry. """
        if "criterion" in locals and "passed" in locals:
            self.tensorboard.add_scalar(f"{self.prefix}/{locals['criterion']}", float(locals["passed"]), self.total_steps)
        if "details" in locals:
            self.tensorboard.add_text(f"{self.prefix}/details", str(locals["details"]), self.total_steps)
        if "deviation" in locals:
            self.tensorboard.add_scalar(f"{self.prefix}/deviation", float(locals["deviation"]), self.total_steps)
        self.total_steps += 1

    def on_run_end(self, locals: dict):
        self.tensorboard.flush()
