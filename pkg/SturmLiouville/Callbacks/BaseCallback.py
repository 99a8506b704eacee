class BaseCallback:
    """ Base class for all callbacks. Runs (self test, numeric cross-validation) call these hooks with locals()."""
    def __init__(self):
        """ Constructor for BaseCallback"""
        pass

    def on_run_start(self, locals: dict) -> None:
        """ Called at the start of a run.

        Args:
        locals (dict): A dictionary of local variables.
        """
        pass

    def on_step(self, locals: dict) -> None:
        """ Called after each checked criterion or matrix entry.

        Args:
        locals (dict): A dictionary of local variables.
        """
        pass

    def on_run_end(self, locals: dict) -> None:
        """ Called at the end of a run.

        Args:
        locals (dict): A dictionary of local variables.
        """
        pass
