from typing import Iterable, List, Union

from SturmLiouville.Callbacks.BaseCallback import BaseCallback


class ListCallback(BaseCallback):
    """ Forwards every self-test or quadrature event to several callbacks, in order.

    None entries are dropped and nested ListCallbacks are flattened, so optional observers can be passed as is.
    """

    def __init__(self, callbacks: Iterable[Union[BaseCallback, None]]):
        super(ListCallback, self).__init__()
        self.callbacks: List[BaseCallback] = []
        for callback in callbacks:
            if callback is None:
                continue
            assert isinstance(callback, BaseCallback), f"Expected a BaseCallback, got {type(callback).__name__}"
            if isinstance(callback, ListCallback):
                self.callbacks.extend(callback.callbacks)
            else:
                self.callbacks.append(callback)

    def on_run_start(self, locals: dict) -> None:
        for callback in self.callbacks:
            callback.on_run_start(locals)

    def on_step(self, locals: dict) -> None:
        for callback in self.callbacks:
            callback.on_step(locals)

    def on_run_end(self, locals: dict) -> None:
        for callback in self.callbacks:
            callback.on_run_end(locals)

    def __len__(self) -> int:
        return len(self.callbacks)

    def __getitem__(self, key: int) -> BaseCallback:
        assert type(key) == int, "Key must be an integer"
        return self.callbacks[key]
