from SturmLiouville.Callbacks.BaseCallback import BaseCallback
from SturmLiouville.Callbacks.ListCallback import ListCallback
from SturmLiouville.Callbacks.TensorboardCallback import TensorboardCallback
