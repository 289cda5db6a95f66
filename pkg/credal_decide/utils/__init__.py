from .utils import THREADS_ENV, err, fmt12, out, worker_count

__all__ = ["THREADS_ENV", "err", "fmt12", "out", "worker_count"]
