"""Distribution of experiment days over MPI ranks and worker processes."""
import logging
from concurrent.futures import ProcessPoolExecutor

try:
    from mpi4py import MPI
except ImportError:
    MPI = None

log = logging.getLogger(__name__)


class DayTransport:
    """
    Day d is processed by rank d % size. Without mpi4py, or with a single
    rank, every day runs on this process.
    """

    def __init__(self, n_days: int, workers: int = 1):
        self.n_days: int = n_days
        self.workers: int = max(int(workers), 1)
        if MPI is not None:
            self._comm = MPI.COMM_WORLD
            self._rank: int = self._comm.Get_rank()
            self._size: int = self._comm.Get_size()
        else:
            self._comm = None
            self._rank, self._size = 0, 1

    @property
    def single_process(self) -> bool:
        return self._size == 1

    @property
    def is_root(self) -> bool:
        return self._rank == 0

    @property
    def days_per_node(self) -> int:
        return self.n_days // self._size + \
            (1 if self.n_days % self._size > self._rank else 0)

    @property
    def my_days(self) -> list:
        return list(range(self._rank, self.n_days, self._size))

    def map(self, function, days, *args) -> list:
        """
        Runs function(day, item, *args) for this rank's share of `days`
        and returns the results of all ranks on rank 0, ordered by day
        index. Other ranks get an empty list.
        """
        mine = self.my_days
        if self.workers > 1 and len(mine) > 1:
            with ProcessPoolExecutor(max_workers=self.workers) as pool:
                futures = [pool.submit(function, d, days[d], *args)
                           for d in mine]
                results = [f.result() for f in futures]
        else:
            results = [function(d, days[d], *args) for d in mine]
        log.debug(f'rank {self._rank}: processed {len(results)} of ' +
                  f'{self.n_days} days')

        if self.single_process:
            return results
        gathered = self._comm.gather(list(zip(mine, results)), root=0)
        if not self.is_root:
            return []
        merged = sorted((pair for part in gathered for pair in part),
                        key=lambda pair: pair[0])
        return [result for _, result in merged]
