from .status import StatusMatrix, threshold_status
from .occupancy import OccupancyVector, BinOccupancyVector, slot_occupancy, \
                       bin_occupancy, occupancy_vs_threshold, threshold_grid, \
                       bin_occupancy_table
