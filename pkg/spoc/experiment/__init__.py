from .experiment import ComparisonReport, DayResult, run_day, \
                        run_experiment, load_power_matrix, day_segments, \
                        comparison_columns, outage_columns, summary_columns
from .reports import OutputType, emit_reports, write_frame, write_json
from .transport import DayTransport
