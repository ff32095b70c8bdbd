from .outage import OutageReport, find_free_blocks, su_outage_probability, \
                    outage_modes
