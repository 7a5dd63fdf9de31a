#!/usr/bin/env python3
# encoding: utf-8

from qcp.compat.ensemble import (METHODS,
                                 TrajectoryEnsemble,
                                 build_compatible_ensemble,
                                 static_region_frequency,
                                 transport_coupling)
from qcp.compat.statistics import (CompatibilityPair,
                                   CompatibilityReport,
                                   MajorityReport,
                                   compatibility_check,
                                   majority_bound,
                                   majority_statistic,
                                   sampling_band,
                                   sup_expectation,
                                   transition_frequency)
