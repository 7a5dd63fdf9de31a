#!/usr/bin/env python3
# encoding: utf-8

from qcp.classical.space import (Event,
                                 FiniteProbabilitySpace,
                                 product_space)
from qcp.classical.frequency import (MetaTrialReport,
                                     chebyshev_frequency_bound,
                                     exact_frequency_event,
                                     frequency_meta_trials,
                                     frequency_window,
                                     weak_law_sample_size)
from qcp.classical.ratios import (EquivalenceViolation,
                                  conditional_ratios,
                                  equivalence_sweep,
                                  m_p)
