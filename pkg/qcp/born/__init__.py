#!/usr/bin/env python3
# encoding: utf-8

from qcp.born.measurement import (NEUTRAL,
                                  READY,
                                  MeasurementModel,
                                  ideal_pointer_model,
                                  noisy_pointer_model,
                                  spin_model,
                                  unrecorded_model)
from qcp.born.povm import (Povm,
                           bilinear_form,
                           build_povm,
                           direct_probability,
                           neutral_weight,
                           outcome_probability,
                           save_povm)
from qcp.born.frequency import (born_rule_frequency_weight,
                                ensemble_frequency_weight,
                                materialized_frequency_weight)
