#!/usr/bin/env python3
# encoding: utf-8

from qcp.cournot.functional import (DEFAULT_THRESHOLD,
                                    CournotVerdict,
                                    ParticularCase,
                                    cournot_verdict,
                                    difference_norm,
                                    m_psi,
                                    m_psi_gap,
                                    particular_case)
from qcp.cournot.probes import (DISJOINT_BOUND,
                                ConsistencyReport,
                                ProbeRecord,
                                complement_overlap,
                                consistency_probe,
                                consistency_scan,
                                fac_ratio,
                                j_residual,
                                support_condition)
