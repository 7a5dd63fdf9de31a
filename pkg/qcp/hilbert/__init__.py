#!/usr/bin/env python3
# encoding: utf-8

from qcp.hilbert.spaces import (GridSpace,
                                ModeSpace)
from qcp.hilbert.region import (Region,
                                union)
from qcp.hilbert.wavefunction import (WaveFunction,
                                      gaussian_packet,
                                      inner,
                                      project,
                                      tensor)
from qcp.hilbert.propagators import (DensePropagator,
                                     PiecewisePropagator,
                                     ProductPropagator,
                                     Propagator,
                                     ScheduledPropagator,
                                     SplitOperatorPropagator,
                                     dense_grid_hamiltonian,
                                     evolve)
from qcp.hilbert.network import (ModeNetwork,
                                 beam_splitter_matrix,
                                 complete_isometry,
                                 local_operator,
                                 row_completion)
from qcp.hilbert.ehrenfest import (EhrenfestReport,
                                   ehrenfest_diagnostics)
