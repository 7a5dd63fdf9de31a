#!/usr/bin/env python3
# encoding: utf-8

from qcp.squant.sset import (ProductSSet,
                             SSet)
from qcp.squant.process import (QuantumProcess,
                                sigma_additivity_residual)
from qcp.squant.product import (MAX_DIMENSION,
                                SymbolicProduct,
                                power,
                                product)
