#!/usr/bin/env python3
# encoding: utf-8

from qcp.tree.structure import (AXIOMS,
                                AxiomViolation,
                                BranchPartition,
                                TreeStructure,
                                load_tree,
                                save_tree,
                                validate_tree)
from qcp.tree.permanence import (PermanenceReport,
                                 ResidenceReport,
                                 permanence_residuals,
                                 residence_statistic)
from qcp.tree.extract import (extract_tree,
                              extract_tree_from_densities)
