"""Exact finite model checking for generalized closed sets in Chang fuzzy topologies."""
from .classifier import ClassReport, classify, is_g_closed, is_kernel_class_closed, is_weakly_closed, is_weakly_open
from .compactness import (CoverReport, SetFamily, has_fip, is_filterbase, is_quasi_compact,
                          is_weakly_closed_relative, is_weakly_closed_space, is_weakly_compact,
                          is_weakly_compact_relative)
from .lattice import (CapExceeded, Carrier, FuzzySet, Grid, IncompatibleSets, complement,
                      enumerate_grid_sets, join, leq, meet, parse_rational, quasi_coincident,
                      support)
from .operators import Kind, is_x_closed, is_x_open, semi_kernel, wcl, wint, xcl
from .theorems import THEOREM_IDS, Verdict, check_theorem
from .topology import FuzzyTopology, TopologyError, closure, crisp_topology, interior, validate_topology

__version__ = "0.1.0"
