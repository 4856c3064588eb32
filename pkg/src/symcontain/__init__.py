"""Containment of symbolic powers in ordinary powers for points on two lines."""

from .configs import (Config, ConfigError, InvalidParams, UnsupportedSize, config_from_json,
                      default_config, load_config, make_ac, make_nci)
from .decide import (SplitResult, Verdict, ac_power_split_exponent, alpha, contains,
                     nci_normal_form, nci_split, resurgence, resurgence_estimate, threshold)
from .oracle import (Bounds, CIComponent, GradedSpace, Intersection, MPower, Power, Product,
                     Report, Symbolic, graded_contains, graded_ideal, graded_symbolic,
                     verify_claim)
from .polyring import Poly, ProjPoint, render, to_h_basis, vanishing_order

__version__ = "0.1.0"
