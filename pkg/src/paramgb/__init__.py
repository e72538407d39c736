"""Groebner bases over rational functions of parameters, with exceptional loci."""

from .coeffs import ParamField, ParamRational, SpaceIdeal, reduce_mod_space
from .division import DivisionResult, divide, s_polynomial
from .groebner import (ExceptionalLocus, GroebnerSystem, buchbergerable, groebner_basis,
                       is_groebner, reduce_basis)
from .idealops import (BrownawellBound, Ideal, brownawell_bound, decompose, eliminate, intersect,
                       member, normal_form, primary_split, quotient, radical_member, same_ideal,
                       saturate)
from .fibres import HilbertData, SweepReport, fibre_sweep, hilbert, specialize
from .parser import lower, parse, parse_point, parse_poly
from .polyring import MonomialOrder, Poly, PolyRing, compare, leading_data

__version__ = "0.1.0"
