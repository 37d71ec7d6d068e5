"""Exact clasp coefficients for the C2 web category"""
from claspkit.exact_arith import CyclotomicNumber, LaurentPoly, RationalFunction
from claspkit.root_data import Weight

__version__ = "1.0.0"

__all__ = ["CyclotomicNumber", "LaurentPoly", "RationalFunction", "Weight", "__version__"]
