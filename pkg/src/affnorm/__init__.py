"""affnorm: normalization (integral closure) of affine rings.

Implements the Grauert-Remmert style normalization loop, a stratified
local-to-global variant, and a parallel modular variant with exact
verification over the rationals, on top of a fraction-free Buchberger
engine with packed-integer monomials.
"""

__version__ = "0.1.0"
