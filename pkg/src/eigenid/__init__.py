"""
eigenid

Eigenvector element magnitudes of Hermitian matrices computed purely from
eigenvalues of minors and rank-one projections, and the inverse problem of
recovering the unit constraint vector that produces prescribed stationary
values of a constrained quadratic form.
"""

__version__ = "1.0.0"
__author__ = "Numerics Team"
__email__ = "numerics@company.com"
