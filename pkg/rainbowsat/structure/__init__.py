from .bounds import audit_bounds
from .degree_two import audit_suspensions, classify_degree_two
from .membership import legal_xi_parameters, xi_membership

__all__ = [
    "audit_bounds",
    "audit_suspensions",
    "classify_degree_two",
    "legal_xi_parameters",
    "xi_membership",
]
