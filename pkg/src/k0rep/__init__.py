"""Grothendieck groups of repetitive cluster categories of Dynkin type A and D."""

from k0rep.abelian import FgAbelianGroup, Presentation, format_group, from_presentation, is_isomorphic
from k0rep.ar_quiver import build_orbit_quiver, k0_via_ar, mesh_relations
from k0rep.closed_forms import Prediction, predict, verify
from k0rep.coxeter import K0Job, apply_phi_power, k0_repetitive, relation_matrix
from k0rep.dynkin import DynkinSpec, cartan_matrix, coxeter_matrix, order_identities
from k0rep.linalg import IntMatrix, cokernel, mat_pow, smith_normal_form

__all__ = [
    "DynkinSpec", "cartan_matrix", "coxeter_matrix", "order_identities",
    "IntMatrix", "mat_pow", "smith_normal_form", "cokernel",
    "FgAbelianGroup", "Presentation", "from_presentation", "is_isomorphic", "format_group",
    "K0Job", "relation_matrix", "k0_repetitive", "apply_phi_power",
    "build_orbit_quiver", "mesh_relations", "k0_via_ar",
    "Prediction", "predict", "verify",
]
