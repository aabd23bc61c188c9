"""Exact face decompositions and boundary strata of Coxeter apartments
induced by irreducible representations."""

from .boundary import (AffineSymmetry, BoundaryPoint, ExtendedValue, Ray, RootGroupShadow,
                       Stratum, apply_symmetry, classify_f, classify_f_set, ray_limit,
                       stabilizer_shadow, stratum_parabolic_type, weight_string_exists)
from .fan import (CanonicalFaceId, ChamberFace, Face, Fan, SupportPattern, chamber_intersection,
                  closure_contains, compactification_family, enumerate_faces, face_membership,
                  face_of_point, faces_equal, make_face, same_compactification)
from .repweights import (FaithfulnessError, RepData, SupportSet, WeightError, admissible_subsets,
                         is_admissible, maximal_admissible_subset, support, validate_faithful,
                         weight_set)
from .rootsys import (Base, ClassificationError, RootSystem, SizeLimitError, Weight, WeylElement,
                      build_root_system, dominant_base_for, enumerate_bases, pairing)

__all__ = [
    "AffineSymmetry", "Base", "BoundaryPoint", "CanonicalFaceId", "ChamberFace",
    "ClassificationError", "ExtendedValue", "Face", "Fan", "FaithfulnessError", "Ray",
    "RepData", "RootGroupShadow", "RootSystem", "SizeLimitError", "Stratum", "SupportPattern",
    "SupportSet", "Weight", "WeightError", "WeylElement", "admissible_subsets", "apply_symmetry",
    "build_root_system", "chamber_intersection", "classify_f", "classify_f_set",
    "closure_contains", "compactification_family", "dominant_base_for", "enumerate_bases",
    "enumerate_faces", "face_membership", "face_of_point", "faces_equal", "is_admissible",
    "make_face", "maximal_admissible_subset", "pairing", "ray_limit", "same_compactification",
    "stabilizer_shadow", "stratum_parabolic_type", "support", "validate_faithful",
    "weight_set", "weight_string_exists",
]
