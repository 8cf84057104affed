"""Exact exterior-algebra toolkit for Higgs fields built from holomorphic forms.

Modules by topic:

* :mod:`.scalar`, :mod:`.exterior` -- Gaussian-rational forms and blades
* :mod:`.metric` -- diagonal Hermitian metrics, adjoints, Hodge star
* :mod:`.higgs` -- the Higgs operator, ``T`` and its eigenvalue tables
* :mod:`.curvature` -- pointwise curvature assembly and Bochner forms
* :mod:`.slope` -- degree/slope calculus and the obstruction verdict
* :mod:`.torus` -- single-character flat-torus operator matrices
"""

from .curvature import (PointCurvature, PointFrameData, adjoint_matrix, assemble_F,
                        bochner_value, hhym_flat, iLambda_F)
from .exterior import BasisWord, Form, FrameVector, euler_degree, interior, wedge
from .higgs import (F_table, HiggsField, T_operator, commutator, f_table, simple_T_expansion,
                    super_commutator, theta, theta_adjoint)
from .metric import MetricSpec, adjoint_interior, adjoint_wedge, hodge_star, inner, sharp
from .scalar import I, ONE, ZERO, Scalar
from .slope import (BundleSelector, bigthm_verdict, enumerate_invariant, slope, slope_diff,
                    trivial_action_test)
from .torus import (CharacterSection, OperatorMatrix, TensorWord, TorusModel, adjoint_of,
                    build_op, gigante_girbau, higgs_nakano_check, kodnak_scalar, laplacian,
                    nakano_check, type_shift_audit)

__version__ = "0.1.0"

__all__ = [
    "Scalar", "ZERO", "ONE", "I",
    "Form", "FrameVector", "BasisWord", "wedge", "interior", "euler_degree",
    "MetricSpec", "inner", "sharp", "adjoint_wedge", "adjoint_interior", "hodge_star",
    "HiggsField", "theta", "theta_adjoint", "commutator", "super_commutator", "T_operator",
    "f_table", "F_table", "simple_T_expansion",
    "PointFrameData", "PointCurvature", "adjoint_matrix", "assemble_F", "bochner_value",
    "iLambda_F", "hhym_flat",
    "BundleSelector", "slope", "slope_diff", "enumerate_invariant", "bigthm_verdict",
    "trivial_action_test",
    "TensorWord", "CharacterSection", "OperatorMatrix", "TorusModel", "build_op", "adjoint_of",
    "laplacian", "nakano_check", "higgs_nakano_check", "type_shift_audit", "gigante_girbau",
    "kodnak_scalar",
]
