"""grpf: exact cohomology and Pfaffian-side geometry for Gr(2, n).

What lives where:

* :mod:`grpf.weights`   partitions, parabolic weights, Weyl dimensions,
  Poincare polynomials of Grassmannians
* :mod:`grpf.schur`     Clebsch-Gordan, Littlewood-Richardson, the Cauchy
  identity, and the K-theory carrier :class:`~grpf.schur.KClass`
* :mod:`grpf.bwb`       the Borel-Weil-Bott engine
* :mod:`grpf.geometry`  parameter classification, window sets, strata
* :mod:`grpf.sections`  Hodge diamonds and deformations of linear sections,
  exceptional-collection and twisted-vanishing verifiers
* :mod:`grpf.pfaffian`  skew families of 2-forms, exact Pfaffians,
  finite-field point sampling, hypersurface Hodge numbers
* :mod:`grpf.cli`       the ``grpf`` command line tool
"""

from .bwb import BwbResult, bwb_cohomology, cohomology_of_kclass, euler_characteristic
from .diamond import HodgeDiamond
from .geometry import (
    Classification,
    ModelParams,
    WindowSet,
    classify,
    grassmannian_window,
    orthogonal_rectangle,
    pfaffian_stratum_codim,
    pfaffian_window,
    window_sets,
)
from .pfaffian import (
    AMap,
    SamplePoint,
    SkewLinearMatrix,
    build_skew_matrix,
    hypersurface_hodge,
    lg_ext_profile,
    lg_hom_shift,
    pfaffian_polynomial,
    sample_y2,
    submaximal_pfaffians,
)
from .schur import (
    KClass,
    cauchy_exterior_cotangent,
    clebsch_gordan_rank2,
    littlewood_richardson,
)
from .sections import (
    h1_tangent_y1,
    hodge_diamond_y1,
    twisted_ext_vanishing,
    verify_strong_exceptional,
)
from .weights import GLWeight, Partition, PoincarePolynomial, grassmannian_poincare, rho, weyl_dimension

__version__ = "0.1.0"
