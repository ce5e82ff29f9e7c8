"""Braid-group representations from Majorana operators, with verification.

Subpackages:

* :mod:`~majorana_braids.clifford` -- sparse Clifford-algebra arithmetic
* :mod:`~majorana_braids.linalg` -- dense matrices and the Jordan-Wigner basis
* :mod:`~majorana_braids.quaternions` -- SU(2)/quaternion layer
* :mod:`~majorana_braids.representations` -- representation constructors
* :mod:`~majorana_braids.verifiers` -- relation and property checkers
* :mod:`~majorana_braids.kitaev` -- blade-exponential evolution and the chain
* :mod:`~majorana_braids.cli` -- command-line interface
"""

__version__ = "0.1.0"

from .clifford import (  # noqa: F401
    CliffordElement,
    FermionPair,
    blade,
    conjugate_action,
    fermion_from_majoranas,
    generator,
    invert_binomial,
)
from .linalg import (  # noqa: F401
    DimensionGuardError,
    JordanWignerBasis,
    element_to_matrix,
    exp_blade,
    hermitian_eigenvalues,
    jordan_wigner,
    matrix_from_json,
    matrix_to_json,
)
from .quaternions import Quaternion, fibonacci_generators, to_su2  # noqa: F401
from .representations import (  # noqa: F401
    B_II,
    BELL_A,
    BELL_B,
    BELL_M,
    R_GATE,
    SWAP,
    BraidWord,
    MajoranaString,
    UnitaryRep,
    bell_basis_string,
    evaluate_word,
    extraspecial_rep,
    fibonacci_rep,
    ivanov,
    jones_from_tl,
    quaternion_triple_rep,
    temperley_lieb,
)
from .verifiers import (  # noqa: F401
    VerificationReport,
    check_braid_relations,
    check_entangling,
    check_extraspecial,
    check_majorana_string,
    check_parameterized_ybe,
    check_tl_relations,
    check_ybe,
    generator_order,
    solve_theta2,
)
from .kitaev import (  # noqa: F401
    ChainSpec,
    ThetaSchedule,
    chain_hamiltonian,
    gap_scan,
    parity_operator,
    r_breve,
    schrodinger_residual,
    two_site_hamiltonian,
)
