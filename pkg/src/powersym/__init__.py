"""Multiple power residue symbols: Legendre, Redei and triple cubic symbols,
Magnus expansions and Milnor invariants of link-type presentations."""

from .arith import is_prime, legendre_symbol, solve_legendre_ternary, sqrt_mod_p
from .cubic import (CubicRingElem, ThetaCertificate, build_theta_certificate,
                    cube_condition, cubic_norm, cubic_splitting_oracle,
                    find_alpha, tau_conjugate, triple_cubic_symbol)
from .eisenstein import (EisInt, EisPrime, auxiliary_prime, b_s_vanishes,
                         cube_root_in_field, cubic_character, normalize_prime,
                         residue_field_of)
from .errors import SymbolError
from .magnus import (GroupWord, coefficient_matrix, expand, fox_coefficient,
                     magnus_coefficient, proper_shuffles, shuffles)
from .milnor import (LinkPresentation, indeterminacy, milnor_invariant,
                     milnor_number, tuple_symbol, unipotent_rep)
from .redei import construct_alpha, redei_splitting_oracle, redei_symbol
from .symbol import SymbolValue

__version__ = "0.1.0"
