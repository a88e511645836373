"""Multiplets of elementary representations of sl(N, R) induced from maximal parabolics."""
from .exceptions import CapacityError, DomainError, FixtureError, MultiplexError
from .multiplet import (Arrow, Degeneration, KSPair, Multiplet, MultipletKind, OperatorKind,
                        PairRelation, Vertex, classify_degenerations, conformal_factor,
                        covering_arrows, generate_arrows, generate_multiplet, ks_pairing,
                        m_rep_dimension)
from .rootsys import Root, RootSystem, build_root_system, cartan_pairing, dot_reflect, hc_param
from .weyl import (ParabolicSpec, WeylElement, longest_element, multiplet_size,
                   parabolic_subgroup_order, restricted_reflection, weyl_group)

__version__ = "0.1.0"
