"""Exclude distributions of Sidon sets in F_2^m and of graphs of APN functions."""

from .errors import (CapabilityError, DomainError, InternalCheckError,
                     SidonlabError, ValidationError)
from .field import (FieldSpec, dot, gf_inv, gf_mul, gf_pow, is_cube,
                    make_field, mod_inverse, trace_abs, trace_rel3)
from .sidon import (AffineMap, ExcludeDistribution, PointSet, apply_affine,
                    e_max, e_min, ed_equivalent, exclude_distribution,
                    is_maximal, is_sidon, k_cover_value, locally_equivalent,
                    maximality_bound_check, random_affine, random_sidon,
                    uniform_on)
from .vbf import (DDTRow, TruthTable, WalshTable, algebraic_degree,
                  components_all_unbalanced, cyclotomic_equivalent,
                  from_power, graph_of, is_ab, is_apn, is_plateaued,
                  walsh_full)
from .families import FamilySpec, build, build_named, dillon_permutation, exponent_of
from .graphdist import (AlphaBeta, CosetPartition, alpha_beta,
                        carlet_count, conjecture_zero_flat_check,
                        coset_histogram, coset_partition, dillon_dproperty,
                        exclude_dist, exclude_dist_bruteforce,
                        exclude_dist_walsh, integrality_lemma_check,
                        permutation_local_equiv, plateaued_identity_check,
                        uniform_on_Q, uniform_on_Qstar, verify_carlet_cases,
                        verify_gold_kasami, walsh_bound_criterion,
                        walsh_bound_hyperplane)
from .viz import GridLayout, layout_index, render_svg, render_text

__version__ = "0.1.0"
