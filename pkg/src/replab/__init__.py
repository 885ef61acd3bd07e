"""Binary words avoiding large squares and fractional powers."""
from .words import (AvoidanceSpec, CheckerState, EmptyWordError, ExponentThreshold,
                    InvalidSpecError, InvalidSymbolError, ReplabError, Violation,
                    ViolationKind, Word, extend_and_check, find_violation, max_exponent,
                    minimal_period)
from .tree import Inconclusive, NotFiniteError, TreeReport, explore, longest_avoiding_words
from .morphisms import (AlphabetMismatchError, UniformMorphism, UnknownMorphismError, apply,
                        check_images_avoid, check_inclusion, check_interchange, compose,
                        generate_avoiding, squarefree_ternary)
from .enumeration import (CountTable, ForbiddenSet, GrowthEstimate, automaton_counts,
                          count_avoiding, growth_lower_from_morphism, growth_upper,
                          minimal_forbidden)
from .discovery import block_filter, infer_avoided_blocks, propose_morphisms

__version__ = "0.1.0"
