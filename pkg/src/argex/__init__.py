"""Extensions and explanations for abstract argumentation frameworks."""
from .errors import (ArgexError, InvalidConfig, InvalidFramework, InvalidPath, InvalidQuery,
                     NoExtensions, ParseError, SelfAttacker, StatusMismatch, TooLarge,
                     UndeclaredArgument, UnknownArgument)
from .framework import (ArgSet, AttackPath, Framework, RelationSummary, attack_paths,
                        canonical_family, indirect_relation, is_relevant, relevant_args,
                        set_attacks, set_defends, subframework_without)
from .formats import parse_framework, read_framework, serialize_framework
from .semantics import (AcceptanceStatus, ExtensionPartition, Semantics, Strategy,
                        acceptance_status, check_set, enumerate_extensions,
                        grounded_extension, partition_extensions)
from .necsuff import (ContestReport, Mode, Order, SufficiencyMode, classify_attack,
                      is_necessary_acc, is_necessary_nonacc, is_sufficient_acc,
                      is_sufficient_nonacc, minimal_sufficient_sets, necessary_args_acc,
                      necessary_args_nonacc, sufficient_sets_acc, sufficient_sets_nonacc)
from .explain import (Depth, ExplanationResult, acc_explanation, def_by, minimal_explanation,
                      not_acc_explanation, not_def)

__version__ = "0.1.0"
