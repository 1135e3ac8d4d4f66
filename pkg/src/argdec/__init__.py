"""Argumentation-based decision making.

Decision frameworks with four selection criteria, their encodings as flat
ABA frameworks, dispute trees, decision graphs and explanations.
"""

from ._kernel import BACKEND
from .aba import AbaFramework, Argument, Rule, Sentence, atom, is_admissible_argument, parse_sentence
from .classical import (
    ConjunctiveFramework,
    LexFramework,
    ParetoFramework,
    adf_from_conjunctive,
    adf_from_pareto,
    conjunctive_from_adf,
    conjunctive_select,
    lex_from_pdf,
    lexicographic_select,
    pareto_efficient,
    pareto_from_adf,
    pdf_from_lex,
    read_decision_table,
)
from .decision import (
    D,
    PS,
    SD,
    WD,
    Adf,
    Criterion,
    GoalSetPreference,
    Pdf,
    comparable_goal_set,
    evaluate,
    preferred_set_decisions,
    select,
    validate_adf,
)
from .dialogical import (
    DialogicalExplanation,
    Verdict,
    dialogical_explain,
    flat_from_tree,
    render_dialogue,
    render_dot,
)
from .disputes import DisputeTree, best_effort_tree, least_assumption_tree
from .errors import *  # noqa: F401,F403
from .flat import check_flat_explanation, explain, flat_explain, flat_explain_preferred
from .graphs import Dg, Edge, Pdg, dg_to_adf, make_dg, meets_dg, pdg_to_pdf
from .io import dumps_problem, loads_problem, parse_problem
from .mappings import criterion_aba, preferred_set_aba

__version__ = "0.1.0"
