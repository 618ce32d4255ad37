from tangle_shared.invariants.fonts import (
    FontIndex,
    all_fonts,
    four_way_font,
    three_way_font_spectator_A3,
    three_way_font_spectator_A4,
    two_way_font,
)
from tangle_shared.invariants.four_qubit import discriminant, i48, j_invariant, tau4
from tangle_shared.invariants.quartic import (
    QuarticCoefficients,
    quartic_invariants,
    transformed_i3,
    vanishing_directions,
)
from tangle_shared.invariants.report import InvariantReport, full_report, reports_for_all
from tangle_shared.invariants.three_qubit import (
    ThreeQubitInvariants,
    i3_spectator,
    p_invariant,
    t_invariant,
    tau3,
)
from tangle_shared.invariants.two_qubit import TwoQubitInvariant, two_qubit_invariant_list

__all__ = [
    'FontIndex',
    'InvariantReport',
    'QuarticCoefficients',
    'ThreeQubitInvariants',
    'TwoQubitInvariant',
    'all_fonts',
    'discriminant',
    'four_way_font',
    'full_report',
    'i3_spectator',
    'i48',
    'j_invariant',
    'p_invariant',
    'quartic_invariants',
    'reports_for_all',
    't_invariant',
    'tau3',
    'tau4',
    'three_way_font_spectator_A3',
    'three_way_font_spectator_A4',
    'transformed_i3',
    'two_qubit_invariant_list',
    'two_way_font',
    'vanishing_directions',
]
