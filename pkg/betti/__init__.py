from betti.tables import BettiTable, hs_from_betti
from betti.pure import DegreeSequence, psi_map, pure_table
from betti.cyclic import betti_cyclic_power, betti_module_sum
from betti.bounds import BettiBoundsError, betti_bounds
