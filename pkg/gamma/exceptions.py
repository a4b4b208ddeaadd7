class GammaError(Exception):
    """Base class for errors raised by the gamma library."""


class ConstructionError(GammaError, AssertionError):
    """A built graph violates the tetravalent simple-graph invariants."""


class ColoringError(GammaError):
    """A colouring witness is not proper."""


class SearchBudgetExceeded(GammaError):
    """A combinatorial search expanded more nodes than its budget allows."""

    def __init__(self, stage, budget, expanded):
        self.stage = stage
        self.budget = budget
        self.expanded = expanded
        super().__init__(f'{stage} search exceeded its budget of {budget} nodes ({expanded} expanded)')
