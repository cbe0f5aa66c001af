"""Shared exception types.

Domain errors (bad mathematical input) are plain ValueError so callers can
treat them like any other precondition failure.  Resource-style outcomes get
their own types because they are legitimate results of honest computations
that ran out of budget, and must never be confused with wrong answers.
"""


class BudgetExceeded(RuntimeError):
    """An enumeration or search refused to run past its configured budget."""


class FactorizationIncomplete(RuntimeError):
    """Factoring gave up on a composite cofactor within the effort budget.

    Carries the partial factorization so callers can report or retry.
    """

    def __init__(self, n, partial, cofactor):
        super().__init__(
            f"incomplete factorization of {n}: cofactor {cofactor} unfactored"
        )
        self.n = n
        self.partial = partial      # list of (prime, exponent) found so far
        self.cofactor = cofactor    # composite part that resisted splitting
