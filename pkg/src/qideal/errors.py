"""Error taxonomy shared by every module.

Validation errors carry the violated law and a witness that reproduces the
violation; resource errors carry the size that overflowed.
"""


class QidealError(Exception):
    pass


class ValidationError(QidealError):
    def __init__(self, law, witness=None, detail=""):
        self.law = law
        self.witness = witness
        self.detail = detail
        msg = law
        if witness is not None:
            msg += f" [witness: {witness!r}]"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class NotALattice(ValidationError):
    pass


class NotAssociative(ValidationError):
    pass


class NotCommutative(ValidationError):
    pass


class NotIntegral(ValidationError):
    pass


class NotDistributive(ValidationError):
    pass


class ChainNotClosed(ValidationError):
    pass


class EmptyCarrier(ValidationError):
    def __init__(self, detail=""):
        super().__init__("carrier is empty", detail=detail)


class QuantaleMismatch(ValidationError):
    pass


class ShapeMismatch(ValidationError):
    pass


class BaseMismatch(ValidationError):
    pass


class NotLower(ValidationError):
    pass


class NotUpper(ValidationError):
    pass


class NotForwardCauchy(ValidationError):
    pass


class DecompositionMismatch(ValidationError):
    pass


class PowerTooLarge(QidealError):
    def __init__(self, count, budget):
        self.count = count
        self.budget = budget
        super().__init__(f"power carrier would have {count} elements (budget {budget})")


class BudgetExceeded(QidealError):
    def __init__(self, count, budget, what="elementary pair checks"):
        self.count = count
        self.budget = budget
        self.what = what
        super().__init__(f"{count} {what} exceed the budget of {budget}")


class GridTooCoarse(QidealError):
    def __init__(self, points, minimum=17):
        self.points = points
        self.minimum = minimum
        super().__init__(f"grid has {points} points; at least {minimum} required")


class UnknownSuite(QidealError):
    def __init__(self, name, known):
        self.name = name
        self.known = tuple(known)
        super().__init__(f"unknown suite {name!r}; known: {', '.join(self.known)}")
