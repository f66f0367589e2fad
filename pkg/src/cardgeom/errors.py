"""Exception hierarchy shared by every module."""


class CardGeomError(ValueError):
    pass


class MixedSpaces(CardGeomError):
    pass


class DivisionByZero(CardGeomError, ZeroDivisionError):
    pass


class UnsupportedOrder(CardGeomError):
    pass


class UnsupportedDeck(CardGeomError):
    pass


class InvalidCode(CardGeomError):
    pass


class DuplicateCards(CardGeomError):
    pass


class ZeroCard(CardGeomError):
    pass


class NotAMatch(CardGeomError):
    pass


class NotAQuad(CardGeomError):
    pass


class OutOfRange(CardGeomError):
    pass


class EvenIndex(CardGeomError):
    pass


class NoCommonSymbol(CardGeomError):
    pass


class MultipleCommonSymbols(CardGeomError):
    pass


class BudgetTooSmall(CardGeomError):
    pass


class OriginInSet(CardGeomError):
    pass
