"""Exception hierarchy.

Every error carries a short machine code used by the command line front end
(``ERROR <CODE>: ...``) and an exit status class.
"""


class RPFError(Exception):
    code = "ERROR"
    exit_status = 2


class IllegalSymbol(RPFError):
    code = "ILLEGAL_SYMBOL"

    def __init__(self, position, symbol=None):
        self.position = position
        self.symbol = symbol
        super().__init__(f"illegal symbol {symbol!r} at position {position}")


class NotDyck(RPFError):
    code = "NOT_DYCK"

    def __init__(self, position):
        self.position = position
        super().__init__(f"not a Dyck word (first violation at position {position})")


class BadHexToken(RPFError):
    code = "BAD_HEX_TOKEN"


class ResultNotDyck(RPFError):
    code = "RESULT_NOT_DYCK"


class DomainError(RPFError):
    code = "DOMAIN_ERROR"


class NotMinimal(RPFError):
    code = "NOT_MINIMAL"


class NonIntegerExponent(RPFError):
    code = "NON_INTEGER_EXPONENT"


class NoFiniteExpansion(RPFError):
    code = "NO_FINITE_EXPANSION"


class BudgetExceeded(RPFError):
    code = "BUDGET_EXCEEDED"
    exit_status = 3


class CapExceeded(RPFError):
    code = "CAP_EXCEEDED"
    exit_status = 3
