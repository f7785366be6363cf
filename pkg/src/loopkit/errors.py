"""Exception types shared across the package."""


class LoopError(Exception):
    """Base class for every error raised by loopkit."""


class NotLatinSquare(LoopError):
    def __init__(self, kind, index):
        self.kind = kind
        self.index = index
        super().__init__(f"{kind} {index} is not a permutation of the elements")


class NoIdentity(LoopError):
    def __init__(self, message="element 0 is not a two-sided identity"):
        super().__init__(message)


class NoTwoSidedInverse(LoopError):
    def __init__(self, element, left=None, right=None):
        self.element = element
        self.left = left
        self.right = right
        super().__init__(
            f"element {element} has left inverse {left} but right inverse {right}"
        )


class OrderMismatch(LoopError):
    def __init__(self, *orders):
        self.orders = orders
        super().__init__("order mismatch: " + ", ".join(str(o) for o in orders))


class BudgetExceeded(LoopError):
    def __init__(self, n, limit, what="order"):
        self.n = n
        self.limit = limit
        super().__init__(f"{what} {n} exceeds the configured budget {limit}")


class UnknownName(LoopError, KeyError):
    def __init__(self, name, valid=(), note=None):
        self.name = name
        self.valid = tuple(valid)
        msg = f"unknown name {name!r}"
        if note:
            msg += f" ({note})"
        if self.valid:
            msg += "; valid names: " + ", ".join(self.valid)
        super().__init__(msg)

    def __str__(self):
        return self.args[0]


class TableFormatError(LoopError, ValueError):
    """Malformed Cayley-table or permutation text."""


class IdentitySyntaxError(LoopError, ValueError):
    def __init__(self, position, expected, text=""):
        self.position = position
        self.expected = expected
        self.text = text
        super().__init__(f"at position {position}: expected {expected}")
