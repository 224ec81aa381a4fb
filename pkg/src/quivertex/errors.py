"""Exception types shared across the engine."""


class QuivertexError(Exception):
    """Base class for engine errors."""


class PoleError(QuivertexError, ZeroDivisionError):
    """A q-Pochhammer factor with negative index vanished, or a denominator
    Pochhammer vanished without a compensating numerator zero."""


class NonTruncatingError(QuivertexError):
    """A q-binomial series was requested for a monomial of z-degree zero."""


class CapMismatch(QuivertexError):
    """Two truncated series with different degree caps were combined."""


class OutOfDiagram(QuivertexError):
    """A box coordinate lies outside the Young diagram."""


class NotInterlacing(QuivertexError):
    """A Pieri coefficient was requested for a non-interlacing pair."""


class DegenerateSpecialization(QuivertexError):
    """The chosen (hbar, q) made a Gram matrix singular; pick another point."""


class UnresolvedLimit(QuivertexError):
    """A chamber limit left residual dependence on a framing parameter."""


class InvalidFixedPoint(QuivertexError):
    """A fixed-point datum violates the per-vertex box-count condition."""
