"""Exception types shared across the package."""


class SchubertError(Exception):
    """Base class for all errors raised by this package."""


class NotWeaklyDecreasing(SchubertError):
    """Parts are not weakly decreasing down to zero."""


class ExceedsBox(SchubertError):
    """A part exceeds the row bound, or there are too many nonzero parts."""


class ShrinkingBox(SchubertError):
    """Target box is smaller than the source box."""


class BoxMismatch(SchubertError):
    """Operands live in different boxes."""


class SpaceMismatch(SchubertError):
    """Homology classes live on different Grassmannians."""


class EmptyBox(SchubertError):
    """Operation requires a box with at least one row slot (k > 0)."""


class NotInvertible(SchubertError):
    """Complementary-profile data cannot be inverted to a source partition."""


class NotFactorizable(SchubertError):
    """No amalgamation split matches the requested intersection pattern."""


class MissingExpansion(SchubertError):
    """A required coefficient table is absent from the lookup."""


class UnresolvedSymbols(SchubertError):
    """Resolution left unknown symbols; `.symbols` lists the missing keys."""

    def __init__(self, symbols):
        self.symbols = tuple(symbols)
        names = ", ".join(str(s) for s in self.symbols)
        super().__init__(f"unresolved symbols: {names}")


class PartitionSyntaxError(SchubertError):
    """Malformed textual partition, box, or rational."""


class OracleParseError(SchubertError):
    """Malformed oracle or report file; message carries field context."""
