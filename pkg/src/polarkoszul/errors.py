"""Exception types shared across the package."""


class DimensionMismatchError(ValueError):
    """Monomials or ideals living in different variable spaces were mixed."""


class PreconditionError(ValueError):
    """An operation was called on input outside its domain."""


class LatticeCapacityError(RuntimeError):
    """The lcm-lattice closure grew past the configured cap."""

    def __init__(self, size, cap):
        super().__init__(
            f"lcm lattice exceeded capacity ({size} > {cap}); "
            "retry with candidates='box' to enumerate the per-variable exponent box instead"
        )
        self.size = size
        self.cap = cap
