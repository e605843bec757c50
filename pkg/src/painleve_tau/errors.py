"""Exception types shared across the package."""


class IntegrityError(ArithmeticError):
    """An exact computation produced something it never should.

    Raised for non-exact divisions, non-polynomial quotients and irrational
    residues.  These always indicate a bug rather than bad user input.
    """


class IrrationalResidueError(IntegrityError):
    def __init__(self, coeffs):
        self.coeffs = tuple(coeffs)
        super().__init__(f"irrational residue: coefficients {[str(c) for c in self.coeffs]}")


class GaugeMismatchError(ValueError):
    pass


class VariableMismatchError(ValueError):
    pass
