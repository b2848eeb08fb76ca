class LadderError(Exception):
    """
    Base class of the errors raised by the ladder toolkit.
    """


class DegenerateSpectrumError(LadderError):

    def __init__(self, operation):
        super(DegenerateSpectrumError, self).__init__(
            "%s needs a non-degenerate top transfer eigenvalue; "
            "the model sits at the g=0 transition" % operation)
        self.operation = operation


class DegenerateStateError(LadderError):

    def __init__(self, z, n):
        super(DegenerateStateError, self).__init__(
            "partition norm Z=%r at N=%d is not positive" % (z, n))
        self.z = z
        self.n = n


class DegenerateFamilyError(LadderError):
    pass


class FamilyMismatchError(LadderError):
    pass


class OracleSizeError(LadderError):

    def __init__(self, what, n, limit):
        super(OracleSizeError, self).__init__(
            "%s: N=%d exceeds the dense limit N<=%d" % (what, n, limit))
        self.n = n
        self.limit = limit


class NullSpaceError(LadderError):

    def __init__(self, label, residual):
        super(NullSpaceError, self).__init__(
            "multiplet vector |%s> is not annihilated by the constraint map "
            "(residual %.3e)" % (label, residual))
        self.label = label
        self.residual = residual


class StructuralResidualError(LadderError):

    def __init__(self, residuals):
        worst = max(residuals.items(), key=lambda item: abs(item[1]))
        super(StructuralResidualError, self).__init__(
            "%d Pauli coefficients fall outside the coupling structure, "
            "largest %s=%.3e" % (len(residuals), worst[0], worst[1]))
        self.residuals = residuals


class NegativeWeightError(LadderError):

    def __init__(self, label, value):
        super(NegativeWeightError, self).__init__(
            "weight %s=%r is negative" % (label, value))
        self.label = label
        self.value = value


class SpecificationError(LadderError):
    pass
