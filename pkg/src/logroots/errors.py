"""Exception hierarchy."""


class LogrootsError(Exception):
    """Base class for all errors raised by this package."""


class SingularMatrix(LogrootsError):
    """Matrix is singular (or numerically indistinguishable from singular)."""


class DimensionError(LogrootsError):
    """Dimension outside the supported range or inconsistent with the input."""


class InconsistentCertificate(LogrootsError):
    """The subspace search and the sigma certificate disagree about
    irreducibility.  Usually a sign of a borderline input; rerun with exact
    rational-angle data."""


class RelationViolated(LogrootsError):
    """The candidate modular-group images do not satisfy S^2 = (ST)^3 = I."""

    def __init__(self, res_s2: float, res_st3: float):
        self.res_s2 = res_s2
        self.res_st3 = res_st3
        super().__init__(
            f"group relations violated: |S^2 - I| = {res_s2:.3e}, "
            f"|(ST)^3 - I| = {res_st3:.3e}"
        )


class NonIntegerChern(LogrootsError):
    """The branch-angle sum did not land on an integer within tolerance.
    Indicates numerical inconsistency; consider exact rational-angle input."""


class ProvenBoundViolated(LogrootsError):
    """A bound that is a theorem for this input class failed -- this signals
    a numerical fault, not a mathematical possibility."""


class RootOutOfProvenRange(LogrootsError):
    """A computed root fell outside its proven window."""


class EmptyIntersection(LogrootsError):
    """Candidate sets from two sound classification routes have empty
    intersection.  Never expected; indicates an internal inconsistency."""


class AmbiguousPart(LogrootsError):
    """A direct-sum component classified as a candidate set, so the direct-sum
    oracle cannot produce a single ground-truth multiset."""


class SchemaError(LogrootsError):
    """Input document failed schema validation."""


class ExactModeError(LogrootsError):
    """Exact mode could not certify the input (angle not recognized as a
    rational with bounded denominator, or modulus not 1)."""
