"""Exception types shared across the package.

Validation errors carry the offending data (pair, element, point) so callers
can report precise witnesses instead of bare booleans.
"""


class ValidationError(ValueError):
    """A structural axiom failed during validation."""


class SizeLimitExceeded(RuntimeError):
    """An exhaustive oracle was asked to run past its configured bound."""

    def __init__(self, what, size, bound):
        self.what = what
        self.size = size
        self.bound = bound
        super().__init__(f"{what}: size {size} exceeds bound {bound}")


# partial orders and lattices


class NotAPartialOrder(ValidationError):
    def __init__(self, pair, reason):
        self.pair = pair
        self.reason = reason
        super().__init__(f"not a partial order at {pair}: {reason}")


class MissingMeet(ValidationError):
    def __init__(self, pair):
        self.pair = pair
        super().__init__(f"pair {pair} has no greatest lower bound")


class MissingJoin(ValidationError):
    def __init__(self, pair):
        self.pair = pair
        super().__init__(f"pair {pair} has no least upper bound")


class NoBottom(ValidationError):
    def __init__(self):
        super().__init__("no bottom element")


class NoTop(ValidationError):
    def __init__(self):
        super().__init__("no top element")


# smopologies and topologies


class MissingEmpty(ValidationError):
    def __init__(self):
        super().__init__("the empty set is not in the family")


class NotIntersectionClosed(ValidationError):
    def __init__(self, pair):
        self.pair = pair
        super().__init__(f"family not closed under intersection of {pair}")


class NotUnionClosed(ValidationError):
    def __init__(self, pair):
        self.pair = pair
        super().__init__(f"family not closed under union of {pair}")


class DoesNotCover(ValidationError):
    def __init__(self, point):
        self.point = point
        super().__init__(f"family does not cover point {point}")


class NotABasis(ValidationError):
    def __init__(self, reason):
        super().__init__(f"not a basis: {reason}")


class NotSublattice(ValidationError):
    def __init__(self, pair, reason="meet or join escapes the subset"):
        self.pair = pair
        super().__init__(f"not a sublattice at {pair}: {reason}")


class MissingZero(ValidationError):
    def __init__(self):
        super().__init__("designated subset does not contain the bottom element")


class NotSupGenerating(ValidationError):
    def __init__(self, element):
        self.element = element
        super().__init__(f"element {element} is not a join of designated elements below it")


# morphisms


class InvalidFrameHom(ValidationError):
    def __init__(self, reason):
        super().__init__(f"not a frame homomorphism: {reason}")


class NotDominating(ValidationError):
    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"homomorphism is not dominating: {witness}")


class NotCompatible(ValidationError):
    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"homomorphism is not compatible: {witness}")


class GaloisViolation(RuntimeError):
    """The computed right adjoint broke the Galois law (an internal bug)."""

    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"Galois law violated at {witness}")


class NotBounded(ValidationError):
    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"map is not bounded: {witness}")


class NotContinuous(ValidationError):
    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"map is not continuous: {witness}")


class NotWeaklyContinuous(ValidationError):
    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"map is not weakly continuous: {witness}")


class NotPrime(ValidationError):
    """The exterior of a point failed primality (a non-T0 pathology)."""

    def __init__(self, point):
        self.point = point
        super().__init__(f"exterior of point {point} is not a prime open set")


class PrimeNotPreserved(RuntimeError):
    """A right adjoint moved a prime to a non-prime (an internal bug)."""

    def __init__(self, element):
        self.element = element
        super().__init__(f"adjoint image of prime {element} is not prime")


class NotSober(ValidationError):
    def __init__(self, reason):
        super().__init__(f"space is not topologically sober: {reason}")


class NotSpatial(ValidationError):
    def __init__(self, reason):
        super().__init__(f"frame is not spatial: {reason}")


# symbolic real sets


class UnsupportedShape(ValueError):
    """A symbolic set operation left the catalog's closed fragment."""


class AmbiguousOrder(ValueError):
    """Two symbolic endpoints cannot be ordered exactly."""


class ClassificationConflict(RuntimeError):
    """Two independent derivations of a map verdict disagree."""
