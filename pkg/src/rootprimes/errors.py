"""Exception types shared across the package."""


class RootPrimesError(Exception):
    """Base class for all package-specific errors."""


class ContainmentError(RootPrimesError):
    """A vector or lattice was expected inside another lattice but is not."""


class NotARootSystemError(RootPrimesError):
    """A pairing matrix matched no entry of the Cartan catalog.

    Raised only when an upstream invariant is broken: a datum that passed
    validation always decomposes into catalog types.
    """


class NonTypeAError(RootPrimesError):
    """An operation restricted to type-A products received another type."""


class TooLargeError(RootPrimesError):
    """A brute-force oracle was asked to sweep more subsets than allowed."""


class BadPrimeError(RootPrimesError):
    """An operation requiring a good prime received a bad one."""


class ClassificationGapError(RootPrimesError):
    """No certificate branch applies.

    Unreachable for valid data: every prime is either pretty good or admits
    a torsion witness.  Reaching this error means a genuine bug.
    """
