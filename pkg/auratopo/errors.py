"""Exceptions raised by the library.

Every exception derives from ``AuraError`` (a ``ValueError``) and keeps
its inputs as attributes, so callers and the CLI can render them.
"""

__all__ = [
    "AuraError", "UniverseMismatch", "UniverseTooLarge", "ScopeError",
    "MapError", "SpaceMismatch", "NotARefinement", "QuarantineError",
    "PartitionError", "UnknownName", "DocumentError", "PropertyFailure"
]


class AuraError(ValueError):
    """base exception of auratopo"""


class UniverseMismatch(AuraError):
    """exception for operands living over different universes"""

    def __init__(self, expected, got):
        """
        expected -> universe size required by the operation
        got -> universe size of the offending operand
        """
        super(UniverseMismatch, self).__init__(expected, got)
        self.expected = expected
        self.got = got

    def __str__(self):
        return "Universe mismatch: expected %d points, got %d" % (
            self.expected, self.got)


class UniverseTooLarge(AuraError):
    """exception for exhaustive scans over too many points"""

    def __init__(self, n, limit, operation):
        super(UniverseTooLarge, self).__init__(n, limit, operation)
        self.n = n
        self.limit = limit
        self.operation = operation

    def __str__(self):
        return "%s supports at most %d points, got %d" % (self.operation,
                                                          self.limit, self.n)


class ScopeError(AuraError):
    """exception for a scope function that fails validation"""

    def __init__(self, validation, path=None):
        """
        validation -> the failed Validation
        path -> document the scope was read from, if any
        """
        super(ScopeError, self).__init__(validation, path)
        self.validation = validation
        self.path = path

    def __str__(self):
        message = "Invalid scope function: %s" % self.validation.summary()
        if self.path is not None:
            return "%s: %s" % (self.path, message)
        return message


class MapError(AuraError):
    """exception for a map that fails validation"""

    def __init__(self, validation):
        super(MapError, self).__init__(validation)
        self.validation = validation

    def __str__(self):
        return "Invalid map: %s" % self.validation.summary()


class SpaceMismatch(AuraError):
    """exception for combining structures built over different spaces"""

    def __init__(self, message=None):
        super(SpaceMismatch, self).__init__(message)
        self.message = message

    def __str__(self):
        if self.message:
            return self.message
        return "Maps do not compose: target of the first map is not the " \
            "source of the second"


class NotARefinement(AuraError):
    """exception for a scope that is not pointwise inside another"""

    def __init__(self, point, message=None):
        super(NotARefinement, self).__init__(point, message)
        self.point = point
        self.message = message

    def __str__(self):
        if self.message:
            return self.message
        return "Not a refinement: aura of point %d is not contained in " \
            "the original aura" % self.point


class QuarantineError(AuraError):
    """exception for quarantining a point whose singleton is not open"""

    def __init__(self, point):
        super(QuarantineError, self).__init__(point)
        self.point = point

    def __str__(self):
        return "Cannot quarantine point %d: its singleton is not open" % \
            self.point


class PartitionError(AuraError):

    def __init__(self, message):
        super(PartitionError, self).__init__(message)
        self.message = message

    def __str__(self):
        return "Not a partition: %s" % self.message


class UnknownName(AuraError, KeyError):
    """exception for a lookup in a named catalog"""

    def __init__(self, kind, name, known=()):
        """
        kind -> what was looked up, like "fixture" or "class"
        name -> the requested name
        known -> names that do exist
        """
        super(UnknownName, self).__init__(kind, name, tuple(known))
        self.kind = kind
        self.name = name
        self.known = tuple(known)

    def __str__(self):
        known = ", ".join(self.known)
        return "Unknown %s '%s' (known: %s)" % (self.kind, self.name, known)


class DocumentError(AuraError):
    """exception for a malformed or inconsistent document"""

    def __init__(self, path, message, lineno=None, colno=None):
        """
        path -> file name, or "<fixture>" for in-memory documents
        message -> what is wrong
        lineno -> 1-based line of the fault, if known
        colno -> 1-based column of the fault, if known
        """
        super(DocumentError, self).__init__(path, message, lineno, colno)
        self.path = path
        self.message = message
        self.lineno = lineno
        self.colno = colno

    def __str__(self):
        where = str(self.path)
        if self.lineno is not None:
            where += ":%d" % self.lineno
            if self.colno is not None:
                where += ":%d" % self.colno
        return "%s: %s" % (where, self.message)


class PropertyFailure(AuraError):
    """exception for a property check that found a counterexample"""

    def __init__(self, name, message, witness=None):
        """
        name -> property name
        message -> description of the failed law
        witness -> the offending input (a space, map or set), if any
        """
        super(PropertyFailure, self).__init__(name, message, witness)
        self.name = name
        self.message = message
        self.witness = witness

    def __str__(self):
        return "In property '{}'. {}".format(self.name, self.message)
