"""Exception types shared across the package."""


class BimodlabError(Exception):
    pass


class AssociativityViolation(BimodlabError):
    def __init__(self, i, j, l):
        super().__init__("associativity fails on basis triple (%d, %d, %d)" % (i, j, l))
        self.triple = (i, j, l)


class NoUnit(BimodlabError):
    pass


class NotSplit(BimodlabError):
    """A simple quotient of the algebra is not one-dimensional over the base field."""


class NotAdmissible(BimodlabError):
    """Quiver relations violate admissibility (path length < 2, or the arrow
    ideal is not nilpotent in the quotient)."""


class InconsistentRelations(BimodlabError):
    """Relations force a vertex idempotent to zero."""


class UnsupportedRadical(BimodlabError):
    """Radical computation from raw structure constants needs characteristic 0;
    use a quiver presentation over prime fields."""


class HypothesisFailed(BimodlabError):
    """A stated hypothesis of a certification routine does not hold."""


class WorkspaceError(BimodlabError):
    def __init__(self, message, line=None, col=None):
        self.line = line
        self.col = col
        self.message = message
        where = ""
        if line is not None:
            where = "line %d" % line + (", col %d" % col if col is not None else "") + ": "
        super().__init__(where + message)
