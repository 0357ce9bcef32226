"""Exception types shared across the package.

Expected negative outcomes (a graph that is not split, a short cycle, a
budget that ran out) are returned as values, not raised.  Exceptions are
reserved for contract violations: bad input, a premise that a caller
promised but did not deliver, or an internal construction step that could
not be completed and must be routed to the exact solver.
"""

from __future__ import annotations


class SplitHCError(Exception):
    """Base class for all package-specific errors."""


class SelfLoop(SplitHCError):
    """An edge (v, v) was supplied."""


class IndexOutOfRange(SplitHCError):
    """A vertex index outside [0, n) was supplied."""


class InvalidPartition(SplitHCError):
    """A clique/independent-set candidate violates its defining property."""


class NotSplitGraph(SplitHCError):
    """Raised by the solver entry point when the input is not split.

    Carries the forbidden-subgraph witness (kind, vertices).
    """

    def __init__(self, kind: str, vertices: tuple[int, ...]):
        super().__init__(f"not a split graph: induced {kind} on {vertices}")
        self.kind = kind
        self.vertices = vertices


class PremiseViolated(SplitHCError):
    """A constructive routine was invoked outside its stated premise."""


class CensusViolation(SplitHCError):
    """A structural constraint on the path-size census failed.

    This signals a mismatch between the structure theory and a concrete
    instance; callers fall back to the exact solver and log the instance.
    """

    def __init__(self, claim_id: str, witness: object = None):
        super().__init__(f"census constraint {claim_id} violated")
        self.claim_id = claim_id
        self.witness = witness


class ClaimViolated(SplitHCError):
    """A guaranteed auxiliary vertex could not be found."""

    def __init__(self, claim_id: str, witness: object = None):
        super().__init__(f"structural guarantee {claim_id} not met")
        self.claim_id = claim_id
        self.witness = witness


class CaseFallthrough(SplitHCError):
    """No branch of a constructive case analysis produced a valid cycle.

    Soundness is preserved (nothing invalid is emitted); the instance is
    routed to the exact solver and logged as a completeness gap candidate.
    """

    def __init__(self, claim_id: str, state: object = None):
        super().__init__(f"construction fell through in {claim_id}")
        self.claim_id = claim_id
        self.state = state


class CoverageGap(SplitHCError):
    """Cycle extension was given pieces that do not cover the vertex set."""


class DegreeTooHigh(SplitHCError):
    """A bipartite source vertex exceeds the maximum allowed degree."""

    def __init__(self, vertex: int, degree: int, limit: int = 3):
        super().__init__(f"vertex {vertex} has degree {degree} > {limit}")
        self.vertex = vertex
        self.degree = degree


class NotBipartite(SplitHCError):
    """The declared bipartition is invalid, or no bipartition exists.

    ``witness`` is an edge internal to a declared part, or an odd closed
    walk discovered during 2-coloring.
    """

    def __init__(self, witness: tuple[int, ...]):
        super().__init__(f"not bipartite: witness {witness}")
        self.witness = witness


class UsesCliqueEdge(SplitHCError):
    """A mapped-back cycle uses an edge internal to the added clique."""

    def __init__(self, edge: tuple[int, int]):
        super().__init__(f"cycle uses clique-internal edge {edge}")
        self.edge = edge


class GenerationExhausted(SplitHCError):
    """Rejection sampling gave up at the configured attempt limit."""

    def __init__(self, attempts: int, family: str):
        super().__init__(f"{family}: no accepted instance in {attempts} attempts")
        self.attempts = attempts
        self.family = family


class OracleBudgetExceeded(SplitHCError):
    """The exact solver ran out of budget where a verdict was required."""


class ParseError(SplitHCError):
    """A graph/cycle/manifest file is malformed."""

    def __init__(self, message: str, line_no: int | None = None):
        where = f" (line {line_no})" if line_no is not None else ""
        super().__init__(f"{message}{where}")
        self.line_no = line_no
