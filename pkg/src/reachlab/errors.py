class ReachlabError(Exception):
    """Base class for analysis errors raised by reachlab."""


class NotRankNMinus1(ReachlabError):
    pass


class NotCircularNormalized(ReachlabError):
    pass


class NotProperNonempty(ReachlabError):
    pass


class ChainIncomplete(ReachlabError):
    pass


class CosetNotInside(ReachlabError):
    pass


class NotSubgroupPair(ReachlabError):
    pass


class TooLarge(ReachlabError):
    pass


class Unreachable(ReachlabError):
    pass


class LemmaAFailure(ReachlabError):
    """No coset pair (C, u) exists; the automaton is not standardized CR."""


class NotCompletelyReachable(ReachlabError):
    pass


class BadN(ReachlabError):
    pass


class OutOfRange(ReachlabError):
    pass


class ParseError(ValueError):
    """Malformed automaton, word or set text, with a 1-based position."""

    def __init__(self, message, line=1, column=1):
        super().__init__(f"{line}:{column}: {message}")
        self.line = line
        self.column = column
