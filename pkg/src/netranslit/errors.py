"""Exception hierarchy shared by every netranslit module."""


class NetranslitError(Exception):
    """Base class for all errors raised by this package."""


class DataError(NetranslitError):
    """Bad input data (files, documents, words). CLI exit code 2."""


class EmptyWord(DataError, ValueError):
    pass


class UnsupportedScript(DataError, ValueError):
    pass


class RulesError(DataError, ValueError):
    """Invalid syllabification rule set or rules file."""


class ParseError(DataError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class UnknownTag(ParseError):
    pass


class EmptyEntity(DataError, ValueError):
    pass


class FormatError(DataError):
    def __init__(self, message, line=None, path=None):
        self.line = line
        self.path = path
        prefix = ""
        if path is not None:
            prefix += f"{path}: "
        if line is not None:
            prefix += f"line {line}: "
        super().__init__(prefix + message)


class VersionError(FormatError):
    pass


class EmptyCorpus(DataError, ValueError):
    pass


class AlignmentError(DataError, ValueError):
    def __init__(self, message, index=None):
        self.index = index
        super().__init__(message if index is None else f"pair {index}: {message}")


class UntransliterableSyllable(DataError):
    def __init__(self, syllable, unit):
        self.syllable = syllable
        self.unit = unit
        super().__init__(
            f"cannot transliterate syllable {syllable!r}: unit {unit!r} "
            "is unknown to both the model and the grapheme fallback map"
        )


class ShapeError(DataError, ValueError):
    pass


class PipelineError(NetranslitError):
    """Wraps a module error with the position of the entity that caused it."""

    def __init__(self, position, cause):
        self.position = position
        self.cause = cause
        super().__init__(f"entity {position}: {cause}")
