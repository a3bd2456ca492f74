# cipher/exceptions.py


class CipherError(ValueError):
    """Base class for every error raised by the cipher app."""


class InvalidKeyError(CipherError):
    pass


class InvalidArgumentError(CipherError):
    pass


class UndefinedStatisticError(CipherError):
    pass


class DecodeError(CipherError):
    """Input text is not valid in the declared format (hex / base64)."""


class StageError(CipherError):
    def __init__(self, stage: str, message: str):
        self.stage = stage
        super().__init__(f"stage '{stage}': {message}")


class KatParseError(CipherError):
    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")
