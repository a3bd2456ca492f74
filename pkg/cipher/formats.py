# cipher/formats.py
import base64

from .exceptions import DecodeError
from .schemas import OutputFormat


def encode(data: bytes, fmt: OutputFormat) -> bytes:
    """Render bytes for output: raw as-is, hex lowercase, base64 standard alphabet."""
    fmt = OutputFormat(fmt)
    if fmt is OutputFormat.HEX:
        return data.hex().encode("ascii")
    if fmt is OutputFormat.BASE64:
        return base64.b64encode(data)
    return bytes(data)


def decode(text: bytes, fmt: OutputFormat) -> bytes:
    fmt = OutputFormat(fmt)
    if fmt is OutputFormat.RAW:
        return bytes(text)
    # surrounding whitespace (a trailing newline from an editor) is tolerated
    stripped = bytes(text).strip()
    try:
        if fmt is OutputFormat.HEX:
            return bytes.fromhex(stripped.decode("ascii"))
        return base64.b64decode(stripped, validate=True)
    except ValueError as exc:  # binascii.Error and UnicodeDecodeError included
        raise DecodeError(f"malformed {fmt.value} input: {exc}") from exc
