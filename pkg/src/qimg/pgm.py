"""PGM (portable greymap) reader and writer, P2 and P5 with maxval 255.

Pixel bytes 0..255 map to [0,1] by division; writing quantizes back with
round-half-up, so write-then-read is byte-exact and read-then-write
reproduces the original payload.
"""

from __future__ import annotations

import numpy as np

from .errors import ParseError
from .grid import GridImage

__all__ = ["read_pgm", "write_pgm"]

MAXVAL = 255

_WHITESPACE = b" \t\r\n\v\f"


class _Scanner:
    """Tracks a byte offset through the PGM header."""

    def __init__(self, data: bytes, path):
        self.data = data
        self.pos = 0
        self.path = path

    def fail(self, message: str):
        raise ParseError(f"{self.path}: {message}", offset=self.pos)

    def skip_separators(self) -> None:
        # whitespace runs and '#' comments up to end-of-line
        while self.pos < len(self.data):
            byte = self.data[self.pos : self.pos + 1]
            if byte in (b"#",):
                while self.pos < len(self.data) and self.data[self.pos : self.pos + 1] != b"\n":
                    self.pos += 1
            elif byte and byte in _WHITESPACE:
                self.pos += 1
            else:
                return

    def read_token(self) -> bytes:
        self.skip_separators()
        start = self.pos
        while self.pos < len(self.data) and self.data[self.pos : self.pos + 1] not in _WHITESPACE:
            if self.data[self.pos : self.pos + 1] == b"#":
                break
            self.pos += 1
        if self.pos == start:
            self.fail("unexpected end of header")
        return self.data[start : self.pos]

    def read_int(self, what: str) -> int:
        token = self.read_token()
        try:
            return int(token)
        except ValueError:
            self.pos -= len(token)
            self.fail(f"{what} is not an integer: {token!r}")


def read_pgm(path) -> GridImage:
    with open(path, "rb") as fh:
        data = fh.read()
    sc = _Scanner(data, path)
    magic = sc.read_token()
    if magic not in (b"P2", b"P5"):
        sc.pos = 0
        sc.fail(f"not a PGM file (magic {magic!r})")
    width = sc.read_int("width")
    height = sc.read_int("height")
    maxval = sc.read_int("maxval")
    if width < 1 or height < 1:
        sc.fail(f"bad dimensions {width}x{height}")
    if maxval != MAXVAL:
        sc.fail(f"unsupported maxval {maxval}, only {MAXVAL}")

    count = width * height
    if magic == b"P5":
        # exactly one whitespace byte separates the header from the payload
        if sc.pos >= len(data) or data[sc.pos : sc.pos + 1] not in _WHITESPACE:
            sc.fail("missing separator before binary payload")
        sc.pos += 1
        payload = data[sc.pos : sc.pos + count]
        if len(payload) < count:
            sc.pos = len(data)
            sc.fail(f"short payload: {len(payload)} of {count} bytes")
        raster = np.frombuffer(payload, dtype=np.uint8).astype(float)
    else:
        samples = np.empty(count)
        for i in range(count):
            v = sc.read_int(f"sample {i}")
            if not 0 <= v <= MAXVAL:
                sc.fail(f"sample {i} value {v} outside 0..{MAXVAL}")
            samples[i] = v
        raster = samples
    return GridImage(raster.reshape(height, width) / MAXVAL)


def _quantize(pixels: np.ndarray) -> np.ndarray:
    # round-half-up keeps the quantization deterministic across platforms
    return np.floor(pixels * MAXVAL + 0.5).astype(np.uint8)


def write_pgm(path, img: GridImage, binary: bool = True) -> None:
    """Write P5 (default) or P2 ASCII."""
    bytes_ = _quantize(img.pixels)
    if binary:
        header = f"P5\n{img.cols} {img.rows}\n{MAXVAL}\n".encode("ascii")
        with open(path, "wb") as fh:
            fh.write(header + bytes_.tobytes())
    else:
        lines = [f"P2\n{img.cols} {img.rows}\n{MAXVAL}"]
        for row in bytes_:
            lines.append(" ".join(str(int(v)) for v in row))
        with open(path, "w", encoding="ascii") as fh:
            fh.write("\n".join(lines) + "\n")
