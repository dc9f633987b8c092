"""Process-wide limits.

FACE_LIMIT caps every exhaustive face/cycle enumeration; exceeding it raises
SizeLimit instead of truncating.  The CLI seeds it from SRFOREST_SIZE_LIMIT.
"""

DEFAULT_FACE_LIMIT = 1 << 24

FACE_LIMIT = DEFAULT_FACE_LIMIT


def face_limit(override: int | None = None) -> int:
    return FACE_LIMIT if override is None else override


def set_face_limit(value: int) -> None:
    global FACE_LIMIT
    if value < 1:
        raise ValueError("face limit must be positive")
    FACE_LIMIT = value
