"""Exception hierarchy and enumeration guards."""

from __future__ import annotations

import os

GUARD_ENV = "SCHROME_GUARD_OVERRIDE"


class SchromeError(Exception):
    """Base class for all library errors."""


class InvalidFacet(SchromeError):
    pass


class EmptyComplex(SchromeError):
    pass


class UnknownVertex(SchromeError):
    pass


class UnknownComplex(SchromeError):
    pass


class InvalidParameters(SchromeError):
    pass


class InvalidInput(SchromeError):
    pass


class InvalidFamily(SchromeError):
    pass


class DegenerateLattice(SchromeError):
    pass


class VerificationError(SchromeError):
    """Two routes that must agree returned different results."""


class TooLarge(SchromeError):
    """An enumeration guard tripped (lift with SCHROME_GUARD_OVERRIDE=1)."""


class LatticeTooLarge(TooLarge):
    pass


def guards_lifted() -> bool:
    return os.environ.get(GUARD_ENV, "").strip().lower() in {"1", "true", "yes", "on"}


def check_guard(ok: bool, message: str, exc: type[TooLarge] = TooLarge) -> None:
    if not ok and not guards_lifted():
        raise exc(f"{message} (set {GUARD_ENV}=1 to override)")
