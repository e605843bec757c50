"""Normalization profiles for the Painleve III (D7) Wronskians."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..scalars import ROOT4_3, SQRT3, NFScalar, as_scalar


@dataclass(frozen=True)
class Profile:
    """Constants ``a`` (Jordan-chain coupling) and ``c`` (first entry) of a normalization."""

    name: str
    a: object
    c: object

    def C(self, n: int):
        """Toda / Burchnall-Chaundy constant C_n for the tau functions of this profile."""
        return self.c * self.c if n == 0 else self.a


CANONICAL = Profile("canonical", SQRT3, ROOT4_3)
ALTERNATE = Profile("alternate", Fraction(2, 3), Fraction(1))

PROFILES = {p.name: p for p in (CANONICAL, ALTERNATE)}


def get_profile(profile) -> Profile:
    if isinstance(profile, Profile):
        return profile
    try:
        return PROFILES[profile]
    except KeyError:
        raise ValueError(f"unknown profile {profile!r}; choose from {sorted(PROFILES)}") from None


def custom_profile(a, c, name: str = "custom") -> Profile:
    a, c = as_scalar(a), as_scalar(c)
    if not a or not c:
        raise ValueError("profile constants must be non-zero")
    return Profile(name, a, c)


def column_scale(profile: Profile, n: int):
    """Product of the column factors c a^j, j < |n|, pulled out of Wr(W_delta..W_n)."""
    out = NFScalar.rational(1) if isinstance(profile.a, NFScalar) or isinstance(profile.c, NFScalar) else Fraction(1)
    for j in range(abs(n)):
        out = out * profile.c * profile.a**j
    return out
