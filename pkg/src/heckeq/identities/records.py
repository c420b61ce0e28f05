"""Registry record types and verification reports."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Optional

from ..ring import Monomial
from .builders import Builder


class Mode(enum.Enum):
    UNIVARIATE = "univariate"
    PARAMETERIZED = "parameterized"
    FINITE_LEMMA = "finite_lemma"
    TRANSFORM_SAMPLED = "transform_sampled"


class Status(enum.Enum):
    VERIFIED = "VERIFIED"
    MISMATCH = "MISMATCH"
    BUILDER_ERROR = "BUILDER_ERROR"


@dataclass(frozen=True)
class Link:
    """A univariate record obtained from a parameterized one.

    With ``P`` the parameterized side after ``a -> sub_a, b -> sub_b`` (and
    ``q -> -q`` when ``negate_q``) and ``D`` the matching univariate side,
    the link asserts ``P = kappa * (c0 + c1 * D)`` on both sides.  ``kappa``
    is a product builder; ``None`` means 1.
    """

    parent: str
    sub_a: Monomial
    sub_b: Monomial
    kappa: Optional[Builder] = None
    c0: Fraction = Fraction(0)
    c1: Fraction = Fraction(1)
    negate_q: bool = False


@dataclass(frozen=True)
class IdentityRecord:
    """One registered identity.

    For UNIVARIATE and PARAMETERIZED records ``lhs`` and ``rhs`` are
    builders.  For FINITE_LEMMA records ``pair`` maps ``(n, params)`` to two
    exact rational functions and ``samples`` lists the parameter dicts (a
    single ``None`` for lemmas without parameters).  TRANSFORM_SAMPLED
    records map ``(params, order)`` to two truncated series.
    """

    id: str
    description: str
    anchor: str
    mode: Mode
    lhs: Optional[Builder] = None
    rhs: Optional[Builder] = None
    default_order: int = 200
    links: tuple = ()
    pair: Optional[Callable[..., Any]] = None
    samples: tuple = ()
    n_range: tuple = (0, 12)
    tags: tuple = ()


@dataclass(frozen=True)
class Mismatch:
    exponent: int
    dega: int
    degb: int
    lhs: Fraction
    rhs: Fraction
    # finite lemmas and sampled transforms: which n or sample failed
    where: Optional[str] = None


@dataclass(frozen=True)
class VerificationReport:
    id: str
    mode: Mode
    order_used: int
    status: Status
    mismatch: Optional[Mismatch] = None
    elapsed_ms: float = 0.0
    term_counts: tuple = (0, 0)
    error: Optional[str] = None
    details: dict = field(default_factory=dict, compare=False)

    @property
    def ok(self) -> bool:
        return self.status is Status.VERIFIED


__all__ = ["Mode", "Status", "Link", "IdentityRecord", "Mismatch", "VerificationReport"]
