"""Identity registry and verification engine."""

from .engine import (
    UnknownIdentityError,
    check_links,
    check_symbolic_specialization,
    verify,
    verify_all,
    verify_transform,
)
from .records import IdentityRecord, Link, Mismatch, Mode, Status, VerificationReport
from .registry import CONTROL_REGISTRY, REGISTRY, all_ids, get_record

__all__ = [
    "verify", "verify_all", "verify_transform", "check_links", "check_symbolic_specialization",
    "UnknownIdentityError", "IdentityRecord", "Link", "Mismatch", "Mode", "Status",
    "VerificationReport", "REGISTRY", "CONTROL_REGISTRY", "all_ids", "get_record",
]
