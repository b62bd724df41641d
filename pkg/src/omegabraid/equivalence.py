"""Deciding equality of braids, with two independent procedures checking each other."""

from __future__ import annotations

from .garside import garside_normal_form
from .handle import DEFAULT_BUDGET, handle_reduce
from .words import BraidWord, GeneralizedBraid, compose, inverse


class OracleDisagreement(AssertionError):
    """Handle reduction and the Garside normal form gave different answers."""


def is_trivial(f: BraidWord, budget: int = DEFAULT_BUDGET) -> bool:
    by_handles = handle_reduce(f, budget).is_empty()
    by_garside = garside_normal_form(f).is_trivial()
    if by_handles != by_garside:
        raise OracleDisagreement(f"triviality of {f}: handles={by_handles}, garside={by_garside}")
    return by_handles


def equivalent(f: BraidWord, g: BraidWord) -> bool:
    """True iff ``f`` and ``g`` represent the same braid."""
    return is_trivial(compose(f, inverse(g)))


def generalized_equivalent(f: GeneralizedBraid, g: GeneralizedBraid) -> bool:
    """Same endpoint set and equivalent words."""
    if f.strands != g.strands or f.endpoints != g.endpoints:
        return False
    return equivalent(f.word, g.word)
