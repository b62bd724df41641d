"""Handle reduction: a rewriting procedure deciding triviality of braid words."""

from __future__ import annotations

from .words import BraidWord, Letter

DEFAULT_BUDGET = 10**6


class ReductionBudgetExceeded(RuntimeError):
    pass


def _find_handle(letters: list[Letter]) -> tuple[int, int] | None:
    """Locate the handle whose right end is leftmost.

    A handle of index ``i`` is a factor ``s_i^e v s_i^-e`` where ``v`` has no
    letter of index ``i`` or ``i - 1``. The one ending first contains no other
    handle, so reducing it is always permitted.
    """
    last: dict[int, int] = {}  # index -> position of its latest occurrence
    for k, (i, e) in enumerate(letters):
        j = last.get(i, -1)
        if j >= 0 and letters[j][1] == -e and last.get(i - 1, -1) < j:
            return j, k
        last[i] = k
    return None


def _reduce_at(letters: list[Letter], j: int, k: int) -> list[Letter]:
    i, e = letters[j]
    middle = []
    for a, d in letters[j + 1:k]:
        if a == i + 1:
            middle += [(i + 1, -e), (i, d), (i + 1, e)]
        else:
            middle.append((a, d))
    return letters[:j] + middle + letters[k + 1:]


def handle_reduce(f: BraidWord, budget: int = DEFAULT_BUDGET) -> BraidWord:
    """Reduce handles until none is left.

    The result represents the same braid as ``f`` and is empty exactly when
    ``f`` is trivial. Raises :class:`ReductionBudgetExceeded` after ``budget``
    reduction steps.
    """
    letters = list(f.letters)
    steps = 0
    while True:
        found = _find_handle(letters)
        if found is None:
            return BraidWord(f.strands, tuple(letters))
        steps += 1
        if steps > budget:
            raise ReductionBudgetExceeded(f"handle reduction exceeded {budget} steps")
        letters = _reduce_at(letters, *found)


def is_trivial(f: BraidWord, budget: int = DEFAULT_BUDGET) -> bool:
    return handle_reduce(f, budget).is_empty()
