"""Subgroup-count recurrences.

Two independent recursions compute the number of subgroups of order p**b in
an abelian p-group of a given type, as a polynomial in p.  One peels off the
largest cyclic factor, the other peels off the smallest order-index step.
They share nothing beyond the polynomial ring, which makes them useful as
cross-checks on each other.
"""

import threading

from .groups import GroupType
from .polyring import ONE, ZERO, IntPoly


class MemoTable:
    """Write-once memo: an entry, once stored, is never changed."""

    def __init__(self):
        self._data = {}
        self._lock = threading.Lock()

    def get(self, key):
        return self._data.get(key)

    def put(self, key, value):
        with self._lock:
            existing = self._data.setdefault(key, value)
        if existing is not value and existing != value:
            raise RuntimeError("memo entry for %r rewritten with a different value" % (key,))
        return existing

    def __len__(self):
        return len(self._data)

    def clear(self):
        with self._lock:
            self._data.clear()


_HIRONAKA_MEMO = MemoTable()
_STEHLING_MEMO = MemoTable()


def count_hironaka(t, b, memo=None):
    """Subgroup count of order p**b via the drop-largest-part recursion."""
    t = GroupType(t)
    if memo is None:
        memo = _HIRONAKA_MEMO
    return _hironaka(t.parts, b, memo)


def _hironaka(parts, b, memo):
    m = sum(parts)
    if b < 0 or b > m:
        return ZERO
    if len(parts) <= 1:
        return ONE
    key = (parts, b)
    hit = memo.get(key)
    if hit is not None:
        return hit
    head = parts[:-1]
    mp = m - parts[-1]
    acc = ZERO
    for i in range(0, min(b, mp) + 1):
        acc = acc + _hironaka(head, i, memo).shift(i)
    # the correction sum is empty exactly when b does not exceed the
    # largest part
    for i in range(m + 1 - b, mp + 1):
        acc = acc - _hironaka(head, i, memo).shift(i)
    return memo.put(key, acc)


def count_stehling(t, b, memo=None):
    """Subgroup count of order p**b via the order-index descent recursion."""
    t = GroupType(t)
    if memo is None:
        memo = _STEHLING_MEMO
    return _stehling(t.descending(), b, memo)


def _stehling(desc, r, memo):
    if r < 0:
        return ZERO
    if not desc:
        return ONE if r == 0 else ZERO
    key = (desc, r)
    hit = memo.get(key)
    if hit is not None:
        return hit
    # subtract 1 at the last position of the initial run of maximal parts
    k = 1
    while k < len(desc) and desc[k] == desc[0]:
        k += 1
    shrunk = list(desc)
    shrunk[k - 1] -= 1
    if shrunk[k - 1] == 0:
        shrunk.pop(k - 1)
    dropped = desc[1:]
    value = _stehling(tuple(shrunk), r - 1, memo) + _stehling(dropped, r, memo).shift(r)
    return memo.put(key, value)


def total_count(t, memo=None):
    """Total number of subgroups, summed over every order index."""
    t = GroupType(t)
    acc = ZERO
    for b in range(0, t.weight + 1):
        acc = acc + count_hironaka(t, b, memo)
    return acc
