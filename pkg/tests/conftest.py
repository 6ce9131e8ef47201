"""Shared test helpers: the brute-force oracle and small utilities.

The oracle enumerates every index subset explicitly and never touches the
package's bit-vector DP, so solver bugs cannot hide in both paths.
"""

from itertools import combinations


def enum_subset_sums(items):
    """All nonempty sub-multiset sums, one entry computed per index subset."""
    items = list(items)
    n = len(items)
    sums = [0] * (1 << n)
    for mask in range(1, 1 << n):
        low = mask & -mask
        sums[mask] = sums[mask ^ low] + items[low.bit_length() - 1]
    return set(sums[1:])


def enum_subset_sums_combinations(items):
    """Slower combinations-based variant, used to cross-check the oracle itself."""
    items = list(items)
    out = set()
    for r in range(1, len(items) + 1):
        for combo in combinations(items, r):
            out.add(sum(combo))
    return out


def enum_common_sums(family):
    common = None
    for items in family:
        sums = enum_subset_sums(items)
        common = sums if common is None else common & sums
    return common or set()
