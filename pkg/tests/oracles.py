"""Independent brute-force counts used as test oracles."""

import itertools


def strict_subset_chains(k: int, m: int) -> int:
    """Strictly increasing chains S0 ⊂ ... ⊂ Sm of subsets of a k-element set."""
    subsets = [frozenset(c) for r in range(k + 1) for c in itertools.combinations(range(k), r)]
    return sum(1 for chain in itertools.product(subsets, repeat=m + 1)
               if all(a < b for a, b in zip(chain, chain[1:])))


def subset_chains(k: int, m: int) -> int:
    """Weakly increasing chains of length m+1: each element enters at one of m+1 steps or never."""
    return (m + 2) ** k
