"""Bitmask admissibility kernels in plain Python.

Arguments are given as two parallel lists: ``sup[i]`` is the mask of the
assumptions supporting argument i, ``att[i]`` the mask of assumptions its
claim is contrary to.
"""

import sys


def set_attacks(sup, att, s1, s2):
    for i in range(len(sup)):
        if att[i] & s2 and not sup[i] & ~s1:
            return True
    return False


def is_admissible(sup, att, s):
    if set_attacks(sup, att, s, s):
        return False
    for b in range(len(sup)):
        if att[b] & s and not set_attacks(sup, att, s, sup[b]):
            return False
    return True


def find_admissible(sup, att, start, nbits=0):
    """Smallest-first backtracking search for an admissible superset of
    ``start``; returns its mask or -1."""
    n = len(sup)
    counters = [[a for a in range(n) if att[a] & sup[b]] for b in range(n)]
    failed = set()
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 4 * n + 1000))

    def search(s):
        if s in failed:
            return -1
        if set_attacks(sup, att, s, s):
            failed.add(s)
            return -1
        for b in range(n):
            if att[b] & s and not set_attacks(sup, att, s, sup[b]):
                for a in counters[b]:
                    found = search(s | sup[a])
                    if found >= 0:
                        return found
                failed.add(s)
                return -1
        return s

    return search(start)


def enumerate_admissible(sup, att, nbits):
    return [s for s in range(1 << nbits) if is_admissible(sup, att, s)]
