# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled bitmask admissibility kernels; same contract as _kernels_py
for universes of at most 64 assumptions."""

from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, free
from libcpp.unordered_set cimport unordered_set
from libcpp.vector cimport vector


cdef struct Problem:
    int n
    uint64_t *sup
    uint64_t *att


cdef inline bint _attacks(Problem *p, uint64_t s1, uint64_t s2) nogil:
    cdef int i
    for i in range(p.n):
        if (p.att[i] & s2) and not (p.sup[i] & ~s1):
            return True
    return False


cdef bint _admissible(Problem *p, uint64_t s) nogil:
    cdef int b
    if _attacks(p, s, s):
        return False
    for b in range(p.n):
        if (p.att[b] & s) and not _attacks(p, s, p.sup[b]):
            return False
    return True


cdef bint _search(Problem *p, vector[vector[int]] &counters, unordered_set[uint64_t] &failed,
                  uint64_t s, uint64_t *out) nogil:
    cdef int b, k
    if failed.count(s):
        return False
    if _attacks(p, s, s):
        failed.insert(s)
        return False
    for b in range(p.n):
        if (p.att[b] & s) and not _attacks(p, s, p.sup[b]):
            for k in range(<int>counters[b].size()):
                if _search(p, counters, failed, s | p.sup[counters[b][k]], out):
                    return True
            failed.insert(s)
            return False
    out[0] = s
    return True


cdef Problem _load(list sup, list att) except *:
    cdef Problem p
    cdef int i
    p.n = len(sup)
    p.sup = <uint64_t *> malloc(max(p.n, 1) * sizeof(uint64_t))
    p.att = <uint64_t *> malloc(max(p.n, 1) * sizeof(uint64_t))
    for i in range(p.n):
        p.sup[i] = sup[i]
        p.att[i] = att[i]
    return p


cdef void _release(Problem *p):
    free(p.sup)
    free(p.att)


def set_attacks(list sup, list att, uint64_t s1, uint64_t s2):
    cdef Problem p = _load(sup, att)
    try:
        return _attacks(&p, s1, s2)
    finally:
        _release(&p)


def is_admissible(list sup, list att, uint64_t s):
    cdef Problem p = _load(sup, att)
    try:
        return _admissible(&p, s)
    finally:
        _release(&p)


def find_admissible(list sup, list att, uint64_t start, int nbits=0):
    cdef Problem p = _load(sup, att)
    cdef vector[vector[int]] counters
    cdef unordered_set[uint64_t] failed
    cdef uint64_t out = 0
    cdef int a, b
    try:
        counters.resize(p.n)
        for b in range(p.n):
            for a in range(p.n):
                if p.att[a] & p.sup[b]:
                    counters[b].push_back(a)
        if _search(&p, counters, failed, start, &out):
            return out
        return -1
    finally:
        _release(&p)


def enumerate_admissible(list sup, list att, int nbits):
    if nbits > 40:
        raise ValueError("exhaustive enumeration limited to 40 assumptions")
    cdef Problem p = _load(sup, att)
    cdef uint64_t s, top = (<uint64_t> 1) << nbits
    cdef vector[uint64_t] found
    try:
        with nogil:
            s = 0
            while s < top:
                if _admissible(&p, s):
                    found.push_back(s)
                s += 1
        return [found[i] for i in range(found.size())]
    finally:
        _release(&p)
