"""Bitmask subset-DP kernels.

Every table is indexed by the set S of vertices already placed (bit i = vertex
i) and holds the best achievable value over all ways to place the remaining
vertices, so a forward greedy pass recovers the lexicographically smallest
optimal ordering.
"""
import numpy as np
from numba import njit

UNREACHED = 127


@njit(cache=True)
def _popcount(x):
    x = x - ((x >> 1) & 0x5555555555555555)
    x = (x & 0x3333333333333333) + ((x >> 2) & 0x3333333333333333)
    x = (x + (x >> 4)) & 0x0F0F0F0F0F0F0F0F
    return ((x * 0x0101010101010101) >> 56) & 0xFF


# de Bruijn lookup for the index of an isolated low bit (all ids are below 32)
_DEBRUIJN = np.int64(0x077CB531)
_DEBRUIJN_INDEX = np.array([0, 1, 28, 2, 29, 14, 24, 3, 30, 22, 20, 15, 25, 17, 4, 8,
                            31, 27, 13, 23, 21, 19, 16, 7, 26, 12, 18, 6, 11, 5, 10, 9], dtype=np.int64)


@njit(cache=True)
def _bit_index(low):
    return _DEBRUIJN_INDEX[((low * _DEBRUIJN) & 0xFFFFFFFF) >> 27]


@njit(cache=True)
def elimination_degree(adj, placed, v):
    """Vertices outside ``placed + v`` reachable from v through ``placed``."""
    vbit = np.int64(1) << v
    comp = vbit
    frontier = vbit
    reach = np.int64(0)
    while frontier:
        fl = frontier & -frontier
        frontier ^= fl
        nb = adj[_bit_index(fl)]
        reach |= nb
        new = nb & placed & ~comp
        comp |= new
        frontier |= new
    return _popcount(reach & ~placed & ~vbit)


@njit(cache=True)
def treewidth_table(adj, n, cap):
    """Entries above ``cap - 1`` are stored as ``cap``; pass an upper bound plus one."""
    full = (np.int64(1) << n) - 1
    table = np.full(np.int64(1) << n, cap, dtype=np.int8)
    table[full] = -1
    for s in range(full - 1, -1, -1):
        best = cap
        free = full & ~s
        while free:
            low = free & -free
            free ^= low
            after = table[s | low]
            if after >= best:
                continue
            q = elimination_degree(adj, s, _bit_index(low))
            val = after if after > q else q
            if val < best:
                best = val
        table[s] = best
    return table


@njit(cache=True)
def boundary_size(adj, s, full):
    nb = np.int64(0)
    rest = s
    while rest:
        low = rest & -rest
        rest ^= low
        nb |= adj[_bit_index(low)]
    return _popcount(nb & full & ~s)


@njit(cache=True)
def cut_size(adj, s, full):
    c = 0
    rest = s
    while rest:
        low = rest & -rest
        rest ^= low
        c += _popcount(adj[_bit_index(low)] & full & ~s)
    return c


@njit(cache=True)
def _prefix_table(adj, n, cut):
    full = (np.int64(1) << n) - 1
    table = np.full(np.int64(1) << n, UNREACHED, dtype=np.int16)
    table[full] = 0
    for s in range(full - 1, -1, -1):
        best = 32767
        free = full & ~s
        while free:
            low = free & -free
            free ^= low
            after = table[s | low]
            if after < best:
                best = after
        here = cut_size(adj, s, full) if cut else boundary_size(adj, s, full)
        table[s] = here if here > best else best
    return table


def separation_table(adj, n):
    return _prefix_table(adj, n, False)


def cutwidth_table(adj, n):
    return _prefix_table(adj, n, True)
