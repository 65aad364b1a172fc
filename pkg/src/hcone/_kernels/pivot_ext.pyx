# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled integer-preserving pivot; same contract as ``pivot_py.pivot``."""


def pivot(list rows, list obj, Py_ssize_t leave, Py_ssize_t enter, object denom):
    cdef list prow = rows[leave]
    cdef object p = prow[enter]
    cdef object f
    cdef object x
    cdef list row
    cdef Py_ssize_t r, j, width = len(prow), nrows = len(rows)
    cdef bint rescale = p != denom
    for r in range(nrows):
        if r == leave:
            continue
        row = rows[r]
        f = row[enter]
        if f:
            for j in range(width):
                x = prow[j]
                if x:
                    row[j] = (p * row[j] - f * x) // denom
                elif rescale:
                    x = row[j]
                    if x:
                        row[j] = (p * x) // denom
        elif rescale:
            for j in range(width):
                x = row[j]
                if x:
                    row[j] = (p * x) // denom
    f = obj[enter]
    for j in range(width):
        x = prow[j]
        if f and x:
            obj[j] = (p * obj[j] - f * x) // denom
        elif rescale:
            x = obj[j]
            if x:
                obj[j] = (p * x) // denom
    return p
