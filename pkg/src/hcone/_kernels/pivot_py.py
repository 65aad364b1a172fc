"""Pure-Python integer-preserving pivot (fallback for the compiled kernel)."""


def pivot(rows, obj, leave, enter, denom):
    """Pivot an integer tableau in place and return the new common denominator.

    Every entry ``t`` stands for the rational ``t / denom``.  After the pivot
    on ``rows[leave][enter]`` (which must be positive) the new denominator is
    that pivot element; all divisions below are exact.
    """
    prow = rows[leave]
    p = prow[enter]
    for r in range(len(rows)):
        if r == leave:
            continue
        row = rows[r]
        f = row[enter]
        if f:
            for j in range(len(row)):
                row[j] = (p * row[j] - f * prow[j]) // denom
        elif p != denom:
            for j in range(len(row)):
                if row[j]:
                    row[j] = (p * row[j]) // denom
    f = obj[enter]
    if f:
        for j in range(len(obj)):
            obj[j] = (p * obj[j] - f * prow[j]) // denom
    elif p != denom:
        for j in range(len(obj)):
            if obj[j]:
                obj[j] = (p * obj[j]) // denom
    return p
