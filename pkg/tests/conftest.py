import itertools

from hypothesis import strategies as st

from gpfp.core import BVector


def b_vectors(max_n: int = 4, max_entry: int = 4, min_n: int = 1):
    """Valid b-vectors (``(1,)`` excluded)."""
    return (
        st.lists(st.integers(1, max_entry), min_size=min_n, max_size=max_n)
        .filter(lambda e: tuple(e) != (1,))
        .map(BVector)
    )


def battery(max_n: int, max_entry: int, min_n: int = 1):
    """Every valid b-vector with ``n <= max_n`` and entries ``<= max_entry``."""
    out = []
    for n in range(min_n, max_n + 1):
        for e in itertools.product(range(1, max_entry + 1), repeat=n):
            if e != (1,):
                out.append(BVector(e))
    return out
