"""Small shared helpers: stable ordering keys and JSON encoding of ids.

Object and morphism ids throughout the package are hashable trees built
from strings, ints and tuples.  Python refuses to order mixed types, so we
provide a structural key that does.
"""

from __future__ import annotations


# Tuple ids are widely shared between morphism tables, so keys for tuples
# are memoized by object identity (entries keep the tuple alive, which is
# fine for the finite structures handled here).
_skey_cache = {}


def skey(x):
    """Stable total-order key for id trees (ints, strings, tuples)."""
    if isinstance(x, bool):
        return (0, int(x))
    if isinstance(x, int):
        return (0, x)
    if isinstance(x, str):
        return (1, x)
    if isinstance(x, tuple):
        hit = _skey_cache.get(id(x))
        if hit is not None and hit[0] is x:
            return hit[1]
        out = (2, tuple(skey(c) for c in x))
        _skey_cache[id(x)] = (x, out)
        return out
    if isinstance(x, frozenset):
        return (3, tuple(sorted((skey(c) for c in x))))
    raise TypeError(f"unorderable id component: {x!r}")


def ssorted(xs):
    return sorted(xs, key=skey)


def enc(x):
    """JSON-encodable form of an id tree (tuples become tagged lists)."""
    if isinstance(x, tuple):
        return {"t": [enc(c) for c in x]}
    return x


def dec(x):
    if isinstance(x, dict) and set(x) == {"t"}:
        return tuple(dec(c) for c in x["t"])
    return x
