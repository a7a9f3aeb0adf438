"""Brute-force oracles, independent of the engine's graph machinery.

Everything here enumerates: words are filtered against raw constraint
translates, global admissibility is decided by the pumping-margin argument
(a locally admissible word extendable by at least the vertex count on each
free side repeats a window, hence extends to a configuration), and module
operations are checked on full element sets.
"""

import itertools

from shiftlab import modlin


def locally_admissible_words(nsym, length, offsets, allowed, base=0, onesided=False):
    """Words of the given length satisfying every constraint translate inside.

    `offsets` are the window offsets normalized to min 0; `base` is the
    original minimum of the constraint window, which matters on N where
    translates are anchored at absolute positions >= base.
    """
    span = max(offsets) + 1 if offsets else 1
    out = []
    for word in itertools.product(range(nsym), repeat=length):
        ok = True
        for t in range(length - span + 1):
            if onesided and t < 0:
                continue
            if tuple(word[t + o] for o in offsets) not in allowed:
                ok = False
                break
        if ok:
            out.append(word)
    return out


def global_blocks_z(nsym, width, offsets, allowed, margin):
    """Globally admissible width blocks on Z by two-sided margin extension."""
    middles = set()
    total = width + 2 * margin
    for word in locally_admissible_words(nsym, total, offsets, allowed):
        middles.add(word[margin : margin + width])
    return frozenset(middles)


def global_blocks_n(nsym, width, offsets, allowed, base, position, margin):
    """Globally admissible blocks at [position, position+width) on N.

    Enumerates words on [0, position + width + margin) and keeps those whose
    constraint translates (anchored at absolute positions >= base) all hold.
    """
    length = position + width + margin
    span = max(offsets) + 1 if offsets else 1
    middles = set()
    for word in itertools.product(range(nsym), repeat=length):
        ok = True
        for anchor in range(base, length - span + 1):
            if tuple(word[anchor + o] for o in offsets) not in allowed:
                ok = False
                break
        if ok:
            middles.add(word[position : position + width])
    return frozenset(middles)


def submodule_elements(sub):
    return frozenset(modlin.elements(sub))


def rowspace_elements(modulus, ambient, rows):
    """All Z/m combinations of the given generator rows."""
    out = set()
    for coeffs in itertools.product(range(modulus), repeat=len(rows)):
        v = [0] * ambient
        for c, row in zip(coeffs, rows):
            for i, x in enumerate(row):
                v[i] = (v[i] + c * x) % modulus
        out.add(tuple(v))
    if not rows:
        out.add(tuple([0] * ambient))
    return frozenset(out)


