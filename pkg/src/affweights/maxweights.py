"""Maximal dominant weights and the representative table.

The pipeline: enumerate the positive hubs of the right level and class,
lift each to its maximal dominant content, close up under the finite Weyl
group, and keep one representative per translation class.  Translation
classes are told apart by the residue key

    ((a_0 b_1 - a_1 b_0) mod k d_1, ..., (a_0 b_l - a_l b_0) mod k d_l),

which is invariant under translations and delta-shifts and, restricted to
the closure, is injective.  For every family except A2~2l the keys fill
the whole product of residue rings, giving k^l * prod(d_i) table entries;
for A2~2l the image is the even residues in the first l-1 coordinates and
the table has k^l entries.  Both counts are enforced at build time.
"""

import itertools
from dataclasses import dataclass

from .cartan import Family
from .congruence import hub_equivalent
from .errors import ConsistencyError
from .weights import content_to_hub, defect, hub_to_content
from .weyl import finite_orbit


def residue_key(w, b):
    """The translation-class residues of a content, as a tuple."""
    data = w.data
    k = w.level
    a = data.marks
    a0 = a[0]
    return tuple((a0 * b[i] - a[i] * b[0]) % (k * data.d[i - 1])
                 for i in range(1, data.n))


def positive_hubs(w):
    """All non-negative hubs of level k equivalent to the highest weight,
    in lexicographic order."""
    data = w.data
    k = w.level
    comarks = data.comarks
    n = data.n
    out = []

    def rec(i, rem, acc):
        if i == n - 1:
            if rem % comarks[i] == 0:
                out.append(acc + (rem // comarks[i],))
            return
        for t in range(rem // comarks[i] + 1):
            rec(i + 1, rem - t * comarks[i], acc + (t,))

    rec(0, k, ())
    return sorted(theta for theta in out if hub_equivalent(data, theta, w.labels))


def maximal_dominant_weights(w):
    """(hub, content, defect) for every maximal dominant weight."""
    out = []
    for theta in positive_hubs(w):
        content = hub_to_content(w, theta)
        if content is None or any(x < 0 for x in content):
            raise ConsistencyError(f"hub {theta} passed the congruence but has no valid content")
        out.append((theta, content, defect(w, content)))
    return out


@dataclass(frozen=True)
class TableEntry:
    key: tuple        # residue tuple indexing the translation class
    content: tuple    # representative: minimal b_0, then lexicographically least
    hub: tuple
    defect: object    # Fraction
    orbit: int        # index into MaxWeightTable.orbits
    t_class: tuple    # every closure element sharing this key, sorted


@dataclass(frozen=True)
class Orbit:
    seed_hub: tuple
    seed_content: tuple
    defect: object
    elements: tuple   # sorted contents of the finite-Weyl-group orbit


@dataclass(frozen=True)
class MaxWeightTable:
    weight: object
    orbits: tuple             # one per maximal dominant weight
    entries: dict             # residue key -> TableEntry

    @property
    def size(self):
        return len(self.entries)

    def lookup(self, key):
        return self.entries.get(key)

    def rows(self):
        """Every closure element as (content, hub, key, orbit, is_representative),
        grouped by orbit, contents ascending inside each orbit."""
        reps = {e.content for e in self.entries.values()}
        out = []
        for oid, orbit in enumerate(self.orbits):
            for b in orbit.elements:
                out.append((b, content_to_hub(self.weight, b),
                            residue_key(self.weight, b), oid, b in reps))
        return out

    def to_json_dict(self):
        entries = []
        for key in sorted(self.entries):
            e = self.entries[key]
            entries.append({
                "etaTilde": list(e.key),
                "content": list(e.content),
                "hub": list(e.hub),
                "defect": {"num": e.defect.numerator, "den": e.defect.denominator},
                "orbit": e.orbit,
                "tClass": [list(b) for b in e.t_class],
            })
        return {
            "type": self.weight.data.atype.name,
            "lambda": list(self.weight.labels),
            "k": self.weight.level,
            "entries": entries,
        }


def _expected_keys(w):
    data = w.data
    k = w.level
    if data.atype.family is Family.A2_EVEN:
        ranges = [range(0, 2 * k, 2)] * (data.rank - 1) + [range(k)]
    else:
        ranges = [range(k * di) for di in data.d]
    return set(itertools.product(*ranges))


def build_table(w):
    """Build the representative table for a highest weight.

    Raises ConsistencyError if the table size or key coverage disagrees
    with the predicted count; that would mean corrupted Cartan data, never
    a wrong verdict.
    """
    maximal = maximal_dominant_weights(w)
    groups = finite_orbit(w, [content for _, content, _ in maximal])
    if len(groups) != len(maximal):
        raise ConsistencyError("two maximal dominant weights shared a finite orbit")

    orbits = tuple(Orbit(seed_hub=theta, seed_content=content, defect=dfct, elements=group)
                   for (theta, content, dfct), group in zip(maximal, groups))

    by_key = {}
    for oid, orbit in enumerate(orbits):
        for b in orbit.elements:
            by_key.setdefault(residue_key(w, b), []).append((b, oid))

    entries = {}
    for key, members in by_key.items():
        rep, oid = min(members, key=lambda m: (m[0][0], m[0]))
        entries[key] = TableEntry(
            key=key,
            content=rep,
            hub=content_to_hub(w, rep),
            defect=defect(w, rep),
            orbit=oid,
            t_class=tuple(sorted(b for b, _ in members)),
        )

    expected = _expected_keys(w)
    if set(entries) != expected:
        raise ConsistencyError(
            f"table has {len(entries)} classes, expected {len(expected)}: "
            "residue keys do not match the predicted image")

    return MaxWeightTable(weight=w, orbits=orbits, entries=entries)
