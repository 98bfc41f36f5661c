"""Frozen reference data for the two desk instances used throughout the
suite.

A12: type A1~2 with labels (1,2,1), level 4.  ROWS_A12 lists the whole
finite-Weyl orbit closure of the maximal dominant weights: content, hub,
residue key, and whether the element is its translation class's
representative.  One published rendition of this table misprints the key
of content (0,2,3); the value here follows the defining formula
(1*2-1*0, 1*3-1*0) mod 4 = (2,3), which is also forced by injectivity:
(0,3) already belongs to the class of (1,1,0) and (1,5,4), and the sixteen
classes must have sixteen distinct keys.

A24: type A2~4 with labels (1,1,0), level 3.
"""

# (content, hub, key, representative?)
ROWS_A12 = [
    ((0, 0, 0), (1, 2, 1), (0, 0), True),
    ((0, 2, 0), (3, -2, 3), (2, 0), True),
    ((0, 2, 3), (6, 1, -3), (2, 3), True),
    ((0, 0, 1), (2, 3, -1), (0, 1), True),
    ((0, 3, 1), (5, -3, 2), (3, 1), True),
    ((0, 3, 3), (7, -1, -2), (3, 3), True),
    ((0, 1, 0), (2, 0, 2), (1, 0), True),
    ((0, 1, 2), (4, 2, -2), (1, 2), True),
    ((0, 3, 2), (6, -2, 0), (3, 2), True),
    ((0, 1, 1), (3, 1, 0), (1, 1), True),
    ((0, 2, 1), (4, -1, 1), (2, 1), True),
    ((0, 2, 2), (5, 0, -1), (2, 2), True),
    ((1, 0, 1), (0, 4, 0), (3, 0), True),
    ((1, 4, 1), (4, -4, 4), (3, 0), False),
    ((1, 4, 5), (8, 0, -4), (3, 0), False),
    ((1, 1, 0), (0, 1, 3), (0, 3), True),
    ((1, 2, 0), (1, -1, 4), (1, 3), True),
    ((1, 2, 4), (5, 3, -4), (1, 3), False),
    ((1, 1, 3), (3, 4, -3), (0, 2), True),
    ((1, 5, 3), (7, -4, 1), (0, 2), False),
    ((1, 5, 4), (8, -3, -1), (0, 3), False),
]

# the finite-Weyl orbits of the closure, keyed by seed content
ORBITS_A12 = {
    (0, 0, 0): {(0, 0, 0), (0, 2, 0), (0, 2, 3), (0, 0, 1), (0, 3, 1), (0, 3, 3)},
    (0, 1, 0): {(0, 1, 0), (0, 1, 2), (0, 3, 2)},
    (0, 1, 1): {(0, 1, 1), (0, 2, 1), (0, 2, 2)},
    (1, 0, 1): {(1, 0, 1), (1, 4, 1), (1, 4, 5)},
    (1, 1, 0): {(1, 1, 0), (1, 2, 0), (1, 2, 4), (1, 1, 3), (1, 5, 3), (1, 5, 4)},
}

HUBS_A12 = [(1, 2, 1), (2, 0, 2), (3, 1, 0), (0, 4, 0), (0, 1, 3)]

# hub -> (maximal dominant content, defect)
MAXIMAL_A12 = {
    (1, 2, 1): ((0, 0, 0), 0),
    (2, 0, 2): ((0, 1, 0), 1),
    (3, 1, 0): ((0, 1, 1), 2),
    (0, 4, 0): ((1, 0, 1), 1),
    (0, 1, 3): ((1, 1, 0), 2),
}

# translation classes with more than one element
MERGED_CLASSES_A12 = [
    {(1, 0, 1), (1, 4, 1), (1, 4, 5)},
    {(1, 1, 0), (1, 5, 4)},
    {(1, 2, 0), (1, 2, 4)},
    {(1, 1, 3), (1, 5, 3)},
]

FLOOR0_A12 = sorted(content for content, _, _, _ in ROWS_A12 if content[0] == 0)

MAXIMAL_A24 = [(0, 0, 0), (1, 1, 0), (1, 2, 1)]
ORBIT_SIZES_A24 = {(0, 0, 0): 4, (1, 1, 0): 4, (1, 2, 1): 1}
FLOOR0_A24 = [(0, 0, 0), (0, 1, 0), (0, 1, 1), (0, 2, 1)]
