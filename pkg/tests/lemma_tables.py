"""Case tables for correcting one negative nodal root inside a small component.

Labels follow a fixed local numbering a1..a4.  For A_k the chain is
a1 - a2 - ... - ak; for D_4 the branch node is a3.  A condition is a
predicate over ``pos(combo)``, the positivity of u(sum c_i a_i); a word
(i, j, ...) means s_i o s_j o ... (rightmost applied first).  Within a case
the bullets are tried in order and the first match wins.
"""

A1 = {
    "target": 1,
    "bullets": [("only", lambda pos: True, (1,))],
}

A2 = {
    "target": 1,
    "bullets": [
        ("1", lambda pos: pos({2: 1}) and not pos({1: 1, 2: 1}), (1, 2)),
        ("2", lambda pos: pos({2: 1}) and pos({1: 1, 2: 1}), (1,)),
        ("3", lambda pos: not pos({2: 1}), (1,)),
    ],
}

A3_END = {
    "target": 1,
    "bullets": [
        ("1", lambda pos: pos({2: 1}) and pos({3: 1}) and not pos({1: 1, 2: 1})
         and not pos({1: 1, 2: 1, 3: 1}), (1, 2, 3)),
        ("2", lambda pos: pos({2: 1}) and not pos({3: 1}) and not pos({1: 1, 2: 1}), (1, 2)),
        ("3", lambda pos: True, (1,)),
    ],
}

A3_MIDDLE = {
    "target": 2,
    "bullets": [
        ("1", lambda pos: pos({1: 1}) and pos({3: 1}) and not pos({1: 1, 2: 1, 3: 1}), (2, 1, 3, 2)),
        ("2", lambda pos: pos({1: 1}) and pos({3: 1}) and not pos({1: 1, 2: 1})
         and not pos({2: 1, 3: 1}) and pos({1: 1, 2: 1, 3: 1}), (2, 3, 1)),
        ("3", lambda pos: pos({3: 1}) and not pos({2: 1, 3: 1}), (2, 3)),
        ("4", lambda pos: pos({1: 1}) and not pos({1: 1, 2: 1}), (2, 1)),
        ("5", lambda pos: True, (2,)),
    ],
}

D4_LEAF = {
    "target": 1,
    "bullets": [
        ("1", lambda pos: pos({2: 1}) and pos({3: 1}) and pos({4: 1})
         and not pos({1: 1, 2: 1, 3: 1, 4: 1}), (1, 3, 2, 4, 1, 3)),
        ("2", lambda pos: pos({2: 1}) and pos({3: 1}) and pos({4: 1})
         and not pos({1: 1, 2: 1, 3: 1}) and not pos({1: 1, 3: 1, 4: 1}), (1, 3, 2, 4)),
        ("3", lambda pos: pos({3: 1}) and pos({4: 1}) and not pos({1: 1, 3: 1, 4: 1}), (1, 3, 4)),
        # printed as "a2, a4 positive, u(a1+a2+a4) negative, s = s1 s4 s2"; a1+a2+a4 is
        # not a root (three pairwise orthogonal leaves), so this is the 2 <-> 4 mirror of "3"
        ("4", lambda pos: pos({3: 1}) and pos({2: 1}) and not pos({1: 1, 2: 1, 3: 1}), (1, 3, 2)),
        ("5", lambda pos: pos({3: 1}) and not pos({1: 1, 3: 1}), (1, 3)),
        ("6", lambda pos: True, (1,)),
    ],
}

D4_CENTER = {
    "target": 3,
    "bullets": [
        ("1", lambda pos: pos({1: 1}) and pos({2: 1}) and pos({4: 1})
         and not pos({1: 1, 2: 1, 3: 2, 4: 1}), (3, 2, 1, 4, 3)),
        ("2", lambda pos: all(pos({i: 1}) and not pos({i: 1, 3: 1}) for i in (1, 2, 4)),
         (1, 3, 2, 1, 4)),
        ("3", lambda pos: pos({1: 1}) and pos({2: 1}) and not pos({1: 1, 2: 1, 3: 1}), (3, 2, 1, 3)),
        ("4", lambda pos: pos({1: 1}) and pos({4: 1}) and not pos({1: 1, 3: 1, 4: 1}), (3, 1, 4, 3)),
        ("5", lambda pos: pos({2: 1}) and pos({4: 1}) and not pos({2: 1, 3: 1, 4: 1}), (3, 2, 4, 3)),
        ("6", lambda pos: pos({1: 1}) and pos({2: 1}) and not pos({1: 1, 3: 1})
         and not pos({2: 1, 3: 1}), (3, 2, 1)),
        ("7", lambda pos: pos({1: 1}) and pos({4: 1}) and not pos({1: 1, 3: 1})
         and not pos({3: 1, 4: 1}), (3, 4, 1)),
        ("8", lambda pos: pos({2: 1}) and pos({4: 1}) and not pos({2: 1, 3: 1})
         and not pos({3: 1, 4: 1}), (3, 2, 4)),
        ("9", lambda pos: pos({1: 1}) and not pos({1: 1, 3: 1}), (3, 1)),
        ("10", lambda pos: pos({2: 1}) and not pos({2: 1, 3: 1}), (3, 2)),
        ("11", lambda pos: pos({4: 1}) and not pos({3: 1, 4: 1}), (3, 4)),
        ("12", lambda pos: True, (1,)),
    ],
}
