"""Reference n=5 orbit decompositions for the three congruence families.

Each row is (element text, image tuple text, rank, orbit label).  Orbit labels
only matter up to the partition they induce; reproduction checks compare the
set of orbits, not the label strings.
"""

TABLE_PD_5 = [
    ("5'", "(4;0;0;1;0)", 1, "O1"),
    ("4'+1'", "(0;2;0;2+1;0)", -1, "O2"),
    ("3'+2'", "(2+2;0;0;1;0)", 2, "O3"),
    ("3'+1'+1", "(2;2;0;1;0)", 0, "O4"),
    ("3'+1+1'", "(2;0;2;1;0)", 1, "O4"),
    ("2'+2+1'", "(0;4;0;1;0)", -1, "O1"),
    ("2+2'+1'", "(0;0;4;1;0)", 0, "O1"),
    ("2'+1'+1+1", "(2;0;0;2+1;0)", 1, "O2"),
    ("2'+1+1'+1", "(0;0;2;2+1;0)", 0, "O2"),
    ("2'+1+1+1'", "(0;2;0;0;3)", -1, "O5"),
    ("1'+1+1+1+1", "(0;2+2;0;1;0)", -2, "O3"),
    ("1+1'+1+1+1", "(0;2;2;1;0)", -1, "O4"),
    ("1+1+1'+1+1", "(2;0;0;0;3)", 1, "O5"),
    ("1+1+1+1'+1", "(0;0;2+2;1;0)", 0, "O3"),
    ("1+1+1+1+1'", "(0;0;2;0;3)", 0, "O5"),
]

TABLE_A_5 = [
    ("5r", "(4;0;0;1)", 1, "O1"),
    ("4r+1r", "(0;2;0;2+1)", -1, "O2"),
    ("4b+1r", "(0;0;4;1)", 0, "O1"),
    ("3r+2r", "(2+2;0;0;1)", 2, "O3"),
    ("3r+2b", "(2;0;2;1)", 1, "O4"),
    ("3r+1r+1r", "(2;2;0;1)", 0, "O4"),
    ("2r+2r+1r", "(0;4;0;1)", -1, "O1"),
    ("2b+2r+1r", "(0;0;2;2+1)", 0, "O2"),
    ("2b+2b+1r", "(0;0;2+2;1)", 0, "O3"),
    ("2r+1r+1r+1r", "(2;0;0;2+1)", 1, "O2"),
    ("2b+1r+1r+1r", "(0;2;2;1)", -1, "O4"),
    ("1r+1r+1r+1r+1r", "(0;2+2;0;1)", -2, "O3"),
]

TABLE_POD2_5 = [
    ("(5;0)", "(0;0;4;1)", 0, "O1"),
    ("(0;5)", "(0;0;2+2;1~)", 0, "O2"),
    ("(4+1;0)", "(4;0;0;1)", 1, "O1"),
    ("(0;4+1)", "(0;4;0;1~)", -1, "O3"),
    ("(4;1)", "(4;0;0;1~)", 1, "O3"),
    ("(1;4)", "(0;4;0;1)", -1, "O1"),
    ("(3+2;0)", "(2;0;2;1)", 1, "O4"),
    ("(0;3+2)", "(0;2;2;1~)", -1, "O5"),
    ("(3;2)", "(0;2;2;1)", -1, "O4"),
    ("(2;3)", "(2;0;2;1~)", 1, "O5"),
    ("(3+1;1)", "(0;0;2+2;1)", 0, "O6"),
    ("(1;3+1)", "(0;0;4;1~)", 0, "O3"),
    ("(2+2+1;0)", "(2+2;0;0;1)", 2, "O6"),
    ("(0;2+2+1)", "(0;2+2;0;1~)", -2, "O2"),
    ("(2+2;1)", "(2+2;0;0;1~)", 2, "O2"),
    ("(1;2+2)", "(0;2+2;0;1)", -2, "O6"),
    ("(2+1;2)", "(2;2;0;1)", 0, "O4"),
    ("(2;2+1)", "(2;2;0;1~)", 0, "O5"),
]

TABLES = {"pd": TABLE_PD_5, "a": TABLE_A_5, "pod2": TABLE_POD2_5}


def orbit_partition(rows) -> set[frozenset]:
    """The set of orbits a table induces, as frozensets of element texts."""
    groups: dict[str, set[str]] = {}
    for elem, _, _, label in rows:
        groups.setdefault(label, set()).add(elem)
    return {frozenset(g) for g in groups.values()}
