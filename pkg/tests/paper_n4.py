"""The n = 4 orbit poset as drawn level by level, top to bottom, with the
rank-control matrix shown for each node and the drawn cover edges."""

LEVELS = [
    ["(1,2)(3,4)"],
    ["(1,2)", "(1,3)(2,4)"],
    ["(1,3)", "(1,4)(2,3)"],
    ["(2,3)", "(1,4)"],
    ["(2,4)"],
    ["(3,4)"],
    ["e"],
]

# (lower, upper)
COVERS = {
    ("(1,2)", "(1,2)(3,4)"),
    ("(1,3)(2,4)", "(1,2)(3,4)"),
    ("(1,3)", "(1,2)"),
    ("(1,3)", "(1,3)(2,4)"),
    ("(1,4)(2,3)", "(1,3)(2,4)"),
    ("(2,3)", "(1,3)"),
    ("(2,3)", "(1,4)(2,3)"),
    ("(1,4)", "(1,4)(2,3)"),
    ("(1,4)", "(1,3)"),
    ("(2,4)", "(2,3)"),
    ("(2,4)", "(1,4)"),
    ("(3,4)", "(2,4)"),
    ("e", "(3,4)"),
}

RANK_CONTROL = {
    "(1,2)(3,4)": [[0, 1, 1, 1], [1, 2, 2, 2], [1, 2, 2, 3], [1, 2, 3, 4]],
    "(1,2)": [[0, 1, 1, 1], [1, 2, 2, 2], [1, 2, 2, 2], [1, 2, 2, 2]],
    "(1,3)(2,4)": [[0, 0, 1, 1], [0, 0, 1, 2], [1, 1, 2, 3], [1, 2, 3, 4]],
    "(1,3)": [[0, 0, 1, 1], [0, 0, 1, 1], [1, 1, 2, 2], [1, 1, 2, 2]],
    "(1,4)(2,3)": [[0, 0, 0, 1], [0, 0, 1, 2], [0, 1, 2, 3], [1, 2, 3, 4]],
    "(2,3)": [[0, 0, 0, 0], [0, 0, 1, 1], [0, 1, 2, 2], [0, 1, 2, 2]],
    "(1,4)": [[0, 0, 0, 1], [0, 0, 0, 1], [0, 0, 0, 1], [1, 1, 1, 2]],
    "(2,4)": [[0, 0, 0, 0], [0, 0, 0, 1], [0, 0, 0, 1], [0, 1, 1, 2]],
    "(3,4)": [[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 2]],
    "e": [[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]],
}
