"""Published change-of-basis tables for small graded components.

Ten matrices for k in {2, 3} and degrees 2..4: the expansion of the
Schur-like basis in the H basis ("ns-to-h") and of its dual in the
monomial basis ("qs-to-m"), with the printed row orders.  They serve as
golden data for the construction.
"""

# kind -> (k, n) -> (labels, rows); rows follow the label order for both axes.
REFERENCE_MATRICES = {
    "ns-to-h": {
        (2, 2): (
            [(2,), (1, 1)],
            [
                [1, 0],
                [-1, 1],
            ],
        ),
        (2, 3): (
            [(2, 1), (1, 2), (1, 1, 1)],
            [
                [1, 0, 0],
                [0, 1, 0],
                [0, -1, 1],
            ],
        ),
        (2, 4): (
            [(2, 2), (2, 1, 1), (1, 2, 1), (1, 1, 2), (1, 1, 1, 1)],
            [
                [1, 0, 0, 0, 0],
                [-1, 1, 0, 0, 0],
                [-1, 0, 1, 0, 0],
                [-1, 0, 0, 1, 0],
                [1, -1, 0, -1, 1],
            ],
        ),
        (3, 2): (
            [(2,), (1, 1)],
            [
                [1, 0],
                [-1, 1],
            ],
        ),
        (3, 3): (
            [(3,), (2, 1), (1, 2), (1, 1, 1)],
            [
                [1, 0, 0, 0],
                [-1, 1, 0, 0],
                [-1, 0, 1, 0],
                [1, -1, -1, 1],
            ],
        ),
        (3, 4): (
            [(3, 1), (1, 3), (2, 2), (2, 1, 1), (1, 2, 1), (1, 1, 2), (1, 1, 1, 1)],
            [
                [1, 0, 0, 0, 0, 0, 0],
                [0, 1, 0, 0, 0, 0, 0],
                [0, -1, 1, 0, 0, 0, 0],
                [0, 0, -1, 1, 0, 0, 0],
                [0, 0, -1, 0, 1, 0, 0],
                [0, 0, -1, 0, 0, 1, 0],
                [0, 1, 0, 0, -1, -1, 1],
            ],
        ),
    },
    "qs-to-m": {
        (2, 2): (
            [(2,), (1, 1)],
            [
                [1, 1],
                [0, 1],
            ],
        ),
        (2, 3): (
            [(2, 1), (1, 2), (1, 1, 1)],
            [
                [1, 0, 0],
                [0, 1, 1],
                [0, 0, 1],
            ],
        ),
        (2, 4): (
            [(2, 2), (2, 1, 1), (1, 2, 1), (1, 1, 2), (1, 1, 1, 1)],
            [
                [1, 1, 1, 1, 1],
                [0, 1, 0, 0, 1],
                [0, 0, 1, 0, 0],
                [0, 0, 0, 1, 1],
                [0, 0, 0, 0, 1],
            ],
        ),
        (3, 2): (
            [(2,), (1, 1)],
            [
                [1, 1],
                [0, 1],
            ],
        ),
        (3, 3): (
            [(3,), (2, 1), (1, 2), (1, 1, 1)],
            [
                [1, 1, 1, 1],
                [0, 1, 0, 1],
                [0, 0, 1, 1],
                [0, 0, 0, 1],
            ],
        ),
        (3, 4): (
            [(3, 1), (1, 3), (2, 2), (2, 1, 1), (1, 2, 1), (1, 1, 2), (1, 1, 1, 1)],
            [
                [1, 0, 0, 0, 0, 0, 0],
                [0, 1, 1, 1, 1, 1, 1],
                [0, 0, 1, 1, 1, 1, 2],
                [0, 0, 0, 1, 0, 0, 0],
                [0, 0, 0, 0, 1, 0, 1],
                [0, 0, 0, 0, 0, 1, 1],
                [0, 0, 0, 0, 0, 0, 1],
            ],
        ),
    },
}
