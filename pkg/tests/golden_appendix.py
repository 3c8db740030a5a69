"""Golden change-of-basis tables for k in {2,3}, degrees 2..4, transcribed
directly from the published source (kept separate from the package copy so
a transcription slip in either place shows up as a mismatch)."""

NS_TO_H = {
    (2, 2): (
        [(2,), (1, 1)],
        [[1, 0], [-1, 1]],
    ),
    (2, 3): (
        [(2, 1), (1, 2), (1, 1, 1)],
        [[1, 0, 0], [0, 1, 0], [0, -1, 1]],
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
        [[1, 0], [-1, 1]],
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
}

QS_TO_M = {
    (2, 2): (
        [(2,), (1, 1)],
        [[1, 1], [0, 1]],
    ),
    (2, 3): (
        [(2, 1), (1, 2), (1, 1, 1)],
        [[1, 0, 0], [0, 1, 1], [0, 0, 1]],
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
        [[1, 1], [0, 1]],
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
}
