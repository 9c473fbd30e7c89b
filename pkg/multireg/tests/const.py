"""Helpers for testing multireg."""

from ..const import CONF_COORDS, CONF_MULT, CONF_POINTS, CONF_SPACES

SEVEN_POINT_LABELS = ["11", "12", "13", "21", "22", "31", "33"]

# P_ij = [1:i] x [1:j]
SEVEN_POINT_CONFIG = {
    CONF_SPACES: [1, 1],
    CONF_POINTS: [
        {CONF_COORDS: [[1, int(label[0])], [1, int(label[1])]], CONF_MULT: 1}
        for label in SEVEN_POINT_LABELS
    ],
}

SEVEN_POINT_MATRIX = [
    [1, 2, 3, 3],
    [2, 4, 6, 6],
    [3, 6, 7, 7],
    [3, 6, 7, 7],
]

THREE_POINT_CONFIG = {
    CONF_SPACES: [1, 1],
    CONF_POINTS: [
        {CONF_COORDS: [[1, 0], [1, 0]]},
        {CONF_COORDS: [[1, 0], [0, 1]]},
        {CONF_COORDS: [[0, 1], [1, 0]]},
    ],
}

THREE_POINT_MATRIX = [
    [1, 2, 2, 2],
    [2, 3, 3, 3],
    [2, 3, 3, 3],
    [2, 3, 3, 3],
]

KOSZUL_PAIR_CONFIG = {
    CONF_SPACES: [1, 1],
    CONF_POINTS: [
        {CONF_COORDS: [[1, 0], [0, 1]], CONF_MULT: 1},
        {CONF_COORDS: [[0, 1], [1, 0]], CONF_MULT: 1},
    ],
}

# Coordinates with every entry nonzero, one vector per factor dimension
FAT_POINT_COORDS = {
    1: [1, 2],
    2: [1, 2, 3],
}

FAT_POINT_SHAPES = [(1, 1), (2, 1), (1, 1, 1)]

# Small coordinates keep exact ranks cheap in property suites
PROPERTY_BOUND = 50

PROPERTY_SHAPES = [(1,), (2,), (1, 1), (2, 1), (1, 2), (2, 2)]
