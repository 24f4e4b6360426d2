"""Vertex coordinates of published figure polygons, canonical frame, counterclockwise.

All entries carry the 4 printed decimals of the figures except ``F8ref``,
which uses the 10-digit values of the optimal octagon.
"""

from __future__ import annotations

import math


def _mirror(right: list[tuple[float, float]], top: tuple[float, float] | None) -> list[tuple[float, float]]:
    """Close a symmetric polygon from v0 and its right half.

    ``right`` lists v1..v_m on the x > 0 side; the left half is the mirror
    image in reverse order.
    """
    left = [(-x, y) for x, y in reversed(right)]
    return [(0.0, 0.0)] + right + ([top] if top else []) + left


COORDINATES: dict[str, list[tuple[float, float]]] = {
    "Q4": [(0.0, 0.0), (0.5, 0.8660), (0.0, 1.0), (-0.5, 0.8660)],
    "R36": _mirror([(0.3660, 0.3660), (0.5, 0.8660)], (0.0, 1.0)),
    "H8": _mirror([(0.3228, 0.2134), (0.5, 0.5574), (0.3796, 0.9251)], (0.0, 1.0)),
    "B8": _mirror([(0.2957, 0.2043), (0.5, 0.5), (0.4114, 0.9114)], (0.0, 1.0)),
    "F8ref": _mirror(
        [
            (0.3208100713, 0.2140003477),
            (0.5, 0.5554768772),
            (0.3841095838, 0.9232875108),
        ],
        (0.0, 0.9575669263),
    ),
    "G16ref": _mirror(
        [
            (0.1875, 0.0569), (0.3592, 0.1510), (0.4818, 0.3038), (0.4989, 0.4989),
            (0.4421, 0.6864), (0.3479, 0.8582), (0.1951, 0.9808),
        ],
        (0.0, 0.9979),
    ),
    "G32ref": _mirror(
        [
            (0.0971, 0.0144), (0.1922, 0.0384), (0.2809, 0.0804), (0.3535, 0.1464),
            (0.4120, 0.2253), (0.4623, 0.3095), (0.4952, 0.4019), (0.4999, 0.4999),
            (0.4855, 0.5970), (0.4616, 0.6922), (0.4195, 0.7808), (0.3535, 0.8534),
            (0.2747, 0.9119), (0.1905, 0.9622), (0.0980, 0.9952),
        ],
        (0.0, 0.9999),
    ),
    "F16ref": _mirror(
        [
            (0.1873, 0.0568), (0.3569, 0.1545), (0.4491, 0.3271), (0.5000, 0.5161),
            (0.4746, 0.7102), (0.3501, 0.8618), (0.1953, 0.9807),
        ],
        (0.0, 0.9937),
    ),
    "F32ref": _mirror(
        [
            (0.0971, 0.0144), (0.1920, 0.0391), (0.2762, 0.0895), (0.3545, 0.1486),
            (0.4129, 0.2274), (0.4626, 0.3120), (0.4865, 0.4072), (0.5000, 0.5044),
            (0.4943, 0.6023), (0.4613, 0.6948), (0.4185, 0.7830), (0.3526, 0.8558),
            (0.2794, 0.9210), (0.1907, 0.9630), (0.0980, 0.9952),
        ],
        (0.0, 0.9991),
    ),
}

# widths printed in the figure captions (6 decimals)
CAPTION_WIDTHS: dict[str, float] = {
    "Q4": 0.866025,
    "R36": 0.965926,
    "H8": 0.950394,
    "B8": 0.977609,
    "F8ref": 0.953776,
    "G16ref": 0.994067,
    "G32ref": 0.998732,
    "F16ref": 0.991531,
    "F32ref": 0.998327,
}

# 10-digit reference values where the text gives them
H8_WIDTH = 0.9503943246
H8_PERIMETER = 3.0956093174
B8_WIDTH = 0.25 * math.sqrt(10 + 2 * math.sqrt(7))
F8_WIDTH = 0.9537763006
