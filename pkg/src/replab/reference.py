"""Published values that the library is expected to reproduce."""
from .words import AvoidanceSpec

# (l, power) -> (leaves, height, t, maximal words starting with 0)
KNOWN_TREES = {
    (2, "inf"): (478, 19, 2, ["010011000111001101"]),
    (3, "3"): (578, 30, 2, ["00110010100110101100101001100"]),
    (4, "5/2"): (6860, 84, 4, [
        "00101101001011001001101100101101001101100100110100101100100110110010110100110110011",
        "00110010011010010110010011011001011010011011001001101001011001001101100101101001011",
    ]),
    (5, "5/2"): (15940, 93, 2, [
        "00100101100110100101100100110110010110100110110010011010010110010011011001011010011001011011",
    ]),
    (6, "5/2"): (15940, 93, 2, [
        "00100101100110100101100100110110010110100110110010011010010110010011011001011010011001011011",
    ]),
    (7, "7/3"): (3548, 43, 2, ["001011001011010011001011001101001011001011"]),
}

COUNT_SPECS = {
    "A": AvoidanceSpec.parse(3, "3+"),
    "B": AvoidanceSpec.parse(4, "5/2+"),
    "C": AvoidanceSpec.parse(7, "7/3+"),
}

KNOWN_COUNTS = {
    "A": [1, 2, 4, 8, 14, 26, 42, 68, 100, 154, 234, 356, 514, 768, 1108, 1632, 2348,
          3434, 4972, 7222, 10356, 14962, 21630, 31210, 44846, 64584],
    "B": [1, 2, 4, 6, 10, 16, 24, 36, 46, 64, 74, 88, 102, 114, 124, 140, 160, 178, 198,
          212, 230, 256, 294, 342, 366, 392],
    "C": [1, 2, 4, 6, 10, 14, 20, 30, 38, 50, 64, 86, 108, 136, 164, 196, 226, 264, 322,
          384, 436, 496, 578, 674, 754, 850],
}

# name -> (forbidden length cap, reported list size, dominant root)
KNOWN_UPPER = {
    "A": (12, 62, 1.4895),
    "B": (20, 54, 1.12123967),
    "C": (20, 58, 1.1615225),
}

# morphism width -> lower growth bound
KNOWN_LOWER = {10: 1.0104898, 1560: 1.000066899, 252: 1.0004142}

KNOWN_AVOIDED_BLOCKS = {
    "g1": ["01", "02", "04", "05", "06", "07", "10", "12", "13", "17", "20", "21", "24", "25",
           "26", "27", "30", "31", "32", "36", "37", "40", "41", "42", "43", "47", "51", "54",
           "56", "57", "60", "62", "63", "64", "65", "72", "73", "74", "75", "76", "034", "145",
           "153", "161", "353", "450", "452", "535", "615", "616", "714", "715", "2346703",
           "5234670", "5234671", "53467035", "6703523461", "2346146703503", "5234614670350"],
    "h1": ["01", "02", "10", "12", "13", "20", "21", "34", "42", "43", "304", "23031",
           "24041", "231403141", "232403241"],
}
