"""Built-in reference codes with their published parameters.

These five cases back the verify-examples command: four codes whose
Gray images have known (n, M, d) and Lee weight enumerators (the first
is the quaternary Kerdock code K(3)), and one (3,9)/(3,9) dual pair
with pinned dual generators.  Every claim here is re-derived from
scratch by the verification run; nothing is trusted.
"""

# Case 1's enumerator is pinned as weight->count pairs only: the
# published polynomial form for this code carries cofactor exponents
# that cannot sum to length 16, so the counts are the authoritative
# reading and the verification reports that choice.

REFERENCE_CASES = [
    {
        "id": 1,
        "label": "kerdock-16-256-6",
        "spec": {"r": 1, "s": 7, "l": "1",
                 "f2": "x^3+2x^2+x+3", "g2": "x^3+2x^2+x+3"},
        "size": 256,
        "min_lee_distance": 6,
        "gray": (16, 256, 6),
        "lee_counts": {0: 1, 6: 112, 8: 30, 10: 112, 16: 1},
        "enumerator_reading": "counts-only",
        "nonlinear": True,
    },
    {
        "id": 2,
        "label": "code-48-2^24-12",
        "spec": {"r": 1, "s": 23, "l": "1",
                 "f2": "x^11+3x^10+2x^7+x^6+x^5+x^4+x^2+2x+3",
                 "g2": "x^11+3x^10+2x^7+x^6+x^5+x^4+x^2+2x+3"},
        "size": 4 ** 12,
        "min_lee_distance": 12,
        "gray": (48, 2 ** 24, 12),
        "lee_counts": {0: 1, 12: 12144, 14: 61824, 16: 195063,
                       18: 1133440, 20: 1445136, 22: 4080384,
                       24: 2921232, 26: 4080384, 28: 1445136,
                       30: 1133440, 32: 195063, 34: 61824,
                       36: 12144, 48: 1},
        "nonlinear": True,
    },
    {
        "id": 3,
        "label": "code-132-2^14-56",
        "spec": {"r": 3, "s": 63, "l": "x^2+x+1",
                 "f2": ("x^56+2x^55+3x^54+2x^53+3x^52+2x^51+2x^50+3x^49"
                        "+x^48+x^45+2x^43+x^41+2x^40+2x^39+x^38+x^36"
                        "+3x^35+2x^34+3x^33+x^32+2x^31+3x^28+x^27+x^26"
                        "+2x^25+x^24+2x^22+3x^19+3x^18+x^16+x^14+x^13"
                        "+3x^12+2x^11+3x^9+3x^8+3x^7+3x^6+3x^4+3x^3"
                        "+x^2+x+1"),
                 "g2": ("x^56+2x^55+3x^54+2x^53+3x^52+2x^51+2x^50+3x^49"
                        "+x^48+x^45+2x^43+x^41+2x^40+2x^39+x^38+x^36"
                        "+3x^35+2x^34+3x^33+x^32+2x^31+3x^28+x^27+x^26"
                        "+2x^25+x^24+2x^22+3x^19+3x^18+x^16+x^14+x^13"
                        "+3x^12+2x^11+3x^9+3x^8+3x^7+3x^6+3x^4+3x^3"
                        "+x^2+x+1")},
        "size": 4 ** 7,
        "min_lee_distance": 56,
        "gray": (132, 2 ** 14, 56),
        "lee_counts": {0: 1, 56: 1260, 58: 2016, 60: 756, 64: 2079,
                       66: 4160, 68: 2079, 72: 756, 74: 2016,
                       76: 1260, 132: 1},
        "nonlinear": True,
    },
    {
        "id": 4,
        "label": "code-32-2^10-12",
        "spec": {"r": 1, "s": 15, "l": "1",
                 "f2": "x^10+x^9+3x^8+3x^6+3x^5+2x^3+x^2+2x+1",
                 "g2": "x^10+x^9+3x^8+3x^6+3x^5+2x^3+x^2+2x+1"},
        "size": 1024,
        "min_lee_distance": 12,
        "gray": (32, 1024, 12),
        "lee_counts": {0: 1, 12: 240, 16: 542, 20: 240, 32: 1},
        "nonlinear": True,
    },
    {
        "id": 5,
        "label": "dual-pair-(3,9)",
        "spec": {"r": 3, "s": 9, "f1": "x^2+x+1", "g1": "x^2+x+1",
                 "l": "x+1", "f2": "x^6+x^3+1", "g2": "x^6+x^3+1"},
        "size": 4 ** 4,
        "dual": {
            "F1_hat_star": "0",
            "F2_hat_star": "x+3",
            "nu": "x+1",
            "l_hat": "3x^2+1",
            "size": 4 ** 8,
        },
    },
]
