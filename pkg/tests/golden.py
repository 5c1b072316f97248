"""Reference values: group tables, clidata lists and coordinate polynomials."""

from fractions import Fraction

# Automorphism group of the transposition product, every p + q <= 9.
# Simple rows are the standard table entries; semisimple rows follow the
# pattern of (2,1), (1,4), (5,0), (0,7), (9,0), (7,2).
TP_GROUPS = {
    # K = R
    (0, 0): "O(1)", (1, 1): "O(2)", (2, 0): "O(2)", (2, 2): "O(4)", (3, 1): "O(4)",
    (3, 3): "O(8)", (0, 6): "O(8)", (4, 2): "O(8)", (5, 3): "O(16)", (1, 7): "O(16)",
    (0, 8): "O(16)", (4, 4): "O(16)", (8, 0): "O(16)",
    # K = C
    (0, 1): "U(1)", (1, 2): "U(2)", (3, 0): "U(2)", (2, 3): "U(4)", (0, 5): "U(4)",
    (4, 1): "U(4)", (1, 6): "U(8)", (7, 0): "U(8)", (5, 2): "U(8)", (3, 4): "U(8)",
    (4, 5): "U(16)", (6, 3): "U(16)", (2, 7): "U(16)", (0, 9): "U(16)", (8, 1): "U(16)",
    # K = H
    (0, 2): "Sp(1)", (0, 4): "Sp(2)", (4, 0): "Sp(2)", (1, 3): "Sp(2)", (2, 4): "Sp(4)",
    (6, 0): "Sp(4)", (1, 5): "Sp(4)", (5, 1): "Sp(4)", (6, 2): "Sp(8)", (7, 1): "Sp(8)",
    (2, 6): "Sp(8)", (3, 5): "Sp(8)",
    # K = 2R
    (1, 0): "²O(1)", (2, 1): "²O(2)", (3, 2): "²O(4)", (0, 7): "²O(8)", (4, 3): "²O(8)",
    (1, 8): "²O(16)", (5, 4): "²O(16)", (9, 0): "²O(16)",
    # K = 2H
    (0, 3): "²Sp(1)", (1, 4): "²Sp(2)", (5, 0): "²Sp(2)", (2, 5): "²Sp(4)", (6, 1): "²Sp(4)",
    (3, 6): "²Sp(8)", (7, 2): "²Sp(8)",
}

# single box: equals beta+ ; double box: equals beta-
TP_BOXED = {
    (2, 0): "beta+", (8, 0): "beta+", (3, 0): "beta+", (7, 0): "beta+", (4, 0): "beta+",
    (6, 0): "beta+", (5, 0): "beta+",
    (0, 6): "beta-", (0, 8): "beta-", (0, 5): "beta-", (0, 9): "beta-", (0, 2): "beta-",
    (0, 4): "beta-", (0, 7): "beta-",
}

# field, N, type, idempotent, data5, data6, data7
CLIDATA = {
    (3, 0): ["complex", 2, "simple", "1/2 + 1/2*e1", ["1", "e2", "e3", "e23"], ["1", "e23"], ["1", "e2"]],
    (1, 1): ["real", 2, "simple", "1/2 + 1/2*e12", ["1", "e1"], ["1"], ["1", "e1"]],
    (1, 2): ["complex", 2, "simple", "1/2 + 1/2*e13", ["1", "e1", "e2", "e12"], ["1", "e2"], ["1", "e1"]],
    (2, 1): ["real", 2, "semisimple", "1/4 + 1/4*e1 + 1/4*e23 + 1/4*e123", ["1", "e2"], ["1"], ["1", "e2"]],
    (1, 4): [
        "quaternionic", 2, "semisimple", "1/4 + 1/4*e15 + 1/4*e234 - 1/4*e12345",
        ["1", "e1", "e2", "e3", "e4", "e12", "e13", "e14"], ["1", "e2", "e3", "e23"], ["1", "e1"],
    ],
}


def _idx(s):
    # "12" -> spinor entry 1, K-coordinate 2; "3" -> entry 3 of a real spinor
    return (int(s[0]), int(s[1])) if len(s) == 2 else (int(s), 1)


def poly(*terms, kind="prod"):
    """Polynomial from (sign, a, b) terms.

    kind ``prod``: psi_a phi_b; ``anti``: psi_a phi_b - psi_b phi_a;
    ``sym``: psi_a phi_b + psi_b phi_a.
    """
    out = {}
    for sign, a, b in terms:
        c = 1 if sign == "+" else -1
        A, B = _idx(a), _idx(b)
        out[(A, B)] = out.get((A, B), 0) + c
        if kind == "anti":
            out[(B, A)] = out.get((B, A), 0) - c
        elif kind == "sym":
            out[(B, A)] = out.get((B, A), 0) + c
    return {k: Fraction(v) for k, v in out.items() if v}


def anti(*terms):
    return poly(*terms, kind="anti")


def sym(*terms):
    return poly(*terms, kind="sym")


# {(p, q, product): {K-coordinate: polynomial}}
POLYNOMIALS = {
    (2, 2, "tp"): {1: poly(("+", "1", "1"), ("+", "2", "2"), ("+", "3", "3"), ("+", "4", "4"))},
    (2, 2, "beta+"): {1: poly(("+", "3", "2"), ("-", "2", "3"), ("+", "4", "1"), ("-", "1", "4"))},
    (2, 2, "beta-"): {1: poly(("+", "4", "1"), ("+", "2", "3"), ("-", "1", "4"), ("-", "3", "2"))},
    (1, 2, "tp"): {
        1: poly(("+", "11", "11"), ("+", "22", "22"), ("+", "21", "21"), ("+", "12", "12")),
        2: poly(("+", "21", "22"), ("-", "22", "21"), ("+", "11", "12"), ("-", "12", "11")),
    },
    (1, 2, "beta+"): {
        1: poly(("+", "11", "21"), ("+", "22", "12"), ("+", "21", "11"), ("+", "12", "22")),
        2: poly(("+", "21", "12"), ("-", "22", "11"), ("+", "11", "22"), ("-", "12", "21")),
    },
    (1, 2, "beta-"): {
        1: poly(("+", "11", "21"), ("+", "22", "12"), ("-", "21", "11"), ("-", "12", "22")),
        2: poly(("-", "21", "12"), ("-", "22", "11"), ("+", "11", "22"), ("+", "12", "21")),
    },
    (1, 3, "tp"): {
        1: poly(*[("+", f"{i}{j}", f"{i}{j}") for i in (1, 2) for j in (1, 2, 3, 4)]),
        2: anti(("+", "11", "12"), ("-", "13", "14"), ("+", "21", "22"), ("-", "23", "24")),
        3: anti(("+", "11", "13"), ("+", "12", "14"), ("+", "21", "23"), ("+", "22", "24")),
        4: anti(("+", "11", "14"), ("-", "12", "13"), ("+", "21", "24"), ("-", "22", "23")),
    },
    (1, 3, "beta+"): {
        1: sym(("+", "11", "21"), ("+", "12", "22"), ("+", "13", "23"), ("+", "14", "24")),
        2: anti(("+", "11", "22"), ("-", "12", "21"), ("-", "13", "24"), ("+", "14", "23")),
        3: anti(("+", "11", "23"), ("+", "12", "24"), ("-", "13", "21"), ("-", "14", "22")),
        4: anti(("+", "11", "24"), ("-", "12", "23"), ("+", "13", "22"), ("+", "21", "14")),
    },
    (1, 3, "beta-"): {
        1: anti(("+", "11", "21"), ("-", "12", "22"), ("-", "13", "23"), ("+", "14", "24")),
        2: anti(("+", "11", "22"), ("+", "12", "21"), ("+", "13", "24"), ("+", "14", "23")),
        3: anti(("+", "11", "23"), ("-", "12", "24"), ("+", "13", "21"), ("-", "14", "22")),
        4: sym(("+", "11", "24"), ("+", "12", "23"), ("-", "13", "22"), ("-", "14", "21")),
    },
}


def evaluate_poly(poly_, x, y):
    """sum c x[i][a] y[j][b] with 1-based keys."""
    return sum((c * x[i - 1][a - 1] * y[j - 1][b - 1] for ((i, a), (j, b)), c in poly_.items()), Fraction(0))
