"""The rational formula corpus for the two coordinate frames.

Every structural map of the birational layer is stored here once, as a
subtraction-free expression string in the grammar of ``tropicalizer``.
``geometric_crystal`` compiles these for exact evaluation, and the
piecewise-linear cross-checks tropicalize the very same strings, so there
is a single source of truth for each formula.

Frames:

* the x-frame carries the full six-direction structure (directions 0..5);
* the y-frame carries the five-direction structure for directions
  {0,2,3,4,5} written with bars elsewhere in the package.

Coordinate orders below are the factorization orders of the corresponding
operator words, which is also the canonical serialization order.
"""

# word of the x-frame factorization and its coordinates, position by position
WORD_X = (4, 3, 2, 5, 3, 4, 1, 2, 3, 5)
X_VARS = ("x4_2", "x3_3", "x2_2", "x5_2", "x3_2",
          "x4_1", "x1_1", "x2_1", "x3_1", "x5_1")

WORD_Y = (5, 3, 2, 4, 3, 5, 0, 2, 3, 4)
Y_VARS = ("y5_2", "y3_3", "y2_2", "y4_2", "y3_2",
          "y5_1", "y0_1", "y2_1", "y3_1", "y4_1")

# ---------------------------------------------------------------- x-frame

GAMMA_X = {
    0: "1/(x2_2*x2_1)",
    1: "x1_1^2/(x2_2*x2_1)",
    2: "x2_2^2*x2_1^2/(x3_3*x3_2*x1_1*x3_1)",
    3: "x3_3^2*x3_2^2*x3_1^2/(x4_2*x2_2*x5_2*x4_1*x2_1*x5_1)",
    4: "x4_2^2*x4_1^2/(x3_3*x3_2*x3_1)",
    5: "x5_2^2*x5_1^2/(x3_3*x3_2*x3_1)",
}

# the two halves of the direction-0 string function
B_X = "x2_2*x3_1/x3_3 + x3_2*x3_1/x5_2"
C_X = "x2_2*x2_1/x4_2 + x2_2*x4_1*x2_1/(x3_3*x3_2)"
A_X = B_X + " + " + C_X

EPS_X = {
    0: "x5_1 + " + A_X,
    1: "x2_2/x1_1",
    2: "x3_3/x2_2*(1 + x3_2*x1_1/(x2_2*x2_1))",
    3: "x4_2/x3_3*(1 + x2_2*x5_2/(x3_3*x3_2)"
       " + x2_2*x5_2*x4_1*x2_1/(x3_3*x3_2^2*x3_1))",
    4: "1/x4_2*(1 + x3_3*x3_2/(x4_2*x4_1))",
    5: "x3_3/x5_2*(1 + x3_2*x3_1/(x5_2*x5_1))",
}

# per-direction scaling auxiliaries; `c` is the group parameter
E_AUX_X = {
    "c2": "(c*x2_2*x2_1 + x3_2*x1_1)/(x2_2*x2_1 + x3_2*x1_1)",
    "c31": "(c*x3_3*x3_2^2*x3_1 + x2_2*x5_2*x3_2*x3_1 + x2_2*x5_2*x4_1*x2_1)"
           "/(x3_3*x3_2^2*x3_1 + x2_2*x5_2*x3_2*x3_1 + x2_2*x5_2*x4_1*x2_1)",
    "c32": "(c*x3_3*x3_2^2*x3_1 + c*x2_2*x5_2*x3_2*x3_1"
           " + x2_2*x5_2*x4_1*x2_1)"
           "/(c*x3_3*x3_2^2*x3_1 + x2_2*x5_2*x3_2*x3_1"
           " + x2_2*x5_2*x4_1*x2_1)",
    "c4": "(c*x4_2*x4_1 + x3_3*x3_2)/(x4_2*x4_1 + x3_3*x3_2)",
    "c5": "(c*x5_2*x5_1 + x3_2*x3_1)/(x5_2*x5_1 + x3_2*x3_1)",
}

# slot updates; unlisted slots are unchanged.  Slot strings may use the
# auxiliary names above (and B/C/A for direction 0); geometric_crystal
# substitutes them before compiling.
E_ACTION_X = {
    0: {
        "x4_2": "x4_2*(c*(x5_1 + B + x2_2*x4_1*x2_1/(x3_3*x3_2))"
                " + x2_2*x2_1/x4_2)/(c*(x5_1 + A))",
        "x3_3": "x3_3*(c*(x5_1 + x3_2*x3_1/x5_2) + x2_2*x3_1/x3_3 + C)"
                "/(c*(x5_1 + A))",
        "x2_2": "x2_2/c",
        "x5_2": "x5_2*(c*x5_1 + A)/(c*(x5_1 + A))",
        # the doubly nested c in this denominator is genuine: the product
        # of the three direction-3 slots must scale by c^-2
        "x3_2": "x3_2*(c*(x5_1 + B) + C)"
                "/(c*(c*(x5_1 + x3_2*x3_1/x5_2) + x2_2*x3_1/x3_3 + C))",
        "x4_1": "x4_1*(x5_1 + A)/(c*(x5_1 + B + x2_2*x4_1*x2_1/(x3_3*x3_2))"
                " + x2_2*x2_1/x4_2)",
        "x1_1": "x1_1/c",
        "x2_1": "x2_1/c",
        "x3_1": "x3_1*(x5_1 + A)/(c*(x5_1 + B) + C)",
        "x5_1": "x5_1*(x5_1 + A)/(c*x5_1 + A)",
    },
    1: {"x1_1": "c*x1_1"},
    2: {"x2_2": "c2*x2_2", "x2_1": "c/c2*x2_1"},
    3: {"x3_3": "c31*x3_3", "x3_2": "c32*x3_2",
        "x3_1": "c/(c31*c32)*x3_1"},
    4: {"x4_2": "c4*x4_2", "x4_1": "c/c4*x4_1"},
    5: {"x5_2": "c5*x5_2", "x5_1": "c/c5*x5_1"},
}

# ---------------------------------------------------------------- y-frame

GAMMA_Y = {
    0: "y0_1^2/(y2_2*y2_1)",
    2: "y2_2^2*y2_1^2/(y3_3*y3_2*y0_1*y3_1)",
    3: "y3_3^2*y3_2^2*y3_1^2/(y5_2*y2_2*y4_2*y5_1*y2_1*y4_1)",
    4: "y4_2^2*y4_1^2/(y3_3*y3_2*y3_1)",
    5: "y5_2^2*y5_1^2/(y3_3*y3_2*y3_1)",
}

EPS_Y = {
    0: "y2_2/y0_1",
    2: "y3_3/y2_2*(1 + y3_2*y0_1/(y2_2*y2_1))",
    3: "y5_2/y3_3*(1 + y2_2*y4_2/(y3_3*y3_2)"
       " + y2_2*y4_2*y5_1*y2_1/(y3_3*y3_2^2*y3_1))",
    4: "y3_3/y4_2*(1 + y3_2*y3_1/(y4_2*y4_1))",
    5: "1/y5_2*(1 + y3_3*y3_2/(y5_2*y5_1))",
}

# The trailing summand of c31/c32 is the level-1 slot of direction 2 in
# this frame, matching the x-frame pattern.  The assignment of c4/c5 below
# is forced by the string-function axiom in directions 4 and 5 (and agrees
# with conjugating the closed direction-0 operator through the twist).
E_AUX_Y = {
    "c2": "(c*y2_2*y2_1 + y3_2*y0_1)/(y2_2*y2_1 + y3_2*y0_1)",
    "c31": "(c*y3_3*y3_2^2*y3_1 + y2_2*y4_2*y3_2*y3_1 + y2_2*y4_2*y5_1*y2_1)"
           "/(y3_3*y3_2^2*y3_1 + y2_2*y4_2*y3_2*y3_1 + y2_2*y4_2*y5_1*y2_1)",
    "c32": "(c*y3_3*y3_2^2*y3_1 + c*y2_2*y4_2*y3_2*y3_1"
           " + y2_2*y4_2*y5_1*y2_1)"
           "/(c*y3_3*y3_2^2*y3_1 + y2_2*y4_2*y3_2*y3_1"
           " + y2_2*y4_2*y5_1*y2_1)",
    "c4": "(c*y4_2*y4_1 + y3_2*y3_1)/(y4_2*y4_1 + y3_2*y3_1)",
    "c5": "(c*y5_2*y5_1 + y3_3*y3_2)/(y5_2*y5_1 + y3_3*y3_2)",
}

E_ACTION_Y = {
    0: {"y0_1": "c*y0_1"},
    2: {"y2_2": "c2*y2_2", "y2_1": "c/c2*y2_1"},
    3: {"y3_3": "c31*y3_3", "y3_2": "c32*y3_2",
        "y3_1": "c/(c31*c32)*y3_1"},
    4: {"y4_2": "c4*y4_2", "y4_1": "c/c4*y4_1"},
    5: {"y5_2": "c5*y5_2", "y5_1": "c/c5*y5_1"},
}

# ------------------------------------------------- the birational twist

# global scale factor relating the two decorated products
A_FACTOR = "1/(x5_2*x5_1)"

# y-coordinates of the twist image, in terms of the x-frame
SIGMA_BAR = {
    "y5_2": "1/x5_1",
    "y0_1": "x4_2*x4_1/(x5_2*x5_1)",
    "y5_1": "1/x5_2",
    "y4_2": "x1_1/(x5_2*x5_1)*(x5_2/x3_3 + x3_2/x2_2 + x2_1/x1_1)",
    "y4_1": "(x5_2/x3_3 + x3_2/x2_2 + x2_1/x1_1)^-1",
    "y3_3": "1/x5_1*(x2_2/x3_3 + x3_2/x5_2)",
    "y3_2": "1/(x5_2*x5_1)*(x2_2/x3_3 + x3_2/x5_2)^-1"
            "*(x2_2*x2_1/x4_2 + x2_2*x3_1/x3_3 + x3_2*x3_1/x5_2"
            " + x2_2*x4_1*x2_1/(x3_3*x3_2))",
    "y3_1": "x2_2*x2_1/x5_2*(x2_2*x2_1/x4_2 + x2_2*x3_1/x3_3"
            " + x3_2*x3_1/x5_2 + x2_2*x4_1*x2_1/(x3_3*x3_2))^-1",
    "y2_2": "1/x5_1*(x3_3*x3_2/(x4_2*x5_2) + x4_1/x5_2)",
    "y2_1": "x3_3*x3_2*x3_1/(x5_2^2*x5_1)"
            "*(x3_3*x3_2/(x4_2*x5_2) + x4_1/x5_2)^-1",
}

# x-coordinates recovered from the y-frame
SIGMA_BAR_INV = {
    "x5_2": "1/y5_1",
    "x5_1": "1/y5_2",
    "x4_2": "y0_1/y2_2 + y2_1/y3_2 + y3_1/y5_1",
    "x4_1": "y0_1/(y5_2*y5_1)*(y0_1/y2_2 + y2_1/y3_2 + y3_1/y5_1)^-1",
    "x3_3": "y2_2*y2_1/(y3_3*y3_2) + y2_2*y3_1/(y3_3*y5_1)"
            " + y3_2*y3_1/(y4_2*y5_1) + y4_1/y5_1",
    "x3_2": "y2_2/(y5_2*y5_1)*(y2_2*y2_1/(y3_3*y3_2)"
            " + y2_2*y3_1/(y3_3*y5_1) + y3_2*y3_1/(y4_2*y5_1)"
            " + y4_1/y5_1)^-1*(y2_1/y3_2 + y3_1/y5_1)",
    "x3_1": "y2_1/(y5_2*y5_1)*(y2_1/y3_2 + y3_1/y5_1)^-1",
    "x1_1": "y4_2*y4_1/(y5_2*y5_1)",
    "x2_2": "y3_3/y5_2*(y3_2*y3_1/(y4_2*y5_1) + y4_1/y5_1)",
    "x2_1": "y3_2*y3_1/(y5_2*y5_1^2)"
            "*(y3_2*y3_1/(y4_2*y5_1) + y4_1/y5_1)^-1",
}
