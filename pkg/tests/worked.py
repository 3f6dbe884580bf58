"""Worked examples shared by several test modules."""

from dualrank import DualMatrix, RealMatrix

EX1 = DualMatrix([[1, 0], [0, 0]], [[1, 1], [1, 1]])
EX2 = DualMatrix([[1, 2, 1], [2, 1, 1], [3, 3, 2]], [[1, 4, 7], [2, 5, 8], [3, 6, 14]])
EX2_P = RealMatrix([["1/2", "1/2"], [-1, "1/2"]])

A2 = RealMatrix([[1, 2], [2, 1], [3, 3]])
A4 = RealMatrix([[1, 0, "1/3"], [0, 1, "1/3"]])
A2_PINV = RealMatrix([["-4/9", "5/9", "1/9"], ["5/9", "-4/9", "1/9"]])
A4_PINV = RealMatrix([["10/11", "-1/11"], ["-1/11", "10/11"], ["3/11", "3/11"]])
A5 = RealMatrix([["3/2", "13/6", "29/9"], [-1, "7/6", "31/18"]])
# As printed; the (0, 0) entry does not satisfy A2 A5 + A3 A4 = A1.
A3_PRINTED = RealMatrix([["1/2", "-1/2"], [0, "-1/2"], ["3/2", -4]])
# Substituting back forces the (0, 0) entry to 3/2.
A3 = RealMatrix([["3/2", "-1/2"], [0, "-1/2"], ["3/2", -4]])

EX2_DMPGI = DualMatrix(
    [["-5/11", "6/11", "1/11"], ["6/11", "-5/11", "1/11"], ["1/33", "1/33", "2/33"]],
    [["-31/33", "-16/33", "1/33"], ["2/11", "7/11", "-8/11"], ["-25/99", "38/99", "10/99"]],
)


def M(*rows):
    return RealMatrix(rows)


# A X and X A for the worked DMPGI, real and dual parts.
EX2_AX = DualMatrix(
    [["2/3", "-1/3", "1/3"], ["-1/3", "2/3", "1/3"], ["1/3", "1/3", "2/3"]],
    [["10/9", "1/9", "-4/9"], ["1/9", "-8/9", "5/9"], ["-4/9", "5/9", "-2/9"]],
)
EX2_XA = DualMatrix(
    [["10/11", "-1/11", "3/11"], ["-1/11", "10/11", "3/11"], ["3/11", "3/11", "2/11"]],
    [["-10/11", "-9/11", "12/11"], ["-9/11", "-8/11", "9/11"], ["12/11", "9/11", "18/11"]],
)
