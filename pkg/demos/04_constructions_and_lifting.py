"""
Perfect codes that do exist
===========================

Single chains (``s = 1``) always carry perfect codes.  Hamming-metric perfect
codes are the ``r = 1`` case.  Adding columns to any of them (lifting) keeps
them perfect, and each suffix may even get its own translate.
"""

import random

from nrtperfect import (
    construct_hamming,
    construct_repetition,
    construct_s1,
    is_perfect,
    lift_general,
    lift_trivial,
    project,
    random_translate_lift_map,
)
from nrtperfect.core import Params

# s = 1: any prefix map works
code = construct_s1(lambda y: ((y[0] + 2 * y[1]) % 3, y[0]), Params(3, 1, 4, 2))
print("s=1 code:", len(code), "words, 2-perfect:", is_perfect(code, 2))

rep = construct_repetition(3)
ham = construct_hamming(2, 3)
print("repetition:", len(rep), "words;", "Hamming [7,4]:", len(ham), "words")

# the trivial lift: every codeword with every suffix
lifted = lift_trivial(rep, h=1, R=1)
print("lifted repetition in F_2^{3x2}:", len(lifted), "words, 1-perfect:", is_perfect(lifted, 1))
print("  ...but not 2-perfect:", is_perfect(lifted, 2))

# an independent random translate of the Hamming code for each of the 128 suffixes
f = random_translate_lift_map(ham, h=1, R=1, rng=random.Random(7))
big = lift_general(f, R=1)
print("general lift:", len(big), "words in F_2^{7x2}, 1-perfect:", is_perfect(big, 1))

# grouping by suffix gives the map back
print("projection recovers the map:", project(big, r=1, R=1).assignment == f.assignment)
