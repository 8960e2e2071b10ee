"""Hand-checked diagrams shared by the tests."""

from altwrithe.corpus import bundled_corpus

# standard trefoil; arcs 1..6 in traversal order, every over-strand enters at slot 1
TREFOIL = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"
FIGURE_EIGHT = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]"
# trefoil with a Reidemeister-I loop inserted on arc 3
KINKED_TREFOIL = "X[1,4,2,5] X[3,8,4,1] X[5,2,6,3] X[7,6,8,7]"
TWO_TREFOILS = TREFOIL + " X[7,10,8,11] X[9,12,10,7] X[11,8,12,9]"

# closed 4-braids: 6 positive twists on strands 1-2, 5 negative on 2-3, 8 positive on 3-4
D1_WORD = [1, 1, 3, -2, 1, 1, 1, 3, 3, 3, -2, 1, 3, 3, 3, 3, -2, -2, -2]
D2_WORD = [1, 1, 3, 3, 3, -2, 1, 1, 1, 3, 3, 3, -2, 1, 3, 3, -2, -2, -2]
D1_PHI = ((1, -1, 3, -1, 4, -3), (2, -1, 3, -1, 1, -3))
D2_PHI = ((2, -1, 3, -1, 1, -3), (3, -1, 3, -1, 2, -3))

CORPUS = {e.name: e.pd for e in bundled_corpus()}
