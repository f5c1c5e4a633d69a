#include "dfao_tables.hpp"

namespace agolomb::detail {
// Rows: output code, then the successor state for each digit 0..b-1.
// Pair-valued outputs are coded (0,0)=0, (1,0)=1, (0,1)=2.

const std::vector<std::vector<int>> k_r4_eps0 = {
    {0, 0, 1, 2, 2},
    {0, 3, 4, 14, 18},
    {0, 18, 18, 18, 18},
    {0, 22, 6, 25, 5},
    {0, 15, 22, 6, 25},
    {0, 16, 23, 7, 26},
    {0, 16, 23, 7, 27},
    {0, 17, 24, 8, 28},
    {0, 29, 29, 13, 29},
    {0, 12, 28, 10, 12},
    {0, 13, 29, 13, 13},
    {0, 28, 10, 12, 28},
    {0, 29, 13, 13, 29},
    {0, 0, 0, 0, 0},
    {1, 5, 15, 19, 19},
    {1, 7, 16, 20, 20},
    {1, 8, 17, 21, 21},
    {1, 13, 29, 29, 29},
    {1, 19, 19, 19, 19},
    {1, 20, 20, 20, 20},
    {1, 21, 21, 21, 21},
    {1, 29, 29, 29, 29},
    {1, 23, 7, 26, 7},
    {1, 24, 8, 28, 8},
    {1, 29, 13, 29, 13},
    {1, 9, 11, 26, 7},
    {1, 10, 12, 28, 8},
    {1, 10, 12, 28, 10},
    {1, 13, 13, 29, 13},
    {1, 0, 0, 0, 0},
};

const std::vector<std::vector<int>> k_r4_eps1 = {
    {0, 0, 6, 1, 1},
    {0, 2, 2, 2, 2},
    {0, 3, 3, 3, 3},
    {0, 4, 4, 4, 4},
    {0, 5, 5, 5, 5},
    {0, 21, 21, 21, 21},
    {0, 9, 22, 15, 2},
    {0, 20, 28, 8, 20},
    {0, 21, 29, 21, 21},
    {0, 10, 25, 12, 23},
    {0, 11, 26, 13, 24},
    {0, 14, 28, 14, 28},
    {0, 19, 27, 13, 24},
    {0, 20, 28, 14, 28},
    {0, 21, 29, 21, 29},
    {0, 23, 16, 3, 3},
    {0, 24, 17, 4, 4},
    {0, 28, 18, 5, 5},
    {0, 29, 21, 21, 21},
    {0, 28, 8, 20, 28},
    {0, 29, 21, 21, 29},
    {0, 0, 0, 0, 0},
    {1, 16, 10, 25, 12},
    {1, 17, 11, 26, 13},
    {1, 18, 14, 28, 14},
    {1, 17, 11, 26, 7},
    {1, 18, 14, 28, 8},
    {1, 8, 20, 28, 8},
    {1, 21, 21, 29, 21},
    {1, 0, 0, 0, 0},
};

const std::vector<std::vector<int>> k_r4_eps2 = {
    {0, 0, 1, 2, 2},
    {0, 3, 12, 17, 20},
    {0, 20, 20, 20, 20},
    {0, 4, 14, 7, 13},
    {0, 5, 15, 8, 15},
    {0, 6, 16, 10, 16},
    {0, 11, 28, 11, 28},
    {0, 24, 26, 8, 15},
    {0, 25, 27, 10, 16},
    {0, 25, 27, 10, 25},
    {0, 28, 28, 11, 28},
    {0, 0, 0, 0, 0},
    {1, 18, 4, 14, 7},
    {1, 19, 5, 15, 8},
    {1, 19, 5, 15, 9},
    {1, 23, 6, 16, 10},
    {1, 28, 11, 28, 11},
    {1, 13, 18, 21, 21},
    {1, 15, 19, 22, 22},
    {1, 16, 23, 23, 23},
    {1, 21, 21, 21, 21},
    {1, 22, 22, 22, 22},
    {1, 23, 23, 23, 23},
    {1, 28, 28, 28, 28},
    {1, 27, 10, 25, 27},
    {1, 28, 11, 28, 28},
    {1, 10, 25, 27, 10},
    {1, 11, 28, 28, 11},
    {1, 0, 0, 0, 0},
};

const std::vector<std::vector<int>> k_r4_eps3 = {
    {0, 0, 5, 1, 1},
    {0, 2, 2, 2, 2},
    {0, 3, 3, 3, 3},
    {0, 4, 4, 4, 4},
    {0, 9, 9, 9, 9},
    {0, 10, 11, 6, 2},
    {0, 12, 7, 3, 3},
    {0, 13, 8, 4, 4},
    {0, 16, 9, 9, 9},
    {0, 19, 19, 19, 19},
    {0, 20, 14, 22, 12},
    {0, 7, 20, 14, 22},
    {0, 8, 21, 15, 23},
    {0, 9, 24, 16, 24},
    {0, 8, 21, 15, 25},
    {0, 9, 24, 16, 26},
    {0, 19, 29, 19, 29},
    {0, 26, 28, 18, 26},
    {0, 29, 29, 19, 29},
    {0, 0, 0, 0, 0},
    {1, 21, 15, 23, 13},
    {1, 24, 16, 24, 16},
    {1, 27, 17, 23, 13},
    {1, 28, 18, 24, 16},
    {1, 29, 19, 29, 19},
    {1, 28, 18, 26, 28},
    {1, 29, 19, 29, 29},
    {1, 18, 26, 28, 18},
    {1, 19, 29, 29, 19},
    {1, 0, 0, 0, 0},
};

const std::vector<std::vector<int>> k_r5_U = {
    {0, 0, 1, 5, 10, 18},
    {0, 6, 2, 2, 2, 2},
    {0, 3, 3, 3, 3, 3},
    {0, 4, 4, 4, 4, 4},
    {0, 9, 9, 9, 9, 9},
    {0, 2, 2, 14, 19, 11},
    {0, 20, 7, 3, 3, 3},
    {0, 21, 8, 4, 4, 4},
    {0, 22, 9, 9, 9, 9},
    {0, 0, 0, 0, 0, 0},
    {2, 19, 11, 19, 11, 19},
    {2, 20, 12, 20, 12, 20},
    {2, 21, 13, 21, 13, 21},
    {2, 22, 17, 22, 17, 22},
    {2, 3, 15, 20, 12, 20},
    {2, 4, 16, 21, 13, 21},
    {2, 9, 17, 22, 17, 22},
    {2, 0, 0, 0, 0, 0},
    {1, 11, 19, 11, 19, 11},
    {1, 12, 20, 12, 20, 12},
    {1, 13, 21, 13, 21, 13},
    {1, 17, 22, 17, 22, 17},
    {1, 0, 0, 0, 0, 0},
};

}  // namespace agolomb::detail
