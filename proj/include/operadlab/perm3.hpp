#pragma once
#include <array>
#include <cstddef>
#include <stdexcept>

namespace operadlab {

// The six permutations of (a,b,c) in lex order: abc, acb, bac, bca, cab, cba.
// PERM3_TABLE[i][k] is the image position of argument k under permutation i.
inline constexpr std::array<std::array<int, 3>, 6> PERM3_TABLE = {{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

constexpr int perm3_index(int a, int b, int c) {
    for (int i = 0; i < 6; ++i)
        if (PERM3_TABLE[i][0] == a && PERM3_TABLE[i][1] == b && PERM3_TABLE[i][2] == c)
            return i;
    return -1;
}

// (s ∘ t)(k) = s(t(k))
constexpr int perm3_compose(int s, int t) {
    return perm3_index(PERM3_TABLE[s][PERM3_TABLE[t][0]],
                       PERM3_TABLE[s][PERM3_TABLE[t][1]],
                       PERM3_TABLE[s][PERM3_TABLE[t][2]]);
}

constexpr int perm3_inverse(int s) {
    for (int t = 0; t < 6; ++t)
        if (perm3_compose(s, t) == 0) return t;
    return -1;
}

constexpr int perm3_sign(int i) {
    int sign = 1;
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b)
            if (PERM3_TABLE[i][a] > PERM3_TABLE[i][b]) sign = -sign;
    return sign;
}

inline void check_perm3(int i) {
    if (i < 0 || i >= 6) throw std::out_of_range("permutation index out of range");
}

} // namespace operadlab
