#pragma once

// Semiorthogonal decomposition tables: ordered summand indices, generator
// counts, and the curve/Quot specializations, at the level of indices and
// counts only.

#include <string>
#include <vector>

#include "hallwin/lattice.hpp"

namespace hallwin {

struct Summand {
    std::vector<int> index;        // d_bullet, length l = c - b
    int residual = 0;              // m = d - sum(index)
    long long generator_count = 0; // |B_b(m)|
    std::string label;
};

struct SodTable {
    int a = 0, b = 0, c = 0, d = 0;
    std::vector<Summand> summands;  // descending lexicographic in d_bullet
    long long total() const;
};

// All d_bullet in Z_{>=0}^{c-b} with sum <= d. Summands with zero generator
// count are kept unless prune_empty is set. Requires a >= b >= 0 and c > b.
SodTable sod_table(int a, int b, int c, int d, bool prune_empty = false);

struct MultiSummand {
    std::vector<int> index;  // d_bullet, length l
    // Each refinement assigns d_bullet[i] across the vertices: an l x m
    // matrix with row sums d_bullet[i] and column sums <= dims[j].
    std::vector<std::vector<std::vector<int>>> refinements;
    long long generator_count = 0;  // sum over refinements of prod_j |B_b(m_j)|
    std::string label;
};

struct MultiSodTable {
    int a = 0, b = 0, c = 0;
    std::vector<int> dims;
    std::vector<MultiSummand> summands;
    long long total() const;
};

// Multi-vertex table with c = a; total generator count factors as the
// product of the single-vertex totals.
MultiSodTable sod_table_multi(int a, int b, const std::vector<int>& dims,
                              bool prune_empty = false);

struct QuotSummand {
    std::vector<int> composition;  // d_1 + ... + d_r = d
    std::string label;             // Sym^{d_1}(C) x ... x Sym^{d_r}(C)
    long long exceptional_count = -1;  // prod (d_i + 1) when genus = 0, else -1
};

struct QuotTable {
    int r = 1, d = 0, genus = 0;
    std::vector<QuotSummand> summands;  // descending lexicographic
};

QuotTable quot_curve_table(int r, int d, int genus);

struct CountIdentity {
    long long lhs = 0;  // sum over compositions of prod (d_i + 1), by enumeration
    long long rhs = 0;  // binom(2r + d - 1, d)
    bool equal = false;
};

CountIdentity exceptional_count_p1(int r, int d);

}  // namespace hallwin
