#include "hallwin/sod.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace hallwin {

namespace {

std::string summand_label(const std::vector<int>& d_bullet, int b, int m) {
    const int l = static_cast<int>(d_bullet.size());
    std::ostringstream os;
    for (int i = 0; i < l; ++i) {
        if (i == 0) {
            os << "W(" << d_bullet[static_cast<size_t>(i)] << ")";
        } else {
            os << " * (W(" << d_bullet[static_cast<size_t>(i)] << ") x chi0";
            if (i > 1) os << '^' << i;
            os << ')';
        }
    }
    os << " * (W_" << b << "(" << m << ") x chi0";
    if (l > 1) os << '^' << l;
    os << ')';
    return os.str();
}

}  // namespace

long long SodTable::total() const {
    long long s = 0;
    for (const Summand& x : summands) s += x.generator_count;
    return s;
}

SodTable sod_table(int a, int b, int c, int d, bool prune_empty) {
    if (b < 0 || a < b || c <= b || d < 0)
        throw std::invalid_argument("sod_table: need a >= b >= 0, c > b, d >= 0");
    const int l = c - b;
    SodTable table{a, b, c, d, {}};
    for (const auto& idx : compositions_leq(l, d)) {
        Summand s;
        s.index = idx;
        long long used = 0;
        for (int x : idx) used += x;
        s.residual = d - static_cast<int>(used);
        s.generator_count = window_count(b, s.residual);
        s.label = summand_label(idx, b, s.residual);
        if (prune_empty && s.generator_count == 0) continue;
        table.summands.push_back(std::move(s));
    }
    return table;
}

long long MultiSodTable::total() const {
    long long s = 0;
    for (const MultiSummand& x : summands) s += x.generator_count;
    return s;
}

namespace {

// Rows i = 0..l-1: split d_bullet[i] across m vertices, keeping every
// column sum within dims. Descending lex over the flattened matrix.
void refine_rec(const std::vector<int>& d_bullet, const std::vector<int>& dims,
                size_t row, std::vector<int>& col_used,
                std::vector<std::vector<int>>& cur,
                std::vector<std::vector<std::vector<int>>>& out) {
    if (row == d_bullet.size()) {
        out.push_back(cur);
        return;
    }
    const int m = static_cast<int>(dims.size());
    // enumerate row vectors with sum d_bullet[row] within column capacity
    std::vector<std::vector<int>> rows;
    std::vector<int> tmp;
    std::function<void(int, int)> rec = [&](int pos, int remaining) {
        if (pos == m) {
            if (remaining == 0) rows.push_back(tmp);
            return;
        }
        const int cap = std::min(remaining,
                                 dims[static_cast<size_t>(pos)] - col_used[static_cast<size_t>(pos)]);
        for (int v = cap; v >= 0; --v) {
            tmp.push_back(v);
            rec(pos + 1, remaining - v);
            tmp.pop_back();
        }
    };
    rec(0, d_bullet[row]);
    for (const auto& r : rows) {
        for (int j = 0; j < m; ++j) col_used[static_cast<size_t>(j)] += r[static_cast<size_t>(j)];
        cur.push_back(r);
        refine_rec(d_bullet, dims, row + 1, col_used, cur, out);
        cur.pop_back();
        for (int j = 0; j < m; ++j) col_used[static_cast<size_t>(j)] -= r[static_cast<size_t>(j)];
    }
}

}  // namespace

MultiSodTable sod_table_multi(int a, int b, const std::vector<int>& dims, bool prune_empty) {
    if (b < 0 || a <= b) throw std::invalid_argument("sod_table_multi: need a > b >= 0");
    if (dims.empty()) throw std::invalid_argument("sod_table_multi: at least one vertex");
    for (int x : dims)
        if (x < 0) throw std::invalid_argument("sod_table_multi: negative dimension");
    const int c = a;
    const int l = c - b;
    const int m = static_cast<int>(dims.size());
    int total_dim = 0;
    for (int x : dims) total_dim += x;

    MultiSodTable table;
    table.a = a;
    table.b = b;
    table.c = c;
    table.dims = dims;
    for (const auto& idx : compositions_leq(l, total_dim)) {
        MultiSummand s;
        s.index = idx;
        std::vector<int> col_used(static_cast<size_t>(m), 0);
        std::vector<std::vector<int>> cur;
        refine_rec(idx, dims, 0, col_used, cur, s.refinements);
        for (const auto& ref : s.refinements) {
            long long prod = 1;
            for (int j = 0; j < m; ++j) {
                int used = 0;
                for (size_t i = 0; i < ref.size(); ++i) used += ref[i][static_cast<size_t>(j)];
                prod *= window_count(b, dims[static_cast<size_t>(j)] - used);
            }
            s.generator_count += prod;
        }
        int used = 0;
        for (int x : idx) used += x;
        s.label = summand_label(idx, b, total_dim - used);
        if (prune_empty && s.generator_count == 0) continue;
        table.summands.push_back(std::move(s));
    }
    return table;
}

QuotTable quot_curve_table(int r, int d, int genus) {
    if (r < 1 || d < 0 || genus < 0)
        throw std::invalid_argument("quot_curve_table: need r >= 1, d >= 0, genus >= 0");
    QuotTable table{r, d, genus, {}};
    for (const auto& comp : compositions_eq(r, d)) {
        QuotSummand s;
        s.composition = comp;
        std::ostringstream os;
        for (int i = 0; i < r; ++i) {
            if (i) os << " x ";
            os << "Sym^" << comp[static_cast<size_t>(i)] << "(C)";
        }
        s.label = os.str();
        if (genus == 0) {
            s.exceptional_count = 1;
            for (int x : comp) s.exceptional_count *= x + 1;
        }
        table.summands.push_back(std::move(s));
    }
    return table;
}

CountIdentity exceptional_count_p1(int r, int d) {
    if (r < 1 || d < 0) throw std::invalid_argument("exceptional_count_p1: need r >= 1, d >= 0");
    CountIdentity out;
    for (const auto& comp : compositions_eq(r, d)) {
        long long prod = 1;
        for (int x : comp) prod *= x + 1;
        out.lhs += prod;
    }
    out.rhs = binomial(2LL * r + d - 1, d);
    out.equal = out.lhs == out.rhs;
    return out;
}

}  // namespace hallwin
