#include "hallwin/strata.hpp"

#include <stdexcept>

namespace hallwin {

std::string side_name(Side s) { return s == Side::plus ? "plus" : "minus"; }

Side parse_side(const std::string& name) {
    if (name == "plus" || name == "+") return Side::plus;
    if (name == "minus" || name == "-") return Side::minus;
    throw std::invalid_argument("unknown side: " + name);
}

long long QuiverSpec::total_dim() const {
    long long s = 0;
    for (int x : dims) s += x;
    return s;
}

void QuiverSpec::validate() const {
    if (a < 0 || b < 0) throw std::invalid_argument("QuiverSpec: arrow counts must be >= 0");
    if (dims.empty()) throw std::invalid_argument("QuiverSpec: at least one vertex required");
    for (int x : dims)
        if (x < 0) throw std::invalid_argument("QuiverSpec: dimensions must be >= 0");
}

namespace {

Weight stratum_cochar(int d, int i, Side side) {
    std::vector<int> e(static_cast<size_t>(d), 0);
    if (side == Side::plus) {
        for (int j = i; j < d; ++j) e[static_cast<size_t>(j)] = -1;
    } else {
        for (int j = 0; j < d - i; ++j) e[static_cast<size_t>(j)] = 1;
    }
    return Weight(std::move(e));
}

}  // namespace

std::vector<Stratum> kn_strata(const QuiverSpec& spec, Side side) {
    spec.validate();
    if (spec.vertex_count() != 1)
        throw std::invalid_argument("kn_strata: single-vertex spec required");
    const int d = spec.dims[0];
    std::vector<Stratum> out;
    out.reserve(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) {
        Stratum s;
        s.index = i;
        s.side = side;
        s.cochar = stratum_cochar(d, i, side);
        s.slope_sq = d - i;
        const long long arrows = (side == Side::plus) ? spec.a : spec.b;
        s.eta = arrows * (d - i);
        out.push_back(std::move(s));
    }
    return out;
}

IntInterval window_interval(const Stratum& stratum, WindowChoice choice) {
    if (choice == WindowChoice::plus_window) return {-stratum.eta + 1, 0};
    return {0, stratum.eta - 1};
}

bool generator_in_window(const DominantWeight& chi, const QuiverSpec& spec,
                         WindowChoice choice) {
    spec.validate();
    if (spec.vertex_count() != 1)
        throw std::invalid_argument("generator_in_window: single-vertex spec required");
    if (chi.rank() != spec.dims[0])
        throw std::invalid_argument("generator_in_window: rank mismatch");
    const Side side = (choice == WindowChoice::plus_window) ? Side::plus : Side::minus;
    for (const Stratum& s : kn_strata(spec, side)) {
        const long long lo = min_orbit_pairing(chi, s.cochar);
        const long long hi = max_orbit_pairing(chi, s.cochar);
        if (!window_interval(s, choice).contains_range(lo, hi)) return false;
    }
    return true;
}

namespace {

// (i_1,...,i_m) with sum == i and 0 <= i_j <= dims[j], descending lex.
void decomp_rec(const std::vector<int>& dims, size_t pos, int remaining,
                std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (pos == dims.size()) {
        if (remaining == 0) out.push_back(cur);
        return;
    }
    const int cap = std::min(remaining, dims[pos]);
    for (int v = cap; v >= 0; --v) {
        cur.push_back(v);
        decomp_rec(dims, pos + 1, remaining - v, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<MultiStratum> multi_strata(const QuiverSpec& spec, Side side) {
    spec.validate();
    const long long total = spec.total_dim();
    std::vector<MultiStratum> out;
    out.reserve(static_cast<size_t>(total));
    for (int i = 0; i < total; ++i) {
        MultiStratum s;
        s.index = i;
        s.side = side;
        s.slope_sq = static_cast<int>(total) - i;
        std::vector<int> cur;
        decomp_rec(spec.dims, 0, i, cur, s.decomps);
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace hallwin
