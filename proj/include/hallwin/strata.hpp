#pragma once

// Kempf-Ness stratification data for the framed one-loop quiver moduli and
// its multi-vertex product version, plus window-interval membership tests.

#include <string>
#include <vector>

#include "hallwin/lattice.hpp"

namespace hallwin {

enum class Side { plus, minus };

std::string side_name(Side s);
Side parse_side(const std::string& name);  // "plus" / "minus"

struct QuiverSpec {
    int a = 0;               // arrows framing -> loop vertex
    int b = 0;               // arrows loop vertex -> framing
    std::vector<int> dims;   // dimension vector, one entry per loop vertex

    int r() const { return a - b; }
    int vertex_count() const { return static_cast<int>(dims.size()); }
    long long total_dim() const;
    void validate() const;   // a,b >= 0, m >= 1, dims >= 0
};

struct Stratum {
    int index = 0;       // i
    Side side = Side::plus;
    Weight cochar;       // lambda_i^{side}
    int slope_sq = 0;    // squared slope, d - i
    long long eta = 0;   // conormal weight along lambda_i
};

// Closed integer interval; empty when lo > hi.
struct IntInterval {
    long long lo = 0;
    long long hi = -1;
    bool empty() const { return lo > hi; }
    bool contains(long long x) const { return lo <= x && x <= hi; }
    bool contains_range(long long rlo, long long rhi) const {
        return lo <= rlo && rhi <= hi;
    }
};

enum class WindowChoice { plus_window, minus_window };

// Unstable strata i = 0..d-1 of the single-vertex moduli (requires one
// vertex): slope_sq = d - i, eta = a(d-i) on side +, b(d-i) on side -.
std::vector<Stratum> kn_strata(const QuiverSpec& spec, Side side);

// Allowed integer lambda_i-weights of a window object at this stratum:
// plus-window [-eta+1, 0], minus-window [0, eta-1].
IntInterval window_interval(const Stratum& stratum, WindowChoice choice);

// True iff for every stratum (of the side matching the choice) the full
// lambda_i-weight range of V(chi) lies in the window interval.
bool generator_in_window(const DominantWeight& chi, const QuiverSpec& spec,
                         WindowChoice choice);

struct MultiStratum {
    int index = 0;     // i
    Side side = Side::plus;
    int slope_sq = 0;  // |d| - i
    // Per-vertex stratum indices (i_1, ..., i_m) with sum i; entry i_j equal
    // to dims[j] marks a semistable factor. Descending lexicographic.
    std::vector<std::vector<int>> decomps;
};

// Strata i = 0..|d|-1 of the product moduli.
std::vector<MultiStratum> multi_strata(const QuiverSpec& spec, Side side);

}  // namespace hallwin
