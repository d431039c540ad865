#pragma once

// Weight-lattice combinatorics for GL(d): dominance, the dotted Weyl action,
// bounded weight windows and their strata, Young-diagram enumeration.
//
// Conventions: the dominant chamber is weakly ascending (x_1 <= ... <= x_d).
// All dotted-action arithmetic uses the integral shift rho~ = (0,1,...,d-1)
// in place of the half-integral half-sum of positive roots; the two differ by
// a constant vector, which commutes with every permutation, so singularity
// detection and dominant representatives are unchanged.

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "hallwin/combinat.hpp"

namespace hallwin {

// Ordered integer vector of length d. Serves both as a character of the
// diagonal torus and as an integral one-parameter subgroup.
class Weight {
public:
    Weight() = default;
    explicit Weight(std::vector<int> entries) : entries_(std::move(entries)) {}

    static Weight zero(int d);
    static Weight all_ones(int d);      // chi_0, the determinant character
    static Weight basis(int d, int i);  // e_i, zero-based

    int rank() const { return static_cast<int>(entries_.size()); }
    int operator[](int i) const { return entries_[static_cast<size_t>(i)]; }
    const std::vector<int>& entries() const { return entries_; }

    long long sum() const;
    bool weakly_ascending() const;

    Weight& operator+=(const Weight& rhs);
    Weight& operator-=(const Weight& rhs);
    friend Weight operator+(Weight lhs, const Weight& rhs) { return lhs += rhs; }
    friend Weight operator-(Weight lhs, const Weight& rhs) { return lhs -= rhs; }
    friend Weight operator*(int c, const Weight& w);

    friend auto operator<=>(const Weight&, const Weight&) = default;

    std::string str() const;  // comma-joined entries, "" for rank 0

private:
    std::vector<int> entries_;
};

// <cochar, char> under the standard perfect pairing.
long long pairing(const Weight& cochar, const Weight& chi);

// Weight with weakly ascending entries.
class DominantWeight {
public:
    DominantWeight() = default;  // rank-0 weight
    explicit DominantWeight(Weight w);
    explicit DominantWeight(std::vector<int> entries)
        : DominantWeight(Weight(std::move(entries))) {}

    const Weight& as_weight() const { return w_; }
    int rank() const { return w_.rank(); }
    int operator[](int i) const { return w_[i]; }
    long long sum() const { return w_.sum(); }
    std::string str() const { return w_.str(); }

    // Number of leading zero entries; for a member of B_c(d) this is the
    // stratum index k.
    int leading_zeros() const;

    friend auto operator<=>(const DominantWeight&, const DominantWeight&) = default;

private:
    Weight w_;
};

// Outcome of the dotted Weyl action: either chi + rho~ has a repeated entry
// (singular) or there is a unique dominant representative together with the
// length of the sorting permutation.
class NormalizedWeight {
public:
    static NormalizedWeight make_singular() { return NormalizedWeight(); }
    NormalizedWeight(DominantWeight dom, int inversions)
        : dom_(std::move(dom)), inversions_(inversions) {}

    bool is_singular() const { return !dom_.has_value(); }
    const DominantWeight& dominant() const { return *dom_; }
    int inversions() const { return inversions_; }

private:
    NormalizedWeight() = default;
    std::optional<DominantWeight> dom_;
    int inversions_ = 0;
};

// B_c(d) = {0 <= x_1 <= ... <= x_d <= c-1} partitioned into strata
// B_{c,k}(d) by the number k of leading zeros.
struct WindowSet {
    int c = 1;
    int d = 0;
    std::vector<std::vector<DominantWeight>> strata;  // index k = 0..d

    size_t size() const;
    // Flattened view, stratum-major, lexicographic within a stratum.
    std::vector<DominantWeight> all() const;
};

// |B_c(d)| = binom(c+d-1, d), with the conventions |B_c(0)| = 1 and
// |B_0(d)| = 0 for d > 0.
long long window_count(int c, int d);

// Members of B_c(d) in lexicographic order; accepts c = 0 (empty for d > 0).
std::vector<DominantWeight> window_weights(int c, int d);

NormalizedWeight normalize_dotted(const Weight& chi);

// Requires c >= 1.
WindowSet enumerate_window(int c, int d);

// Prepend d - rank(chi) zeros; rejects d < rank(chi). Shifts the stratum
// index by d - rank(chi).
DominantWeight embed_window(const DominantWeight& chi, int d);

// Young diagrams inside a d x (r-d) box, as ascending vectors of length d
// with entries in [0, r-d]. Requires 0 <= d <= r.
std::vector<DominantWeight> kapranov_diagrams(int r, int d);

// Exact rational t = num/den, den != 0.
struct Rational {
    long long num = 0;
    long long den = 1;
    bool is_integer() const { return den != 0 && num % den == 0; }
    long long integer_value() const { return num / den; }
};

// Generators of the magic window for the one-loop quiver at twist delta_t:
// {t * chi_0} when delta_t is an integer t, empty otherwise.
std::vector<DominantWeight> md_generators(int d, Rational delta_t);

// Extremes of <lam, w(chi)> over the Weyl orbit of chi, by the rearrangement
// inequality (lam ascending against chi descending resp. ascending).
long long min_orbit_pairing(const DominantWeight& chi, const Weight& lam);
long long max_orbit_pairing(const DominantWeight& chi, const Weight& lam);

}  // namespace hallwin
