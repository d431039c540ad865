#include "hallwin/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hallwin {

long long binomial(long long n, long long k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    long long out = 1;
    for (long long i = 1; i <= k; ++i) {
        out = out * (n - k + i) / i;  // exact: product of i consecutive ints is divisible by i!
    }
    return out;
}

namespace {

void compositions_rec(int parts, int total, bool exact, std::vector<int>& cur,
                      std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == parts) {
        if (!exact || total == 0) out.push_back(cur);
        return;
    }
    for (int v = total; v >= 0; --v) {
        cur.push_back(v);
        compositions_rec(parts, total - v, exact, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<std::vector<int>> compositions_eq(int parts, int total) {
    if (parts < 0 || total < 0) throw std::invalid_argument("compositions_eq: negative input");
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    compositions_rec(parts, total, /*exact=*/true, cur, out);
    return out;
}

std::vector<std::vector<int>> compositions_leq(int parts, int total) {
    if (parts < 0 || total < 0) throw std::invalid_argument("compositions_leq: negative input");
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    compositions_rec(parts, total, /*exact=*/false, cur, out);
    return out;
}

Weight Weight::zero(int d) { return Weight(std::vector<int>(static_cast<size_t>(d), 0)); }

Weight Weight::all_ones(int d) { return Weight(std::vector<int>(static_cast<size_t>(d), 1)); }

Weight Weight::basis(int d, int i) {
    std::vector<int> e(static_cast<size_t>(d), 0);
    e.at(static_cast<size_t>(i)) = 1;
    return Weight(std::move(e));
}

long long Weight::sum() const {
    long long s = 0;
    for (int x : entries_) s += x;
    return s;
}

bool Weight::weakly_ascending() const {
    return std::is_sorted(entries_.begin(), entries_.end());
}

Weight& Weight::operator+=(const Weight& rhs) {
    if (rank() != rhs.rank()) throw std::invalid_argument("Weight: rank mismatch");
    for (size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
    return *this;
}

Weight& Weight::operator-=(const Weight& rhs) {
    if (rank() != rhs.rank()) throw std::invalid_argument("Weight: rank mismatch");
    for (size_t i = 0; i < entries_.size(); ++i) entries_[i] -= rhs.entries_[i];
    return *this;
}

Weight operator*(int c, const Weight& w) {
    std::vector<int> e = w.entries_;
    for (int& x : e) x *= c;
    return Weight(std::move(e));
}

std::string Weight::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < entries_.size(); ++i) {
        if (i) os << ',';
        os << entries_[i];
    }
    return os.str();
}

long long pairing(const Weight& cochar, const Weight& chi) {
    if (cochar.rank() != chi.rank()) throw std::invalid_argument("pairing: rank mismatch");
    long long s = 0;
    for (int i = 0; i < chi.rank(); ++i) s += static_cast<long long>(cochar[i]) * chi[i];
    return s;
}

DominantWeight::DominantWeight(Weight w) : w_(std::move(w)) {
    if (!w_.weakly_ascending())
        throw std::invalid_argument("DominantWeight: entries not weakly ascending");
}

int DominantWeight::leading_zeros() const {
    int k = 0;
    while (k < rank() && w_[k] == 0) ++k;
    return k;
}

size_t WindowSet::size() const {
    size_t n = 0;
    for (const auto& s : strata) n += s.size();
    return n;
}

std::vector<DominantWeight> WindowSet::all() const {
    std::vector<DominantWeight> out;
    out.reserve(size());
    for (const auto& s : strata) out.insert(out.end(), s.begin(), s.end());
    return out;
}

long long window_count(int c, int d) {
    if (d < 0) throw std::invalid_argument("window_count: d < 0");
    if (d == 0) return 1;
    if (c <= 0) return 0;
    return binomial(c + d - 1, d);
}

namespace {

// Weakly ascending vectors of length d with entries in [0, hi], lexicographic.
void ascending_rec(int d, int lo, int hi, std::vector<int>& cur,
                   std::vector<DominantWeight>& out) {
    if (static_cast<int>(cur.size()) == d) {
        out.emplace_back(Weight(cur));
        return;
    }
    for (int v = lo; v <= hi; ++v) {
        cur.push_back(v);
        ascending_rec(d, v, hi, cur, out);
        cur.pop_back();
    }
}

std::vector<DominantWeight> ascending_vectors(int d, int hi) {
    std::vector<DominantWeight> out;
    std::vector<int> cur;
    if (d == 0) {
        out.emplace_back();
        return out;
    }
    if (hi < 0) return out;
    ascending_rec(d, 0, hi, cur, out);
    return out;
}

}  // namespace

std::vector<DominantWeight> window_weights(int c, int d) {
    if (c < 0 || d < 0) throw std::invalid_argument("window_weights: negative input");
    return ascending_vectors(d, c - 1);
}

NormalizedWeight normalize_dotted(const Weight& chi) {
    const int d = chi.rank();
    std::vector<int> v = chi.entries();
    for (int i = 0; i < d; ++i) v[static_cast<size_t>(i)] += i;  // + rho~
    int inversions = 0;
    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) {
            if (v[static_cast<size_t>(i)] == v[static_cast<size_t>(j)])
                return NormalizedWeight::make_singular();
            if (v[static_cast<size_t>(i)] > v[static_cast<size_t>(j)]) ++inversions;
        }
    }
    std::sort(v.begin(), v.end());
    for (int i = 0; i < d; ++i) v[static_cast<size_t>(i)] -= i;  // - rho~
    return NormalizedWeight(DominantWeight(Weight(std::move(v))), inversions);
}

WindowSet enumerate_window(int c, int d) {
    if (c < 1) throw std::invalid_argument("enumerate_window: c must be >= 1");
    if (d < 0) throw std::invalid_argument("enumerate_window: d must be >= 0");
    WindowSet w;
    w.c = c;
    w.d = d;
    w.strata.assign(static_cast<size_t>(d) + 1, {});
    for (auto& chi : ascending_vectors(d, c - 1)) {
        const int k = chi.leading_zeros();
        w.strata[static_cast<size_t>(k)].push_back(std::move(chi));
    }
    return w;
}

DominantWeight embed_window(const DominantWeight& chi, int d) {
    const int dp = chi.rank();
    if (d < dp) throw std::invalid_argument("embed_window: target rank below source rank");
    std::vector<int> e(static_cast<size_t>(d), 0);
    for (int i = 0; i < dp; ++i) e[static_cast<size_t>(d - dp + i)] = chi[i];
    return DominantWeight(Weight(std::move(e)));
}

std::vector<DominantWeight> kapranov_diagrams(int r, int d) {
    if (d < 0 || d > r) throw std::invalid_argument("kapranov_diagrams: need 0 <= d <= r");
    return ascending_vectors(d, r - d);
}

std::vector<DominantWeight> md_generators(int d, Rational delta_t) {
    if (d < 0) throw std::invalid_argument("md_generators: d must be >= 0");
    if (delta_t.den == 0) throw std::invalid_argument("md_generators: zero denominator");
    std::vector<DominantWeight> out;
    if (!delta_t.is_integer()) return out;
    const int t = static_cast<int>(delta_t.integer_value());
    out.emplace_back(t * Weight::all_ones(d));
    return out;
}

namespace {

long long orbit_pairing(const DominantWeight& chi, const Weight& lam, bool want_min) {
    if (chi.rank() != lam.rank()) throw std::invalid_argument("orbit_pairing: rank mismatch");
    const int d = chi.rank();
    std::vector<int> l = lam.entries();
    std::sort(l.begin(), l.end());
    long long s = 0;
    for (int i = 0; i < d; ++i) {
        const int c = want_min ? chi[d - 1 - i] : chi[i];
        s += static_cast<long long>(l[static_cast<size_t>(i)]) * c;
    }
    return s;
}

}  // namespace

long long min_orbit_pairing(const DominantWeight& chi, const Weight& lam) {
    return orbit_pairing(chi, lam, true);
}

long long max_orbit_pairing(const DominantWeight& chi, const Weight& lam) {
    return orbit_pairing(chi, lam, false);
}

}  // namespace hallwin
