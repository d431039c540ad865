#include "hallwin/hall.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hallwin {

SymLaurent SymLaurent::constant(int rank, long long value) {
    SymLaurent p(rank);
    p.add_term(std::vector<int>(static_cast<size_t>(rank), 0), value);
    return p;
}

void SymLaurent::add_term(const std::vector<int>& exps, long long coeff) {
    if (static_cast<int>(exps.size()) != rank_)
        throw std::invalid_argument("SymLaurent: exponent length mismatch");
    if (coeff == 0) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

bool SymLaurent::is_symmetric() const {
    for (const auto& [exps, coeff] : terms_) {
        for (int i = 0; i + 1 < rank_; ++i) {
            std::vector<int> swapped = exps;
            std::swap(swapped[static_cast<size_t>(i)], swapped[static_cast<size_t>(i) + 1]);
            auto it = terms_.find(swapped);
            if (it == terms_.end() || it->second != coeff) return false;
        }
    }
    return true;
}

long long SymLaurent::eval_at_ones() const {
    long long s = 0;
    for (const auto& [exps, coeff] : terms_) s += coeff;
    return s;
}

SymLaurent& SymLaurent::operator+=(const SymLaurent& rhs) {
    if (rank_ != rhs.rank_) throw std::invalid_argument("SymLaurent: rank mismatch");
    for (const auto& [exps, coeff] : rhs.terms_) add_term(exps, coeff);
    return *this;
}

SymLaurent& SymLaurent::operator-=(const SymLaurent& rhs) {
    if (rank_ != rhs.rank_) throw std::invalid_argument("SymLaurent: rank mismatch");
    for (const auto& [exps, coeff] : rhs.terms_) add_term(exps, -coeff);
    return *this;
}

SymLaurent operator*(const SymLaurent& lhs, const SymLaurent& rhs) {
    if (lhs.rank_ != rhs.rank_) throw std::invalid_argument("SymLaurent: rank mismatch");
    SymLaurent out(lhs.rank_);
    for (const auto& [ea, ca] : lhs.terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            std::vector<int> e = ea;
            for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

SymLaurent& SymLaurent::scale(long long c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [exps, coeff] : terms_) coeff *= c;
    return *this;
}

std::string SymLaurent::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [exps, coeff] : terms_) {
        if (!first) os << (coeff >= 0 ? " + " : " - ");
        else if (coeff < 0) os << "-";
        first = false;
        const long long mag = coeff >= 0 ? coeff : -coeff;
        bool printed = false;
        if (mag != 1) {
            os << mag;
            printed = true;
        }
        for (size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] == 0) continue;
            if (printed) os << '*';
            os << 'x' << (i + 1);
            if (exps[i] != 1) os << '^' << exps[i];
            printed = true;
        }
        if (!printed) os << 1;
    }
    return os.str();
}

std::vector<Weight> attracting_set(int b, int d, int k) {
    if (b < 0 || d < 0 || k < 0 || k > d)
        throw std::invalid_argument("attracting_set: need b >= 0 and 0 <= k <= d");
    std::vector<Weight> out;
    for (int i = 0; i < k; ++i)
        for (int copy = 0; copy < b; ++copy) out.push_back(-1 * Weight::basis(d, i));
    for (int j = 0; j < k; ++j)
        for (int i = k; i < d; ++i)
            out.push_back(Weight::basis(d, i) - Weight::basis(d, j));
    return out;
}

namespace {

void check_bwb_input(const DominantWeight& chi, int k, int b, int d) {
    if (d < 0 || k < 0 || k > d || b < 0)
        throw std::invalid_argument("bwb_terms: need b >= 0 and 0 <= k <= d");
    if (chi.rank() != d) throw std::invalid_argument("bwb_terms: chi must have length d");
    for (int i = 0; i < k; ++i)
        if (chi[i] != 0) throw std::invalid_argument("bwb_terms: first k entries must vanish");
}

// Enumerates the I-classes (s_i in [0,b] for i <= k, s_{ij} in {0,1} for
// j <= k < i) and feeds each normalized term to sink(weight, shift, mult).
template <typename Sink>
void for_each_bwb_term(const DominantWeight& chi, int k, int b, int d, Sink&& sink) {
    const int nbits = k * (d - k);
    std::vector<int> s(static_cast<size_t>(k), 0);
    std::vector<int> sij(static_cast<size_t>(nbits), 0);  // (i,j) -> (i-k)*k + j
    for (;;) {
        long long sz = 0;
        std::vector<int> entries(static_cast<size_t>(d), 0);
        for (int j = 0; j < k; ++j) {
            entries[static_cast<size_t>(j)] = s[static_cast<size_t>(j)];
            sz += s[static_cast<size_t>(j)];
        }
        for (int i = k; i < d; ++i) entries[static_cast<size_t>(i)] = chi[i];
        for (int i = k; i < d; ++i) {
            for (int j = 0; j < k; ++j) {
                const int bit = sij[static_cast<size_t>((i - k) * k + j)];
                if (!bit) continue;
                entries[static_cast<size_t>(j)] += 1;
                entries[static_cast<size_t>(i)] -= 1;
                sz += 1;
            }
        }
        const NormalizedWeight norm = normalize_dotted(Weight(entries));
        if (!norm.is_singular()) {
            long long mult = 1;
            for (int j = 0; j < k; ++j) mult *= binomial(b, s[static_cast<size_t>(j)]);
            sink(norm.dominant(), static_cast<int>(sz) - norm.inversions(), mult);
        }
        // odometer: advance s in base b+1, then sij in base 2
        int pos = 0;
        while (pos < k && s[static_cast<size_t>(pos)] == b) {
            s[static_cast<size_t>(pos)] = 0;
            ++pos;
        }
        if (pos < k) {
            ++s[static_cast<size_t>(pos)];
            continue;
        }
        pos = 0;
        while (pos < nbits && sij[static_cast<size_t>(pos)] == 1) {
            sij[static_cast<size_t>(pos)] = 0;
            ++pos;
        }
        if (pos < nbits) {
            ++sij[static_cast<size_t>(pos)];
            continue;
        }
        break;
    }
}

}  // namespace

std::vector<HallTerm> bwb_terms(const DominantWeight& chi, int k, int b, int d) {
    check_bwb_input(chi, k, b, d);
    std::map<std::pair<DominantWeight, int>, long long> agg;
    for_each_bwb_term(chi, k, b, d,
                      [&](const DominantWeight& w, int shift, long long mult) {
                          agg[{w, shift}] += mult;
                      });
    std::vector<HallTerm> out;
    out.reserve(agg.size());
    for (const auto& [key, mult] : agg) out.push_back({key.first, key.second, mult});
    return out;
}

LeadingReport verify_leading(const DominantWeight& chi, int k, int c, int b, int d) {
    LeadingReport rep;
    if (d < 0 || k < 0 || k > d || b < 0 || c <= b) {
        rep.input_error = true;
        rep.message = "need 0 <= k <= d, 0 <= b < c";
        return rep;
    }
    if (chi.rank() != d - k) {
        rep.input_error = true;
        rep.message = "chi must have length d - k";
        return rep;
    }
    for (int i = 0; i < chi.rank(); ++i) {
        if (chi[i] < 1 || chi[i] > c - 1) {
            rep.input_error = true;
            rep.message = "chi must lie in B_{c,0}(d-k)";
            return rep;
        }
    }
    rep.leading = embed_window(chi, d);
    rep.terms = bwb_terms(rep.leading, k, b, d);

    long long leading_mult = 0;
    bool leading_at_shift_zero = true;
    for (const HallTerm& t : rep.terms) {
        bool in_window = true;
        for (int i = 0; i < d; ++i)
            if (t.weight[i] < 0 || t.weight[i] > c - 1) in_window = false;
        const int stratum = t.weight.leading_zeros();
        if (!in_window || stratum > k) {
            rep.message = "term " + t.weight.str() + " escapes B_{c,<=k}(d)";
            return rep;
        }
        if (t.weight == rep.leading) {
            leading_mult += t.multiplicity;
            if (t.shift != 0) leading_at_shift_zero = false;
        } else if (stratum >= k) {
            rep.message = "companion " + t.weight.str() + " not in B_{c,<k}(d)";
            return rep;
        }
    }
    if (leading_mult != 1 || !leading_at_shift_zero) {
        rep.message = "leading weight multiplicity " + std::to_string(leading_mult);
        return rep;
    }
    rep.pass = true;
    return rep;
}

namespace {

// Semistandard tableaux of shape lambda (descending partition, possibly with
// trailing zeros) filled with 1..d; accumulates content exponent vectors.
void ssyt_rec(const std::vector<int>& lambda, int d, int row, int col,
              std::vector<std::vector<int>>& tab, std::vector<int>& content,
              SymLaurent& out, int base_shift) {
    const int rows = static_cast<int>(lambda.size());
    if (row == rows) {
        std::vector<int> exps = content;
        for (int& e : exps) e += base_shift;
        out.add_term(exps, 1);
        return;
    }
    if (col == lambda[static_cast<size_t>(row)]) {
        ssyt_rec(lambda, d, row + 1, 0, tab, content, out, base_shift);
        return;
    }
    int lo = 1;
    if (col > 0) lo = std::max(lo, tab[static_cast<size_t>(row)][static_cast<size_t>(col) - 1]);
    if (row > 0 && col < lambda[static_cast<size_t>(row) - 1])
        lo = std::max(lo, tab[static_cast<size_t>(row) - 1][static_cast<size_t>(col)] + 1);
    for (int v = lo; v <= d; ++v) {
        tab[static_cast<size_t>(row)][static_cast<size_t>(col)] = v;
        ++content[static_cast<size_t>(v) - 1];
        ssyt_rec(lambda, d, row, col + 1, tab, content, out, base_shift);
        --content[static_cast<size_t>(v) - 1];
    }
}

}  // namespace

SymLaurent schur(const DominantWeight& chi, int d) {
    if (chi.rank() != d) throw std::invalid_argument("schur: chi must have length d");
    if (d == 0) return SymLaurent::constant(0, 1);
    const int shift = chi[0];  // minimal entry, ascending
    std::vector<int> lambda(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) lambda[static_cast<size_t>(i)] = chi[d - 1 - i] - shift;
    SymLaurent out(d);
    std::vector<std::vector<int>> tab(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i)
        tab[static_cast<size_t>(i)].assign(static_cast<size_t>(lambda[static_cast<size_t>(i)]), 0);
    std::vector<int> content(static_cast<size_t>(d), 0);
    ssyt_rec(lambda, d, 0, 0, tab, content, out, shift);
    return out;
}

namespace {

void combinations_rec(int n, int r, int start, std::vector<int>& cur,
                      std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == r) {
        out.push_back(cur);
        return;
    }
    for (int v = start; v < n; ++v) {
        cur.push_back(v);
        combinations_rec(n, r, v + 1, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> combinations(int n, int r) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    combinations_rec(n, r, 0, cur, out);
    return out;
}

}  // namespace

SymLaurent kclass_shuffle(const SymLaurent& f, const SymLaurent& g, int b) {
    if (b < 0) throw std::invalid_argument("kclass_shuffle: b must be >= 0");
    if (!f.is_symmetric() || !g.is_symmetric())
        throw std::invalid_argument("kclass_shuffle: blocks must be symmetric");
    const int d1 = f.rank();
    const int d2 = g.rank();
    const int d = d1 + d2;

    // f (x) g (x) prod_{j <= d1} (1 - x_j)^b on the ordered split
    SymLaurent h(d);
    for (const auto& [ef, cf] : f.terms()) {
        for (const auto& [eg, cg] : g.terms()) {
            std::vector<int> e(static_cast<size_t>(d), 0);
            for (int i = 0; i < d1; ++i) e[static_cast<size_t>(i)] = ef[static_cast<size_t>(i)];
            for (int i = 0; i < d2; ++i) e[static_cast<size_t>(d1 + i)] = eg[static_cast<size_t>(i)];
            h.add_term(e, cf * cg);
        }
    }
    for (int j = 0; j < d1; ++j) {
        SymLaurent factor(d);
        for (int s = 0; s <= b; ++s) {
            std::vector<int> e(static_cast<size_t>(d), 0);
            e[static_cast<size_t>(j)] = s;
            factor.add_term(e, (s % 2 == 0 ? 1 : -1) * binomial(b, s));
        }
        h = h * factor;
    }

    SymLaurent out(d);
    for (const auto& positions : combinations(d, d1)) {
        std::vector<int> dest(static_cast<size_t>(d), 0);
        std::vector<bool> taken(static_cast<size_t>(d), false);
        for (int i = 0; i < d1; ++i) {
            dest[static_cast<size_t>(i)] = positions[static_cast<size_t>(i)];
            taken[static_cast<size_t>(positions[static_cast<size_t>(i)])] = true;
        }
        int next = 0;
        for (int i = 0; i < d2; ++i) {
            while (taken[static_cast<size_t>(next)]) ++next;
            dest[static_cast<size_t>(d1 + i)] = next++;
        }
        for (const auto& [e, coeff] : h.terms()) {
            std::vector<int> moved(static_cast<size_t>(d), 0);
            for (int i = 0; i < d; ++i)
                moved[static_cast<size_t>(dest[static_cast<size_t>(i)])] = e[static_cast<size_t>(i)];
            out.add_term(moved, coeff);
        }
    }
    return out;
}

SymLaurent kclass_bwb(const DominantWeight& chi, int k, int b, int d) {
    check_bwb_input(chi, k, b, d);
    SymLaurent out(d);
    for_each_bwb_term(chi, k, b, d,
                      [&](const DominantWeight& w, int shift, long long mult) {
                          const long long sign = ((shift % 2) + 2) % 2 == 0 ? 1 : -1;
                          SymLaurent s = schur(w, d);
                          s.scale(sign * mult);
                          out += s;
                      });
    return out;
}

std::vector<DominantWeight> summand_generator_weights(const std::vector<int>& d_bullet,
                                                      int b, int c, int d) {
    const int l = c - b;
    if (l <= 0) throw std::invalid_argument("summand_generator_weights: need c > b");
    if (static_cast<int>(d_bullet.size()) != l)
        throw std::invalid_argument("summand_generator_weights: index length mismatch");
    long long used = 0;
    for (int x : d_bullet) {
        if (x < 0) throw std::invalid_argument("summand_generator_weights: negative index");
        used += x;
    }
    if (used > d) throw std::invalid_argument("summand_generator_weights: index exceeds d");
    const int m = d - static_cast<int>(used);

    std::vector<int> prefix;
    for (int i = 0; i < l; ++i)
        for (int copy = 0; copy < d_bullet[static_cast<size_t>(i)]; ++copy) prefix.push_back(i);

    std::vector<DominantWeight> out;
    for (const DominantWeight& tail : window_weights(b, m)) {
        std::vector<int> e = prefix;
        for (int i = 0; i < m; ++i) e.push_back(tail[i] + l);
        out.emplace_back(Weight(std::move(e)));
    }
    return out;
}

OrthReport semiorthogonality_report(int a, int b, int c, int d) {
    if (b < 0 || c <= b || d < 0 || a < b)
        throw std::invalid_argument("semiorthogonality_report: need a >= b >= 0, c > b, d >= 0");
    const int l = c - b;
    const auto indices = compositions_leq(l, d);  // descending lex = SOD order

    OrthReport rep;
    rep.pass = true;
    for (size_t ei = 0; ei < indices.size(); ++ei) {
        for (size_t li = ei + 1; li < indices.size(); ++li) {
            const std::vector<int>& earlier = indices[ei];
            const std::vector<int>& later = indices[li];
            OrthPairCheck chk;
            chk.earlier = earlier;
            chk.later = later;

            int m = 0;
            while (earlier[static_cast<size_t>(m)] == later[static_cast<size_t>(m)]) ++m;
            long long attract = 0;
            for (int i = 0; i <= m; ++i) attract += earlier[static_cast<size_t>(i)];
            std::vector<int> lam(static_cast<size_t>(d), 0);
            for (int i = 0; i < attract; ++i) lam[static_cast<size_t>(i)] = 1;
            chk.lambda = Weight(std::move(lam));
            for (int i = 0; i <= m; ++i)
                chk.prefix_weight += static_cast<long long>(i) * earlier[static_cast<size_t>(i)];

            const auto earlier_gens = summand_generator_weights(earlier, b, c, d);
            const auto later_gens = summand_generator_weights(later, b, c, d);
            if (earlier_gens.empty() || later_gens.empty()) {
                chk.vacuous = true;
                chk.pass = true;
                rep.pairs.push_back(std::move(chk));
                continue;
            }

            bool ok = true;
            // The earlier summand restricts to the fixed locus as its block
            // character: lambda-weight exactly prefix_weight, fixed block
            // pairing zero.
            for (const DominantWeight& gen : earlier_gens) {
                long long pre = 0;
                for (int i = 0; i < attract; ++i) pre += gen[i];
                if (pre != chk.prefix_weight) ok = false;
            }
            chk.min_pairing = min_orbit_pairing(later_gens.front(), chk.lambda);
            for (const DominantWeight& gen : later_gens)
                chk.min_pairing = std::min(chk.min_pairing, min_orbit_pairing(gen, chk.lambda));
            if (chk.min_pairing - chk.prefix_weight <= 0) ok = false;

            chk.pass = ok;
            if (!ok) rep.pass = false;
            rep.pairs.push_back(std::move(chk));
        }
    }
    return rep;
}

}  // namespace hallwin
