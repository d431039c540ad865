#include "hallwin/motivic.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "hallwin/combinat.hpp"

namespace hallwin {

void MotivicExpr::add(int q_exp, std::vector<int> syms, long long coeff) {
    if (q_exp < 0) throw std::invalid_argument("MotivicExpr: negative q exponent");
    for (int k : syms)
        if (k < 0) throw std::invalid_argument("MotivicExpr: negative Sym index");
    syms.erase(std::remove(syms.begin(), syms.end(), 0), syms.end());
    std::sort(syms.begin(), syms.end(), std::greater<int>());
    if (coeff == 0) return;
    Key key{q_exp, std::move(syms)};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

long long MotivicExpr::specialize(const std::function<long long(int)>& sym_value,
                                  long long q) const {
    long long total = 0;
    for (const auto& [key, coeff] : terms_) {
        long long v = coeff;
        for (int e = 0; e < key.first; ++e) v *= q;
        for (int k : key.second) v *= sym_value(k);
        total += v;
    }
    return total;
}

std::string MotivicExpr::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, coeff] : terms_) {
        if (!first) os << (coeff >= 0 ? " + " : " - ");
        else if (coeff < 0) os << '-';
        first = false;
        const long long mag = coeff >= 0 ? coeff : -coeff;
        bool printed = false;
        if (mag != 1) {
            os << mag;
            printed = true;
        }
        for (size_t i = 0; i < key.second.size();) {
            size_t j = i;
            while (j < key.second.size() && key.second[j] == key.second[i]) ++j;
            if (printed) os << '*';
            os << "Sym_" << key.second[i];
            if (j - i > 1) os << '^' << (j - i);
            printed = true;
            i = j;
        }
        if (key.first > 0) {
            if (printed) os << '*';
            os << 'q';
            if (key.first > 1) os << '^' << key.first;
            printed = true;
        }
        if (!printed) os << 1;
    }
    return os.str();
}

long long sym_point_count(const CurveZeta& zeta, int d) {
    if (d < 0) throw std::invalid_argument("sym_point_count: d < 0");
    if (zeta.q < 2) throw std::invalid_argument("sym_point_count: q must be >= 2");
    if (zeta.numerator.empty() || zeta.numerator[0] != 1)
        throw std::invalid_argument("sym_point_count: numerator must have P(0) = 1");
    // 1/((1-t)(1-qt)) = sum_m (1 + q + ... + q^m) t^m
    long long total = 0;
    for (size_t j = 0; j < zeta.numerator.size() && j <= static_cast<size_t>(d); ++j) {
        long long h = 0, p = 1;
        for (int e = 0; e <= d - static_cast<int>(j); ++e) {
            h += p;
            p *= zeta.q;
        }
        total += zeta.numerator[j] * h;
    }
    if (total < 0)
        throw std::domain_error("sym_point_count: negative coefficient, invalid zeta input");
    return total;
}

MotivicExpr bfp_class(int r, int d) {
    if (r < 1 || d < 0) throw std::invalid_argument("bfp_class: need r >= 1, d >= 0");
    MotivicExpr out;
    for (const auto& comp : compositions_eq(r, d)) {
        int l = 0;
        for (int i = 0; i < r; ++i) l += i * comp[static_cast<size_t>(i)];
        out.add(l, comp, 1);
    }
    return out;
}

std::vector<long long> quot_affine_formula(int r, int d) {
    if (r < 1 || d < 0) throw std::invalid_argument("quot_affine_formula: need r >= 1, d >= 0");
    std::vector<long long> coeffs(static_cast<size_t>(d + (r - 1) * d + 1), 0);
    for (const auto& comp : compositions_eq(r, d)) {
        int l = 0;
        for (int i = 0; i < r; ++i) l += i * comp[static_cast<size_t>(i)];
        coeffs[static_cast<size_t>(d + l)] += 1;
    }
    while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
    return coeffs;
}

long long eval_poly(const std::vector<long long>& coeffs, long long q) {
    long long v = 0;
    for (size_t i = coeffs.size(); i-- > 0;) v = v * q + coeffs[i];
    return v;
}

std::string poly_str(const std::vector<long long>& coeffs) {
    std::ostringstream os;
    bool first = true;
    for (size_t e = 0; e < coeffs.size(); ++e) {
        if (coeffs[e] == 0) continue;
        if (!first) os << (coeffs[e] > 0 ? "+" : "-");
        else if (coeffs[e] < 0) os << '-';
        first = false;
        const long long mag = coeffs[e] > 0 ? coeffs[e] : -coeffs[e];
        if (mag != 1 || e == 0) os << mag;
        if (e >= 1) {
            if (mag != 1) os << '*';
            os << 'q';
            if (e > 1) os << '^' << e;
        }
    }
    return first ? "0" : os.str();
}

long long gl_order(int d, long long q) {
    long long qd = 1;
    for (int i = 0; i < d; ++i) qd *= q;
    long long out = 1, qi = 1;
    for (int i = 0; i < d; ++i) {
        out *= qd - qi;
        qi *= q;
    }
    return out;
}

namespace {

// Arithmetic tables for F_q, q = p^k. Elements are 0..q-1, encoded as base-p
// digit vectors of polynomials modulo a monic irreducible of degree k.
class SmallField {
public:
    explicit SmallField(long long q);
    int q() const { return q_; }
    int add(int x, int y) const { return add_[static_cast<size_t>(x) * static_cast<size_t>(q_) + static_cast<size_t>(y)]; }
    int mul(int x, int y) const { return mul_[static_cast<size_t>(x) * static_cast<size_t>(q_) + static_cast<size_t>(y)]; }
    int neg(int x) const { return neg_[static_cast<size_t>(x)]; }
    int inv(int x) const { return inv_[static_cast<size_t>(x)]; }

private:
    int q_ = 0;
    std::vector<int> add_, mul_, neg_, inv_;
};

std::vector<int> to_poly(int x, int p, int k) {
    std::vector<int> digits(static_cast<size_t>(k), 0);
    for (int i = 0; i < k; ++i) {
        digits[static_cast<size_t>(i)] = x % p;
        x /= p;
    }
    return digits;
}

int from_poly(const std::vector<int>& digits, int p) {
    int x = 0;
    for (size_t i = digits.size(); i-- > 0;) x = x * p + digits[i];
    return x;
}

// Remainder of a by the monic polynomial m over F_p.
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& m, int p) {
    const int dm = static_cast<int>(m.size()) - 1;
    for (int i = static_cast<int>(a.size()) - 1; i >= dm; --i) {
        const int c = a[static_cast<size_t>(i)];
        if (c == 0) continue;
        for (int j = 0; j <= dm; ++j) {
            int& t = a[static_cast<size_t>(i - dm + j)];
            t = ((t - c * m[static_cast<size_t>(j)]) % p + p) % p;
        }
    }
    a.resize(static_cast<size_t>(dm));
    return a;
}

bool poly_divides(const std::vector<int>& divisor, std::vector<int> a, int p) {
    a = poly_mod(std::move(a), divisor, p);
    for (int c : a)
        if (c != 0) return false;
    return true;
}

// Smallest monic irreducible of degree k over F_p, by trial division.
std::vector<int> find_irreducible(int p, int k) {
    long long count = 1;
    for (int i = 0; i < k; ++i) count *= p;
    for (long long low = 0; low < count; ++low) {
        std::vector<int> cand = to_poly(static_cast<int>(low), p, k);
        cand.push_back(1);  // monic of degree k
        bool irreducible = true;
        for (int deg = 1; irreducible && 2 * deg <= k; ++deg) {
            long long dcount = 1;
            for (int i = 0; i < deg; ++i) dcount *= p;
            for (long long dl = 0; dl < dcount; ++dl) {
                std::vector<int> div = to_poly(static_cast<int>(dl), p, deg);
                div.push_back(1);
                if (poly_divides(div, cand, p)) {
                    irreducible = false;
                    break;
                }
            }
        }
        if (irreducible) return cand;
    }
    throw std::logic_error("find_irreducible: exhausted candidates");
}

SmallField::SmallField(long long q) {
    if (q < 2 || q > 64) throw std::invalid_argument("F_q: q must be a prime power in [2, 64]");
    int p = 0;
    for (int c = 2; c <= q; ++c) {
        if (q % c == 0) {
            p = c;
            break;
        }
    }
    int k = 0;
    long long t = q;
    while (t > 1) {
        if (t % p != 0) throw std::invalid_argument("F_q: q must be a prime power");
        t /= p;
        ++k;
    }
    q_ = static_cast<int>(q);
    const std::vector<int> irr = find_irreducible(p, k);

    add_.assign(static_cast<size_t>(q_) * static_cast<size_t>(q_), 0);
    mul_.assign(static_cast<size_t>(q_) * static_cast<size_t>(q_), 0);
    neg_.assign(static_cast<size_t>(q_), 0);
    inv_.assign(static_cast<size_t>(q_), 0);
    for (int x = 0; x < q_; ++x) {
        const auto px = to_poly(x, p, k);
        for (int y = 0; y < q_; ++y) {
            const auto py = to_poly(y, p, k);
            std::vector<int> s(static_cast<size_t>(k), 0);
            for (int i = 0; i < k; ++i)
                s[static_cast<size_t>(i)] = (px[static_cast<size_t>(i)] + py[static_cast<size_t>(i)]) % p;
            add_[static_cast<size_t>(x) * static_cast<size_t>(q_) + static_cast<size_t>(y)] = from_poly(s, p);
            std::vector<int> m(static_cast<size_t>(2 * k - 1), 0);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j)
                    m[static_cast<size_t>(i + j)] =
                        (m[static_cast<size_t>(i + j)] + px[static_cast<size_t>(i)] * py[static_cast<size_t>(j)]) % p;
            mul_[static_cast<size_t>(x) * static_cast<size_t>(q_) + static_cast<size_t>(y)] =
                from_poly(poly_mod(std::move(m), irr, p), p);
        }
    }
    for (int x = 0; x < q_; ++x) {
        for (int y = 0; y < q_; ++y) {
            if (add(x, y) == 0) neg_[static_cast<size_t>(x)] = y;
            if (x != 0 && mul(x, y) == 1) inv_[static_cast<size_t>(x)] = y;
        }
    }
}

// Does the Krylov flag span(cols(alpha), gamma cols(alpha), ...) fill F_q^d?
// Maintains an echelon basis; every newly independent vector is fed back
// through gamma. Iterates beyond d-1 are redundant by Cayley-Hamilton, and
// the queue drains after at most d insertions anyway.
bool krylov_spans(const SmallField& F, const std::vector<int>& alpha, int a,
                  const std::vector<int>& gamma, int d) {
    if (d == 0) return true;
    if (a == 0) return false;
    std::vector<std::vector<int>> basis;   // echelon rows
    std::vector<int> pivot;                // pivot column per basis row
    std::vector<std::vector<int>> queue;
    queue.reserve(static_cast<size_t>(a));
    for (int c = 0; c < a; ++c) {
        std::vector<int> v(static_cast<size_t>(d));
        for (int r = 0; r < d; ++r) v[static_cast<size_t>(r)] = alpha[static_cast<size_t>(r * a + c)];
        queue.push_back(std::move(v));
    }
    size_t head = 0;
    int rank = 0;
    while (head < queue.size() && rank < d) {
        std::vector<int> v = queue[head++];
        for (size_t bi = 0; bi < basis.size(); ++bi) {
            const int c = v[static_cast<size_t>(pivot[bi])];
            if (c == 0) continue;
            const int f = F.neg(c);
            for (int r = 0; r < d; ++r)
                v[static_cast<size_t>(r)] =
                    F.add(v[static_cast<size_t>(r)], F.mul(f, basis[bi][static_cast<size_t>(r)]));
        }
        int p = -1;
        for (int r = 0; r < d; ++r) {
            if (v[static_cast<size_t>(r)] != 0) {
                p = r;
                break;
            }
        }
        if (p < 0) continue;
        const int s = F.inv(v[static_cast<size_t>(p)]);
        for (int r = 0; r < d; ++r) v[static_cast<size_t>(r)] = F.mul(s, v[static_cast<size_t>(r)]);
        // compute gamma * v before v moves into the basis
        std::vector<int> next(static_cast<size_t>(d), 0);
        for (int r = 0; r < d; ++r) {
            int acc = 0;
            for (int cidx = 0; cidx < d; ++cidx)
                acc = F.add(acc, F.mul(gamma[static_cast<size_t>(r * d + cidx)], v[static_cast<size_t>(cidx)]));
            next[static_cast<size_t>(r)] = acc;
        }
        basis.push_back(std::move(v));
        pivot.push_back(p);
        ++rank;
        queue.push_back(std::move(next));
    }
    return rank == d;
}

long long pow_ll(long long base, int exp) {
    long long v = 1;
    for (int i = 0; i < exp; ++i) v *= base;
    return v;
}

}  // namespace

int resolve_threads(int requested) {
    if (requested > 0) return std::min(requested, 64);
    if (const char* env = std::getenv("HALLWIN_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return std::min(n, 64);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(std::min(hw, 16u));
}

StableCount brute_force_stable_count(int a, int b, int d, long long q, Side side,
                                     long long max_enum, int threads) {
    if (a < 0 || b < 0 || d < 0) throw std::invalid_argument("stable count: negative input");
    const SmallField F(q);

    // Budget measured on the full (alpha, beta, gamma) tuple space.
    const int total_exp = (a + b) * d + d * d;
    long double full_size = 1.0L;
    for (int i = 0; i < total_exp; ++i) full_size *= static_cast<long double>(q);
    if (full_size > static_cast<long double>(max_enum))
        throw BudgetError("enumeration budget exceeded: q^" + std::to_string(total_exp) +
                          " tuples > " + std::to_string(max_enum));

    // Stability only constrains the generating side; the other framing block
    // contributes a free factor. Side minus runs on the transposed duals,
    // which is implicit because the enumeration covers all matrices.
    const int gen_arrows = (side == Side::plus) ? a : b;
    const int free_arrows = (side == Side::plus) ? b : a;

    StableCount out;
    out.gl_order = gl_order(d, q);

    const int gamma_cells = d * d;
    const int alpha_cells = gen_arrows * d;
    const long long gamma_total = pow_ll(q, gamma_cells);
    const long long alpha_total = pow_ll(q, alpha_cells);

    const int nthreads = static_cast<int>(std::max<long long>(
        1, std::min<long long>(resolve_threads(threads), gamma_total)));
    std::vector<long long> partial(static_cast<size_t>(nthreads), 0);
    auto worker = [&](int tid) {
        long long local = 0;
        std::vector<int> gamma(static_cast<size_t>(gamma_cells), 0);
        std::vector<int> alpha(static_cast<size_t>(alpha_cells), 0);
        const long long lo = gamma_total * tid / nthreads;
        const long long hi = gamma_total * (tid + 1) / nthreads;
        long long g = lo;
        for (int i = 0; i < gamma_cells; ++i) {
            gamma[static_cast<size_t>(i)] = static_cast<int>(g % q);
            g /= q;
        }
        for (long long gi = lo; gi < hi; ++gi) {
            std::fill(alpha.begin(), alpha.end(), 0);
            for (long long ai = 0; ai < alpha_total; ++ai) {
                if (krylov_spans(F, alpha, gen_arrows, gamma, d)) ++local;
                int pos = 0;
                while (pos < alpha_cells && alpha[static_cast<size_t>(pos)] == q - 1) {
                    alpha[static_cast<size_t>(pos)] = 0;
                    ++pos;
                }
                if (pos < alpha_cells) ++alpha[static_cast<size_t>(pos)];
            }
            int pos = 0;
            while (pos < gamma_cells && gamma[static_cast<size_t>(pos)] == q - 1) {
                gamma[static_cast<size_t>(pos)] = 0;
                ++pos;
            }
            if (pos < gamma_cells) ++gamma[static_cast<size_t>(pos)];
        }
        partial[static_cast<size_t>(tid)] = local;
    };
    if (nthreads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(nthreads));
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }
    long long stable_pairs = 0;
    for (long long p : partial) stable_pairs += p;

    out.raw = stable_pairs * pow_ll(q, free_arrows * d);
    if (out.raw % out.gl_order != 0)
        throw std::logic_error("stable count not divisible by |GL_d(F_q)|");
    out.count = out.raw / out.gl_order;
    return out;
}

}  // namespace hallwin
