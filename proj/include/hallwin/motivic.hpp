#pragma once

// Grothendieck-ring expressions, symmetric-product point counts via zeta
// numerators, and brute-force finite-field verification of the Quot/stability
// model for the framed one-loop quiver.

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "hallwin/strata.hpp"

namespace hallwin {

// Thrown when an enumeration would exceed the configured tuple budget.
class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Integer combination of monomials q^e * prod_j Sym_{k_j}; Sym_0 is the
// unit, q is the class of the affine line.
class MotivicExpr {
public:
    // key: (q-exponent, sorted descending list of nonzero Sym indices)
    using Key = std::pair<int, std::vector<int>>;

    void add(int q_exp, std::vector<int> syms, long long coeff);
    const std::map<Key, long long>& terms() const { return terms_; }

    // Substitute Sym_k -> sym_value(k) and evaluate at the given q.
    long long specialize(const std::function<long long(int)>& sym_value, long long q) const;

    std::string str() const;

    friend bool operator==(const MotivicExpr&, const MotivicExpr&) = default;

private:
    std::map<Key, long long> terms_;
};

// Numerator P(t) of the Weil zeta function of a curve over F_q; P(0) = 1,
// degree 2g. The genus-zero curve has P = 1.
struct CurveZeta {
    long long q = 2;
    std::vector<long long> numerator = {1};
};

// #Sym^d(C)(F_q): coefficient of t^d in P(t) / ((1-t)(1-qt)). Throws on a
// negative coefficient (invalid zeta data).
long long sym_point_count(const CurveZeta& zeta, int d);

// Class of the Quot scheme of length-d quotients of a rank-r bundle:
// sum over compositions d_1+...+d_r = d of prod_j Sym_{d_j} * q^{sum (i-1)d_i}.
MotivicExpr bfp_class(int r, int d);

// The same class with Sym_k specialized to q^k, as a polynomial in q with
// ascending coefficients: q^d * sum over compositions q^{sum (i-1)d_i}.
std::vector<long long> quot_affine_formula(int r, int d);

long long eval_poly(const std::vector<long long>& coeffs, long long q);
std::string poly_str(const std::vector<long long>& coeffs);

long long gl_order(int d, long long q);

struct StableCount {
    long long raw = 0;       // stable tuples (alpha, beta, gamma) over F_q
    long long gl_order = 1;  // |GL_d(F_q)|
    long long count = 0;     // raw / gl_order
};

// Counts representations of the framed quiver over F_q that are stable on the
// given side (the framing maps generate V as a module over the loop, resp.
// the dual condition), then divides by the free GL_d(F_q)-action. q must be a
// prime power <= 64. Throws BudgetError when q^{(a+b)d + d^2} > max_enum and
// std::logic_error if the raw count is not divisible by |GL_d(F_q)|.
StableCount brute_force_stable_count(int a, int b, int d, long long q, Side side,
                                     long long max_enum = 10'000'000,
                                     int threads = 0);

// Worker count: explicit argument, else HALLWIN_THREADS, else hardware.
int resolve_threads(int requested);

}  // namespace hallwin
