#pragma once

// Categorified Hall product at the level of weights and K-classes: the
// Borel-Weil-Bott term expansion of a product O * (V(chi) (x) O), an
// independent shuffle-formula K-class, leading-term verification and the
// semiorthogonality weight criterion.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "hallwin/lattice.hpp"

namespace hallwin {

// One associated-graded piece of a Hall-product expansion.
struct HallTerm {
    DominantWeight weight;
    int shift = 0;               // homological shift
    long long multiplicity = 1;

    friend auto operator<=>(const HallTerm&, const HallTerm&) = default;
};

// Symmetric Laurent polynomial in x_1..x_d with integer coefficients: a
// K-class on the quotient stack, stored as exponent vector -> coefficient.
class SymLaurent {
public:
    explicit SymLaurent(int rank) : rank_(rank) {
        if (rank < 0) throw std::invalid_argument("SymLaurent: negative rank");
    }
    static SymLaurent constant(int rank, long long value);

    int rank() const { return rank_; }
    const std::map<std::vector<int>, long long>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const std::vector<int>& exps, long long coeff);

    // Invariance under all adjacent variable transpositions.
    bool is_symmetric() const;

    long long eval_at_ones() const;

    SymLaurent& operator+=(const SymLaurent& rhs);
    SymLaurent& operator-=(const SymLaurent& rhs);
    friend SymLaurent operator+(SymLaurent lhs, const SymLaurent& rhs) { return lhs += rhs; }
    friend SymLaurent operator-(SymLaurent lhs, const SymLaurent& rhs) { return lhs -= rhs; }
    friend SymLaurent operator*(const SymLaurent& lhs, const SymLaurent& rhs);
    SymLaurent& scale(long long c);

    friend bool operator==(const SymLaurent&, const SymLaurent&) = default;

    std::string str() const;  // deterministic rendering, for tables and debugging

private:
    int rank_;
    std::map<std::vector<int>, long long> terms_;
};

// The multiset of attracting weights pairing negatively with the block
// cocharacter: b copies of -e_i for i <= k, and e_i - e_j for j <= k < i.
std::vector<Weight> attracting_set(int b, int d, int k);

// BWB expansion of O_{M(k)} * (V(chi) (x) O); chi must have its first k
// entries zero when viewed in length d. Terms aggregated over equal
// (weight, shift), sorted.
std::vector<HallTerm> bwb_terms(const DominantWeight& chi, int k, int b, int d);

struct LeadingReport {
    bool pass = false;
    bool input_error = false;
    std::string message;
    DominantWeight leading;       // chi viewed in B_{c,k}(d)
    std::vector<HallTerm> terms;  // full aggregated term table
};

// Checks that every term of the expansion lies in B_{c,<=k}(d), that the
// leading weight appears exactly once (at shift 0, multiplicity 1), and that
// all companions lie in B_{c,<k}(d). Requires c > b and chi in B_{c,0}(d-k).
LeadingReport verify_leading(const DominantWeight& chi, int k, int c, int b, int d);

// Character of the irreducible GL(d)-representation with highest weight chi,
// by semistandard-tableau enumeration after a chi_0-twist to nonnegative
// entries.
SymLaurent schur(const DominantWeight& chi, int d);

// Shuffle-formula K-class: sum over (d1,d2)-shuffle permutations w of
// w[f * g * prod_{j<=d1} (1-x_j)^b]; f, g symmetric in their own blocks.
SymLaurent kclass_shuffle(const SymLaurent& f, const SymLaurent& g, int b);

// Alternating sum over the BWB terms: sum (-1)^shift * mult * schur(weight).
SymLaurent kclass_bwb(const DominantWeight& chi, int k, int b, int d);

// Generator weights of the summand indexed by d_bullet (length l = c - b):
// blocks of constant entries 0,1,...,l-1 of sizes d_1..d_l followed by
// chi_t + l*chi_0 for chi_t in B_b(m), m = d - sum d_i.
std::vector<DominantWeight> summand_generator_weights(const std::vector<int>& d_bullet,
                                                      int b, int c, int d);

struct OrthPairCheck {
    std::vector<int> earlier;   // summand listed first (lex greater index)
    std::vector<int> later;     // summand listed after it
    Weight lambda;              // cocharacter with ones on the attracting block
    long long prefix_weight = 0;  // lambda-weight of the earlier block characters
    long long min_pairing = 0;    // min over later-summand generator orbits
    bool vacuous = false;         // one side has no generators
    bool pass = false;
};

struct OrthReport {
    bool pass = false;
    std::vector<OrthPairCheck> pairs;
};

// For every ordered pair of summand indices of the (a,b,c,d) table, verifies
// the weight hypothesis of the Hom-vanishing lemma: each generator orbit of
// the later summand pairs strictly above the earlier summand's fixed-block
// weight against the separating cocharacter. Diagonal pairs are exempt.
OrthReport semiorthogonality_report(int a, int b, int c, int d);

}  // namespace hallwin
