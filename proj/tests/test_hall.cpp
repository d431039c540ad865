#include "hallwin/hall.hpp"

#include <algorithm>
#include <map>

#include "doctest.h"
#include "oracles.hpp"

using namespace hallwin;

namespace {

SymLaurent from_terms(int rank, std::initializer_list<std::pair<std::vector<int>, long long>> ts) {
    SymLaurent p(rank);
    for (const auto& [e, c] : ts) p.add_term(e, c);
    return p;
}

// All dominant weights of length d with entries in [lo, hi].
std::vector<DominantWeight> dominant_range(int d, int lo, int hi) {
    std::vector<DominantWeight> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int pos, int min) {
        if (pos == d) {
            out.emplace_back(cur);
            return;
        }
        for (int v = min; v <= hi; ++v) {
            cur.push_back(v);
            rec(pos + 1, v);
            cur.pop_back();
        }
    };
    rec(0, lo);
    return out;
}

}  // namespace

TEST_CASE("attracting weight multisets") {
    auto sorted = [](std::vector<Weight> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    CHECK(sorted(attracting_set(1, 2, 1)) ==
          sorted({Weight({-1, 0}), Weight({-1, 1})}));
    CHECK(sorted(attracting_set(0, 3, 2)) ==
          sorted({Weight({-1, 0, 1}), Weight({0, -1, 1})}));
    CHECK(sorted(attracting_set(2, 2, 2)) ==
          sorted({Weight({-1, 0}), Weight({-1, 0}), Weight({0, -1}), Weight({0, -1})}));
    CHECK(attracting_set(3, 4, 0).empty());
}

TEST_CASE("BWB term expansion on pinned inputs") {
    const auto t1 = bwb_terms(DominantWeight({0, 1}), 1, 1, 2);
    REQUIRE(t1.size() == 2);
    CHECK(t1[0] == HallTerm{DominantWeight({0, 1}), 0, 1});
    CHECK(t1[1] == HallTerm{DominantWeight({1, 1}), 1, 2});

    const auto t2 = bwb_terms(DominantWeight({0, 0}), 1, 0, 2);
    REQUIRE(t2.size() == 1);
    CHECK(t2[0] == HallTerm{DominantWeight({0, 0}), 0, 2});

    const auto t3 = bwb_terms(DominantWeight({0, 1}), 1, 2, 2);
    REQUIRE(t3.size() == 3);
    CHECK(t3[0] == HallTerm{DominantWeight({0, 1}), 0, 1});
    CHECK(t3[1] == HallTerm{DominantWeight({1, 1}), 1, 4});
    CHECK(t3[2] == HallTerm{DominantWeight({1, 2}), 2, 1});

    CHECK_THROWS_AS(bwb_terms(DominantWeight({1, 1}), 1, 1, 2), std::invalid_argument);
}

TEST_CASE("total BWB multiplicity accounts for all nonsingular I-classes") {
    // sum over terms of multiplicity = #I-classes - #singular ones; at least
    // the identity class survives, and multiplicities stay positive.
    for (int d = 1; d <= 3; ++d) {
        for (int k = 0; k <= d; ++k) {
            for (int b = 0; b <= 2; ++b) {
                for (const auto& tail : dominant_range(d - k, 0, 2)) {
                    const auto chi = embed_window(tail, d);
                    const auto terms = bwb_terms(chi, k, b, d);
                    long long total = 0;
                    for (const auto& t : terms) {
                        CHECK(t.multiplicity > 0);
                        total += t.multiplicity;
                    }
                    CHECK(total >= 1);
                    long long bound = 1;  // sum over all I-classes of their multiplicity
                    for (int i = 0; i < k * b + k * (d - k); ++i) bound *= 2;
                    CHECK(total <= bound);
                }
            }
        }
    }
}

TEST_CASE("leading-term verification on pinned inputs") {
    const auto r1 = verify_leading(DominantWeight({1}), 1, 2, 1, 2);
    CHECK(r1.pass);
    CHECK_FALSE(r1.input_error);
    CHECK(r1.leading == DominantWeight({0, 1}));

    const auto r2 = verify_leading(DominantWeight({1}), 1, 3, 2, 2);
    CHECK(r2.pass);
    for (const auto& t : r2.terms) {
        if (t.weight != r2.leading) CHECK(t.weight.leading_zeros() == 0);
    }

    const auto r3 = verify_leading(DominantWeight({1, 2}), 0, 3, 1, 2);
    CHECK(r3.pass);
    CHECK(r3.terms.size() == 1);

    const auto bad = verify_leading(DominantWeight({0, 1}), 0, 2, 1, 2);
    CHECK(bad.input_error);
    const auto bad2 = verify_leading(DominantWeight({1}), 1, 1, 1, 2);
    CHECK(bad2.input_error);
}

TEST_CASE("schur characters on pinned inputs") {
    CHECK(schur(DominantWeight({0, 1}), 2) == from_terms(2, {{{1, 0}, 1}, {{0, 1}, 1}}));
    CHECK(schur(DominantWeight({1, 1}), 2) == from_terms(2, {{{1, 1}, 1}}));
    CHECK(schur(DominantWeight({0, 2}), 2) ==
          from_terms(2, {{{2, 0}, 1}, {{1, 1}, 1}, {{0, 2}, 1}}));
    CHECK(schur(DominantWeight({-1, 0}), 2) ==
          from_terms(2, {{{-1, 0}, 1}, {{0, -1}, 1}}));
    CHECK(schur(DominantWeight(), 0) == SymLaurent::constant(0, 1));
}

TEST_CASE("schur at x = 1 equals the Weyl dimension") {
    for (int d = 1; d <= 4; ++d) {
        for (const auto& chi : dominant_range(d, 0, 3)) {
            const auto s = schur(chi, d);
            CHECK(s.is_symmetric());
            CHECK(s.eval_at_ones() == oracles::weyl_dimension(chi.as_weight().entries()));
        }
    }
}

TEST_CASE("shuffle K-classes on pinned inputs") {
    const auto one1 = SymLaurent::constant(1, 1);
    const auto x2 = from_terms(1, {{{1}, 1}});

    CHECK(kclass_shuffle(one1, x2, 1) ==
          from_terms(2, {{{1, 0}, 1}, {{0, 1}, 1}, {{1, 1}, -2}}));
    CHECK(kclass_shuffle(one1, one1, 0) == SymLaurent::constant(2, 2));
    CHECK(kclass_shuffle(one1, x2, 2) ==
          from_terms(2, {{{1, 0}, 1}, {{0, 1}, 1}, {{1, 1}, -4}, {{2, 1}, 1}, {{1, 2}, 1}}));

    const auto asym = from_terms(2, {{{1, 0}, 1}});
    CHECK_THROWS_AS(kclass_shuffle(asym, one1, 0), std::invalid_argument);
}

TEST_CASE("BWB and shuffle K-classes agree") {
    for (int d = 1; d <= 3; ++d) {
        for (int k = 0; k <= d; ++k) {
            for (int b = 0; b <= 2; ++b) {
                for (const auto& tail : dominant_range(d - k, 0, 2)) {
                    const auto via_bwb = kclass_bwb(embed_window(tail, d), k, b, d);
                    const auto via_shuffle =
                        kclass_shuffle(SymLaurent::constant(k, 1), schur(tail, d - k), b);
                    CHECK(via_bwb == via_shuffle);
                }
            }
        }
    }
}

TEST_CASE("BWB equals shuffle in rank four") {
    const DominantWeight tail({1, 2});
    CHECK(kclass_bwb(embed_window(tail, 4), 2, 1, 4) ==
          kclass_shuffle(SymLaurent::constant(2, 1), schur(tail, 2), 1));
    const DominantWeight tail3(std::vector<int>{2});
    CHECK(kclass_bwb(embed_window(tail3, 4), 3, 2, 4) ==
          kclass_shuffle(SymLaurent::constant(3, 1), schur(tail3, 1), 2));
}

TEST_CASE("twisting blocks by determinants matches twisting the product") {
    const auto f = schur(DominantWeight({0, 1}), 2);
    const auto g = schur(DominantWeight({1}), 1);
    for (int b = 0; b <= 2; ++b) {
        const auto det2 = schur(DominantWeight({1, 1}), 2);
        const auto det1 = schur(DominantWeight({1}), 1);
        const auto det3 = schur(DominantWeight({1, 1, 1}), 3);
        CHECK(kclass_shuffle(f * det2, g * det1, b) == kclass_shuffle(f, g, b) * det3);
    }
}

TEST_CASE("shuffle output is symmetric") {
    for (int d1 = 0; d1 <= 2; ++d1) {
        for (int d2 = 0; d2 <= 2; ++d2) {
            for (int b = 0; b <= 2; ++b) {
                for (const auto& cf : dominant_range(d1, 0, 2)) {
                    for (const auto& cg : dominant_range(d2, 0, 2)) {
                        CHECK(kclass_shuffle(schur(cf, d1), schur(cg, d2), b).is_symmetric());
                    }
                }
            }
        }
    }
}

TEST_CASE("iterated shuffles associate") {
    const auto one1 = SymLaurent::constant(1, 1);
    const auto x1 = from_terms(1, {{{1}, 1}});
    const auto sym2 = schur(DominantWeight({0, 1}), 2);
    for (int b = 0; b <= 2; ++b) {
        // (f * g) * h with the unframed product inside, against f * (g * h)
        const auto lhs = kclass_shuffle(kclass_shuffle(one1, x1, 0), sym2, b);
        const auto rhs = kclass_shuffle(one1, kclass_shuffle(x1, sym2, b), b);
        CHECK(lhs == rhs);

        const auto lhs2 = kclass_shuffle(kclass_shuffle(x1, one1, 0), one1, b);
        const auto rhs2 = kclass_shuffle(x1, kclass_shuffle(one1, one1, b), b);
        CHECK(lhs2 == rhs2);
    }

    // sweep over Schur blocks
    for (int b = 0; b <= 2; ++b) {
        for (const auto& cf : dominant_range(1, 0, 2)) {
            for (const auto& cg : dominant_range(1, 0, 2)) {
                for (const auto& ch : dominant_range(1, 0, 1)) {
                    const auto f = schur(cf, 1);
                    const auto g = schur(cg, 1);
                    const auto h = schur(ch, 1);
                    const auto lhs = kclass_shuffle(kclass_shuffle(f, g, 0), h, b);
                    const auto rhs = kclass_shuffle(f, kclass_shuffle(g, h, b), b);
                    CHECK(lhs == rhs);
                }
            }
        }
    }
}

TEST_CASE("leading-term verification over every admissible input") {
    for (int b = 0; b <= 2; ++b) {
        for (int c = b + 1; c <= 4; ++c) {
            for (int d = 0; d <= 4; ++d) {
                for (int k = 0; k <= d; ++k) {
                    for (const auto& chi : dominant_range(d - k, 1, c - 1)) {
                        const auto rep = verify_leading(chi, k, c, b, d);
                        CHECK_FALSE(rep.input_error);
                        CHECK(rep.pass);
                    }
                }
            }
        }
    }
}

TEST_CASE("semiorthogonality weight criterion") {
    const auto rep = semiorthogonality_report(2, 1, 2, 2);
    CHECK(rep.pass);
    REQUIRE(rep.pairs.size() == 3);
    // the ((1) after (2)) pair is the pinned example: lambda' = (1,1), min 1
    const auto& pair01 = rep.pairs[0];
    CHECK(pair01.earlier == std::vector<int>{2});
    CHECK(pair01.later == std::vector<int>{1});
    CHECK(pair01.lambda == Weight({1, 1}));
    CHECK(pair01.min_pairing == 1);
    CHECK(pair01.prefix_weight == 0);

    for (int a = 1; a <= 3; ++a)
        for (int b = 0; b < a; ++b)
            for (int d = 0; d <= 3; ++d) CHECK(semiorthogonality_report(a, b, a, d).pass);
}
