#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "doctest.h"
#include "limitcones/limitmat.hpp"
#include "limitcones/sympoly.hpp"

using namespace limitcones;

namespace {

// Shorthand for transcribing label matrices.
Partition P(std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); }

void check_entries(const SymbolicGram& g,
                   const std::vector<std::vector<std::optional<Partition>>>& expected) {
    REQUIRE(g.size() == expected.size());
    for (size_t i = 0; i < expected.size(); ++i)
        for (size_t j = 0; j < expected.size(); ++j) {
            INFO("entry ", i, ",", j);
            CHECK(g.entries[i][j] == expected[i][j]);
        }
}

std::optional<Partition> Z() { return std::nullopt; }

}  // namespace

TEST_CASE("full term list for degree 2 matches the displayed order") {
    auto terms = full_terms(2);
    REQUIRE(terms.size() == 7);
    std::vector<Term> expected = {
        {Composition{0, 0}, P({2})}, {Composition{0, 0}, P({1, 1})}, {Composition{1, 0}, P({1})},
        {Composition{0, 1}, P({1})}, {Composition{1, 1}, P({})},     {Composition{2, 0}, P({})},
        {Composition{0, 2}, P({})},
    };
    CHECK(terms == expected);
}

TEST_CASE("term list counts") {
    CHECK(full_terms(1).size() == 2);
    CHECK(full_terms(3).size() == 25);
    auto even1 = even_terms(1);
    REQUIRE(even1.size() == 1);
    CHECK(even1[0] == Term{Composition{1}, P({})});
    auto even2 = even_terms(2);
    REQUIRE(even2.size() == 4);
    std::vector<Term> expected = {
        {Composition{0, 0}, P({2})},
        {Composition{1, 1}, P({})},
        {Composition{2, 0}, P({})},
        {Composition{0, 2}, P({})},
    };
    CHECK(even2 == expected);
    // Even lists are exactly the even-lambda filter of the full lists.
    for (int d = 1; d <= 5; ++d) {
        std::vector<Term> filtered;
        for (const Term& t : full_terms(d))
            if (is_even(t.lambda)) filtered.push_back(t);
        CHECK(filtered == even_terms(d));
    }
}

TEST_CASE("degree-4 full gram matches the reference 7x7 matrix") {
    SymbolicGram g = build_limit_gram(full_terms(2), false);
    auto z22 = P({2, 2});
    auto z211 = P({2, 1, 1});
    auto z1111 = P({1, 1, 1, 1});
    auto z31 = P({3, 1});
    auto z4 = P({4});
    check_entries(
        g, {{z22, z211, z211, z211, z211, z22, z22},
            {z211, z1111, z1111, z1111, z1111, z211, z211},
            {z211, z1111, z211, z1111, z211, z31, z211},
            {z211, z1111, z1111, z211, z211, z211, z31},
            {z211, z1111, z211, z211, z22, z31, z31},
            {z22, z211, z31, z211, z31, z4, z22},
            {z22, z211, z211, z31, z31, z22, z4}});
}

TEST_CASE("degree-4 even gram matches the reference 4x4 matrix") {
    SymbolicGram g = build_limit_gram(even_terms(2), true);
    auto z22 = std::optional<Partition>(P({2, 2}));
    auto z4 = std::optional<Partition>(P({4}));
    check_entries(g, {{z22, Z(), z22, z22},  //
                      {Z(), z22, Z(), Z()},
                      {z22, Z(), z4, z22},
                      {z22, Z(), z22, z4}});
}

TEST_CASE("single-term gram and mixed-degree error") {
    SymbolicGram g = build_limit_gram({Term{Composition{0, 0}, P({1, 1})}}, false);
    REQUIRE(g.size() == 1);
    CHECK(*g.entries[0][0] == P({1, 1, 1, 1}));
    CHECK_THROWS_AS(
        build_limit_gram({Term{Composition{0, 0}, P({2})}, Term{Composition{0, 0}, P({1})}},
                         false),
        std::invalid_argument);
}

TEST_CASE("R4 fixture reproduces the reference matrix after dedup") {
    SymbolicGram raw = fixture_gram("R4_raw");
    REQUIRE(raw.size() == 6);
    SymbolicGram r4 = dedup_rows(raw);
    REQUIRE(r4.size() == 4);
    CHECK(r4.terms == fixture_term_lists().at("R4"));
    auto m14 = P({1, 1, 1, 1});
    auto m212 = P({2, 1, 1});
    auto m22 = P({2, 2});
    auto m31 = P({3, 1});
    auto m4 = P({4});
    check_entries(r4, {{m14, m14, m212, m212},
                       {m14, m212, m212, m31},
                       {m212, m212, m22, m22},
                       {m212, m31, m22, m4}});
    // Row 2, column 4 in 1-based indexing.
    CHECK(*r4.entries[1][3] == P({3, 1}));
}

TEST_CASE("R6 fixture matches the reference 11x11 matrix") {
    SymbolicGram g = dedup_rows(fixture_gram("R6"));
    REQUIRE(g.size() == 11);
    auto a = P({1, 1, 1, 1, 1, 1});
    auto b = P({2, 1, 1, 1, 1});
    auto c = P({2, 2, 1, 1});
    auto d = P({2, 2, 2});
    auto e = P({3, 1, 1, 1});
    auto f = P({3, 2, 1});
    auto h = P({3, 3});
    auto i = P({4, 1, 1});
    auto j = P({4, 2});
    auto k = P({5, 1});
    auto l = P({6});
    check_entries(g, {{a, a, b, b, b, b, b, b, b, e, e},
                      {a, b, b, b, c, b, e, c, e, e, i},
                      {b, b, c, c, c, c, c, c, c, f, f},
                      {b, b, c, d, c, f, c, f, d, f, f},
                      {b, c, c, c, d, c, f, d, f, f, j},
                      {b, b, c, f, c, i, c, i, f, f, f},
                      {b, e, c, c, f, c, i, f, i, f, k},
                      {b, c, c, f, d, i, f, j, h, f, j},
                      {b, e, c, d, f, f, i, h, j, f, k},
                      {e, e, f, f, f, f, f, f, f, h, h},
                      {e, i, f, f, j, f, k, j, k, h, l}});
    std::vector<Partition> diag;
    for (size_t t = 0; t < g.size(); ++t) diag.push_back(*g.entries[t][t]);
    CHECK(diag == std::vector<Partition>{a, b, c, d, d, i, i, j, j, h, l});
}

TEST_CASE("R10e fixture matches the reference 7x7 matrix") {
    SymbolicGram g = fixture_gram("R10e");
    REQUIRE(g.size() == 7);
    auto a = P({2, 2, 2, 2, 2});
    auto b = P({4, 2, 2, 2});
    auto c = P({4, 4, 2});
    auto d = P({6, 2, 2});
    auto e = P({6, 4});
    auto f = P({8, 2});
    auto h = P({10});
    check_entries(g, {{a, a, b, b, b, b, d},
                      {a, b, b, b, c, d, d},
                      {b, b, c, c, c, c, e},
                      {b, b, c, d, d, c, f},
                      {b, c, c, d, e, e, f},
                      {b, d, c, c, e, f, e},
                      {d, d, e, f, f, e, h}});
}

TEST_CASE("R10e companion block repeats the top-left 6x6 block") {
    SymbolicGram first = fixture_gram("R10e");
    SymbolicGram second = fixture_gram("R10e_block2");
    REQUIRE(second.size() == 6);
    for (size_t i = 0; i < 6; ++i)
        for (size_t j = 0; j < 6; ++j) CHECK(second.entries[i][j] == first.entries[i][j]);
}

TEST_CASE("dedup is idempotent and keeps unique diagonals") {
    for (const char* name : {"R4_raw", "R6", "R10e"}) {
        SymbolicGram g = fixture_gram(name);
        SymbolicGram once = dedup_rows(g);
        SymbolicGram twice = dedup_rows(once);
        CHECK(once.terms == twice.terms);
        CHECK(once.entries == twice.entries);
        // A row with a diagonal label unique in the whole matrix must survive.
        for (size_t i = 0; i < g.size(); ++i) {
            int diag_count = 0;
            for (size_t j = 0; j < g.size(); ++j)
                if (g.entries[j][j] == g.entries[i][i]) ++diag_count;
            if (diag_count == 1)
                CHECK(std::find(once.terms.begin(), once.terms.end(), g.terms[i]) !=
                      once.terms.end());
        }
    }
    SymbolicGram m4 = build_limit_gram(full_terms(2), false);
    SymbolicGram deduped = dedup_rows(m4);
    CHECK(deduped.size() == m4.size());
}

TEST_CASE("every partition of 2d labels some entry of the full gram") {
    for (int d = 1; d <= 4; ++d) {
        SymbolicGram g = build_limit_gram(full_terms(d), false);
        std::set<Partition> seen;
        for (const auto& row : g.entries)
            for (const auto& entry : row) seen.insert(*entry);
        for (const Partition& p : enum_partitions(2 * d)) CHECK(seen.count(p) == 1);
    }
}

TEST_CASE("gram entries agree with the finite-n oracle") {
    for (int d = 2; d <= 3; ++d) {
        auto terms = full_terms(d);
        SymbolicGram g = build_limit_gram(terms, false);
        for (int n : {20, 40}) {
            for (size_t i = 0; i < terms.size(); ++i) {
                for (size_t j = i; j < terms.size(); ++j) {
                    SymPoly p = sym_term_product(terms[i].alpha, terms[i].lambda,
                                                 terms[i].alpha.support_end(), terms[j].alpha,
                                                 terms[j].lambda, terms[j].alpha.support_end(), n);
                    const Partition& label = *g.entries[i][j];
                    Rat dominant = p.coeff(label);
                    CHECK(dominant >= frac(1, 2));
                    // Off-label mass vanishes like 1/n.
                    Rat off = 1 - dominant;
                    CHECK(off * n <= Rat(4 * d * d));
                }
            }
        }
    }
}

TEST_CASE("labeled fixture matrices") {
    const auto& mats = fixture_matrices();
    const LabeledMatrix& e11_6 = mats.at("E11_6");
    REQUIRE(e11_6.size() == 1);
    LinComb expected;
    expected[P({4, 2})] = 1;
    expected[P({2, 2, 2})] = -1;
    CHECK(e11_6.entries[0][0] == expected);

    const LabeledMatrix& q1_4 = mats.at("Q1_4");
    REQUIRE(q1_4.size() == 2);
    LinComb corner;
    corner[P({4})] = 1;
    corner[P({2, 2})] = -1;
    CHECK(q1_4.entries[1][1] == corner);

    CHECK(mats.at("E1_10").size() == 4);
    CHECK(mats.at("E11_10").size() == 3);
    CHECK(mats.at("Q0_6").size() == 3);
    CHECK(mats.at("Q1_6").size() == 4);
    CHECK(mats.at("es6_dual_pencil").size() == 3);
    CHECK_THROWS_AS(fixture_gram("nope"), std::invalid_argument);
}

TEST_CASE("gram json round trip") {
    SymbolicGram g = build_limit_gram(even_terms(2), true);
    SymbolicGram h = gram_from_json(gram_to_json(g));
    CHECK(h.terms == g.terms);
    CHECK(h.entries == g.entries);
}

TEST_CASE("isotypic fixtures agree with the gram builders") {
    // The pure monomial-mean rows reproduce the 2x2 and 3x3 isotypic blocks.
    SymbolicGram q04 = build_limit_gram(
        {Term{Composition{0, 0}, P({1, 1})}, Term{Composition{0, 0}, P({2})}}, false);
    const LabeledMatrix& q04fix = fixture_matrices().at("Q0_4");
    CHECK(to_labeled(q04).entries == q04fix.entries);

    SymbolicGram q06 = build_limit_gram({Term{Composition{0, 0, 0}, P({1, 1, 1})},
                                         Term{Composition{0, 0, 0}, P({2, 1})},
                                         Term{Composition{0, 0, 0}, P({3})}},
                                        false);
    CHECK(to_labeled(q06).entries == fixture_matrices().at("Q0_6").entries);

    // The 4x4 even degree-10 isotypic block is a principal submatrix of the
    // seven-term partial symmetrization matrix (rows 1, 3, 4, 7).
    SymbolicGram r10e = fixture_gram("R10e");
    const LabeledMatrix& e110 = fixture_matrices().at("E1_10");
    std::vector<size_t> sel = {0, 2, 3, 6};
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) {
            LinComb expect;
            expect[*r10e.entries[sel[i]][sel[j]]] = 1;
            CHECK(e110.entries[i][j] == expect);
        }
}
