#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "limitcones/sympoly.hpp"
#include "oracle_helpers.hpp"

using namespace limitcones;

namespace {

Rat off_target_mass(const SymPoly& f, const Partition& target) {
    Rat s = 0;
    for (const auto& [key, val] : f.coeffs)
        if (key != target) s += val;
    return s;
}

SymPoly multiply(const SymPoly& f, const SymPoly& g) {
    SymPoly out;
    out.nvars = f.nvars;
    out.degree = f.degree + g.degree;
    for (const auto& [a, ca] : f.coeffs)
        for (const auto& [b, cb] : g.coeffs) {
            SymPoly prod = monomial_mean_product(a, b, f.nvars);
            for (const auto& [key, val] : prod.coeffs) out.coeffs[key] += ca * cb * val;
        }
    for (auto it = out.coeffs.begin(); it != out.coeffs.end();)
        it = (it->second == 0) ? out.coeffs.erase(it) : std::next(it);
    return out;
}

}  // namespace

TEST_CASE("gluing example m_{1,1} * m_1") {
    for (int n : {5, 10, 100, 1000}) {
        SymPoly f = monomial_mean_product(Partition{1, 1}, Partition{1}, n);
        CHECK(f.coeff(Partition{2, 1}) == frac(2, n));
        CHECK(f.coeff(Partition{1, 1, 1}) == frac(n - 2, n));
        CHECK(f.coeffs.size() == 2);
    }
}

TEST_CASE("monomial mean product identity and small exact case") {
    SymPoly id = monomial_mean_product(Partition(), Partition{2}, 7);
    CHECK(id.coeffs.size() == 1);
    CHECK(id.coeff(Partition{2}) == 1);

    SymPoly f = monomial_mean_product(Partition{2}, Partition{2}, 4);
    CHECK(f.coeff(Partition{4}) == frac(1, 4));
    CHECK(f.coeff(Partition{2, 2}) == frac(3, 4));

    CHECK_THROWS_AS(monomial_mean_product(Partition{1, 1}, Partition{1}, 2),
                    std::invalid_argument);
}

TEST_CASE("monomial mean product matches literal expansion for small n") {
    Composition none(std::vector<int>{});
    for (int n : {4, 5, 6, 7, 8}) {
        for (const auto& lam : enum_partitions(3)) {
            for (const auto& mu : enum_partitions(2)) {
                if (n < lam.length() + mu.length()) continue;
                SymPoly f = monomial_mean_product(lam, mu, n);
                auto brute = oracle::sym_product_brute(none, lam, 0, none, mu, 0, n);
                CHECK(f.coeffs == brute);
            }
        }
    }
}

TEST_CASE("product coefficients are nonnegative, sum to one, decay like 1/n") {
    for (int a = 0; a <= 8; ++a) {
        for (int b = 0; a + b <= 8; ++b) {
            for (const auto& lam : enum_partitions(a)) {
                for (const auto& mu : enum_partitions(b)) {
                    Partition target = glue({lam, mu});
                    Rat prev_off;
                    bool first = true;
                    for (int n : {20, 40, 80}) {
                        SymPoly f = monomial_mean_product(lam, mu, n);
                        Rat total = 0;
                        for (const auto& [key, val] : f.coeffs) {
                            CHECK(val >= 0);
                            total += val;
                        }
                        CHECK(total == 1);
                        Rat off = off_target_mass(f, target);
                        if (!first) CHECK(off <= prev_off * frac(3, 5));
                        prev_off = off;
                        first = false;
                    }
                }
            }
        }
    }
}

TEST_CASE("sym_term_product examples") {
    // x1 m_1 squared: dominant coefficient at (2,1,1).
    Composition e1{1, 0};
    for (int n : {10, 20, 40}) {
        SymPoly f = sym_term_product(e1, Partition{1}, 1, e1, Partition{1}, 1, n);
        CHECK(f.coeff(Partition{2, 1, 1}) == frac(n - 2, n - 1));
        CHECK(f.coeff(Partition{2, 2}) == frac(1, n - 1));
    }
    // Constant term: both factors trivial.
    Composition zero2{0, 0};
    SymPoly one = sym_term_product(zero2, Partition(), 0, zero2, Partition(), 0, 9);
    CHECK(one.coeffs.size() == 1);
    CHECK(one.coeff(Partition()) == 1);

    // Mixed windows against the literal expansion.
    Composition a{1};
    Composition b{2};
    SymPoly f = sym_term_product(a, Partition{2}, 1, b, Partition{1}, 1, 12);
    auto brute = oracle::sym_product_brute(a, Partition{2}, 1, b, Partition{1}, 1, 12);
    CHECK(f.coeffs == brute);
    CHECK(f.coeff(Partition{3, 2, 1}) >= frac(1, 2));

    CHECK_THROWS_AS(sym_term_product(a, Partition{2}, 0, b, Partition{1}, 1, 12),
                    std::invalid_argument);
    CHECK_THROWS_AS(sym_term_product(a, Partition{2}, 1, b, Partition{1}, 1, 4),
                    std::invalid_argument);
}

TEST_CASE("sym_term_product against literal expansion across windows") {
    for (int n : {6, 7, 8}) {
        Composition a{2, 0};
        Composition b{0, 1};
        for (const auto& lam : enum_partitions(2)) {
            for (const auto& mu : enum_partitions(1)) {
                if (n <= 1 + 2 + lam.length() + mu.length()) continue;
                SymPoly f = sym_term_product(a, lam, 1, b, mu, 2, n);
                auto brute = oracle::sym_product_brute(a, lam, 1, b, mu, 2, n);
                CHECK(f.coeffs == brute);
            }
        }
    }
}

TEST_CASE("sym_term_product halving n doubles accuracy") {
    Composition a{1, 0, 0};
    Composition b{0, 2, 0};
    Partition lam{2};
    Partition mu{1};
    Partition target = glue({a + b, lam, mu});
    for (int n : {16, 32}) {
        SymPoly fn = sym_term_product(a, lam, 1, b, mu, 2, n);
        SymPoly f2n = sym_term_product(a, lam, 1, b, mu, 2, 2 * n);
        Rat loss_n = 1 - fn.coeff(target);
        Rat loss_2n = 1 - f2n.coeff(target);
        CHECK(loss_2n <= loss_n * frac(3, 5));
    }
}

TEST_CASE("power to monomial basics") {
    SymPoly p2 = power_to_monomial(Partition{2}, 6);
    CHECK(p2.coeffs.size() == 1);
    CHECK(p2.coeff(Partition{2}) == 1);

    for (int n : {4, 9, 30}) {
        SymPoly p11 = power_to_monomial(Partition{1, 1}, n);
        CHECK(p11.coeff(Partition{2}) == frac(1, n));
        CHECK(p11.coeff(Partition{1, 1}) == frac(n - 1, n));
    }
    CHECK_THROWS_AS(power_to_monomial(Partition{3, 2}, 4), std::invalid_argument);
}

TEST_CASE("monomial/power round trip at degree 4, n = 8") {
    for (const auto& lam : enum_partitions(4)) {
        SymPoly f = power_to_monomial(lam, 8);
        CoeffMap back = monomial_to_power(f);
        REQUIRE(back.size() == 1);
        CHECK(back.at(lam) == 1);
    }
}

TEST_CASE("power products glue exactly after basis conversion") {
    const int n = 12;
    for (int a = 1; a <= 5; ++a) {
        for (int b = 1; a + b <= 6; ++b) {
            for (const auto& lam : enum_partitions(a)) {
                for (const auto& mu : enum_partitions(b)) {
                    SymPoly prod = multiply(power_to_monomial(lam, n), power_to_monomial(mu, n));
                    CoeffMap back = monomial_to_power(prod);
                    REQUIRE(back.size() == 1);
                    CHECK(back.at(glue({lam, mu})) == 1);
                }
            }
        }
    }
}

TEST_CASE("evaluate in both bases") {
    LimitForm sq;
    sq.degree = 4;
    sq.coeffs[Partition{2, 2}] = 1;
    QVec ones(8, Rat(1));
    CHECK(evaluate(sq, FormBasis::PowerMean, 8, ones) == 1);
    CHECK(evaluate(sq, FormBasis::MonomialMean, 8, ones) == 1);

    LimitForm diff;
    diff.degree = 4;
    diff.coeffs[Partition{4}] = 1;
    diff.coeffs[Partition{2, 2}] = -1;
    QVec spike(6, Rat(0));
    spike[0] = 1;
    CHECK(evaluate(diff, FormBasis::PowerMean, 6, spike) == frac(5, 36));

    CHECK_THROWS_AS(evaluate(diff, FormBasis::PowerMean, 3, QVec(3, Rat(1))),
                    std::invalid_argument);
}

TEST_CASE("monomial-mean evaluation matches the literal monomial mean") {
    LimitForm f;
    f.degree = 3;
    f.coeffs[Partition{2, 1}] = 1;
    const int n = 5;
    QVec pt = {Rat(1), Rat(-2), frac(1, 2), Rat(3), Rat(0)};
    auto monos = oracle::monomials_of(Partition{2, 1}, 0, n);
    Rat direct = 0;
    for (const auto& mono : monos) {
        Rat term = 1;
        for (int i = 0; i < n; ++i)
            for (int e = 0; e < mono[i]; ++e) term *= pt[i];
        direct += term;
    }
    direct /= Rat(static_cast<int>(monos.size()));
    CHECK(evaluate(f, FormBasis::MonomialMean, n, pt) == direct);
}

TEST_CASE("sextic witness form is nonnegative in the power basis") {
    LimitForm f;
    f.degree = 6;
    f.coeffs[Partition{6}] = frac(1, 2);
    f.coeffs[Partition{4, 2}] = frac(1, 2);
    f.coeffs[Partition{1, 1, 1, 1, 1, 1}] = 4;
    f.coeffs[Partition{4, 1, 1}] = -3;
    unsigned long seed = 123456789;
    auto next = [&]() {
        seed = seed * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<long>((seed >> 33) % 19) - 9;
    };
    for (int n : {6, 9, 14}) {
        for (int rep = 0; rep < 40; ++rep) {
            QVec pt(n);
            for (int i = 0; i < n; ++i) {
                pt[i] = Rat(next(), 1 + (next() & 3));
                pt[i].canonicalize();
            }
            CHECK(evaluate(f, FormBasis::PowerMean, n, pt) >= 0);
        }
    }
}

TEST_CASE("json round trip") {
    SymPoly f;
    f.nvars = 9;
    f.degree = 4;
    f.coeffs[Partition{2, 2}] = frac(1, 3);
    f.coeffs[Partition{4}] = Rat(-2);
    SymPoly g = sympoly_from_json(sympoly_to_json(f));
    CHECK(g.nvars == f.nvars);
    CHECK(g.degree == f.degree);
    CHECK(g.coeffs == f.coeffs);

    LimitForm lf;
    lf.degree = 6;
    lf.coeffs[Partition{4, 1, 1}] = Rat(-3);
    LimitForm lg = limitform_from_json(limitform_to_json(lf));
    CHECK(lg.degree == 6);
    CHECK(lg.coeffs == lf.coeffs);
    CHECK_THROWS(limitform_from_json("{\"degree\":6,\"coeffs\":[[[2,1],\"1\"]]}"));
}
