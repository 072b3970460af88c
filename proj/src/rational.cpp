#include "limitcones/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace limitcones {

Int falling_factorial(const Int& n, int k) {
    Int r = 1;
    for (int i = 0; i < k; ++i) r *= n - i;
    return r;
}

Int factorial(int n) {
    Int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Rat parse_rat(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    for (char c : s) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
            throw std::invalid_argument("bad rational literal: " + s);
    }
    Rat q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    return q;
}

std::string rat_to_string(const Rat& q) {
    Rat c = q;
    c.canonicalize();
    return c.get_str();
}

double to_double(const Rat& q) { return q.get_d(); }

bool make_primitive(IVec& v) {
    Int g = 0;
    for (const Int& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 0) return false;
    if (g != 1)
        for (Int& x : v) x /= g;
    return true;
}

IVec scale_to_integers(const QVec& v) {
    Int lcm = 1;
    for (const Rat& q : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
    IVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = v[i].get_num() * (lcm / v[i].get_den());
    make_primitive(out);
    return out;
}

QVec to_rationals(const IVec& v) {
    QVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = v[i];
    return out;
}

Rat dot(const IVec& a, const QVec& b) {
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
    return s;
}

Int dot(const IVec& a, const IVec& b) {
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rat round_to_rational(double x, const Int& max_den) {
    if (!std::isfinite(x)) throw std::invalid_argument("cannot round non-finite value");
    bool neg = x < 0;
    double y = neg ? -x : x;
    // Convergents p/q of the continued fraction of y.
    Int p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double frac = y;
    for (int it = 0; it < 64; ++it) {
        double fl = std::floor(frac);
        if (fl > 1e18) break;
        Int a(static_cast<long>(fl));
        Int p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > max_den) break;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        double rem = frac - fl;
        if (rem < 1e-15) break;
        frac = 1.0 / rem;
    }
    Rat r(p1, q1 == 0 ? Int(1) : q1);
    r.canonicalize();
    return neg ? Rat(-r) : r;
}

}  // namespace limitcones
