#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace limitcones {

using Int = mpz_class;
using Rat = mpq_class;
using IVec = std::vector<Int>;
using QVec = std::vector<Rat>;

// n (n-1) ... (n-k+1); k = 0 gives 1.
Int falling_factorial(const Int& n, int k);

Int factorial(int n);
Int binomial(int n, int k);

// Canonicalized fraction (mpq_class's two-argument constructor does not reduce).
inline Rat frac(long num, long den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "p", "-p" or "p/q"; throws std::invalid_argument on garbage or q = 0.
Rat parse_rat(const std::string& s);

// Decimal-free "p" or "p/q" form, canonicalized.
std::string rat_to_string(const Rat& q);

double to_double(const Rat& q);

// Divides by the gcd of the entries (sign preserved). Returns false on the zero vector.
bool make_primitive(IVec& v);

// Clears denominators and reduces to a primitive integer vector.
IVec scale_to_integers(const QVec& v);

QVec to_rationals(const IVec& v);

Rat dot(const IVec& a, const QVec& b);
Int dot(const IVec& a, const IVec& b);

// Best rational approximation with denominator <= max_den (continued fractions).
Rat round_to_rational(double x, const Int& max_den);

}  // namespace limitcones
