#pragma once

#include <map>
#include <string>

#include "limitcones/linalg.hpp"
#include "limitcones/partitions.hpp"

namespace limitcones {

// Symmetric form of fixed degree on n variables, coordinates in the monomial
// mean basis. Absent keys are zero; all arithmetic is exact.
struct SymPoly {
    int nvars = 0;
    int degree = 0;
    CoeffMap coeffs;

    Rat coeff(const Partition& p) const;
};

// Stable coefficient vector of a limit form (keys are partitions of the degree).
struct LimitForm {
    int degree = 0;
    CoeffMap coeffs;

    Rat coeff(const Partition& p) const;
};

enum class FormBasis { MonomialMean, PowerMean };

// Exact expansion of m_lambda^(n) * m_mu^(n) in monomial means.
// Requires n >= len(lambda) + len(mu).
SymPoly monomial_mean_product(const Partition& lambda, const Partition& mu, int n);

// Exact expansion of sym_n( x^alpha m_lambda(x_{[k]}) * x^beta m_mu(x_{[l]}) )
// in monomial means. Requires supp(alpha) in {1..k}, supp(beta) in {1..l},
// k,l <= slot count, and n > k + l + len(lambda) + len(mu).
SymPoly sym_term_product(const Composition& alpha, const Partition& lambda, int k,
                         const Composition& beta, const Partition& mu, int l, int n);

// p_lambda^(n) expanded in monomial means. Requires n >= |lambda|.
SymPoly power_to_monomial(const Partition& lambda, int n);

// Change-of-basis matrix T with p_lambda = sum_nu T[lambda][nu] m_nu, rows and
// columns in ascending partition order of the given degree.
QMatrix power_monomial_matrix(int degree, int n);

// Coefficients of f in the power mean basis (inverse of power_to_monomial).
CoeffMap monomial_to_power(const SymPoly& f);

// Exact value of the instantiated form at a point with n coordinates.
// Requires n >= degree for the monomial-mean basis.
Rat evaluate(const LimitForm& f, FormBasis basis, int n, const QVec& point);

Rat power_mean(const QVec& point, int r);

std::string sympoly_to_json(const SymPoly& f);
std::string limitform_to_json(const LimitForm& f);
SymPoly sympoly_from_json(const std::string& text);
LimitForm limitform_from_json(const std::string& text);

}  // namespace limitcones
