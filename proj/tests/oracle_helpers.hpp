#pragma once

// Test-only brute-force oracles, independent of the library's combinatorial
// merge rules and double description code.

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

#include "limitcones/linalg.hpp"
#include "limitcones/partitions.hpp"

namespace oracle {

using limitcones::Composition;
using limitcones::Int;
using limitcones::IVec;
using limitcones::Partition;
using limitcones::Rat;

// Exponent vectors of every monomial of M_lambda over variables {from..n-1}
// (0-based), inside an n-slot vector.
inline std::vector<std::vector<int>> monomials_of(const Partition& lambda, int from, int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> vars;
    const auto& parts = lambda.parts();
    const int len = lambda.length();
    std::vector<int> chosen;
    std::function<void(int)> pick = [&](int start) {
        if (static_cast<int>(chosen.size()) == len) {
            // All distinct assignments of parts to the chosen variables.
            std::vector<int> perm(parts);
            std::sort(perm.begin(), perm.end());
            std::vector<std::vector<int>> seen;
            do {
                std::vector<int> mono(n, 0);
                for (int i = 0; i < len; ++i) mono[chosen[i]] = perm[i];
                out.push_back(std::move(mono));
            } while (std::next_permutation(perm.begin(), perm.end()));
            return;
        }
        for (int v = start; v < n; ++v) {
            chosen.push_back(v);
            pick(v + 1);
            chosen.pop_back();
        }
    };
    if (len <= n - from) pick(from);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Literal expansion of sym_n(x^alpha m_lambda(x_{[k]}) x^beta m_mu(x_{[l]}))
// in monomial means: expand both factors monomial by monomial, classify the
// products by shape.
inline std::map<Partition, Rat> sym_product_brute(const Composition& alpha,
                                                  const Partition& lambda, int k,
                                                  const Composition& beta, const Partition& mu,
                                                  int l, int n) {
    auto lam_monos = monomials_of(lambda, k, n);
    auto mu_monos = monomials_of(mu, l, n);
    std::map<Partition, Int> counts;
    for (const auto& lm : lam_monos) {
        for (const auto& mm : mu_monos) {
            std::vector<int> expo(n, 0);
            for (int i = 0; i < n; ++i) {
                expo[i] = lm[i] + mm[i];
                if (i < alpha.length()) expo[i] += alpha.slots()[i];
                if (i < beta.length()) expo[i] += beta.slots()[i];
            }
            std::vector<int> nz;
            for (int e : expo)
                if (e) nz.push_back(e);
            counts[Partition(std::move(nz))] += 1;
        }
    }
    Int denom = Int(static_cast<long>(lam_monos.size())) * Int(static_cast<long>(mu_monos.size()));
    std::map<Partition, Rat> out;
    for (auto& [shape, c] : counts) {
        Rat q(c, denom);
        q.canonicalize();
        out[shape] = q;
    }
    return out;
}

}  // namespace oracle

// Brute-force polyhedral helpers built on subset enumeration.
#include "limitcones/polycone.hpp"

namespace oracle {

using limitcones::QMatrix;
using limitcones::QVec;

inline IVec reduce_mod(const std::vector<IVec>& span_rows, const IVec& v) {
    using namespace limitcones;
    if (span_rows.empty()) return v;
    QMatrix m;
    for (const IVec& r : span_rows) m.push_back(to_rationals(r));
    std::vector<size_t> pivots = rref(m);
    QVec q = to_rationals(v);
    for (size_t i = 0; i < pivots.size(); ++i) {
        Rat f = q[pivots[i]];
        if (f == 0) continue;
        for (size_t j = 0; j < q.size(); ++j) q[j] -= f * m[i][j];
    }
    bool zero = true;
    for (const Rat& x : q)
        if (x != 0) zero = false;
    if (zero) return {};
    return scale_to_integers(q);
}

// Extreme rays by enumerating (s-1)-subsets of the reduced inequality rows.
inline limitcones::VRep brute_rays(const std::vector<IVec>& ineqs_in,
                                   const std::vector<IVec>& eqs_in, int dim) {
    using namespace limitcones;
    std::vector<IVec> ineqs, eqs;
    for (IVec v : ineqs_in)
        if (make_primitive(v)) ineqs.push_back(v);
    for (IVec v : eqs_in)
        if (make_primitive(v)) eqs.push_back(v);
    std::vector<IVec> all(ineqs);
    all.insert(all.end(), eqs.begin(), eqs.end());
    VRep out;
    out.lines = nullspace(all, dim);
    for (IVec& l : out.lines) {
        for (const Int& x : l) {
            if (x > 0) break;
            if (x < 0) {
                for (Int& y : l) y = -y;
                break;
            }
        }
    }
    std::sort(out.lines.begin(), out.lines.end());
    std::vector<IVec> span_constraints(eqs);
    span_constraints.insert(span_constraints.end(), out.lines.begin(), out.lines.end());
    std::vector<IVec> basis = nullspace(span_constraints, dim);
    const size_t s = basis.size();
    if (s == 0) return out;

    std::vector<IVec> red;
    for (const IVec& a : ineqs) {
        IVec row(s);
        bool zero = true;
        for (size_t j = 0; j < s; ++j) {
            row[j] = dot(a, basis[j]);
            if (row[j] != 0) zero = false;
        }
        if (!zero && make_primitive(row)) red.push_back(row);
    }
    std::sort(red.begin(), red.end());
    red.erase(std::unique(red.begin(), red.end()), red.end());

    std::set<IVec> rays;
    std::vector<size_t> subset;
    std::function<void(size_t)> pick = [&](size_t start) {
        if (subset.size() == s - 1) {
            std::vector<IVec> rows;
            for (size_t i : subset) rows.push_back(red[i]);
            std::vector<IVec> ns = nullspace(rows, s);
            if (ns.size() != 1) return;
            for (int sign : {1, -1}) {
                IVec v = ns[0];
                if (sign < 0)
                    for (Int& x : v) x = -x;
                bool feasible = true;
                size_t active = 0;
                std::vector<IVec> active_rows;
                for (const IVec& a : red) {
                    Int d = dot(a, v);
                    if (d < 0) {
                        feasible = false;
                        break;
                    }
                    if (d == 0) active_rows.push_back(a);
                }
                if (!feasible) continue;
                (void)active;
                if (rank_of_ivecs(active_rows) != s - 1) continue;
                rays.insert(v);
            }
            return;
        }
        if (start >= red.size()) return;
        for (size_t i = start; i < red.size(); ++i) {
            subset.push_back(i);
            pick(i + 1);
            subset.pop_back();
        }
    };
    if (s == 1) {
        // Dimension one: feasible directions are rays.
        for (int sign : {1, -1}) {
            IVec v{Int(sign)};
            bool feasible = true;
            for (const IVec& a : red)
                if (dot(a, v) < 0) feasible = false;
            if (feasible) rays.insert(v);
        }
    } else {
        pick(0);
    }
    std::set<IVec> mapped;
    for (const IVec& u : rays) {
        QVec x(dim, Rat(0));
        for (size_t j = 0; j < s; ++j)
            for (int c = 0; c < dim; ++c) x[c] += Rat(u[j]) * Rat(basis[j][c]);
        IVec ray = scale_to_integers(x);
        ray = reduce_mod(out.lines, ray);
        if (!ray.empty()) mapped.insert(ray);
    }
    out.rays.assign(mapped.begin(), mapped.end());
    return out;
}

}  // namespace oracle
