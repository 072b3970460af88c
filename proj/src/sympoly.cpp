#include "limitcones/sympoly.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "json.hpp"

namespace limitcones {

namespace {

// Coefficient of m_nu in sym_n(x^alpha m_lambda(x_{[k]}) * x^beta m_mu(x_{[l]})),
// counted over ordered injective placements of the parts of lambda and mu.
// Placements are grouped by where each part lands: a named slot between the two
// prefix windows, or the unbounded tail shared by both factors, where a lambda
// part and a mu part may collide on one variable.
CoeffMap product_expansion(const Composition& alpha, const Partition& lambda, int k,
                           const Composition& beta, const Partition& mu, int l, int n) {
    const int K = std::max(k, l);
    const std::vector<int>& lam_parts = lambda.parts();
    const std::vector<int>& mu_parts = mu.parts();
    const int a = static_cast<int>(lam_parts.size());
    const int b = static_cast<int>(mu_parts.size());

    std::vector<int> exps(K, 0);
    for (int p = 0; p < K; ++p) {
        if (p < alpha.length()) exps[p] += alpha.slots()[p];
        if (p < beta.length()) exps[p] += beta.slots()[p];
    }

    std::vector<int> lam_named, mu_named;  // 0-based variable indices
    for (int p = k; p < K; ++p) lam_named.push_back(p);
    for (int p = l; p < K; ++p) mu_named.push_back(p);

    std::map<Partition, Int> counts;
    std::vector<int> lam_free, mu_free;  // part values placed in the shared tail
    std::vector<char> lam_slot_used(lam_named.size(), 0), mu_slot_used(mu_named.size(), 0);

    std::function<void()> match_tail = [&]() {
        std::vector<char> mu_taken(mu_free.size(), 0);
        std::vector<int> tail_vals;
        std::function<void(size_t)> rec = [&](size_t i) {
            if (i == lam_free.size()) {
                std::vector<int> vals = tail_vals;
                for (size_t j = 0; j < mu_free.size(); ++j)
                    if (!mu_taken[j]) vals.push_back(mu_free[j]);
                int positions = static_cast<int>(vals.size());
                for (int e : exps)
                    if (e != 0) vals.push_back(e);
                counts[Partition(std::move(vals))] += falling_factorial(Int(n - K), positions);
                return;
            }
            tail_vals.push_back(lam_free[i]);  // own variable
            rec(i + 1);
            tail_vals.pop_back();
            for (size_t j = 0; j < mu_free.size(); ++j) {  // shared variable
                if (mu_taken[j]) continue;
                mu_taken[j] = 1;
                tail_vals.push_back(lam_free[i] + mu_free[j]);
                rec(i + 1);
                tail_vals.pop_back();
                mu_taken[j] = 0;
            }
        };
        rec(0);
    };

    std::function<void(int)> place_mu = [&](int j) {
        if (j == b) {
            match_tail();
            return;
        }
        mu_free.push_back(mu_parts[j]);
        place_mu(j + 1);
        mu_free.pop_back();
        for (size_t t = 0; t < mu_named.size(); ++t) {
            if (mu_slot_used[t]) continue;
            mu_slot_used[t] = 1;
            exps[mu_named[t]] += mu_parts[j];
            place_mu(j + 1);
            exps[mu_named[t]] -= mu_parts[j];
            mu_slot_used[t] = 0;
        }
    };

    std::function<void(int)> place_lam = [&](int i) {
        if (i == a) {
            place_mu(0);
            return;
        }
        lam_free.push_back(lam_parts[i]);
        place_lam(i + 1);
        lam_free.pop_back();
        for (size_t t = 0; t < lam_named.size(); ++t) {
            if (lam_slot_used[t]) continue;
            lam_slot_used[t] = 1;
            exps[lam_named[t]] += lam_parts[i];
            place_lam(i + 1);
            exps[lam_named[t]] -= lam_parts[i];
            lam_slot_used[t] = 0;
        }
    };

    place_lam(0);

    Int denom = falling_factorial(Int(n - k), a) * falling_factorial(Int(n - l), b);
    CoeffMap out;
    for (auto& [shape, cnt] : counts) {
        if (cnt == 0) continue;
        Rat c(cnt, denom);
        c.canonicalize();
        out[shape] = c;
    }
    return out;
}

}  // namespace

Rat SymPoly::coeff(const Partition& p) const {
    auto it = coeffs.find(p);
    return it == coeffs.end() ? Rat(0) : it->second;
}

Rat LimitForm::coeff(const Partition& p) const {
    auto it = coeffs.find(p);
    return it == coeffs.end() ? Rat(0) : it->second;
}

SymPoly monomial_mean_product(const Partition& lambda, const Partition& mu, int n) {
    if (n < lambda.length() + mu.length())
        throw std::invalid_argument("monomial_mean_product: need n >= len(lambda)+len(mu)");
    SymPoly f;
    f.nvars = n;
    f.degree = lambda.size() + mu.size();
    f.coeffs = product_expansion(Composition(std::vector<int>{}), lambda, 0,
                                 Composition(std::vector<int>{}), mu, 0, n);
    return f;
}

SymPoly sym_term_product(const Composition& alpha, const Partition& lambda, int k,
                         const Composition& beta, const Partition& mu, int l, int n) {
    if (alpha.support_end() > k)
        throw std::invalid_argument("sym_term_product: supp(alpha) exceeds k");
    if (beta.support_end() > l)
        throw std::invalid_argument("sym_term_product: supp(beta) exceeds l");
    if (k < 0 || l < 0) throw std::invalid_argument("sym_term_product: negative window");
    if (n <= k + l + lambda.length() + mu.length())
        throw std::invalid_argument("sym_term_product: n too small");
    SymPoly f;
    f.nvars = n;
    f.degree = alpha.weight() + lambda.size() + beta.weight() + mu.size();
    f.coeffs = product_expansion(alpha, lambda, k, beta, mu, l, n);
    return f;
}

SymPoly power_to_monomial(const Partition& lambda, int n) {
    if (n < lambda.size()) throw std::invalid_argument("power_to_monomial: need n >= |lambda|");
    SymPoly acc;
    acc.nvars = n;
    acc.degree = 0;
    acc.coeffs[Partition()] = 1;
    for (int r : lambda.parts()) {
        SymPoly next;
        next.nvars = n;
        next.degree = acc.degree + r;
        Partition pr{r};
        for (const auto& [nu, c] : acc.coeffs) {
            SymPoly prod = monomial_mean_product(nu, pr, n);
            for (const auto& [key, val] : prod.coeffs) next.coeffs[key] += c * val;
        }
        for (auto it = next.coeffs.begin(); it != next.coeffs.end();)
            it = (it->second == 0) ? next.coeffs.erase(it) : std::next(it);
        acc = std::move(next);
    }
    return acc;
}

QMatrix power_monomial_matrix(int degree, int n) {
    std::vector<Partition> parts = enum_partitions(degree);
    PartitionIndexer idx(degree);
    QMatrix t(parts.size(), QVec(parts.size(), 0));
    for (size_t i = 0; i < parts.size(); ++i) {
        SymPoly p = power_to_monomial(parts[i], n);
        for (const auto& [nu, c] : p.coeffs) t[i][idx.index(nu)] = c;
    }
    return t;
}

CoeffMap monomial_to_power(const SymPoly& f) {
    QMatrix t = power_monomial_matrix(f.degree, f.nvars);
    size_t m = t.size();
    QMatrix tt(m, QVec(m));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) tt[i][j] = t[j][i];
    PartitionIndexer idx(f.degree);
    QVec c(m, 0);
    for (const auto& [nu, v] : f.coeffs) c[idx.index(nu)] = v;
    auto q = solve_linear(std::move(tt), std::move(c));
    if (!q) throw std::logic_error("power/monomial basis change is singular");
    CoeffMap out;
    for (size_t i = 0; i < m; ++i)
        if ((*q)[i] != 0) out[idx.at(i)] = (*q)[i];
    return out;
}

Rat power_mean(const QVec& point, int r) {
    Rat s = 0;
    for (const Rat& x : point) {
        Rat p = 1;
        for (int i = 0; i < r; ++i) p *= x;
        s += p;
    }
    return s / Rat(static_cast<int>(point.size()));
}

Rat evaluate(const LimitForm& f, FormBasis basis, int n, const QVec& point) {
    if (n < f.degree) throw std::invalid_argument("evaluate: need n >= degree");
    if (static_cast<int>(point.size()) != n)
        throw std::invalid_argument("evaluate: point has wrong length");
    std::vector<Rat> pvals(f.degree + 1, 0);
    for (int r = 1; r <= f.degree; ++r) pvals[r] = power_mean(point, r);
    if (basis == FormBasis::PowerMean) {
        Rat total = 0;
        for (const auto& [lam, c] : f.coeffs) {
            Rat prod = 1;
            for (int r : lam.parts()) prod *= pvals[r];
            total += c * prod;
        }
        return total;
    }
    PartitionIndexer idx(f.degree);
    QVec rhs(idx.size(), 0);
    for (size_t i = 0; i < idx.size(); ++i) {
        Rat prod = 1;
        for (int r : idx.at(i).parts()) prod *= pvals[r];
        rhs[i] = prod;
    }
    auto mvals = solve_linear(power_monomial_matrix(f.degree, n), std::move(rhs));
    if (!mvals) throw std::logic_error("monomial mean evaluation: singular basis change");
    Rat total = 0;
    for (const auto& [lam, c] : f.coeffs) total += c * (*mvals)[idx.index(lam)];
    return total;
}

namespace {

nlohmann::ordered_json coeffs_to_json(const CoeffMap& coeffs) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& [key, val] : coeffs) {
        nlohmann::ordered_json pair = nlohmann::ordered_json::array();
        pair.push_back(key.parts());
        pair.push_back(rat_to_string(val));
        arr.push_back(std::move(pair));
    }
    return arr;
}

CoeffMap coeffs_from_json(const nlohmann::json& arr) {
    CoeffMap out;
    for (const auto& pair : arr) {
        std::vector<int> parts = pair.at(0).get<std::vector<int>>();
        out[Partition(std::move(parts))] = parse_rat(pair.at(1).get<std::string>());
    }
    return out;
}

}  // namespace

std::string sympoly_to_json(const SymPoly& f) {
    nlohmann::ordered_json j;
    j["degree"] = f.degree;
    j["n"] = f.nvars;
    j["coeffs"] = coeffs_to_json(f.coeffs);
    return j.dump(2);
}

std::string limitform_to_json(const LimitForm& f) {
    nlohmann::ordered_json j;
    j["degree"] = f.degree;
    j["coeffs"] = coeffs_to_json(f.coeffs);
    return j.dump(2);
}

SymPoly sympoly_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    SymPoly f;
    f.degree = j.at("degree").get<int>();
    f.nvars = j.at("n").get<int>();
    f.coeffs = coeffs_from_json(j.at("coeffs"));
    return f;
}

LimitForm limitform_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    LimitForm f;
    f.degree = j.at("degree").get<int>();
    f.coeffs = coeffs_from_json(j.at("coeffs"));
    for (const auto& [key, val] : f.coeffs)
        if (key.size() != f.degree)
            throw std::invalid_argument("limit form key of wrong degree: " + key.str());
    return f;
}

}  // namespace limitcones
