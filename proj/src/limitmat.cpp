#include "limitcones/limitmat.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "json.hpp"

namespace limitcones {

namespace {

// Matches the displayed order of the degree-4 matrices: within a fixed |alpha|
// the lambdas run from lex-largest down, and the compositions run by ascending
// shape with the support pushed to the leading slots first.
bool term_less(const Term& s, const Term& t) {
    int ws = s.alpha.weight(), wt = t.alpha.weight();
    if (ws != wt) return ws < wt;
    if (s.lambda != t.lambda) return t.lambda < s.lambda;
    Partition shs = s.alpha.shape(), sht = t.alpha.shape();
    if (shs != sht) return shs < sht;
    return t.alpha.slots() < s.alpha.slots();
}

void enum_compositions(int weight, int slots, const std::function<void(std::vector<int>&)>& emit) {
    std::vector<int> cur(slots, 0);
    std::function<void(int, int)> rec = [&](int pos, int rest) {
        if (pos == slots - 1) {
            cur[pos] = rest;
            emit(cur);
            return;
        }
        for (int v = 0; v <= rest; ++v) {
            cur[pos] = v;
            rec(pos + 1, rest - v);
        }
        cur[pos] = 0;
    };
    if (slots == 0) {
        if (weight == 0) emit(cur);
        return;
    }
    rec(0, weight);
}

std::vector<Term> terms_filtered(int d, bool even_only) {
    if (d < 1) throw std::invalid_argument("term lists need degree >= 1");
    std::vector<Term> out;
    for (int w = 0; w <= d; ++w) {
        std::vector<Composition> comps;
        enum_compositions(w, d, [&](std::vector<int>& c) { comps.emplace_back(c); });
        for (const Partition& lam : enum_partitions(d - w)) {
            if (even_only && !is_even(lam)) continue;
            for (const Composition& al : comps) out.push_back(Term{al, lam});
        }
    }
    std::sort(out.begin(), out.end(), term_less);
    return out;
}

Term make_term(std::vector<int> alpha, std::vector<int> lambda) {
    return Term{Composition(std::move(alpha)), Partition(std::move(lambda))};
}

LinComb lc(std::initializer_list<std::pair<Partition, int>> items) {
    LinComb c;
    for (const auto& [p, v] : items) c[p] = v;
    return c;
}

LabeledMatrix labeled(std::vector<std::vector<LinComb>> entries) {
    LabeledMatrix m;
    m.entries = std::move(entries);
    for (const auto& row : m.entries)
        if (row.size() != m.entries.size()) throw std::logic_error("labeled matrix not square");
    return m;
}

std::map<std::string, std::vector<Term>> make_fixture_terms() {
    std::map<std::string, std::vector<Term>> f;
    // Degree 4, the four-term vector (m_{1^2}, x1 m_1, m_2, x1^2).
    f["R4"] = {make_term({0, 0}, {1, 1}), make_term({1, 0}, {1}), make_term({0, 0}, {2}),
               make_term({2, 0}, {})};
    // Same span collected straight off the degree-2 symmetry bases, with the
    // window-shifted copies of m_{1^2} and m_2 still present.
    f["R4_raw"] = {make_term({0, 0}, {1, 1}), make_term({1, 0}, {1}), make_term({0, 0}, {1, 1}),
                   make_term({0, 0}, {2}),    make_term({2, 0}, {}),  make_term({0, 0}, {2})};
    // Degree 6, eleven terms:
    // m_{1^3}, x1 m_{1^2}, m_{2,1}, x2 m_2, x1 m_2, x2^2 m_1, x1^2 m_1,
    // x1 x2^2, x1^2 x2, m_3, x1^3.
    f["R6"] = {make_term({0, 0, 0}, {1, 1, 1}), make_term({1, 0, 0}, {1, 1}),
               make_term({0, 0, 0}, {2, 1}),    make_term({0, 1, 0}, {2}),
               make_term({1, 0, 0}, {2}),       make_term({0, 2, 0}, {1}),
               make_term({2, 0, 0}, {1}),       make_term({1, 2, 0}, {}),
               make_term({2, 1, 0}, {}),        make_term({0, 0, 0}, {3}),
               make_term({3, 0, 0}, {})};
    // Degree 10 even block with odd x1 exponent:
    // x1 m_{2^2}, x1 x2^2 m_2, x1 m_4, x1^3 m_2, x1^3 x2^2, x1 x2^4, x1^5.
    f["R10e"] = {make_term({1, 0, 0, 0, 0}, {2, 2}), make_term({1, 2, 0, 0, 0}, {2}),
                 make_term({1, 0, 0, 0, 0}, {4}),    make_term({3, 0, 0, 0, 0}, {2}),
                 make_term({3, 2, 0, 0, 0}, {}),     make_term({1, 4, 0, 0, 0}, {}),
                 make_term({5, 0, 0, 0, 0}, {})};
    // Companion block with even x1 exponent; its gram is the top-left 6x6
    // principal submatrix of R10e's.
    f["R10e_block2"] = {make_term({0, 1, 0, 0, 0}, {2, 2}), make_term({2, 1, 0, 0, 0}, {2}),
                        make_term({0, 1, 0, 0, 0}, {4}),    make_term({0, 3, 0, 0, 0}, {2}),
                        make_term({2, 3, 0, 0, 0}, {}),     make_term({4, 1, 0, 0, 0}, {})};
    return f;
}

std::map<std::string, LabeledMatrix> make_fixture_matrices() {
    std::map<std::string, LabeledMatrix> f;
    const Partition p1111{1, 1, 1, 1}, p211{2, 1, 1}, p22{2, 2}, p31{3, 1}, p4{4};
    f["Q0_4"] = labeled({{lc({{p1111, 1}}), lc({{p211, 1}})},  //
                         {lc({{p211, 1}}), lc({{p22, 1}})}});
    f["Q1_4"] = labeled({{lc({{p211, 1}, {p1111, -1}}), lc({{p31, 1}, {p211, -1}})},
                         {lc({{p31, 1}, {p211, -1}}), lc({{p4, 1}, {p22, -1}})}});

    const Partition a16{1, 1, 1, 1, 1, 1}, a214{2, 1, 1, 1, 1}, a313{3, 1, 1, 1},
        a2212{2, 2, 1, 1}, a321{3, 2, 1}, a33{3, 3}, a23{2, 2, 2}, a412{4, 1, 1}, a42{4, 2},
        a51{5, 1}, a6{6};
    f["Q0_6"] = labeled({{lc({{a16, 1}}), lc({{a214, 1}}), lc({{a313, 1}})},
                         {lc({{a214, 1}}), lc({{a2212, 1}}), lc({{a321, 1}})},
                         {lc({{a313, 1}}), lc({{a321, 1}}), lc({{a33, 1}})}});
    f["Q1_6"] = labeled(
        {{lc({{a214, 1}, {a16, -1}}), lc({{a313, 1}, {a214, -1}}), lc({{a2212, 1}, {a214, -1}}),
          lc({{a412, 1}, {a313, -1}})},
         {lc({{a313, 1}, {a214, -1}}), lc({{a412, 1}, {a2212, -1}}), lc({{a321, 1}, {a2212, -1}}),
          lc({{a51, 1}, {a321, -1}})},
         {lc({{a2212, 1}, {a214, -1}}), lc({{a321, 1}, {a2212, -1}}), lc({{a23, 1}, {a2212, -1}}),
          lc({{a42, 1}, {a321, -1}})},
         {lc({{a412, 1}, {a313, -1}}), lc({{a51, 1}, {a321, -1}}), lc({{a42, 1}, {a321, -1}}),
          lc({{a6, 1}, {a33, -1}})}});
    f["Q11_6"] =
        labeled({{lc({{a42, 1}, {a412, -1}, {a33, -1}, {a321, 2}, {a23, -1}})}});

    f["E1_6"] = labeled({{lc({{a23, 1}}), lc({{a42, 1}})},  //
                         {lc({{a42, 1}}), lc({{a6, 1}})}});
    f["E11_6"] = labeled({{lc({{a42, 1}, {a23, -1}})}});

    const Partition b24{2, 2, 2, 2}, b422{4, 2, 2}, b44{4, 4}, b62{6, 2}, b8{8};
    f["E0_8"] = labeled({{lc({{b24, 1}}), lc({{b422, 1}})},  //
                         {lc({{b422, 1}}), lc({{b44, 1}})}});
    f["E1_8"] = labeled({{lc({{b422, 1}, {b24, -1}}), lc({{b62, 1}, {b422, -1}})},
                         {lc({{b62, 1}, {b422, -1}}), lc({{b8, 1}, {b44, -1}})}});
    f["E11_8"] = labeled({{lc({{b62, 1}, {b44, -1}})}});

    const Partition c25{2, 2, 2, 2, 2}, c423{4, 2, 2, 2}, c442{4, 4, 2}, c622{6, 2, 2},
        c64{6, 4}, c82{8, 2}, c10{10};
    f["E1_10"] = labeled({{lc({{c25, 1}}), lc({{c423, 1}}), lc({{c423, 1}}), lc({{c622, 1}})},
                          {lc({{c423, 1}}), lc({{c442, 1}}), lc({{c442, 1}}), lc({{c64, 1}})},
                          {lc({{c423, 1}}), lc({{c442, 1}}), lc({{c622, 1}}), lc({{c82, 1}})},
                          {lc({{c622, 1}}), lc({{c64, 1}}), lc({{c82, 1}}), lc({{c10, 1}})}});
    f["E11_10"] = labeled(
        {{lc({{c423, 1}, {c25, -1}}), lc({{c442, 1}, {c423, -1}}), lc({{c622, 1}, {c423, -1}})},
         {lc({{c442, 1}, {c423, -1}}), lc({{c64, 1}, {c622, -1}}), lc({{c64, 1}, {c442, -1}})},
         {lc({{c622, 1}, {c423, -1}}), lc({{c64, 1}, {c442, -1}}), lc({{c82, 1}, {c442, -1}})}});

    // Block pencil describing the dual of the even sextic cone in the
    // coordinates (z_{2^3}, z_{4,2}, z_6).
    f["es6_dual_pencil"] = labeled({{lc({{a23, 1}}), lc({{a42, 1}}), lc({})},
                                    {lc({{a42, 1}}), lc({{a6, 1}}), lc({})},
                                    {lc({}), lc({}), lc({{a42, 1}, {a23, -1}})}});
    return f;
}

}  // namespace

std::vector<Term> full_terms(int d) { return terms_filtered(d, false); }

std::vector<Term> even_terms(int d) { return terms_filtered(d, true); }

SymbolicGram build_limit_gram(const std::vector<Term>& terms, bool even_mode) {
    SymbolicGram g;
    g.terms = terms;
    const size_t n = terms.size();
    for (size_t i = 1; i < n; ++i)
        if (terms[i].degree() != terms[0].degree() ||
            terms[i].alpha.length() != terms[0].alpha.length())
            throw std::invalid_argument("build_limit_gram: mixed term degrees");
    g.entries.assign(n, std::vector<std::optional<Partition>>(n));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i; j < n; ++j) {
            Composition s = terms[i].alpha + terms[j].alpha;
            bool zero = false;
            if (even_mode)
                for (int v : s.slots())
                    if (v % 2 != 0) {
                        zero = true;
                        break;
                    }
            if (!zero) {
                Partition label = glue({s, terms[i].lambda, terms[j].lambda});
                g.entries[i][j] = label;
                g.entries[j][i] = std::move(label);
            }
        }
    }
    for (size_t i = 0; i < n; ++i)
        if (!g.entries[i][i]) throw std::logic_error("diagonal entry cannot be zero");
    return g;
}

SymbolicGram dedup_rows(const SymbolicGram& g) {
    const size_t n = g.size();
    std::vector<size_t> keep;
    for (size_t i = 0; i < n; ++i) {
        bool dup = false;
        for (size_t j : keep) {
            if (g.entries[i] == g.entries[j]) {
                dup = true;
                break;
            }
        }
        if (!dup) keep.push_back(i);
    }
    SymbolicGram out;
    for (size_t i : keep) out.terms.push_back(g.terms[i]);
    out.entries.assign(keep.size(), std::vector<std::optional<Partition>>(keep.size()));
    for (size_t a = 0; a < keep.size(); ++a)
        for (size_t b = 0; b < keep.size(); ++b) out.entries[a][b] = g.entries[keep[a]][keep[b]];
    return out;
}

LabeledMatrix to_labeled(const SymbolicGram& g) {
    LabeledMatrix m;
    m.entries.assign(g.size(), std::vector<LinComb>(g.size()));
    for (size_t i = 0; i < g.size(); ++i)
        for (size_t j = 0; j < g.size(); ++j)
            if (g.entries[i][j]) m.entries[i][j][*g.entries[i][j]] = 1;
    return m;
}

const std::map<std::string, std::vector<Term>>& fixture_term_lists() {
    static const std::map<std::string, std::vector<Term>> f = make_fixture_terms();
    return f;
}

const std::map<std::string, LabeledMatrix>& fixture_matrices() {
    static const std::map<std::string, LabeledMatrix> f = make_fixture_matrices();
    return f;
}

SymbolicGram fixture_gram(const std::string& name) {
    const auto& lists = fixture_term_lists();
    auto it = lists.find(name);
    if (it == lists.end()) throw std::invalid_argument("unknown fixture: " + name);
    bool even = name.find("10e") != std::string::npos;
    return build_limit_gram(it->second, even);
}

std::string gram_to_json(const SymbolicGram& g) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const Term& t : g.terms) {
        nlohmann::ordered_json tj;
        tj["alpha"] = t.alpha.slots();
        tj["lambda"] = t.lambda.parts();
        terms.push_back(std::move(tj));
    }
    j["terms"] = std::move(terms);
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : g.entries) {
        nlohmann::ordered_json rj = nlohmann::ordered_json::array();
        for (const auto& e : row) {
            if (e)
                rj.push_back(e->parts());
            else
                rj.push_back(0);
        }
        rows.push_back(std::move(rj));
    }
    j["entries"] = std::move(rows);
    return j.dump(2);
}

SymbolicGram gram_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    SymbolicGram g;
    for (const auto& tj : j.at("terms")) {
        g.terms.push_back(Term{Composition(tj.at("alpha").get<std::vector<int>>()),
                               Partition(tj.at("lambda").get<std::vector<int>>())});
    }
    for (const auto& rj : j.at("entries")) {
        std::vector<std::optional<Partition>> row;
        for (const auto& e : rj) {
            if (e.is_number())
                row.push_back(std::nullopt);
            else
                row.push_back(Partition(e.get<std::vector<int>>()));
        }
        g.entries.push_back(std::move(row));
    }
    return g;
}

}  // namespace limitcones
