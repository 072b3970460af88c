#include "limitcones/tropical.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <stdexcept>
#include <thread>

#include "json.hpp"

namespace limitcones {

Cone trop_even_hankel(int d) {
    if (d < 2) throw std::invalid_argument("trop_even_hankel: need d >= 2");
    std::vector<IVec> ineqs;
    {
        IVec a(d, 0);
        a[0] = -2;
        a[1] = 1;
        ineqs.push_back(std::move(a));
    }
    for (int k = 1; k + 2 <= d; ++k) {
        IVec a(d, 0);
        a[k - 1] = 1;
        a[k] = -2;
        a[k + 1] = 1;
        ineqs.push_back(std::move(a));
    }
    return Cone::from_inequalities(d, std::move(ineqs));
}

Cone trop_full_hankel(int two_d) {
    if (two_d < 4 || two_d % 2 != 0)
        throw std::invalid_argument("trop_full_hankel: need even degree >= 4");
    int d = two_d / 2;
    std::set<IVec> ineqs;
    for (int i = 0; i <= d; ++i) {
        for (int j = i + 1; j <= d; ++j) {
            IVec a(two_d, 0);
            if (i > 0) a[2 * i - 1] += 1;  // z_0 = 0 drops out
            a[2 * j - 1] += 1;
            a[i + j - 1] -= 2;
            bool zero = std::all_of(a.begin(), a.end(), [](const Int& x) { return x == 0; });
            if (!zero) ineqs.insert(std::move(a));
        }
    }
    return Cone::from_inequalities(two_d, std::vector<IVec>(ineqs.begin(), ineqs.end()));
}

TropMap trop_phi(int source_dim, const std::vector<Partition>& targets, bool even_mode) {
    TropMap m;
    m.source_dim = source_dim;
    m.targets = targets;
    for (const Partition& p : targets) {
        Partition q = even_mode ? halve(p) : p;
        IVec row(source_dim, 0);
        for (int part : q.parts()) {
            if (part > source_dim)
                throw std::invalid_argument("trop_phi: part " + std::to_string(part) +
                                            " exceeds source dimension");
            row[part - 1] += 1;
        }
        m.rows.push_back(std::move(row));
    }
    return m;
}

namespace {

Cone sector(int dim, int i) {
    std::vector<IVec> rays;
    for (int j = 0; j < dim; ++j) {
        if (j == i) continue;
        IVec e(dim, 0);
        e[j] = 1;
        rays.push_back(std::move(e));
    }
    std::vector<IVec> lines{IVec(dim, 1)};
    return Cone::from_generators(dim, std::move(rays), std::move(lines));
}

}  // namespace

Cone tropical_conical_hull(const Cone& p, int threads) {
    const int dim = p.dim();
    Cone pv = p.has_v() ? p : dd_convert(p);
    std::vector<Cone> sums;
    sums.reserve(dim);
    for (int i = 0; i < dim; ++i) sums.push_back(minkowski_sum(pv, sector(dim, i)));

    std::vector<HRep> hreps(dim);
    if (threads <= 1) {
        for (int i = 0; i < dim; ++i) hreps[i] = dd_convert(sums[i]).hrep();
    } else {
        std::vector<std::thread> pool;
        std::atomic<int> next{0};
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&]() {
                for (int i = next.fetch_add(1); i < dim; i = next.fetch_add(1))
                    hreps[i] = dd_convert(sums[i]).hrep();
            });
        for (auto& th : pool) th.join();
    }

    // Intersect one sector sum at a time and re-canonicalize after each step:
    // the double description then only ever carries the irredundant facets of
    // the running intersection plus one new block. Step order and sorted
    // blocks keep the run deterministic.
    HRep acc = hreps[0];
    VRep v;
    for (int i = 1; i < dim; ++i) {
        std::vector<IVec> ineqs(acc.ineqs);
        ineqs.insert(ineqs.end(), hreps[i].ineqs.begin(), hreps[i].ineqs.end());
        std::vector<IVec> eqs(acc.eqs);
        eqs.insert(eqs.end(), hreps[i].eqs.begin(), hreps[i].eqs.end());
        v = dual_description(ineqs, eqs, dim, /*keep_order=*/true);
        FacetList f = facets(Cone::with_both(dim, HRep{std::move(ineqs), std::move(eqs)}, v));
        acc = HRep{std::move(f.facets), std::move(f.equations)};
    }
    return Cone::with_both(dim, std::move(acc), std::move(v));
}

namespace {

Cone minor_cone(const SymbolicGram& g, const PartitionIndexer& idx) {
    std::set<IVec> ineqs;
    const size_t n = g.size();
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            if (!g.entries[i][j]) continue;  // vacuous minor on the orthant
            IVec a(idx.size(), 0);
            a[idx.index(*g.entries[i][i])] += 1;
            a[idx.index(*g.entries[j][j])] += 1;
            a[idx.index(*g.entries[i][j])] -= 2;
            bool zero = std::all_of(a.begin(), a.end(), [](const Int& x) { return x == 0; });
            if (!zero) ineqs.insert(std::move(a));
        }
    }
    return dd_convert(Cone::from_inequalities(static_cast<int>(idx.size()),
                                              std::vector<IVec>(ineqs.begin(), ineqs.end())));
}

}  // namespace

Cone trop_sos_cone(const SymbolicGram& g, bool even_coordinates) {
    PartitionIndexer idx = even_coordinates ? PartitionIndexer::even(g.degree())
                                            : PartitionIndexer(g.degree());
    return minor_cone(g, idx);
}

Cone trop_sos_cone_restricted(const SymbolicGram& g, const std::vector<Partition>& coords) {
    std::map<Partition, int> pos;
    for (size_t i = 0; i < coords.size(); ++i) pos[coords[i]] = static_cast<int>(i);
    std::set<IVec> ineqs;
    const size_t n = g.size();
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            if (!g.entries[i][j]) continue;
            auto di = pos.find(*g.entries[i][i]);
            auto dj = pos.find(*g.entries[j][j]);
            auto od = pos.find(*g.entries[i][j]);
            if (di == pos.end() || dj == pos.end() || od == pos.end()) continue;
            IVec a(coords.size(), 0);
            a[di->second] += 1;
            a[dj->second] += 1;
            a[od->second] -= 2;
            bool zero = std::all_of(a.begin(), a.end(), [](const Int& x) { return x == 0; });
            if (!zero) ineqs.insert(std::move(a));
        }
    }
    return dd_convert(Cone::from_inequalities(static_cast<int>(coords.size()),
                                              std::vector<IVec>(ineqs.begin(), ineqs.end())));
}

CompareReport compare_cones(const Cone& moment, const Cone& sos) {
    if (moment.dim() != sos.dim()) throw std::invalid_argument("compare: dimension mismatch");
    Cone m = (moment.has_h() && moment.has_v()) ? moment : dd_convert(moment);
    Cone s = (sos.has_h() && sos.has_v()) ? sos : dd_convert(sos);
    if (auto w = subset_witness(s, m))
        throw std::logic_error("compare: moment cone is not contained in the sos cone");
    CompareReport rep;
    FacetList mf = facets(m);
    const VRep& sv = s.vrep();
    for (const IVec& a : mf.facets) {
        bool violated = false;
        for (const IVec& r : sv.rays) {
            if (dot(a, r) < 0) {
                rep.witness_facets.push_back(a);
                rep.witness_rays.push_back(r);
                violated = true;
                break;
            }
        }
        if (violated) continue;
        for (const IVec& l : sv.lines) {
            Int d = dot(a, l);
            if (d == 0) continue;
            IVec ray(l);
            if (d > 0)
                for (Int& x : ray) x = -x;
            rep.witness_facets.push_back(a);
            rep.witness_rays.push_back(std::move(ray));
            break;
        }
    }
    rep.equal = rep.witness_facets.empty();
    return rep;
}

Cone trop_moment_cone(int two_d, bool even, int threads) {
    if (even) {
        int d = two_d / 2;
        Cone hankel = trop_even_hankel(d);
        PartitionIndexer idx = PartitionIndexer::even(two_d);
        TropMap phi = trop_phi(d, idx.list(), true);
        return tropical_conical_hull(linear_image(dd_convert(hankel), phi.rows), threads);
    }
    Cone hankel = trop_full_hankel(two_d);
    PartitionIndexer idx(two_d);
    TropMap phi = trop_phi(two_d, idx.list(), false);
    return tropical_conical_hull(linear_image(dd_convert(hankel), phi.rows), threads);
}

namespace {

// Streams the 2x2 minor inequalities of the term list's tropicalized gram
// without materializing the matrix; duplicate label triples are dropped
// before any polyhedral work. even_mode skips pairs whose slot sums have an
// odd entry (grouped by slot parity class up front).
Cone minor_cone_from_terms(const std::vector<Term>& terms, bool even_mode,
                           const PartitionIndexer& idx) {
    const size_t n = terms.size();
    std::vector<int> diag(n);
    for (size_t i = 0; i < n; ++i)
        diag[i] = idx.index(glue({terms[i].alpha + terms[i].alpha, terms[i].lambda,
                                  terms[i].lambda}));

    std::vector<std::vector<size_t>> groups;
    if (even_mode) {
        std::map<std::vector<int>, std::vector<size_t>> by_parity;
        for (size_t i = 0; i < n; ++i) {
            std::vector<int> parity(terms[i].alpha.slots());
            for (int& x : parity) x &= 1;
            by_parity[std::move(parity)].push_back(i);
        }
        for (auto& [key, members] : by_parity) groups.push_back(std::move(members));
    } else {
        groups.emplace_back(n);
        for (size_t i = 0; i < n; ++i) groups.back()[i] = i;
    }

    std::map<Partition, int> label_ids;
    for (size_t k = 0; k < idx.size(); ++k) label_ids[idx.at(k)] = static_cast<int>(k);
    std::set<std::tuple<int, int, int>> triples;
    std::vector<int> parts;
    for (const auto& group : groups) {
        for (size_t a = 0; a < group.size(); ++a) {
            for (size_t b = a + 1; b < group.size(); ++b) {
                size_t i = group[a], j = group[b];
                parts.clear();
                const auto& si = terms[i].alpha.slots();
                const auto& sj = terms[j].alpha.slots();
                for (size_t p = 0; p < si.size(); ++p) {
                    int sum = si[p] + sj[p];
                    if (sum) parts.push_back(sum);
                }
                parts.insert(parts.end(), terms[i].lambda.parts().begin(),
                             terms[i].lambda.parts().end());
                parts.insert(parts.end(), terms[j].lambda.parts().begin(),
                             terms[j].lambda.parts().end());
                int od = label_ids.at(Partition(std::vector<int>(parts)));
                int di = std::min(diag[i], diag[j]);
                int dj = std::max(diag[i], diag[j]);
                if (di != od || dj != od) triples.insert({di, dj, od});
            }
        }
    }
    std::set<IVec> ineqs;
    for (const auto& [di, dj, od] : triples) {
        IVec v(idx.size(), 0);
        v[di] += 1;
        v[dj] += 1;
        v[od] -= 2;
        bool zero = std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
        if (!zero) ineqs.insert(std::move(v));
    }
    return dd_convert(Cone::from_inequalities(static_cast<int>(idx.size()),
                                              std::vector<IVec>(ineqs.begin(), ineqs.end())));
}

}  // namespace

Cone trop_sos_pipeline(int two_d, bool even) {
    if (two_d % 2 != 0 || two_d < 2) throw std::invalid_argument("degree must be even, >= 2");
    int d = two_d / 2;
    if (even)
        return minor_cone_from_terms(even_terms(d), true, PartitionIndexer::even(two_d));
    return minor_cone_from_terms(full_terms(d), false, PartitionIndexer(two_d));
}

std::vector<Partition> non_odd_partitions(int two_d) {
    std::vector<Partition> out;
    for (const Partition& p : enum_partitions(two_d))
        if (!is_odd_partition(p)) out.push_back(p);
    return out;
}

Cone trop_moment_restricted(int two_d, int threads) {
    Cone hankel = trop_full_hankel(two_d);
    TropMap phi = trop_phi(two_d, non_odd_partitions(two_d), false);
    return tropical_conical_hull(linear_image(dd_convert(hankel), phi.rows), threads);
}

Cone trop_sos_restricted(int two_d) {
    SymbolicGram g = build_limit_gram(full_terms(two_d / 2), false);
    return trop_sos_cone_restricted(g, non_odd_partitions(two_d));
}

namespace {

nlohmann::ordered_json facet_json(const IVec& a, const std::vector<Partition>& coords) {
    nlohmann::ordered_json vec = nlohmann::ordered_json::array();
    nlohmann::ordered_json combo = nlohmann::ordered_json::array();
    for (size_t i = 0; i < a.size(); ++i) {
        vec.push_back(a[i].get_str());
        if (a[i] != 0) {
            nlohmann::ordered_json pair = nlohmann::ordered_json::array();
            pair.push_back(coords[i].parts());
            pair.push_back(a[i].get_str());
            combo.push_back(std::move(pair));
        }
    }
    nlohmann::ordered_json j;
    j["vector"] = std::move(vec);
    j["support"] = std::move(combo);
    return j;
}

}  // namespace

std::string facets_to_json(const Cone& c, const std::vector<Partition>& coords) {
    FacetList f = facets(c);
    nlohmann::ordered_json j;
    nlohmann::ordered_json coords_json = nlohmann::ordered_json::array();
    for (const Partition& p : coords) coords_json.push_back(p.parts());
    j["coordinates"] = std::move(coords_json);
    nlohmann::ordered_json facets_json = nlohmann::ordered_json::array();
    for (const IVec& a : f.facets) facets_json.push_back(facet_json(a, coords));
    j["facets"] = std::move(facets_json);
    nlohmann::ordered_json eq_json = nlohmann::ordered_json::array();
    for (const IVec& e : f.equations) eq_json.push_back(facet_json(e, coords));
    j["equations"] = std::move(eq_json);
    return j.dump(2);
}

std::string compare_to_json(const CompareReport& r, const std::vector<Partition>& coords) {
    nlohmann::ordered_json j;
    j["relation"] = r.equal ? "equal" : "strict";
    nlohmann::ordered_json w = nlohmann::ordered_json::array();
    for (size_t i = 0; i < r.witness_facets.size(); ++i) {
        nlohmann::ordered_json item;
        item["facet"] = facet_json(r.witness_facets[i], coords);
        nlohmann::ordered_json ray = nlohmann::ordered_json::array();
        for (const Int& x : r.witness_rays[i]) ray.push_back(x.get_str());
        item["violating_ray"] = std::move(ray);
        w.push_back(std::move(item));
    }
    j["witnesses"] = std::move(w);
    return j.dump(2);
}

}  // namespace limitcones
