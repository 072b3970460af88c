#include "limitcones/polycone.hpp"

#include <algorithm>
#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "limitcones/linalg.hpp"

namespace limitcones {

namespace {

struct Bitset {
    std::vector<uint64_t> w;

    explicit Bitset(size_t n = 0) : w((n + 63) / 64, 0) {}
    void set(size_t i) { w[i >> 6] |= uint64_t(1) << (i & 63); }
    size_t count() const {
        size_t c = 0;
        for (uint64_t x : w) c += static_cast<size_t>(__builtin_popcountll(x));
        return c;
    }
    bool subset_of(const Bitset& o) const {
        for (size_t i = 0; i < w.size(); ++i)
            if (w[i] & ~o.w[i]) return false;
        return true;
    }
    static size_t and_count(const Bitset& a, const Bitset& b, Bitset& out) {
        size_t c = 0;
        for (size_t i = 0; i < a.w.size(); ++i) {
            out.w[i] = a.w[i] & b.w[i];
            c += static_cast<size_t>(__builtin_popcountll(out.w[i]));
        }
        return c;
    }
};

IVec primitive_or_throw(IVec v, const char* what) {
    if (!make_primitive(v)) throw std::invalid_argument(std::string(what) + ": zero vector");
    return v;
}

// Canonical sign for vectors whose orientation is meaningless (lines, equations).
void canonical_sign(IVec& v) {
    for (const Int& x : v) {
        if (x > 0) return;
        if (x < 0) {
            for (Int& y : v) y = -y;
            return;
        }
    }
}

std::vector<IVec> sorted_unique(std::vector<IVec> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

// Canonical reducer modulo a subspace given by integer basis rows.
class SpanReducer {
  public:
    SpanReducer(const std::vector<IVec>& basis, size_t dim) {
        QMatrix m;
        for (const IVec& b : basis) m.push_back(to_rationals(b));
        pivots_ = rref(m);
        rows_ = std::move(m);
        dim_ = dim;
    }

    // Zeroes the pivot coordinates; returns empty vector when v lies in the span.
    IVec reduce(const IVec& v) const {
        QVec q = to_rationals(v);
        for (size_t i = 0; i < pivots_.size(); ++i) {
            Rat f = q[pivots_[i]];
            if (f == 0) continue;
            for (size_t j = 0; j < dim_; ++j) q[j] -= f * rows_[i][j];
        }
        bool zero = true;
        for (const Rat& x : q)
            if (x != 0) {
                zero = false;
                break;
            }
        if (zero) return {};
        return scale_to_integers(q);
    }

  private:
    QMatrix rows_;
    std::vector<size_t> pivots_;
    size_t dim_ = 0;
};

// Signed 64-bit copy of a vector when every entry fits, with the maximum bit
// length; dot products then run in 128-bit arithmetic with an exact fallback.
struct FastVec {
    std::vector<long long> v;
    int bits = 0;
    bool fits = false;
};

FastVec make_fast(const IVec& x) {
    FastVec f;
    f.v.resize(x.size());
    f.fits = true;
    for (size_t i = 0; i < x.size(); ++i) {
        if (!x[i].fits_slong_p()) {
            f.fits = false;
            return f;
        }
        f.v[i] = x[i].get_si();
        int b = static_cast<int>(mpz_sizeinbase(x[i].get_mpz_t(), 2));
        f.bits = std::max(f.bits, b);
    }
    return f;
}

Int dot_fast(const IVec& a, const FastVec& fa, const IVec& b, const FastVec& fb) {
    if (fa.fits && fb.fits && fa.bits + fb.bits <= 110) {
        __int128 acc = 0;
        for (size_t i = 0; i < fa.v.size(); ++i)
            acc += static_cast<__int128>(fa.v[i]) * fb.v[i];
        if (acc >= std::numeric_limits<long long>::min() &&
            acc <= std::numeric_limits<long long>::max())
            return Int(static_cast<long>(acc));
        // Rare: rebuild exactly through 64-bit halves.
        bool negative = acc < 0;
        unsigned __int128 mag = negative ? -static_cast<unsigned __int128>(acc)
                                         : static_cast<unsigned __int128>(acc);
        Int hi(static_cast<unsigned long>(mag >> 64));
        Int out = (hi << 64) + Int(static_cast<unsigned long>(mag));
        return negative ? Int(-out) : out;
    }
    return dot(a, b);
}

// Extreme rays of the pointed cone {u : rows . u >= 0} of full rank in dim s.
std::vector<IVec> pointed_dd(const std::vector<IVec>& rows, size_t s) {
    if (s == 0) return {};
    const size_t m = rows.size();

    std::vector<FastVec> row_fast(m);
    for (size_t i = 0; i < m; ++i) row_fast[i] = make_fast(rows[i]);

    // Greedy lex-first nonsingular subsystem.
    std::vector<size_t> init;
    {
        QMatrix acc;
        for (size_t i = 0; i < m && init.size() < s; ++i) {
            acc.push_back(to_rationals(rows[i]));
            if (rank_of(acc) == acc.size())
                init.push_back(i);
            else
                acc.pop_back();
        }
        if (init.size() != s) throw std::logic_error("pointed_dd: system is not full rank");
    }

    struct Ray {
        IVec v;
        FastVec fast;
        Bitset active;
    };
    std::vector<Ray> rays;

    {
        QMatrix msub;
        for (size_t i : init) msub.push_back(to_rationals(rows[i]));
        auto inv = inverse(std::move(msub));
        QMatrix cols = *inv;
        for (size_t j = 0; j < s; ++j) {
            QVec col(s);
            for (size_t i = 0; i < s; ++i) col[i] = cols[i][j];
            Ray r;
            r.v = scale_to_integers(col);
            r.fast = make_fast(r.v);
            r.active = Bitset(m);
            for (size_t t = 0; t < s; ++t)
                if (t != j) r.active.set(init[t]);
            rays.push_back(std::move(r));
        }
    }

    std::vector<bool> processed(m, false);
    for (size_t i : init) processed[i] = true;
    std::vector<size_t> processed_list(init);

    for (size_t t = 0; t < m; ++t) {
        if (processed[t]) continue;
        const IVec& a = rows[t];
        std::vector<Int> vals(rays.size());
        std::vector<size_t> pos, neg;
        for (size_t i = 0; i < rays.size(); ++i) {
            vals[i] = dot_fast(a, row_fast[t], rays[i].v, rays[i].fast);
            int sg = sgn(vals[i]);
            if (sg > 0)
                pos.push_back(i);
            else if (sg < 0)
                neg.push_back(i);
            else
                rays[i].active.set(t);
        }
        if (!neg.empty()) {
            std::vector<Ray> created;
            Bitset common(m);
            // Scan potential blockers in decreasing active-set size: supersets
            // of the pair's common set show up early, and the scan can stop
            // once the remaining sets are too small to contain it.
            std::vector<size_t> pop(rays.size());
            std::vector<size_t> order(rays.size());
            for (size_t r = 0; r < rays.size(); ++r) {
                pop[r] = rays[r].active.count();
                order[r] = r;
            }
            std::sort(order.begin(), order.end(),
                      [&](size_t a, size_t b) { return pop[a] > pop[b]; });
            for (size_t p : pos) {
                for (size_t q : neg) {
                    if (std::min(pop[p], pop[q]) + 2 < s) continue;
                    size_t card = Bitset::and_count(rays[p].active, rays[q].active, common);
                    if (card + 2 < s) continue;
                    bool adjacent = true;
                    for (size_t r : order) {
                        if (pop[r] < card) break;
                        if (r == p || r == q) continue;
                        if (common.subset_of(rays[r].active)) {
                            adjacent = false;
                            break;
                        }
                    }
                    if (!adjacent) continue;
                    Ray nr;
                    nr.v.assign(s, 0);
                    for (size_t j = 0; j < s; ++j)
                        nr.v[j] = vals[p] * rays[q].v[j] - vals[q] * rays[p].v[j];
                    make_primitive(nr.v);
                    nr.fast = make_fast(nr.v);
                    nr.active = Bitset(m);
                    for (size_t i : processed_list)
                        if (dot_fast(rows[i], row_fast[i], nr.v, nr.fast) == 0) nr.active.set(i);
                    nr.active.set(t);
                    created.push_back(std::move(nr));
                }
            }
            std::vector<Ray> kept;
            kept.reserve(rays.size());
            for (size_t i = 0; i < rays.size(); ++i)
                if (vals[i] >= 0) kept.push_back(std::move(rays[i]));
            for (Ray& r : created) kept.push_back(std::move(r));
            rays = std::move(kept);
        }
        processed[t] = true;
        processed_list.push_back(t);
    }

    std::vector<IVec> out;
    out.reserve(rays.size());
    for (Ray& r : rays) out.push_back(std::move(r.v));
    return out;
}

std::vector<IVec> clean_rows(const std::vector<IVec>& rows, int dim, const char* what,
                             bool keep_order = false) {
    std::vector<IVec> out;
    for (IVec v : rows) {
        if (static_cast<int>(v.size()) != dim)
            throw std::invalid_argument(std::string(what) + ": vector of wrong dimension");
        if (!make_primitive(v)) continue;  // trivial row
        out.push_back(std::move(v));
    }
    if (keep_order) {
        std::set<IVec> seen;
        std::vector<IVec> dedup;
        for (IVec& v : out)
            if (seen.insert(v).second) dedup.push_back(std::move(v));
        return dedup;
    }
    return sorted_unique(std::move(out));
}

}  // namespace

VRep dual_description(const std::vector<IVec>& ineqs_in, const std::vector<IVec>& eqs_in, int dim,
                      bool keep_order) {
    std::vector<IVec> ineqs = clean_rows(ineqs_in, dim, "dual_description", keep_order);
    std::vector<IVec> eqs = clean_rows(eqs_in, dim, "dual_description");

    std::vector<IVec> all(ineqs);
    all.insert(all.end(), eqs.begin(), eqs.end());
    std::vector<IVec> lines = nullspace(all, dim);

    std::vector<IVec> span_constraints(eqs);
    span_constraints.insert(span_constraints.end(), lines.begin(), lines.end());
    std::vector<IVec> basis = nullspace(span_constraints, dim);
    const size_t s = basis.size();

    VRep out;
    out.lines = lines;
    for (IVec& l : out.lines) canonical_sign(l);
    std::sort(out.lines.begin(), out.lines.end());
    if (s == 0) return out;

    std::vector<IVec> reduced;
    for (const IVec& a : ineqs) {
        IVec row(s);
        bool zero = true;
        for (size_t j = 0; j < s; ++j) {
            row[j] = dot(a, basis[j]);
            if (row[j] != 0) zero = false;
        }
        if (!zero) {
            make_primitive(row);
            reduced.push_back(std::move(row));
        }
    }
    if (keep_order) {
        std::set<IVec> seen;
        std::vector<IVec> dedup;
        for (IVec& v : reduced)
            if (seen.insert(v).second) dedup.push_back(std::move(v));
        reduced = std::move(dedup);
    } else {
        reduced = sorted_unique(std::move(reduced));
    }

    SpanReducer mod_lines(lines, dim);
    for (const IVec& u : pointed_dd(reduced, s)) {
        QVec x(dim, 0);
        for (size_t j = 0; j < s; ++j)
            for (int c = 0; c < dim; ++c) x[c] += Rat(u[j]) * Rat(basis[j][c]);
        IVec ray = scale_to_integers(x);
        if (!lines.empty()) ray = mod_lines.reduce(ray);
        if (!ray.empty()) out.rays.push_back(std::move(ray));
    }
    out.rays = sorted_unique(std::move(out.rays));
    return out;
}

Cone Cone::from_inequalities(int dim, std::vector<IVec> ineqs, std::vector<IVec> eqs) {
    Cone c(dim);
    HRep h;
    h.ineqs = clean_rows(ineqs, dim, "from_inequalities");
    for (const IVec& v : ineqs)
        if (std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; }))
            throw std::invalid_argument("from_inequalities: zero vector");
    h.eqs = clean_rows(eqs, dim, "from_inequalities");
    c.h_ = std::move(h);
    return c;
}

Cone Cone::from_generators(int dim, std::vector<IVec> rays, std::vector<IVec> lines) {
    Cone c(dim);
    VRep v;
    for (IVec& r : rays) r = primitive_or_throw(std::move(r), "from_generators");
    for (IVec& l : lines) l = primitive_or_throw(std::move(l), "from_generators");
    for (const IVec& r : rays)
        if (static_cast<int>(r.size()) != dim)
            throw std::invalid_argument("from_generators: wrong dimension");
    for (const IVec& l : lines)
        if (static_cast<int>(l.size()) != dim)
            throw std::invalid_argument("from_generators: wrong dimension");
    v.rays = sorted_unique(std::move(rays));
    v.lines = sorted_unique(std::move(lines));
    c.v_ = std::move(v);
    return c;
}

Cone Cone::with_both(int dim, HRep h, VRep v) {
    Cone c(dim);
    c.h_ = std::move(h);
    c.v_ = std::move(v);
    return c;
}

const HRep& Cone::hrep() const {
    if (!h_) throw std::logic_error("cone has no H-representation (dd_convert first)");
    return *h_;
}

const VRep& Cone::vrep() const {
    if (!v_) throw std::logic_error("cone has no V-representation (dd_convert first)");
    return *v_;
}

namespace {

VRep compute_vrep(const Cone& c) {
    if (c.has_v() && !c.has_h()) {
        // Canonical extreme form: polar twice.
        const VRep& v = c.vrep();
        VRep polar = dual_description(v.rays, v.lines, c.dim());
        return dual_description(polar.rays, polar.lines, c.dim());
    }
    const HRep& h = c.hrep();
    return dual_description(h.ineqs, h.eqs, c.dim());
}

FacetList facets_from(const VRep& v, const std::vector<IVec>& candidates_or_empty, int dim) {
    FacetList out;
    std::vector<IVec> gens(v.rays);
    gens.insert(gens.end(), v.lines.begin(), v.lines.end());
    out.equations = nullspace(gens, dim);
    for (IVec& e : out.equations) canonical_sign(e);
    std::sort(out.equations.begin(), out.equations.end());

    std::vector<IVec> candidates = candidates_or_empty;
    if (candidates.empty()) {
        VRep polar = dual_description(v.rays, v.lines, dim);
        candidates = polar.rays;
    }

    const size_t cone_dim = dim - out.equations.size();
    SpanReducer mod_eqs(out.equations, dim);
    std::set<IVec> seen;
    for (const IVec& cand : candidates) {
        IVec a = out.equations.empty() ? cand : mod_eqs.reduce(cand);
        if (a.empty()) continue;
        if (!seen.insert(a).second) continue;
        bool valid = true;
        std::vector<IVec> active(v.lines);
        for (const IVec& r : v.rays) {
            Int d = dot(a, r);
            if (d < 0) {
                valid = false;
                break;
            }
            if (d == 0) active.push_back(r);
        }
        if (!valid) continue;
        for (const IVec& l : v.lines)
            if (dot(a, l) != 0) {
                valid = false;
                break;
            }
        if (!valid) continue;
        if (rank_of_ivecs(active) + 1 == cone_dim) out.facets.push_back(std::move(a));
    }
    out.facets = sorted_unique(std::move(out.facets));
    return out;
}

}  // namespace

Cone dd_convert(const Cone& c) {
    Cone out(c.dim());
    VRep v = compute_vrep(c);
    FacetList f = facets_from(v, c.has_h() ? c.hrep().ineqs : std::vector<IVec>{}, c.dim());
    out.v_ = std::move(v);
    out.h_ = HRep{std::move(f.facets), std::move(f.equations)};
    return out;
}

FacetList facets(const Cone& c) {
    if (c.has_v() && c.has_h()) {
        FacetList f = facets_from(c.vrep(), c.hrep().ineqs, c.dim());
        return f;
    }
    VRep v = compute_vrep(c);
    return facets_from(v, c.has_h() ? c.hrep().ineqs : std::vector<IVec>{}, c.dim());
}

Cone minkowski_sum(const Cone& p, const Cone& q) {
    if (p.dim() != q.dim()) throw std::invalid_argument("minkowski_sum: dimension mismatch");
    VRep pv = p.has_v() ? p.vrep() : compute_vrep(p);
    VRep qv = q.has_v() ? q.vrep() : compute_vrep(q);
    std::vector<IVec> rays(pv.rays);
    rays.insert(rays.end(), qv.rays.begin(), qv.rays.end());
    std::vector<IVec> lines(pv.lines);
    lines.insert(lines.end(), qv.lines.begin(), qv.lines.end());
    Cone out(p.dim());
    out.v_ = VRep{sorted_unique(std::move(rays)), sorted_unique(std::move(lines))};
    return out;
}

Cone intersect(const Cone& p, const Cone& q) {
    if (p.dim() != q.dim()) throw std::invalid_argument("intersect: dimension mismatch");
    HRep ph = p.has_h() ? p.hrep() : dd_convert(p).hrep();
    HRep qh = q.has_h() ? q.hrep() : dd_convert(q).hrep();
    std::vector<IVec> ineqs(ph.ineqs);
    ineqs.insert(ineqs.end(), qh.ineqs.begin(), qh.ineqs.end());
    std::vector<IVec> eqs(ph.eqs);
    eqs.insert(eqs.end(), qh.eqs.begin(), qh.eqs.end());
    Cone out(p.dim());
    out.h_ = HRep{sorted_unique(std::move(ineqs)), sorted_unique(std::move(eqs))};
    return out;
}

Cone linear_image(const Cone& c, const std::vector<IVec>& matrix_rows) {
    for (const IVec& row : matrix_rows)
        if (static_cast<int>(row.size()) != c.dim())
            throw std::invalid_argument("linear_image: matrix/cone dimension mismatch");
    VRep v = c.has_v() ? c.vrep() : compute_vrep(c);
    auto apply = [&](const IVec& x) {
        IVec y(matrix_rows.size());
        for (size_t i = 0; i < matrix_rows.size(); ++i) y[i] = dot(matrix_rows[i], x);
        return y;
    };
    std::vector<IVec> rays, lines;
    for (const IVec& r : v.rays) {
        IVec y = apply(r);
        if (make_primitive(y)) rays.push_back(std::move(y));
    }
    for (const IVec& l : v.lines) {
        IVec y = apply(l);
        if (make_primitive(y)) lines.push_back(std::move(y));
    }
    Cone out(static_cast<int>(matrix_rows.size()));
    out.v_ = VRep{sorted_unique(std::move(rays)), sorted_unique(std::move(lines))};
    return out;
}

bool contains(const Cone& c, const QVec& v) {
    if (static_cast<int>(v.size()) != c.dim())
        throw std::invalid_argument("contains: wrong dimension");
    HRep h = c.has_h() ? c.hrep() : dd_convert(c).hrep();
    for (const IVec& a : h.ineqs)
        if (dot(a, v) < 0) return false;
    for (const IVec& e : h.eqs)
        if (dot(e, v) != 0) return false;
    return true;
}

namespace {

IVec negated(const IVec& v) {
    IVec m(v);
    for (Int& x : m) x = -x;
    return m;
}

std::optional<SubsetWitness> violation(const HRep& h1, const VRep& v2) {
    for (const IVec& e : h1.eqs) {
        for (const IVec& r : v2.rays) {
            Int d = dot(e, r);
            if (d != 0) return SubsetWitness{d < 0 ? e : negated(e), r};
        }
        for (const IVec& l : v2.lines) {
            Int d = dot(e, l);
            if (d != 0) return SubsetWitness{d < 0 ? e : negated(e), l};
        }
    }
    for (const IVec& a : h1.ineqs) {
        for (const IVec& r : v2.rays)
            if (dot(a, r) < 0) return SubsetWitness{a, r};
        for (const IVec& l : v2.lines) {
            Int d = dot(a, l);
            if (d == 0) continue;
            IVec ray(l);
            if (d > 0)
                for (Int& x : ray) x = -x;
            return SubsetWitness{a, ray};
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<SubsetWitness> subset_witness(const Cone& c1, const Cone& c2) {
    if (c1.dim() != c2.dim()) throw std::invalid_argument("subset_witness: dimension mismatch");
    Cone a = (c1.has_h() && c1.has_v()) ? c1 : dd_convert(c1);
    VRep v2 = c2.has_v() ? c2.vrep() : compute_vrep(c2);
    FacetList f = facets(a);
    return violation(HRep{f.facets, f.equations}, v2);
}

bool cone_equal(const Cone& a, const Cone& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("cone_equal: dimension mismatch");
    return !subset_witness(a, b) && !subset_witness(b, a);
}

bool in_conical_span(const IVec& target, const std::vector<IVec>& gens,
                     const std::vector<IVec>& frees) {
    const size_t d = target.size();
    // Columns: t_i >= 0 per generator, split s_j^+ - s_j^- per free vector,
    // then artificials; Phase-I simplex with Bland's rule.
    size_t nt = gens.size(), nf = frees.size();
    size_t nvars = nt + 2 * nf;
    QMatrix t(d, QVec(nvars + d + 1, 0));
    for (size_t i = 0; i < d; ++i) {
        for (size_t j = 0; j < nt; ++j) t[i][j] = Rat(gens[j][i]);
        for (size_t j = 0; j < nf; ++j) {
            t[i][nt + 2 * j] = Rat(frees[j][i]);
            t[i][nt + 2 * j + 1] = -Rat(frees[j][i]);
        }
        t[i][nvars + d] = Rat(target[i]);
    }
    for (size_t i = 0; i < d; ++i) {
        if (t[i][nvars + d] < 0)
            for (Rat& x : t[i]) x = -x;
        t[i][nvars + i] = 1;
    }
    std::vector<size_t> basis(d);
    for (size_t i = 0; i < d; ++i) basis[i] = nvars + i;
    // Objective row: minimize sum of artificials, expressed over the basis.
    QVec obj(nvars + d + 1, 0);
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j <= nvars + d; ++j) obj[j] += t[i][j];
    for (size_t j = nvars; j < nvars + d; ++j) obj[j] -= 1;

    while (true) {
        size_t enter = nvars + d;
        for (size_t j = 0; j < nvars + d; ++j)
            if (obj[j] > 0) {
                enter = j;
                break;
            }
        if (enter == nvars + d) break;
        size_t leave = d;
        Rat best;
        for (size_t i = 0; i < d; ++i) {
            if (t[i][enter] <= 0) continue;
            Rat ratio = t[i][nvars + d] / t[i][enter];
            if (leave == d || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                best = ratio;
                leave = i;
            }
        }
        if (leave == d) return false;  // unbounded phase-I cannot happen; defensive
        Rat piv = t[leave][enter];
        for (Rat& x : t[leave]) x /= piv;
        for (size_t i = 0; i < d; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            Rat f = t[i][enter];
            for (size_t j = 0; j <= nvars + d; ++j) t[i][j] -= f * t[leave][j];
        }
        Rat f = obj[enter];
        if (f != 0)
            for (size_t j = 0; j <= nvars + d; ++j) obj[j] -= f * t[leave][j];
        basis[leave] = enter;
    }
    return obj[nvars + d] == 0;
}

namespace {

std::string rows_block(const std::vector<IVec>& first, const std::vector<IVec>& second,
                       size_t dim, const char* header) {
    std::ostringstream os;
    os << header << "\n";
    if (!first.empty()) {
        os << "linearity " << first.size();
        for (size_t i = 1; i <= first.size(); ++i) os << ' ' << i;
        os << "\n";
    }
    os << "begin\n " << (first.size() + second.size()) << ' ' << (dim + 1) << " rational\n";
    for (const IVec& v : first) {
        os << " 0";
        for (const Int& x : v) os << ' ' << x.get_str();
        os << "\n";
    }
    for (const IVec& v : second) {
        os << " 0";
        for (const Int& x : v) os << ' ' << x.get_str();
        os << "\n";
    }
    os << "end\n";
    return os.str();
}

struct ParsedBlock {
    std::vector<IVec> linear;
    std::vector<IVec> other;
    int dim = 0;
};

ParsedBlock parse_block(std::istream& in, const std::string& expected_header) {
    ParsedBlock out;
    std::string line;
    bool header_seen = false;
    std::set<size_t> linearity;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok[0] == '*') continue;
        if (tok == expected_header) {
            header_seen = true;
            continue;
        }
        if (tok == "linearity") {
            size_t k;
            ls >> k;
            for (size_t i = 0; i < k; ++i) {
                size_t idx;
                ls >> idx;
                linearity.insert(idx);
            }
            continue;
        }
        if (tok == "begin") break;
    }
    if (!header_seen) throw std::invalid_argument("missing header " + expected_header);
    size_t rows = 0, cols = 0;
    std::string numtype;
    in >> rows >> cols >> numtype;
    out.dim = static_cast<int>(cols) - 1;
    for (size_t r = 1; r <= rows; ++r) {
        std::string bstr;
        in >> bstr;
        if (parse_rat(bstr) != 0)
            throw std::invalid_argument("only homogeneous data supported (first column 0)");
        QVec q(out.dim);
        for (int c = 0; c < out.dim; ++c) {
            std::string cell;
            in >> cell;
            q[c] = parse_rat(cell);
        }
        IVec v = scale_to_integers(q);
        if (v.empty()) v.assign(out.dim, 0);
        bool zero = std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
        if (zero) continue;
        if (linearity.count(r))
            out.linear.push_back(std::move(v));
        else
            out.other.push_back(std::move(v));
    }
    return out;
}

}  // namespace

std::string write_ine(const Cone& c) {
    HRep h = c.has_h() ? c.hrep() : dd_convert(c).hrep();
    return rows_block(h.eqs, h.ineqs, c.dim(), "H-representation");
}

std::string write_ext(const Cone& c) {
    VRep v = c.has_v() ? c.vrep() : compute_vrep(c);
    return rows_block(v.lines, v.rays, c.dim(), "V-representation");
}

Cone read_ine(std::istream& in) {
    ParsedBlock b = parse_block(in, "H-representation");
    return Cone::from_inequalities(b.dim, std::move(b.other), std::move(b.linear));
}

Cone read_ext(std::istream& in) {
    ParsedBlock b = parse_block(in, "V-representation");
    return Cone::from_generators(b.dim, std::move(b.other), std::move(b.linear));
}

namespace {

nlohmann::ordered_json ivecs_to_json(const std::vector<IVec>& vs) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const IVec& v : vs) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (const Int& x : v) row.push_back(x.get_str());
        arr.push_back(std::move(row));
    }
    return arr;
}

std::vector<IVec> ivecs_from_json(const nlohmann::json& arr) {
    std::vector<IVec> out;
    for (const auto& row : arr) {
        IVec v;
        for (const auto& cell : row) {
            if (cell.is_string())
                v.emplace_back(cell.get<std::string>());
            else
                v.emplace_back(static_cast<long>(cell.get<long long>()));
        }
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace

std::string cone_to_json(const Cone& c) {
    nlohmann::ordered_json j;
    j["dim"] = c.dim();
    if (c.has_h()) {
        j["hrep"]["inequalities"] = ivecs_to_json(c.hrep().ineqs);
        j["hrep"]["equations"] = ivecs_to_json(c.hrep().eqs);
    }
    if (c.has_v()) {
        j["vrep"]["rays"] = ivecs_to_json(c.vrep().rays);
        j["vrep"]["lines"] = ivecs_to_json(c.vrep().lines);
    }
    return j.dump(2);
}

Cone cone_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    int dim = j.at("dim").get<int>();
    if (j.contains("hrep"))
        return Cone::from_inequalities(dim, ivecs_from_json(j["hrep"]["inequalities"]),
                                       ivecs_from_json(j["hrep"]["equations"]));
    if (j.contains("vrep"))
        return Cone::from_generators(dim, ivecs_from_json(j["vrep"]["rays"]),
                                     ivecs_from_json(j["vrep"]["lines"]));
    throw std::invalid_argument("cone JSON lacks both representations");
}

}  // namespace limitcones
