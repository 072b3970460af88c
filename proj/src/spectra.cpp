#include "limitcones/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace limitcones {

namespace {

void require_symmetric(const RatMatrix& m) {
    for (size_t i = 0; i < m.size(); ++i) {
        if (m[i].size() != m.size()) throw std::invalid_argument("matrix is not square");
        for (size_t j = 0; j < i; ++j)
            if (m[i][j] != m[j][i]) throw std::invalid_argument("matrix is not symmetric");
    }
}

}  // namespace

PsdResult is_psd_exact(const RatMatrix& m) {
    require_symmetric(m);
    const size_t n = m.size();
    RatMatrix a = m;
    // Columns of v express the current coordinates in the original basis, so
    // a[i][j] == v_i^T m v_j throughout the elimination.
    QMatrix v = q_identity(n);
    std::vector<bool> done(n, false);
    PsdResult res;
    PsdCertificate cert;

    for (size_t step = 0; step < n; ++step) {
        size_t p = n;
        for (size_t i = 0; i < n; ++i)
            if (!done[i] && a[i][i] != 0) {
                p = i;
                break;
            }
        if (p == n) break;
        if (a[p][p] < 0) {
            QVec w(n, 0);
            for (size_t r = 0; r < n; ++r) w[r] = v[r][p];
            res.psd = false;
            res.witness = std::move(w);
            return res;
        }
        Rat d = a[p][p];
        QVec col(n, 0);
        col[p] = 1;
        for (size_t j = 0; j < n; ++j) {
            if (done[j] || j == p) continue;
            col[j] = a[j][p] / d;
        }
        cert.perm.push_back(p);
        cert.diag.push_back(d);
        cert.lower.push_back(col);
        for (size_t j = 0; j < n; ++j) {
            if (done[j] || j == p || col[j] == 0) continue;
            for (size_t r = 0; r < n; ++r) v[r][j] -= col[j] * v[r][p];
        }
        for (size_t j = 0; j < n; ++j) {
            if (done[j] || j == p) continue;
            for (size_t k = 0; k < n; ++k) {
                if (done[k] || k == p) continue;
                a[j][k] -= col[j] * d * col[k];
            }
        }
        done[p] = true;
    }

    for (size_t i = 0; i < n; ++i) {
        if (done[i]) continue;
        for (size_t j = 0; j < n; ++j) {
            if (done[j] || a[i][j] == 0) continue;
            // Zero diagonal with a nonzero off-diagonal entry: indefinite.
            QVec w(n, 0);
            int s = sgn(a[i][j]) > 0 ? -1 : 1;
            for (size_t r = 0; r < n; ++r) w[r] = Rat(s) * v[r][i] + v[r][j];
            res.psd = false;
            res.witness = std::move(w);
            return res;
        }
    }
    res.psd = true;
    res.cert = std::move(cert);
    return res;
}

bool is_pd_exact(const RatMatrix& m) {
    PsdResult r = is_psd_exact(m);
    if (!r.psd) return false;
    if (r.cert->perm.size() != m.size()) return false;
    for (const Rat& d : r.cert->diag)
        if (d <= 0) return false;
    return true;
}

RatMatrix hankel_h(const QVec& y) {
    const size_t n = y.size();
    const size_t sz = (n + 2) / 2;  // ceil((n+1)/2)
    RatMatrix h(sz, QVec(sz));
    for (size_t i = 0; i < sz; ++i)
        for (size_t j = 0; j < sz; ++j) h[i][j] = (i + j == 0) ? Rat(1) : y[i + j - 1];
    return h;
}

RatMatrix hankel_h_prime(const QVec& y) {
    const size_t n = y.size();
    const size_t sz = (n + 1) / 2;  // ceil(n/2)
    RatMatrix h(sz, QVec(sz));
    for (size_t i = 0; i < sz; ++i)
        for (size_t j = 0; j < sz; ++j) h[i][j] = y[i + j + 1 - 1];
    return h;
}

bool hankel_membership(const QVec& y, HankelVariant variant) {
    if (variant == HankelVariant::Full) return is_psd_exact(hankel_h(y)).psd;
    return is_psd_exact(hankel_h(y)).psd && is_psd_exact(hankel_h_prime(y)).psd;
}

QVec moment_vector(const QVec& v, int two_d) {
    if (v.empty()) throw std::invalid_argument("moment_vector: empty point");
    QVec y(two_d);
    for (int r = 1; r <= two_d; ++r) y[r - 1] = power_mean(v, r);
    return y;
}

QVec even_moment_vector(const QVec& v, int two_d) {
    if (two_d % 2 != 0) throw std::invalid_argument("even_moment_vector: odd degree");
    QVec y(two_d / 2);
    for (int r = 1; 2 * r <= two_d; ++r) y[r - 1] = power_mean(v, 2 * r);
    return y;
}

QVec phi_image(const QVec& y, const std::vector<Partition>& partitions, bool even_mode) {
    QVec out;
    out.reserve(partitions.size());
    for (const Partition& p : partitions) {
        Partition q = even_mode ? halve(p) : p;
        Rat prod = 1;
        for (int part : q.parts()) {
            if (part < 1 || part > static_cast<int>(y.size()))
                throw std::invalid_argument("phi_image: part out of range");
            prod *= y[part - 1];
        }
        out.push_back(prod);
    }
    return out;
}

RatMatrix substitute(const LabeledMatrix& pencil, const std::vector<Partition>& coords,
                     const QVec& z) {
    if (coords.size() != z.size()) throw std::invalid_argument("substitute: coordinate mismatch");
    std::map<Partition, Rat> val;
    for (size_t i = 0; i < coords.size(); ++i) val[coords[i]] = z[i];
    const size_t n = pencil.size();
    RatMatrix m(n, QVec(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (const auto& [label, coeff] : pencil.entries[i][j]) {
                auto it = val.find(label);
                if (it == val.end())
                    throw std::invalid_argument("substitute: no value for " + label.str());
                m[i][j] += Rat(coeff) * it->second;
            }
    return m;
}

RatMatrix substitute(const SymbolicGram& g, const CoeffMap& z) {
    const size_t n = g.size();
    RatMatrix m(n, QVec(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (g.entries[i][j]) {
                auto it = z.find(*g.entries[i][j]);
                if (it != z.end()) m[i][j] = it->second;
            }
    return m;
}

bool extreme_ray_test(const LabeledMatrix& pencil, const std::vector<Partition>& coords,
                      const QVec& z) {
    RatMatrix lz = substitute(pencil, coords, z);
    PsdResult psd = is_psd_exact(lz);
    if (!psd.psd) throw std::invalid_argument("extreme_ray_test: point is outside the cone");
    const size_t n = pencil.size();
    const size_t s = coords.size();

    std::vector<IVec> lz_rows;
    for (const QVec& row : lz)
        lz_rows.push_back([&] {
            IVec r = scale_to_integers(row);
            if (r.empty()) r.assign(n, 0);
            return r;
        }());
    std::vector<IVec> kernel = nullspace(lz_rows, n);

    // Rows of the system L(w) k = 0 over the coordinates of w.
    std::vector<IVec> sys;
    for (const IVec& k : kernel) {
        for (size_t r = 0; r < n; ++r) {
            QVec row(s, 0);
            for (size_t c = 0; c < n; ++c)
                for (const auto& [label, coeff] : pencil.entries[r][c]) {
                    auto pos = std::find(coords.begin(), coords.end(), label);
                    if (pos == coords.end())
                        throw std::invalid_argument("extreme_ray_test: unindexed label");
                    row[pos - coords.begin()] += Rat(coeff) * Rat(k[c]);
                }
            IVec irow = scale_to_integers(row);
            if (!irow.empty()) sys.push_back(std::move(irow));
        }
    }
    return nullspace(sys, s).size() == 1;
}

SdpInstance assemble_sos_sdp(const LimitForm& f, const SymbolicGram& g) {
    if (f.degree != g.degree())
        throw std::invalid_argument("assemble_sos_sdp: degree mismatch");
    SdpInstance inst;
    inst.gram_size = g.size();
    inst.degree = f.degree;
    std::map<Partition, std::vector<std::pair<int, int>>> pat;
    for (const Partition& p : enum_partitions(f.degree)) pat[p] = {};
    for (size_t i = 0; i < g.size(); ++i)
        for (size_t j = 0; j < g.size(); ++j) {
            if (g.entries[i][j])
                pat[*g.entries[i][j]].push_back({static_cast<int>(i), static_cast<int>(j)});
            else
                inst.zero_pattern.push_back({static_cast<int>(i), static_cast<int>(j)});
        }
    for (auto& [label, positions] : pat) inst.patterns.push_back({label, std::move(positions)});
    for (const Partition& p : enum_partitions(f.degree)) inst.target[p] = f.coeff(p);
    return inst;
}

std::string export_sdpa(const SdpInstance& inst) {
    std::ostringstream os;
    size_t m = inst.patterns.size() + (inst.zero_pattern.empty() ? 0 : 1);
    os << m << " = mDim\n1 = nBlock\n" << inst.gram_size << " = blockStruct\n";
    os.setf(std::ios::fmtflags(0), std::ios::floatfield);
    os.precision(17);
    for (size_t k = 0; k < inst.patterns.size(); ++k) {
        if (k) os << ' ';
        os << to_double(inst.target.at(inst.patterns[k].first));
    }
    if (!inst.zero_pattern.empty()) os << " 0";
    os << "\n";
    for (size_t k = 0; k < inst.patterns.size(); ++k) {
        for (const auto& [i, j] : inst.patterns[k].second)
            if (i <= j) os << (k + 1) << " 1 " << (i + 1) << ' ' << (j + 1) << " 1\n";
    }
    if (!inst.zero_pattern.empty()) {
        for (const auto& [i, j] : inst.zero_pattern)
            if (i <= j)
                os << (inst.patterns.size() + 1) << " 1 " << (i + 1) << ' ' << (j + 1) << " 1\n";
    }
    return os.str();
}

std::vector<double> symmetric_eigenvalues_impl(std::vector<std::vector<double>>& a,
                                               std::vector<std::vector<double>>* vecs) {
    const size_t n = a.size();
    std::vector<std::vector<double>> v(n, std::vector<double>(n, 0.0));
    for (size_t i = 0; i < n; ++i) v[i][i] = 1.0;
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
        if (off < 1e-26) break;
        for (size_t p = 0; p < n; ++p) {
            for (size_t q = p + 1; q < n; ++q) {
                if (std::fabs(a[p][q]) < 1e-300) continue;
                double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (size_t k = 0; k < n; ++k) {
                    double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (size_t k = 0; k < n; ++k) {
                    double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for (size_t k = 0; k < n; ++k) {
                    double vkp = v[k][p], vkq = v[k][q];
                    v[k][p] = c * vkp - s * vkq;
                    v[k][q] = s * vkp + c * vkq;
                }
            }
        }
    }
    std::vector<double> vals(n);
    for (size_t i = 0; i < n; ++i) vals[i] = a[i][i];
    if (vecs) *vecs = std::move(v);
    return vals;
}

std::vector<double> symmetric_eigenvalues(std::vector<std::vector<double>> a) {
    return symmetric_eigenvalues_impl(a, nullptr);
}

namespace {

// Projection onto {M : M >= floor * I}; floor = 0 is the psd cone.
void psd_project(std::vector<std::vector<double>>& x, double floor = 0.0) {
    const size_t n = x.size();
    std::vector<std::vector<double>> a = x;
    std::vector<std::vector<double>> v;
    std::vector<double> vals = symmetric_eigenvalues_impl(a, &v);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            double s = 0;
            for (size_t k = 0; k < n; ++k) {
                double lam = std::max(vals[k], floor);
                s += v[i][k] * lam * v[j][k];
            }
            x[i][j] = s;
        }
}

void affine_project(std::vector<std::vector<double>>& x, const SdpInstance& inst) {
    for (const auto& [label, positions] : inst.patterns) {
        if (positions.empty()) continue;
        double sum = 0;
        for (const auto& [i, j] : positions) sum += x[i][j];
        double shift = (to_double(inst.target.at(label)) - sum) / positions.size();
        for (const auto& [i, j] : positions) x[i][j] += shift;
    }
    if (!inst.zero_pattern.empty()) {
        double sum = 0;
        for (const auto& [i, j] : inst.zero_pattern) sum += x[i][j];
        double shift = -sum / inst.zero_pattern.size();
        for (const auto& [i, j] : inst.zero_pattern) x[i][j] += shift;
    }
}

double frob_dist(const std::vector<std::vector<double>>& a,
                 const std::vector<std::vector<double>>& b) {
    double s = 0;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a.size(); ++j) s += (a[i][j] - b[i][j]) * (a[i][j] - b[i][j]);
    return std::sqrt(s);
}

}  // namespace

namespace {

// Rounding ladder: small denominators first so exact solutions with simple
// entries snap even from coarse iterates.
std::vector<Int> denominator_ladder(const Int& den_bound) {
    std::vector<Int> ladder;
    for (Int q(1); q < den_bound; q *= 8) ladder.push_back(q);
    ladder.push_back(den_bound);
    return ladder;
}

std::optional<RatMatrix> try_round(const std::vector<std::vector<double>>& y,
                                   const SdpInstance& inst, const Int& den_bound) {
    const size_t n = inst.gram_size;
    for (const Int& bound : denominator_ladder(den_bound)) {
        RatMatrix a(n, QVec(n, 0));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i; j < n; ++j) {
                Rat r = round_to_rational((y[i][j] + y[j][i]) / 2, bound);
                a[i][j] = r;
                a[j][i] = r;
            }
        // Structural zeros: sign-conjugation averaging keeps psd and targets.
        for (const auto& [i, j] : inst.zero_pattern) a[i][j] = 0;
        bool shifted_ok = true;
        for (const auto& [label, positions] : inst.patterns) {
            if (positions.empty()) {
                if (inst.target.at(label) != 0) shifted_ok = false;
                continue;
            }
            Rat sum = 0;
            for (const auto& [i, j] : positions) sum += a[i][j];
            Rat shift = (inst.target.at(label) - sum) / Rat(static_cast<int>(positions.size()));
            if (shift != 0)
                for (const auto& [i, j] : positions) a[i][j] += shift;
        }
        if (!shifted_ok) return std::nullopt;
        if (is_psd_exact(a).psd) return a;
    }
    return std::nullopt;
}

}  // namespace

SolveResult solve_feasibility(const SdpInstance& inst, double tol, int max_iter) {
    SolveResult res;
    for (const auto& [label, positions] : inst.patterns)
        if (positions.empty() && inst.target.at(label) != 0) {
            res.status = FeasStatus::LikelyInfeasible;
            res.gap = std::fabs(to_double(inst.target.at(label)));
            return res;
        }
    const size_t n = inst.gram_size;
    std::vector<std::vector<double>> x(n, std::vector<double>(n, 0.0));
    affine_project(x, inst);
    double prev_gap = -1;
    const int checkpoint = 2500;
    for (int it = 1; it <= max_iter; ++it) {
        std::vector<std::vector<double>> y = x;
        psd_project(y);
        std::vector<std::vector<double>> x2 = y;
        affine_project(x2, inst);
        double gap = frob_dist(y, x2);
        res.iterations = it;
        res.gap = gap;
        if (gap < tol) {
            res.status = FeasStatus::Feasible;
            res.matrix = std::move(y);
            return res;
        }
        if (it == 250 || it % checkpoint == 0) {
            // Exact feasibility snaps long before the float gap does.
            if (try_round(y, inst, Int(32768))) {
                res.status = FeasStatus::Feasible;
                res.matrix = std::move(y);
                return res;
            }
            if (it % checkpoint == 0) {
                if (prev_gap >= 0 && gap > 10 * tol &&
                    std::fabs(gap - prev_gap) < 0.02 * gap) {
                    res.status = FeasStatus::LikelyInfeasible;
                    res.matrix = std::move(y);
                    return res;
                }
                prev_gap = gap;
            }
        }
        x = std::move(x2);
    }
    res.status = FeasStatus::Undecided;
    res.matrix = std::move(x);
    return res;
}

bool verify_primal(const RatMatrix& a, const SymbolicGram& g, const LimitForm& f) {
    if (a.size() != g.size()) return false;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != a.size()) return false;
        for (size_t j = 0; j < i; ++j)
            if (a[i][j] != a[j][i]) return false;
    }
    SdpInstance inst = assemble_sos_sdp(f, g);
    for (const auto& [label, positions] : inst.patterns) {
        Rat sum = 0;
        for (const auto& [i, j] : positions) sum += a[i][j];
        if (sum != inst.target.at(label)) return false;
    }
    Rat zsum = 0;
    for (const auto& [i, j] : inst.zero_pattern) zsum += a[i][j];
    if (zsum != 0) return false;
    return is_psd_exact(a).psd;
}

bool verify_dual(const CoeffMap& z, const SymbolicGram& g, const LimitForm& f) {
    RatMatrix m = substitute(g, z);
    if (!is_psd_exact(m).psd) return false;
    Rat val = 0;
    for (const auto& [key, c] : f.coeffs) {
        auto it = z.find(key);
        if (it != z.end()) val += c * it->second;
    }
    return val < 0;
}

std::optional<RatMatrix> round_primal_certificate(const SolveResult& sol, const SdpInstance& inst,
                                                  const Int& den_bound) {
    if (sol.matrix.empty()) return std::nullopt;
    return try_round(sol.matrix, inst, den_bound);
}

namespace {

// Strictly feasible dual point from a spread of point evaluations: the gram
// substituted at a sum of monomial-map images of moment vectors.
CoeffMap interior_dual_point(const SymbolicGram& g) {
    const int two_d = g.degree();
    std::set<Partition> labels;
    for (const auto& row : g.entries)
        for (const auto& e : row)
            if (e) labels.insert(*e);
    CoeffMap z;
    for (const Partition& p : labels) z[p] = 0;
    const int n0 = 2 * two_d + 2;
    for (int s = 0; s < n0 + 2; ++s) {
        QVec v(n0);
        for (int i = 0; i < n0; ++i) {
            // Deterministic spread of rational coordinates.
            int num = ((i + 2) * (s + 3)) % 19 - 9;
            int den = (i + s) % 4 + 1;
            v[i] = Rat(num, den);
            v[i].canonicalize();
        }
        QVec y = moment_vector(v, two_d);
        for (auto& [label, acc] : z) {
            Rat prod = 1;
            for (int part : label.parts()) prod *= y[part - 1];
            acc += prod;
        }
    }
    return z;
}

}  // namespace

namespace {

// Minimum eigenvalue and its eigenvector via the Jacobi decomposition.
double lambda_min(const std::vector<std::vector<double>>& m, std::vector<double>* vec) {
    std::vector<std::vector<double>> a = m;
    std::vector<std::vector<double>> v;
    std::vector<double> vals = symmetric_eigenvalues_impl(a, &v);
    size_t am = 0;
    for (size_t i = 1; i < vals.size(); ++i)
        if (vals[i] < vals[am]) am = i;
    if (vec) {
        vec->resize(m.size());
        for (size_t i = 0; i < m.size(); ++i) (*vec)[i] = v[i][am];
    }
    return vals[am];
}

}  // namespace

DualSearchResult find_dual_certificate(const LimitForm& f, const SymbolicGram& g, double tol,
                                       int max_iter, const Int& den_bound) {
    DualSearchResult out;
    SdpInstance inst = assemble_sos_sdp(f, g);
    std::vector<std::pair<Partition, std::vector<std::pair<int, int>>>> live;
    for (const auto& pat : inst.patterns)
        if (!pat.second.empty()) live.push_back(pat);
    for (const auto& [key, cf] : f.coeffs)
        if (cf != 0 && !std::any_of(live.begin(), live.end(),
                                    [&](const auto& p) { return p.first == key; }))
            throw std::invalid_argument("find_dual_certificate: form support missing from gram");

    const size_t n = inst.gram_size;
    const size_t m = live.size();
    std::vector<double> c(m), trace_dir(m, 0);
    for (size_t k = 0; k < m; ++k) {
        c[k] = to_double(f.coeff(live[k].first));
        for (const auto& [i, j] : live[k].second)
            if (i == j) trace_dir[k] += 1;
    }
    double trnorm2 = 0;
    for (double x : trace_dir) trnorm2 += x * x;
    if (trnorm2 == 0) return out;

    // Projected subgradient on <c,z> + kappa * max(0, floor - lambda_min(R(z)))
    // over the slice tr R(z) = 1. Tracks the best pairing with margin >= floor.
    auto descend = [&](std::vector<double>& z, double floor, double kappa, double step0,
                       int iters, double& best_pair, std::vector<double>& best_z) {
        for (int it = 0; it < iters; ++it) {
            std::vector<std::vector<double>> r(n, std::vector<double>(n, 0.0));
            for (size_t k = 0; k < m; ++k)
                for (const auto& [i, j] : live[k].second) r[i][j] = z[k];
            std::vector<double> v;
            double lm = lambda_min(r, &v);
            double cz = 0;
            for (size_t k = 0; k < m; ++k) cz += c[k] * z[k];
            if (lm >= floor && cz < best_pair) {
                best_pair = cz;
                best_z = z;
            }
            std::vector<double> grad(c);
            if (lm < floor) {
                for (size_t k = 0; k < m; ++k)
                    for (const auto& [i, j] : live[k].second) grad[k] -= kappa * v[i] * v[j];
            }
            double gt = 0;
            for (size_t k = 0; k < m; ++k) gt += grad[k] * trace_dir[k];
            for (size_t k = 0; k < m; ++k) grad[k] -= gt * trace_dir[k] / trnorm2;
            double gn = 0;
            for (size_t k = 0; k < m; ++k) gn += grad[k] * grad[k];
            gn = std::sqrt(gn) + 1e-30;
            double step = step0 / std::sqrt(1.0 + it * 1e-3);
            for (size_t k = 0; k < m; ++k) z[k] -= step * grad[k] / gn;
            double tz = 0;
            for (size_t k = 0; k < m; ++k) tz += trace_dir[k] * z[k];
            double corr = (1.0 - tz) / trnorm2;
            for (size_t k = 0; k < m; ++k) z[k] += corr * trace_dir[k];
        }
    };

    std::vector<double> z(m);
    for (size_t k = 0; k < m; ++k) z[k] = trace_dir[k] / trnorm2;

    // Phase 1 walks to the boundary region; phase 2 polishes to a point with a
    // strictly positive spectral floor so that rounding keeps it exactly psd.
    double near_pair = 1e18;
    std::vector<double> near_z;
    descend(z, 0.0, 200.0, 0.02, max_iter, near_pair, near_z);
    const double floor = std::max(tol, 2e-7);
    double interior_pair = 1e18;
    std::vector<double> interior_z;
    if (!near_z.empty()) z = near_z;
    descend(z, floor, 500.0, 1e-4, max_iter, interior_pair, interior_z);

    auto try_vec = [&](const std::vector<double>& cand) -> bool {
        if (cand.empty()) return false;
        for (const Int& bound : denominator_ladder(den_bound)) {
            CoeffMap zr;
            for (size_t k = 0; k < m; ++k) zr[live[k].first] = round_to_rational(cand[k], bound);
            if (verify_dual(zr, g, f)) {
                out.found = true;
                out.z = std::move(zr);
                return true;
            }
        }
        return false;
    };
    if (try_vec(interior_z) || try_vec(near_z)) return out;

    // Near-boundary fallback: mix with a strictly feasible dual point while the
    // pairing with the form stays negative.
    if (near_z.empty()) return out;
    CoeffMap base;
    for (size_t k = 0; k < m; ++k) base[live[k].first] = round_to_rational(near_z[k], den_bound);
    CoeffMap zint = interior_dual_point(g);
    if (!is_pd_exact(substitute(g, zint))) return out;
    Rat pairing = 0;
    for (const auto& [key, cf] : f.coeffs) {
        auto it = base.find(key);
        if (it != base.end()) pairing += cf * it->second;
    }
    if (pairing >= 0) return out;
    for (int k = 60; k >= 0; --k) {
        Rat eps(1, Int(1) << k);
        CoeffMap zi = base;
        for (const auto& [key, val] : zint) zi[key] += eps * val;
        if (verify_dual(zi, g, f)) {
            out.found = true;
            out.z = std::move(zi);
            return out;
        }
    }
    return out;
}

std::string certificate_to_json(const std::string& type, const std::string& gram_name,
                                const LimitForm& f, const RatMatrix* primal,
                                const CoeffMap* dual) {
    nlohmann::ordered_json j;
    j["type"] = type;
    j["gram"] = gram_name;
    j["form"] = nlohmann::ordered_json::parse(limitform_to_json(f));
    if (primal) {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (const QVec& row : *primal) {
            nlohmann::ordered_json r = nlohmann::ordered_json::array();
            for (const Rat& x : row) r.push_back(rat_to_string(x));
            rows.push_back(std::move(r));
        }
        j["matrix"] = std::move(rows);
    }
    if (dual) {
        nlohmann::ordered_json vec = nlohmann::ordered_json::array();
        for (const auto& [key, val] : *dual) {
            nlohmann::ordered_json pair = nlohmann::ordered_json::array();
            pair.push_back(key.parts());
            pair.push_back(rat_to_string(val));
            vec.push_back(std::move(pair));
        }
        j["vector"] = std::move(vec);
    }
    return j.dump(2);
}

ParsedCertificate certificate_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    ParsedCertificate c;
    c.type = j.at("type").get<std::string>();
    c.gram_name = j.value("gram", std::string());
    c.form = limitform_from_json(j.at("form").dump());
    if (j.contains("matrix")) {
        for (const auto& row : j["matrix"]) {
            QVec r;
            for (const auto& cell : row) r.push_back(parse_rat(cell.get<std::string>()));
            c.primal.push_back(std::move(r));
        }
    }
    if (j.contains("vector")) {
        for (const auto& pair : j["vector"]) {
            c.dual[Partition(pair.at(0).get<std::vector<int>>())] =
                parse_rat(pair.at(1).get<std::string>());
        }
    }
    return c;
}

}  // namespace limitcones
