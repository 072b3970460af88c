#pragma once

#include <optional>
#include <string>
#include <vector>

#include "limitcones/limitmat.hpp"
#include "limitcones/linalg.hpp"
#include "limitcones/partitions.hpp"
#include "limitcones/sympoly.hpp"

namespace limitcones {

// Square symmetric matrix of exact rationals.
using RatMatrix = std::vector<QVec>;

struct PsdCertificate {
    // P^T A P = L D L^T with D the pivot diagonal (zeros allowed).
    std::vector<size_t> perm;
    QMatrix lower;
    QVec diag;
};

struct PsdResult {
    bool psd = false;
    std::optional<QVec> witness;  // v with v^T A v < 0 when not psd
    std::optional<PsdCertificate> cert;
};

// Exact decision via pivoted rational LDL^T; handles singular leading blocks.
PsdResult is_psd_exact(const RatMatrix& m);
bool is_pd_exact(const RatMatrix& m);

enum class HankelVariant { Full, EvenPair };

// Full: y has length 2d, checks H(y) >= 0 with y_0 = 1.
// EvenPair: y has length d, checks both Hankel blocks H(y) and H'(y).
bool hankel_membership(const QVec& y, HankelVariant variant);

RatMatrix hankel_h(const QVec& y);        // (y_{i+j-2}), size ceil((n+1)/2), y_0 = 1
RatMatrix hankel_h_prime(const QVec& y);  // (y_{i+j-1}), size ceil(n/2)

// (p_1(v), ..., p_{two_d}(v)) as exact power means.
QVec moment_vector(const QVec& v, int two_d);
// (p_2(v), p_4(v), ..., p_{two_d}(v)).
QVec even_moment_vector(const QVec& v, int two_d);

// Products of the y-entries over the parts of each partition (halved parts in
// even mode, so y_j stands for p_{2j}).
QVec phi_image(const QVec& y, const std::vector<Partition>& partitions, bool even_mode);

RatMatrix substitute(const LabeledMatrix& pencil, const std::vector<Partition>& coords,
                     const QVec& z);
RatMatrix substitute(const SymbolicGram& g, const CoeffMap& z);

// Kernel-maximality test: z spans an extreme ray of the spectrahedral cone
// {z : L(z) >= 0} iff {w : L(w) k = 0 for all k in ker L(z)} is a line.
// Throws when L(z) is not psd.
bool extreme_ray_test(const LabeledMatrix& pencil, const std::vector<Partition>& coords,
                      const QVec& z);

struct SdpInstance {
    size_t gram_size = 0;
    int degree = 0;
    // Disjoint index patterns covering every labelled entry.
    std::vector<std::pair<Partition, std::vector<std::pair<int, int>>>> patterns;
    // Structural-zero positions (even mode), constrained to sum to zero.
    std::vector<std::pair<int, int>> zero_pattern;
    CoeffMap target;
};

// Feasibility problem: A >= 0 with <A, pattern_nu> = c_nu for every nu.
SdpInstance assemble_sos_sdp(const LimitForm& f, const SymbolicGram& g);

std::string export_sdpa(const SdpInstance& inst);

enum class FeasStatus { Feasible, LikelyInfeasible, Undecided };

struct SolveResult {
    FeasStatus status = FeasStatus::Undecided;
    std::vector<std::vector<double>> matrix;  // psd-side iterate
    double gap = 0.0;
    int iterations = 0;
};

// Alternating projections between the psd cone and the constraint subspace.
// Never proves infeasibility; certified conclusions go through verify_dual.
SolveResult solve_feasibility(const SdpInstance& inst, double tol = 1e-9, int max_iter = 100000);

// Cyclic Jacobi eigenvalues of a symmetric matrix (floating point).
std::vector<double> symmetric_eigenvalues(std::vector<std::vector<double>> a);

// A >= 0 exactly and every pattern sum matches the target exactly.
bool verify_primal(const RatMatrix& a, const SymbolicGram& g, const LimitForm& f);

// M(z) >= 0 exactly and <z, c> < 0: certifies that f is outside the cone.
bool verify_dual(const CoeffMap& z, const SymbolicGram& g, const LimitForm& f);

// Tries to round the psd-side iterate to an exact primal certificate.
std::optional<RatMatrix> round_primal_certificate(const SolveResult& sol, const SdpInstance& inst,
                                                  const Int& den_bound);

// Alternating-projection search in the dual space (pattern-constant symmetric
// matrices with <z, c> = -1), followed by rounding, exact verification, and an
// optional mix with a strictly feasible dual point built from point
// evaluations.
struct DualSearchResult {
    bool found = false;
    CoeffMap z;
};

DualSearchResult find_dual_certificate(const LimitForm& f, const SymbolicGram& g,
                                       double tol = 1e-12, int max_iter = 200000,
                                       const Int& den_bound = Int(1000000));

std::string certificate_to_json(const std::string& type, const std::string& gram_name,
                                const LimitForm& f, const RatMatrix* primal, const CoeffMap* dual);

struct ParsedCertificate {
    std::string type;  // "primal" | "dual"
    std::string gram_name;
    LimitForm form;
    RatMatrix primal;
    CoeffMap dual;
};

ParsedCertificate certificate_from_json(const std::string& text);

}  // namespace limitcones
