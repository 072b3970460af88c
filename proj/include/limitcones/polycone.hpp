#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "limitcones/rational.hpp"

namespace limitcones {

struct HRep {
    std::vector<IVec> ineqs;  // a . x >= 0
    std::vector<IVec> eqs;    // a . x == 0
};

struct VRep {
    std::vector<IVec> rays;
    std::vector<IVec> lines;
};

// Homogeneous rational polyhedral cone with at least one representation.
// All stored vectors are primitive integer vectors.
class Cone {
  public:
    static Cone from_inequalities(int dim, std::vector<IVec> ineqs, std::vector<IVec> eqs = {});
    static Cone from_generators(int dim, std::vector<IVec> rays, std::vector<IVec> lines = {});
    // Both representations, already known to describe the same cone.
    static Cone with_both(int dim, HRep h, VRep v);

    int dim() const { return dim_; }
    bool has_h() const { return h_.has_value(); }
    bool has_v() const { return v_.has_value(); }
    const HRep& hrep() const;
    const VRep& vrep() const;

  private:
    Cone(int dim) : dim_(dim) {}
    int dim_ = 0;
    std::optional<HRep> h_;
    std::optional<VRep> v_;

    friend Cone dd_convert(const Cone& c);
    friend Cone minkowski_sum(const Cone& p, const Cone& q);
    friend Cone intersect(const Cone& p, const Cone& q);
    friend Cone linear_image(const Cone& c, const std::vector<IVec>& matrix_rows);
};

// Double description: returns a cone carrying both representations, each
// irredundant and canonical (implicit equations and lineality detected).
Cone dd_convert(const Cone& c);

// Extreme rays and lineality basis of {x : ineqs . x >= 0, eqs . x = 0}.
// keep_order = false sorts the inequalities lexicographically before the
// incremental insertion; callers with a structurally better deterministic
// order (e.g. grouped by sub-cone) pass true.
VRep dual_description(const std::vector<IVec>& ineqs, const std::vector<IVec>& eqs, int dim,
                      bool keep_order = false);

Cone minkowski_sum(const Cone& p, const Cone& q);
Cone intersect(const Cone& p, const Cone& q);

// Rows of an integer matrix applied to every generator (V-side image).
Cone linear_image(const Cone& c, const std::vector<IVec>& matrix_rows);

struct FacetList {
    std::vector<IVec> facets;     // irredundant, primitive, sorted
    std::vector<IVec> equations;  // canonical basis of the implicit equations
};

FacetList facets(const Cone& c);

bool contains(const Cone& c, const QVec& v);
bool cone_equal(const Cone& a, const Cone& b);

struct SubsetWitness {
    IVec facet;  // valid on c1
    IVec ray;    // generator of c2 with facet . ray < 0
};

// nullopt when c2 is a subset of c1; otherwise a violated facet of c1 paired
// with a violating generator of c2.
std::optional<SubsetWitness> subset_witness(const Cone& c1, const Cone& c2);

// Exact Farkas feasibility: target = nonneg combination of gens + span(frees).
bool in_conical_span(const IVec& target, const std::vector<IVec>& gens,
                     const std::vector<IVec>& frees);

std::string write_ine(const Cone& c);
std::string write_ext(const Cone& c);
Cone read_ine(std::istream& in);
Cone read_ext(std::istream& in);

std::string cone_to_json(const Cone& c);
Cone cone_from_json(const std::string& text);

}  // namespace limitcones
