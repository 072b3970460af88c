#pragma once

#include <compare>
#include <initializer_list>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "limitcones/rational.hpp"

namespace limitcones {

// Weakly decreasing sequence of positive integers. The empty partition is the
// unique partition of 0. Comparison is ascending lexicographic on the part
// sequence with absent parts read as zero, which coincides with std::vector's
// ordering.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int size() const;
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    auto operator<=>(const Partition&) const = default;

    std::string str() const;

  private:
    std::vector<int> parts_;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

// Fixed-length tuple of nonnegative slot exponents.
class Composition {
  public:
    Composition() = default;
    explicit Composition(std::vector<int> slots);
    Composition(std::initializer_list<int> slots) : Composition(std::vector<int>(slots)) {}

    const std::vector<int>& slots() const { return slots_; }
    int length() const { return static_cast<int>(slots_.size()); }
    int weight() const;
    // Largest 1-based index with a nonzero entry; 0 for the zero composition.
    int support_end() const;
    Partition shape() const;

    auto operator<=>(const Composition&) const = default;

  private:
    std::vector<int> slots_;
};

Composition operator+(const Composition& a, const Composition& b);

std::ostream& operator<<(std::ostream& os, const Composition& c);

// All partitions of d in ascending lexicographic order; pi(d) entries.
std::vector<Partition> enum_partitions(int d);

// Accepts partitions and compositions; compositions contribute their nonzero
// entries only.
struct GlueItem {
    std::vector<int> parts;
    GlueItem(const Partition& p);     // NOLINT(google-explicit-constructor)
    GlueItem(const Composition& c);   // NOLINT(google-explicit-constructor)
};

Partition glue(const std::vector<GlueItem>& items);
Partition glue(std::initializer_list<GlueItem> items);

bool is_even(const Partition& p);
Partition halve(const Partition& p);        // throws on odd part
Partition double_parts(const Partition& p);

// Some odd part occurring an odd number of times.
bool is_odd_partition(const Partition& p);

int lex_index(const Partition& p, int d);   // throws on size mismatch

using CoeffMap = std::map<Partition, Rat>;

// Appends two 1-parts to every key; values unchanged.
CoeffMap lift_by_ones(const CoeffMap& c);

// Coordinate bookkeeping for the partitions of a fixed degree.
class PartitionIndexer {
  public:
    explicit PartitionIndexer(int degree);
    // Even partitions of degree only (coordinates of the even-form space).
    static PartitionIndexer even(int degree);

    int degree() const { return degree_; }
    size_t size() const { return list_.size(); }
    const std::vector<Partition>& list() const { return list_; }
    const Partition& at(size_t i) const { return list_[i]; }
    int index(const Partition& p) const;  // throws when absent

  private:
    PartitionIndexer() = default;
    int degree_ = 0;
    std::vector<Partition> list_;
    std::map<Partition, int> index_;
};

Partition parse_partition(const std::string& s);  // "2,1,1", "(2,1,1)" or "[2,1,1]"

}  // namespace limitcones
