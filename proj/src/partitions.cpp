#include "limitcones/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace limitcones {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p <= 0) throw std::invalid_argument("partition parts must be positive");
    std::sort(parts_.rbegin(), parts_.rend());
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Partition::str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
    os << '(';
    for (size_t i = 0; i < p.parts().size(); ++i) {
        if (i) os << ',';
        os << p.parts()[i];
    }
    return os << ')';
}

Composition::Composition(std::vector<int> slots) : slots_(std::move(slots)) {
    for (int s : slots_)
        if (s < 0) throw std::invalid_argument("composition entries must be nonnegative");
}

int Composition::weight() const { return std::accumulate(slots_.begin(), slots_.end(), 0); }

int Composition::support_end() const {
    for (int i = length() - 1; i >= 0; --i)
        if (slots_[i] != 0) return i + 1;
    return 0;
}

Partition Composition::shape() const {
    std::vector<int> nz;
    for (int s : slots_)
        if (s != 0) nz.push_back(s);
    return Partition(std::move(nz));
}

Composition operator+(const Composition& a, const Composition& b) {
    if (a.length() != b.length()) throw std::invalid_argument("composition length mismatch");
    std::vector<int> s(a.slots());
    for (int i = 0; i < b.length(); ++i) s[i] += b.slots()[i];
    return Composition(std::move(s));
}

std::ostream& operator<<(std::ostream& os, const Composition& c) {
    os << '[';
    for (size_t i = 0; i < c.slots().size(); ++i) {
        if (i) os << ',';
        os << c.slots()[i];
    }
    return os << ']';
}

std::vector<Partition> enum_partitions(int d) {
    if (d < 0) throw std::invalid_argument("enum_partitions: negative degree");
    std::vector<Partition> out;
    std::vector<int> stack;
    // Front-to-back construction with the leading part ascending gives
    // ascending lex order directly.
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.push_back(Partition(std::vector<int>(stack)));
            return;
        }
        for (int p = 1; p <= std::min(remaining, max_part); ++p) {
            stack.push_back(p);
            rec(remaining - p, p);
            stack.pop_back();
        }
    };
    rec(d, d);
    return out;
}

GlueItem::GlueItem(const Partition& p) : parts(p.parts()) {}

GlueItem::GlueItem(const Composition& c) {
    for (int s : c.slots())
        if (s != 0) parts.push_back(s);
}

Partition glue(const std::vector<GlueItem>& items) {
    std::vector<int> all;
    for (const GlueItem& it : items) all.insert(all.end(), it.parts.begin(), it.parts.end());
    return Partition(std::move(all));
}

Partition glue(std::initializer_list<GlueItem> items) {
    return glue(std::vector<GlueItem>(items));
}

bool is_even(const Partition& p) {
    for (int x : p.parts())
        if (x % 2 != 0) return false;
    return true;
}

Partition halve(const Partition& p) {
    std::vector<int> h;
    h.reserve(p.parts().size());
    for (int x : p.parts()) {
        if (x % 2 != 0) throw std::domain_error("halve: partition has an odd part");
        h.push_back(x / 2);
    }
    return Partition(std::move(h));
}

Partition double_parts(const Partition& p) {
    std::vector<int> d;
    d.reserve(p.parts().size());
    for (int x : p.parts()) d.push_back(2 * x);
    return Partition(std::move(d));
}

bool is_odd_partition(const Partition& p) {
    std::map<int, int> mult;
    for (int x : p.parts()) ++mult[x];
    for (auto& [part, count] : mult)
        if (part % 2 != 0 && count % 2 != 0) return true;
    return false;
}

int lex_index(const Partition& p, int d) {
    if (p.size() != d) throw std::invalid_argument("lex_index: partition size mismatch");
    std::vector<Partition> all = enum_partitions(d);
    auto it = std::lower_bound(all.begin(), all.end(), p);
    return static_cast<int>(it - all.begin());
}

CoeffMap lift_by_ones(const CoeffMap& c) {
    static const Partition two_ones{1, 1};
    CoeffMap out;
    for (const auto& [key, val] : c) out[glue({key, two_ones})] = val;
    return out;
}

PartitionIndexer::PartitionIndexer(int degree) : degree_(degree), list_(enum_partitions(degree)) {
    for (size_t i = 0; i < list_.size(); ++i) index_[list_[i]] = static_cast<int>(i);
}

PartitionIndexer PartitionIndexer::even(int degree) {
    if (degree % 2 != 0) throw std::invalid_argument("even indexer needs even degree");
    PartitionIndexer idx;
    idx.degree_ = degree;
    for (const Partition& p : enum_partitions(degree))
        if (is_even(p)) idx.list_.push_back(p);
    for (size_t i = 0; i < idx.list_.size(); ++i) idx.index_[idx.list_[i]] = static_cast<int>(i);
    return idx;
}

int PartitionIndexer::index(const Partition& p) const {
    auto it = index_.find(p);
    if (it == index_.end())
        throw std::invalid_argument("partition " + p.str() + " not indexed at degree " +
                                    std::to_string(degree_));
    return it->second;
}

Partition parse_partition(const std::string& s) {
    std::vector<int> parts;
    std::string cur;
    for (char c : s) {
        if (std::isdigit(static_cast<unsigned char>(c))) {
            cur += c;
        } else if (c == ',' || c == ' ' || c == '(' || c == ')' || c == '[' || c == ']') {
            if (!cur.empty()) {
                parts.push_back(std::stoi(cur));
                cur.clear();
            }
        } else {
            throw std::invalid_argument("bad partition literal: " + s);
        }
    }
    if (!cur.empty()) parts.push_back(std::stoi(cur));
    return Partition(std::move(parts));
}

}  // namespace limitcones
