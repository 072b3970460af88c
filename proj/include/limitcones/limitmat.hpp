#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "limitcones/partitions.hpp"

namespace limitcones {

// One basis term x^alpha m_lambda, |alpha| + |lambda| = degree.
struct Term {
    Composition alpha;
    Partition lambda;

    int degree() const { return alpha.weight() + lambda.size(); }
    auto operator<=>(const Term&) const = default;
};

// Matrix limit of sym_n(w^T w) for a vector w of terms: each entry is the
// partition gluing the slot sums with both lambdas, or a structural zero in
// even mode when the slot sum has an odd entry.
struct SymbolicGram {
    std::vector<Term> terms;
    std::vector<std::vector<std::optional<Partition>>> entries;

    size_t size() const { return terms.size(); }
    int degree() const { return terms.empty() ? 0 : 2 * terms.front().degree(); }
};

// All terms (alpha, lambda) with alpha a composition in d slots and
// lambda a partition of d - |alpha|. Ordered by |alpha| ascending, then
// lambda descending, then shape(alpha) ascending, then slots descending.
std::vector<Term> full_terms(int d);

// Subset of full_terms(d) whose lambda has all parts even.
std::vector<Term> even_terms(int d);

SymbolicGram build_limit_gram(const std::vector<Term>& terms, bool even_mode);

// Drops any term whose symbolic row literally repeats an earlier row.
SymbolicGram dedup_rows(const SymbolicGram& g);

// Integer linear combination of monomial-mean labels (empty = zero entry).
using LinComb = std::map<Partition, int>;

struct LabeledMatrix {
    std::vector<std::vector<LinComb>> entries;

    size_t size() const { return entries.size(); }
};

LabeledMatrix to_labeled(const SymbolicGram& g);

// Explicit reference data: term lists for the partial symmetrization matrices
// and the isotypic / even isotypic matrices with linear-combination entries.
const std::map<std::string, std::vector<Term>>& fixture_term_lists();
const std::map<std::string, LabeledMatrix>& fixture_matrices();

// Gram built from a named fixture term list (no dedup applied).
SymbolicGram fixture_gram(const std::string& name);

std::string gram_to_json(const SymbolicGram& g);
SymbolicGram gram_from_json(const std::string& text);

}  // namespace limitcones
