#pragma once

#include <cstddef>
#include <istream>
#include <string>
#include <vector>

#include "simvote/domain.hpp"
#include "simvote/label_set.hpp"

namespace simvote {

/// Absolute tolerance for comparing similarity degrees and alpha levels.
inline constexpr double kAlphaTolerance = 1e-9;

/// Square fuzzy similarity relation over a labeled domain. Construction
/// enforces reflexivity, symmetry, and the [0,1] range; max-min transitivity
/// is checked separately by check_max_min_transitivity.
class SimilarityMatrix {
public:
    /// `values` is row-major, n*n. Throws NotReflexive, NotSymmetric,
    /// ValueOutOfRange, or MalformedInput on a shape mismatch.
    SimilarityMatrix(Domain domain, std::vector<double> values);

    const Domain& domain() const noexcept { return domain_; }
    std::size_t size() const noexcept { return domain_.size(); }

    double operator()(std::size_t i, std::size_t j) const noexcept { return values_[i * size() + j]; }
    const std::vector<double>& values() const noexcept { return values_; }

    friend bool operator==(const SimilarityMatrix&, const SimilarityMatrix&) = default;

private:
    Domain domain_;
    std::vector<double> values_;
};

/// Reads the Similarity-CSV format: a header row with an empty first cell
/// followed by the labels, then one row per label in the same order.
/// Lines starting with '#' and blank lines are skipped.
SimilarityMatrix parse_similarity_matrix(std::istream& in);
SimilarityMatrix parse_similarity_matrix(const std::string& text);

std::string serialize_similarity_matrix(const SimilarityMatrix& m);

struct TransitivityViolation {
    std::size_t i, j, k;
    double ik, ij, jk;  // m[i][k] < min(m[i][j], m[j][k])
};

struct TransitivityReport {
    std::vector<TransitivityViolation> violations;
    bool ok() const noexcept { return violations.empty(); }
};

/// Reports every triple (i, j, k) with m[i][k] < min(m[i][j], m[j][k]) - tolerance.
TransitivityReport check_max_min_transitivity(const SimilarityMatrix& m);

/// "s(i,k)=0.4 < min(s(i,j)=0.9, s(j,k)=0.8)" with labels substituted.
std::string describe(const SimilarityMatrix& m, const TransitivityViolation& v);

/// Sorted distinct similarity values, merged within kAlphaTolerance. Always
/// ends with 1.0.
std::vector<double> distinct_levels(const SimilarityMatrix& m);

using Partition = std::vector<LabelSet>;

/// Classes of the crisp relation {(x,y) : m[x][y] >= alpha}, ordered by first
/// member. Throws NotTransitive when a connected component is not a clique.
Partition alpha_cut(const SimilarityMatrix& m, double alpha);

}  // namespace simvote
