#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mpc/linalg.hpp"
#include "mpc/source.hpp"

namespace mpc {

/// P = [Q_1 | ... | Q_s], each block r x n.
class ParentMatrix {
 public:
  /// All blocks must share field and shape. Throws ShapeError.
  explicit ParentMatrix(std::vector<Matrix> blocks);
  /// Splits an r x (s n) matrix into s column blocks.
  static ParentMatrix from_matrix(const Matrix& p, std::size_t terms);

  const Field& field() const noexcept { return blocks_.front().field(); }
  std::size_t height() const noexcept { return blocks_.front().rows(); }
  std::size_t block_len() const noexcept { return blocks_.front().cols(); }
  std::size_t terminals() const noexcept { return blocks_.size(); }
  const std::vector<Matrix>& blocks() const noexcept { return blocks_; }
  const Matrix& block(std::size_t i) const { return blocks_.at(i); }

  Matrix matrix() const { return hstack(blocks_); }
  /// Q_1 + ... + Q_s.
  Matrix block_sum() const;
  bool zero_sum() const { return block_sum().is_zero(); }

 private:
  std::vector<Matrix> blocks_;
};

struct ParentReport {
  bool zero_sum = false;
  bool injective = false;
  /// Injective and every r-vector is hit (|D| = |F|^r).
  bool bijective = false;
  std::size_t image_size = 0;
  /// Two representatives with the same image, when not injective.
  std::optional<std::pair<std::size_t, std::size_t>> collision;

  bool ok() const noexcept { return zero_sum && injective; }
};

/// Zero block-sum and injectivity of P on the stacked representatives
/// (image hashing). Throws ShapeError when shapes disagree with the source.
ParentReport validate_parent(const ParentMatrix& parent, const Source& source);

/// No column is a multiple of another (zero columns fail). For s == 2 only
/// the second block is tested.
bool hamming_parent_check(const ParentMatrix& parent);
bool columns_pairwise_independent(const Matrix& m);

/// Smallest r with count <= (|F|^r - 1) / (|F| - 1).
std::size_t min_r(const Field& field, std::uint64_t count);

/// Nonzero vectors of F^r whose first nonzero entry is 1, in index order
/// (coordinate 0 least significant).
std::vector<Vec> projective_points(const Field& field, std::size_t r);

struct CosetDecomposition {
  std::vector<Elem> multipliers;  // L, sorted
  std::vector<Elem> reps;         // a_1 ... a_k
  std::size_t k() const noexcept { return reps.size(); }
};

/// Finds a_1..a_k with {a_i * l : l in L} = F* without repetition, by
/// backtracking over the smallest uncovered element. Throws NoDecomposition
/// (also when |L| does not divide |F|-1) or ZeroInL.
CosetDecomposition coset_decompose(const Field& field, std::vector<Elem> multipliers);

/// Candidate parent for the generalized Hamming source: columns a_i * v_j over
/// the coset reps and the first sn/k projective points of F^r, where
/// |F|^r = |D|. Injective on the stacked representatives by construction; the
/// blocks need not sum to zero. For s == 2 the deviations are closed under
/// negation and only the second block carries the columns.
/// Throws NotPerfectSize, NoDecomposition, IndivisibleSN.
ParentMatrix coset_parent(const Field& field, const std::vector<Elem>& multipliers, std::size_t terms, std::size_t len);

struct RepairOptions {
  std::uint64_t node_budget = 2'000'000;
  /// When the candidate is bijective on the representatives, only accept
  /// parents whose minimal code length is n + r (a perfect code).
  bool require_perfect = true;
};

/// Searches for a parent with zero block-sum that keeps injectivity on the
/// source, by rescaling and regrouping the candidate's columns. Returns the
/// candidate unchanged if it already validates. Throws SearchExhausted.
ParentMatrix zero_sum_repair(const ParentMatrix& candidate, const Source& source, const RepairOptions& options = {});

/// [-Q2 | Q2]. Throws ProportionalColumns.
ParentMatrix s2_parent(const Matrix& q2);

}  // namespace mpc
