#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mpc/code.hpp"

namespace mpc {

/// Basis columns of a subspace of F^n.
struct SubspaceBasis {
  Matrix basis;  // n x k, independent columns
  std::size_t dim() const noexcept { return basis.cols(); }
  std::size_t ambient() const noexcept { return basis.rows(); }
};

/// Throws DependentRows if the columns are dependent.
SubspaceBasis make_subspace(const Matrix& columns);

/// Moves the shared kernel part K from terminal perm[0] to terminal perm[s-1].
/// Requires null H_perm[i] = K + N_i (direct) for i < s-1 and K to meet
/// null H_perm[s-1] trivially. Complements default to a greedy completion of K
/// inside each kernel. New encoders are surjective with
/// null H'_perm[0] = N_0 and null H'_perm[i] = K + N_i otherwise.
/// Throws DecompositionMismatch.
PartitionCode nullspace_shift(const PartitionCode& code, const std::vector<std::size_t>& perm, const SubspaceBasis& carried,
                              std::optional<std::vector<SubspaceBasis>> complements = std::nullopt);

/// Parent whose null space is null X + null J, where X forces all s
/// components equal and J = blockdiag(H_i). Throws InvalidCompression.
ParentMatrix extract_parent(const PartitionCode& code, const Source& source);

struct CompressibleVerdict {
  bool compressible = false;
  std::size_t terminal = 0;  // 0-based
  Vec direction;             // first nonzero entry 1
  /// Invertible n x n matrix whose first column is the direction.
  std::optional<Matrix> basis_change;
  /// Number of forbidden projective directions per terminal.
  std::vector<std::size_t> forbidden;
};

/// Looks for a terminal and a direction v such that no nonzero multiple of
/// (0, .., v, .., 0) is a difference of two source tuples.
/// Throws TooLarge when |D|^2 exceeds cap.
CompressibleVerdict compressible(const Source& source, std::uint64_t cap = 400'000'000);

/// H_terminal with null space span{v}; every other encoder is the identity.
PartitionCode compressing_code(const Source& source, const CompressibleVerdict& verdict);

/// All subspaces of F^n (requires |F|^n <= 16) as basis matrices, by echelon
/// enumeration: dimension, then pivot set, then free entries.
std::vector<Matrix> enumerate_subspaces(const Field& field, std::size_t len);

struct BruteMinResult {
  std::size_t min_total = 0;
  /// Kernels N_1..N_s attaining the optimum (n x k basis columns each).
  std::vector<Matrix> kernels;
};

/// Exhaustive minimum of s n - sum dim N_i over kernel tuples whose product
/// meets the difference set trivially. Requires |F|^n <= 16 and s <= 3.
/// Throws TooLarge.
BruteMinResult brute_min_M(const Source& source, unsigned workers = 1);

/// Code with the given kernels: H_i is a full-row-rank matrix with null space N_i.
PartitionCode code_from_kernels(const Field& field, std::size_t len, const std::vector<Matrix>& kernels);

}  // namespace mpc
