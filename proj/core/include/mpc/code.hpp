#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mpc/parent.hpp"

namespace mpc {

enum class WitnessKind { Full, PreOnly };

/// Construction data kept alongside the encoding matrices. With H_i the
/// encoder of terminal i and Q_i the parent block:
///   H_i = mixers_i * stack(extra_rows_i, independent_i),
///   Q_i = block_coords_i * independent_i,
///   stack_basis = stack_coords * stack(independent_1..independent_s),
///   stack(extra_rows_1..extra_rows_s) = complement,
///   inv_basis = inverse(stack(stack_basis, complement)).
/// For pre-only witnesses complement is the caller's T', extra_rows its
/// partition, independent_i = Q_i, and the remaining fields are left empty.
struct Witness {
  WitnessKind kind = WitnessKind::Full;
  ParentMatrix parent;
  Matrix stack_basis;
  Matrix complement;
  std::vector<Matrix> independent;
  std::vector<Matrix> extra_rows;
  std::vector<Matrix> mixers;
  std::vector<Matrix> block_coords;
  std::optional<Matrix> stack_coords;
  std::optional<Matrix> inv_basis;
  std::vector<std::size_t> partition;
};

/// Linear encoders H_1..H_s, one per terminal.
class PartitionCode {
 public:
  explicit PartitionCode(std::vector<Matrix> encoders, std::optional<Witness> witness = std::nullopt);

  const Field& field() const noexcept { return H_.front().field(); }
  std::size_t block_len() const noexcept { return H_.front().cols(); }
  std::size_t terminals() const noexcept { return H_.size(); }
  const std::vector<Matrix>& encoders() const noexcept { return H_; }
  const Matrix& encoder(std::size_t i) const { return H_.at(i); }
  std::size_t encoded_len(std::size_t i) const { return H_.at(i).rows(); }
  std::size_t total_length() const noexcept;
  const std::optional<Witness>& witness() const noexcept { return witness_; }

 private:
  std::vector<Matrix> H_;
  std::optional<Witness> witness_;
};

/// Default partition puts every T row on terminal 0; U_i default to I.
/// Throws BadPartition, NonInvertibleU.
PartitionCode construct_mpc(const ParentMatrix& parent, std::optional<std::vector<std::size_t>> partition = std::nullopt,
                            std::optional<std::vector<Matrix>> mixers = std::nullopt);

/// H_i = stack(G'_i, Q_i) for the given T' partition, or the override H_i after
/// checking that null H_i = null stack(G'_i, Q_i).
/// Throws NotInjectiveStack, WrongNullspace, BadPartition.
PartitionCode construct_pre_mpc(const ParentMatrix& parent, const Matrix& t_prime, std::vector<std::size_t> partition,
                                std::optional<std::vector<Matrix>> encoder_override = std::nullopt);

struct Fraction {
  std::size_t num;
  std::size_t den;
};

struct RatioReport {
  std::vector<Fraction> ratios;  // m_i / n
  Fraction sum_ratio;            // M / n
  std::vector<std::size_t> extra;  // m_i - rank Q_i
  std::size_t extra_total = 0;
  std::size_t required_extra = 0;  // n - rank(stack Q)
  bool bound_holds = false;
  bool minimal = false;
};

/// Throws NoWitness.
RatioReport ratio_report(const PartitionCode& code);

/// sum rank Q_i + n - rank(stack Q).
std::size_t min_total_length(const ParentMatrix& parent);

enum class VerifyMode { Structural, Exhaustive };

struct VerifyOptions {
  std::uint64_t cap = 2'000'000;
  unsigned workers = 1;
};

struct VerifyReport {
  bool pass = false;
  /// The encoders share no nonzero kernel vector: rank(stack H) = n.
  bool trivial_intersection = false;
  std::uint64_t checked = 0;
  /// Two distinct source tuples with the same encoding, when failing.
  std::optional<std::pair<Tuple, Tuple>> counterexample;
};

/// Structural mode decides injectivity on S from the representatives alone:
/// with A = stack(H_i) and K a left annihilator of A, two tuples collide iff
/// rank A < n or two representatives share K * blockdiag(H) * d. Exhaustive
/// mode hashes the encodings of every element of S. Throws TooLarge.
VerifyReport verify_compression(const PartitionCode& code, const Source& source, VerifyMode mode = VerifyMode::Structural,
                                const VerifyOptions& options = {});

struct PerfectReport {
  bool perfect = false;
  std::int64_t exponent = 0;        // M - n
  std::uint64_t rep_count = 0;      // |D|
  std::optional<bool> parent_bijective;  // witness parent on the stacked representatives
};

PerfectReport is_perfect(const PartitionCode& code, const Source& source);

}  // namespace mpc
