#pragma once

#include <cstdint>
#include <vector>

#include "mpc/code.hpp"

namespace mpc {

/// y_i = H_i x_i. Throws ShapeError.
std::vector<Vec> encode(const PartitionCode& code, const Tuple& sigma);

/// Joint decoder for a code with a full construction witness.
///
/// Undoing the mixers splits each codeword into extra_rows_i x_i and
/// independent_i x_i. Summing block_coords_i * independent_i x_i gives the
/// parent times stack(delta), since the parent blocks cancel on the common
/// part, so a table lookup recovers delta. The common part then follows from
/// stack_basis w = stack_coords * stack(independent_i w) and
/// complement w = stack(extra_rows_i w). Both steps are folded into two
/// matrices applied to the concatenated codeword.
class Decoder {
 public:
  /// Throws NoWitness, DuplicateSyndrome.
  Decoder(const PartitionCode& code, const Source& source);

  /// Throws UnknownSyndrome when y is not the encoding of a source tuple, or
  /// ShapeError.
  Tuple decode(const std::vector<Vec>& y) const;

  std::size_t table_size() const noexcept { return table_.size(); }
  const Matrix& syndrome_map() const noexcept { return syndrome_; }
  /// Representative index for a syndrome, if present.
  const std::size_t* lookup(std::span<const Elem> syndrome) const { return table_.find(syndrome); }

 private:
  PartitionCode code_;
  Source source_;
  Matrix syndrome_;   // r x M: concatenated y -> P * stack(delta)
  Matrix recovery_;   // n x M: concatenated y -> w + (term depending only on delta)
  std::vector<Vec> offsets_;  // recovery_ * encode(delta), per representative
  VectorMap<std::size_t> table_;
};

/// Brute-force decoder: encodes every element of S once and keeps the
/// codeword -> element map. Needs no witness. Throws TooLarge at build time.
class OracleDecoder {
 public:
  OracleDecoder(const PartitionCode& code, const Source& source, std::uint64_t cap = 2'000'000);
  /// Throws Ambiguous, NotFound, ShapeError.
  Tuple decode(const std::vector<Vec>& y) const;
  std::size_t image_size() const noexcept { return image_.size(); }

 private:
  PartitionCode code_;
  Source source_;
  VectorMap<std::uint64_t> image_;  // concatenated codeword -> flat index into S
  VectorSet ambiguous_;
};

/// Scans all of S for the tuple with this encoding. Throws Ambiguous,
/// NotFound, TooLarge.
Tuple oracle_decode(const PartitionCode& code, const Source& source, const std::vector<Vec>& y,
                    std::uint64_t cap = 2'000'000);

}  // namespace mpc
