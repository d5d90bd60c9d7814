#pragma once

// Random inputs shared by the unit and acceptance binaries.

#include <algorithm>
#include <numeric>
#include <random>

#include "mpc/mpc.hpp"

namespace cases {

using mpc::Elem;
using mpc::Field;
using mpc::Matrix;

inline Matrix random_matrix(const Field& f, std::size_t rows, std::size_t cols, std::mt19937& rng) {
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = static_cast<Elem>(rng() % f.order());
  return m;
}

inline Matrix hcat(const Matrix& a, const Matrix& b) {
  const Matrix parts[] = {a, b};
  return mpc::hstack(parts);
}

/// Random k-dimensional subspace of the column span of `basis` (k <= its cols).
inline Matrix random_subspace(const Matrix& basis, std::size_t k, std::mt19937& rng) {
  Matrix out(basis.field(), basis.rows(), 0);
  while (out.cols() < k) {
    const Matrix v = basis * random_matrix(basis.field(), basis.cols(), 1, rng);
    const Matrix next = hcat(out, v);
    if (mpc::rank(next) == next.cols()) out = next;
  }
  return out;
}

/// Random complement of `sub` inside the span of `space` (sub must lie in it).
inline Matrix random_complement(const Matrix& sub, const Matrix& space, std::mt19937& rng) {
  Matrix out(space.field(), space.rows(), 0);
  while (sub.cols() + out.cols() < space.cols()) {
    const Matrix v = space * random_matrix(space.field(), space.cols(), 1, rng);
    const Matrix next = hcat(out, v);
    if (mpc::rank(hcat(sub, next)) == sub.cols() + next.cols()) out = next;
  }
  return out;
}

struct ShiftCase {
  std::vector<std::size_t> perm;
  mpc::SubspaceBasis carried;
  std::vector<mpc::SubspaceBasis> complements;
};

/// A random valid input for nullspace_shift: a terminal order (preferring
/// ones whose first s-1 terminals share a nonzero kernel), a random K inside
/// that shared kernel meeting the last kernel trivially, random complements.
inline ShiftCase random_shift(const mpc::PartitionCode& code, std::mt19937& rng) {
  const std::size_t terms = code.terminals(), len = code.block_len();
  const Field& f = code.field();
  ShiftCase c{std::vector<std::size_t>(terms), {Matrix(f, len, 0)}, {}};
  std::iota(c.perm.begin(), c.perm.end(), 0);
  Matrix shared(f, len, 0);
  for (int attempt = 0; attempt < 8; ++attempt) {
    std::shuffle(c.perm.begin(), c.perm.end(), rng);
    Matrix shared_rows(f, 0, len);
    for (std::size_t i = 0; i + 1 < terms; ++i) shared_rows = mpc::vstack(shared_rows, code.encoder(c.perm[i]));
    shared = mpc::nullspace_basis(shared_rows);
    if (shared.cols() > 0) break;
  }
  const Matrix last = mpc::nullspace_basis(code.encoder(c.perm[terms - 1]));
  std::size_t k = shared.cols() ? 1 + rng() % shared.cols() : 0;
  for (int tries = 0;; ++tries) {
    const Matrix carried = random_subspace(shared, k, rng);
    if (mpc::rank(hcat(carried, last)) == carried.cols() + last.cols()) {
      c.carried = {carried};
      break;
    }
    if (tries % 8 == 7 && k > 0) --k;
  }
  for (std::size_t i = 0; i + 1 < terms; ++i) {
    const Matrix kernel = mpc::nullspace_basis(code.encoder(c.perm[i]));
    c.complements.push_back({random_complement(c.carried.basis, kernel, rng)});
  }
  return c;
}

/// Sources small enough for brute_min_M (|F|^n <= 16, s <= 3): Hamming and
/// generalized Hamming shapes, the identical-sources case and random explicit
/// representative sets.
inline std::vector<mpc::Source> tiny_sources(std::mt19937& rng, std::size_t random_count = 12) {
  const Field z2 = Field::make(2), z3 = Field::make(3), z5 = Field::make(5), gf4 = Field::make(2, 2, {1, 1, 1});
  std::vector<mpc::Source> out;
  for (std::size_t terms = 2; terms <= 3; ++terms) {
    for (std::size_t len = 1; len <= 4; ++len) out.push_back(mpc::hamming_source(z2, len, terms));
    for (std::size_t len = 1; len <= 2; ++len) out.push_back(mpc::hamming_source(z3, len, terms));
    out.push_back(mpc::hamming_source(gf4, 1, terms));
    out.push_back(mpc::generalized_hamming_source(z5, 1, terms, {1}));
  }
  out.push_back(mpc::hamming_source(gf4, 2, 2));
  out.push_back(mpc::generalized_hamming_source(z3, 2, 3, {1}));
  for (std::size_t len = 1; len <= 3; ++len) out.push_back(mpc::Source::make(z2, len, 2, {mpc::Tuple(2, mpc::Vec(len, 0))}));
  // Random D with the last component fixed to zero, so no two differ by a
  // uniform shift.
  const Field fields[] = {z2, z3};
  for (std::size_t t = 0; t < random_count; ++t) {
    const Field& f = fields[t % 2];
    const std::size_t len = f.order() == 2 ? 1 + rng() % 3 : 1 + rng() % 2;
    const std::size_t terms = 2 + rng() % 2;
    const std::uint64_t per = *mpc::checked_pow(f.order(), len);
    std::uint64_t free_tuples = 1;
    for (std::size_t i = 0; i + 1 < terms; ++i) free_tuples *= per;
    std::vector<std::uint64_t> pool(free_tuples);
    std::iota(pool.begin(), pool.end(), 0);
    std::shuffle(pool.begin(), pool.end(), rng);
    const std::size_t size = 1 + rng() % std::min<std::uint64_t>(free_tuples, 6);
    std::vector<mpc::Tuple> reps;
    for (std::size_t k = 0; k < size; ++k) {
      mpc::Tuple tup(terms, mpc::Vec(len, 0));
      std::uint64_t code = pool[k];
      for (std::size_t i = 0; i + 1 < terms; ++i)
        for (std::size_t j = 0; j < len; ++j) {
          tup[i][j] = static_cast<Elem>(code % f.order());
          code /= f.order();
        }
      reps.push_back(std::move(tup));
    }
    out.push_back(mpc::Source::make(f, len, terms, std::move(reps)));
  }
  return out;
}

}  // namespace cases
