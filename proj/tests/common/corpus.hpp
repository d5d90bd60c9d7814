#pragma once

// Printed fixtures and generated sources shared by the unit, acceptance and
// benchmark binaries.

#include <optional>
#include <string>
#include <vector>

#include "mpc/mpc.hpp"

namespace corpus {

using mpc::Elem;
using mpc::Field;
using mpc::Matrix;
using mpc::ParentMatrix;
using mpc::PartitionCode;
using mpc::Source;
using mpc::Tuple;
using mpc::Vec;

inline Field z(std::uint32_t p) { return Field::make(p); }
inline Field gf4() { return Field::make(2, 2, {1, 1, 1}); }

inline Matrix pad_right(const Matrix& m, std::size_t extra) {
  Matrix out(m.field(), m.rows(), m.cols() + extra);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  }
  return out;
}

inline Vec unit(std::size_t len, std::size_t j, Elem a = 1) {
  Vec v(len, 0);
  v[j] = a;
  return v;
}

inline Matrix unit_rows(const Field& f, std::size_t len, std::initializer_list<std::size_t> cols) {
  Matrix m(f, cols.size(), len);
  std::size_t r = 0;
  for (auto c : cols) m(r++, c) = 1;
  return m;
}

/// A printed code together with its source and parent.
struct Fixture {
  std::string name;
  Source source;
  ParentMatrix parent;
  std::vector<Matrix> printed_encoders;
  /// How construct_mpc reproduces printed_encoders (row order and T placement).
  std::optional<std::vector<std::size_t>> partition;
  std::optional<std::vector<Matrix>> mixers;
  bool perfect = true;
};

// Z11 Hamming source, n = 4, s = 3.
inline std::vector<Matrix> z11_blocks() {
  const Field f = z(11);
  return {Matrix::from_ints(f, {{1, 1, -2, -2}, {0, 2, -1, -7}}),
          Matrix::from_ints(f, {{0, 9, 1, 1}, {1, 5, 5, 8}}),
          Matrix::from_ints(f, {{-1, 1, 1, 1}, {-1, 4, 7, -1}})};
}

inline Fixture z11_hamming() {
  const Field f = z(11);
  auto blocks = z11_blocks();
  return {"z11-hamming-n4-s3", mpc::hamming_source(f, 4, 3), ParentMatrix(blocks), blocks, std::nullopt, std::nullopt, true};
}

// Z5 with deviations {1, -1}, n = 4, s = 3.
inline Fixture z5_pm_one() {
  const Field f = z(5);
  std::vector<Matrix> blocks{Matrix::from_ints(f, {{1, 0, 1, 1}, {0, 2, 2, -2}}),
                             Matrix::from_ints(f, {{0, 2, -2, 2}, {1, 0, -1, -1}}),
                             Matrix::from_ints(f, {{-1, -2, 1, 2}, {-1, -2, -1, -2}})};
  return {"z5-pm1-n4-s3", mpc::generalized_hamming_source(f, 4, 3, {1, 4}), ParentMatrix(blocks), blocks,
          std::nullopt, std::nullopt, true};
}

inline std::vector<Matrix> z5_unit_blocks() {
  const Field f = z(5);
  return {Matrix::from_ints(f, {{1, 0, 1, 1, 2, 2}, {0, 1, 1, 2, -2, -1}}),
          Matrix::from_ints(f, {{-1, 0, 2, -1, 2, -1}, {0, 2, 2, -2, 1, 1}}),
          Matrix::from_ints(f, {{2, 0, -2, 1, -2, 1}, {0, -1, -2, -2, 2, -1}}),
          Matrix::from_ints(f, {{-2, 0, -1, -1, -2, -2}, {0, -2, -1, 2, -1, 1}})};
}

// Z5 with deviations {1}, n = 6, s = 4.
inline Fixture z5_unit() {
  const Field f = z(5);
  auto blocks = z5_unit_blocks();
  return {"z5-unit-n6-s4", mpc::generalized_hamming_source(f, 6, 4, {1}), ParentMatrix(blocks), blocks, std::nullopt,
          std::nullopt, true};
}

inline std::vector<Matrix> gf4_blocks() {
  const Field f = gf4();
  return {Matrix::from_codes(f, {{1, 1, 0, 0, 1, 2, 2}, {1, 0, 1, 0, 2, 1, 2}, {0, 0, 0, 1, 2, 2, 1}}),
          Matrix::from_codes(f, {{1, 3, 0, 1, 2, 3, 3}, {0, 1, 3, 0, 1, 3, 1}, {1, 0, 1, 3, 1, 1, 3}}),
          Matrix::from_codes(f, {{0, 2, 0, 1, 3, 1, 1}, {1, 1, 2, 0, 3, 2, 3}, {1, 0, 1, 2, 3, 3, 2}})};
}

inline Matrix gf4_t() { return Matrix::from_codes(gf4(), {{0, 0, 0, 0, 0, 0, 1}}); }

// GF(4) Hamming source, n = 7, s = 3, with the single T row on `terminal`.
inline Fixture gf4_hamming(std::size_t terminal = 0) {
  const Field f = gf4();
  auto blocks = gf4_blocks();
  std::vector<Matrix> encoders = blocks;
  encoders[terminal] = mpc::vstack(gf4_t(), blocks[terminal]);
  std::vector<std::size_t> partition(3, 0);
  partition[terminal] = 1;
  return {"gf4-hamming-n7-s3-t" + std::to_string(terminal + 1), mpc::hamming_source(f, 7, 3), ParentMatrix(blocks), encoders,
          partition, std::nullopt, true};
}

inline Matrix gf4_s2_q2() { return Matrix::from_codes(gf4(), {{1, 0, 1, 1, 1}, {0, 1, 1, 2, 3}}); }

// GF(4) Hamming source with s = 2, n = 5; variant 0, 1 or 2 of the printed pairs.
inline Fixture gf4_s2(int variant) {
  const Field f = gf4();
  const Matrix q2 = gf4_s2_q2();
  const ParentMatrix parent = mpc::s2_parent(q2);
  const Source src = mpc::hamming_source(f, 5, 2);
  if (variant == 0) {
    // T = e3, e4, e5; U_1 undoes stack(T, Q2) so that H_1 = I.
    const Matrix base = mpc::vstack(unit_rows(f, 5, {2, 3, 4}), q2);
    return {"gf4-s2-identity", src, parent, {Matrix::identity(f, 5), q2}, std::vector<std::size_t>{3, 0},
            std::vector<Matrix>{mpc::inverse(base), Matrix::identity(f, 2)}, true};
  }
  if (variant == 1) {
    return {"gf4-s2-t-on-first", src, parent, {mpc::vstack(unit_rows(f, 5, {2, 3, 4}), q2), q2},
            std::vector<std::size_t>{3, 0}, std::nullopt, true};
  }
  return {"gf4-s2-split", src, parent,
          {mpc::vstack(unit_rows(f, 5, {2, 4}), q2), mpc::vstack(unit_rows(f, 5, {3}), q2)}, std::nullopt, std::nullopt,
          true};
}

// The Z11 code embedded in n = 6 with s = 5; deviations only on terminals 1-3, coordinates 1-4.
inline Fixture z11_embedded() {
  const Field f = z(11);
  const std::size_t len = 6, terms = 5;
  auto base = z11_blocks();
  std::vector<Matrix> blocks;
  for (const auto& b : base) blocks.push_back(pad_right(b, 2));
  blocks.push_back(Matrix(f, 2, len));
  blocks.push_back(Matrix(f, 2, len));
  std::vector<Tuple> reps{Tuple(terms, Vec(len, 0))};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      for (Elem a = 1; a < 11; ++a) {
        Tuple t(terms, Vec(len, 0));
        t[i][j] = a;
        reps.push_back(t);
      }
    }
  }
  std::vector<Matrix> encoders{blocks[0], blocks[1], blocks[2], unit_rows(f, len, {4}), unit_rows(f, len, {5})};
  return {"z11-embedded-n6-s5", Source::make(f, len, terms, reps), ParentMatrix(blocks), encoders,
          std::vector<std::size_t>{0, 0, 0, 1, 1}, std::nullopt, true};
}

// The Z11 code extended to n = 5, s = 4 with a few deviations removed.
inline Fixture z11_trimmed() {
  const Field f = z(11);
  const std::size_t len = 5, terms = 4;
  std::vector<Matrix> blocks{Matrix::from_ints(f, {{1, 1, -2, -2, 1}, {0, 2, -1, -7, 0}}),
                             Matrix::from_ints(f, {{0, 9, 1, 1, 0}, {1, 5, 5, 8, 1}}),
                             Matrix::from_ints(f, {{-1, 1, 1, 1, 1}, {-1, 4, 7, -1, 4}}),
                             Matrix::from_ints(f, {{0, 0, 0, 0, -2}, {0, 0, 0, 0, -5}})};
  std::vector<Tuple> reps{Tuple(terms, Vec(len, 0))};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < len; ++j) {
      const bool removed = (i == 0 && j == 0) || (i == 1 && j == 0) || (i == 2 && j == 1);
      if (removed) continue;
      for (Elem a = 1; a < 11; ++a) {
        Tuple t(terms, Vec(len, 0));
        t[i][j] = a;
        reps.push_back(t);
      }
    }
  }
  std::vector<Matrix> encoders{blocks[0], blocks[1], blocks[2], unit_rows(f, len, {4})};
  // The first row of the last block is 9 e5; scaling by 9^-1 = 5 gives e5.
  std::vector<Matrix> mixers{Matrix::identity(f, 2), Matrix::identity(f, 2), Matrix::identity(f, 2),
                        Matrix::from_ints(f, {{5}})};
  return {"z11-trimmed-n5-s4", Source::make(f, len, terms, reps), ParentMatrix(blocks), encoders, std::nullopt, mixers, true};
}

// The Z5 unit-deviation code reused for a largely different representative set.
inline Fixture z5_altered() {
  const Field f = z(5);
  const std::size_t len = 6, terms = 4;
  auto e = [&](std::initializer_list<std::pair<std::size_t, Elem>> entries) {
    Vec v(len, 0);
    for (auto [j, a] : entries) v[j - 1] = f.add(v[j - 1], a);
    return v;
  };
  const Vec o(len, 0);
  std::vector<Tuple> reps;
  for (std::size_t j = 1; j <= 6; ++j) {
    reps.push_back({e({{j, 1}}), o, o, o});
    reps.push_back({e({{j, 4}}), o, o, o});
  }
  for (std::size_t j : {2, 3, 5, 6}) reps.push_back({o, e({{j, 1}}), o, o});
  reps.push_back({e({{3, 1}}), o, e({{1, 1}}), e({{3, 1}})});
  reps.push_back({e({{1, 1}, {2, 1}}), o, e({{3, 1}}), e({{3, 1}})});
  reps.push_back({o, e({{1, 1}, {2, 1}, {4, 1}}), o, o});
  reps.push_back({e({{1, 3}}), e({{2, 2}}), e({{1, 3}}), e({{4, 1}, {2, 1}})});
  reps.push_back({o, o, o, e({{4, 1}})});
  reps.push_back({e({{5, 1}}), e({{6, 1}}), o, o});
  reps.push_back({o, o, e({{4, 1}}), o});
  reps.push_back({o, o, o, e({{2, 1}})});
  reps.push_back({o, o, o, o});
  auto blocks = z5_unit_blocks();
  return {"z5-altered-n6-s4", Source::make(f, len, terms, reps), ParentMatrix(blocks), blocks, std::nullopt, std::nullopt,
          true};
}

/// Every printed fixture.
inline std::vector<Fixture> printed() {
  return {z11_hamming(), z5_pm_one(), z5_unit(), gf4_hamming(0), gf4_hamming(1), gf4_hamming(2),
          gf4_s2(0),     gf4_s2(1),   gf4_s2(2), z11_embedded(), z11_trimmed(),   z5_altered()};
}

/// Printed fixtures whose H is reproduced by construct_mpc with the stored options.
inline std::vector<Fixture> constructible() {
  std::vector<Fixture> out;
  for (auto& fx : printed()) {
    if (fx.name != "gf4-s2-split") out.push_back(fx);
  }
  return out;
}

/// Non-perfect Hamming parents for s = 2 (|D| is not a power of |F|).
inline Fixture z2_s2(std::size_t len) {
  const Field f = z(2);
  // columns: the first n nonzero vectors of F^r with r minimal
  const std::size_t r = mpc::min_r(f, len);
  const auto pts = mpc::projective_points(f, r);
  const Matrix q2 = Matrix::from_columns(f, r, std::vector<Vec>(pts.begin(), pts.begin() + static_cast<long>(len)));
  const ParentMatrix parent = mpc::s2_parent(q2);
  auto code = mpc::construct_mpc(parent);
  // perfect exactly when n + 1 is a power of two
  return {"z2-hamming-s2-n" + std::to_string(len), mpc::hamming_source(f, len, 2), parent, code.encoders(), std::nullopt,
          std::nullopt, ((len + 1) & len) == 0};
}

inline Fixture z3_s2() {
  const Field f = z(3);
  const Matrix q2 = Matrix::from_ints(f, {{1, 0, 1}, {0, 1, 1}});
  const ParentMatrix parent = mpc::s2_parent(q2);
  auto code = mpc::construct_mpc(parent);
  return {"z3-hamming-s2-n3", mpc::hamming_source(f, 3, 2), parent, code.encoders(), std::nullopt, std::nullopt, false};
}

/// Printed fixtures plus a few non-perfect parents.
inline std::vector<Fixture> all_parents() {
  auto out = constructible();
  out.push_back(z2_s2(2));
  out.push_back(z2_s2(3));
  out.push_back(z2_s2(4));
  out.push_back(z3_s2());
  return out;
}

inline PartitionCode build(const Fixture& fx) { return mpc::construct_mpc(fx.parent, fx.partition, fx.mixers); }

}  // namespace corpus
