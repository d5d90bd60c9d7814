#include <gtest/gtest.h>

#include <atomic>
#include <random>

#include "corpus.hpp"
#include "expect_error.hpp"

using namespace mpc;

namespace {

Tuple random_tuple(const Field& f, std::size_t len, std::size_t terms, std::mt19937& rng) {
  Tuple t(terms, Vec(len));
  for (auto& v : t)
    for (auto& x : v) x = static_cast<Elem>(rng() % f.order());
  return t;
}

Tuple random_member(const Source& src, std::mt19937& rng) {
  Vec w(src.block_len());
  for (auto& x : w) x = static_cast<Elem>(rng() % src.field().order());
  return src.compose(w, rng() % src.rep_count());
}

}  // namespace

TEST(Codec, EncodeExamples) {
  const auto fx = corpus::z11_hamming();
  const PartitionCode code = construct_mpc(fx.parent);
  const Vec z4(4, 0);
  EXPECT_EQ(encode(code, Tuple(3, z4)), (std::vector<Vec>{{0, 0}, {0, 0}, {0, 0}}));
  const Vec e1 = corpus::unit(4, 0);
  EXPECT_EQ(encode(code, {e1, e1, e1}), (std::vector<Vec>{{1, 0}, {0, 1}, {10, 10}}));
  EXPECT_EQ(encode(code, {z4, z4, corpus::unit(4, 2, 2)}), (std::vector<Vec>{{0, 0}, {0, 0}, {2, 3}}));
  EXPECT_MPC_ERROR(encode(code, {e1, e1}), ErrorCode::ShapeError);
  EXPECT_MPC_ERROR(encode(code, {e1, e1, Vec{1}}), ErrorCode::ShapeError);
}

TEST(Codec, Linearity) {
  std::mt19937 rng(4);
  for (const auto& fx : corpus::printed()) {
    const PartitionCode code(fx.printed_encoders);
    const Field& f = fx.source.field();
    for (int t = 0; t < 50; ++t) {
      const Tuple a = random_tuple(f, code.block_len(), code.terminals(), rng), b = random_tuple(f, code.block_len(), code.terminals(), rng);
      Tuple sum(code.terminals());
      for (std::size_t i = 0; i < code.terminals(); ++i) sum[i] = vec_add(f, a[i], b[i]);
      const auto ya = encode(code, a), yb = encode(code, b), ys = encode(code, sum);
      for (std::size_t i = 0; i < code.terminals(); ++i) EXPECT_EQ(ys[i], vec_add(f, ya[i], yb[i]));
    }
  }
}

TEST(Codec, DecoderTables) {
  const auto fx = corpus::z11_hamming();
  EXPECT_EQ(Decoder(construct_mpc(fx.parent), fx.source).table_size(), 121U);
  const auto g = corpus::gf4_s2(0);
  EXPECT_EQ(Decoder(corpus::build(g), g.source).table_size(), 16U);
  EXPECT_MPC_ERROR(Decoder(PartitionCode(fx.printed_encoders), fx.source), ErrorCode::NoWitness);
  auto dup = corpus::z11_blocks();
  for (std::size_t i = 0; i < 2; ++i) dup[1](i, 0) = dup[0](i, 0);
  dup[2] = -(dup[0] + dup[1]);
  EXPECT_MPC_ERROR(Decoder(construct_mpc(ParentMatrix(dup)), fx.source), ErrorCode::DuplicateSyndrome);
}

TEST(Codec, PerfectTablesFillTheSyndromeSpace) {
  for (const auto& fx : corpus::all_parents()) {
    const Decoder dec(corpus::build(fx), fx.source);
    const auto full = *checked_pow(fx.source.field().order(), fx.parent.height());
    if (fx.perfect) {
      EXPECT_EQ(dec.table_size(), full) << fx.name;
      for (std::uint64_t i = 0; i < full; ++i) EXPECT_NE(dec.lookup(vector_at(fx.source.field().order(), fx.parent.height(), i)), nullptr);
    } else {
      EXPECT_LT(dec.table_size(), full) << fx.name;
    }
  }
}

TEST(Codec, DecodeExamples) {
  const auto fx = corpus::z11_hamming();
  const PartitionCode code = construct_mpc(fx.parent);
  const Decoder dec(code, fx.source);
  const Vec e1 = corpus::unit(4, 0);
  const Tuple sigma{e1, e1, e1};
  EXPECT_EQ(dec.decode(encode(code, sigma)), sigma);
  EXPECT_EQ(dec.decode({{0, 0}, {0, 0}, {0, 0}}), Tuple(3, Vec(4, 0)));
  EXPECT_MPC_ERROR(dec.decode({{0, 0}, {0, 0}}), ErrorCode::ShapeError);
  EXPECT_MPC_ERROR(dec.decode({{0, 0}, {0, 0}, {0}}), ErrorCode::ShapeError);
}

TEST(Codec, RejectsCodewordsOutsideTheImage) {
  // Binary Hamming, s = 2, n = 2: three representatives but four syndromes.
  const auto fx = corpus::z2_s2(2);
  const PartitionCode code = corpus::build(fx);
  const Decoder dec(code, fx.source);
  ASSERT_EQ(dec.table_size(), 3U);
  std::size_t rejected = 0;
  const std::size_t total_len = code.total_length();
  for (std::uint64_t idx = 0; idx < (1ULL << total_len); ++idx) {
    const Vec flat = vector_at(2, total_len, idx);
    std::vector<Vec> y;
    std::size_t off = 0;
    for (std::size_t i = 0; i < code.terminals(); ++i) {
      y.emplace_back(flat.begin() + static_cast<long>(off), flat.begin() + static_cast<long>(off + code.encoded_len(i)));
      off += code.encoded_len(i);
    }
    try {
      const Tuple x = dec.decode(y);
      EXPECT_EQ(encode(code, x), y);
      EXPECT_TRUE(fx.source.contains(x));
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::UnknownSyndrome);
      ++rejected;
      EXPECT_MPC_ERROR(oracle_decode(code, fx.source, y), ErrorCode::NotFound);
    }
  }
  // |image| = |S| = 4 * 3 out of 2^M codewords
  EXPECT_EQ((1ULL << total_len) - rejected, *fx.source.size());
}

TEST(Codec, OracleAgreesWithTheDecoder) {
  const auto fx = corpus::z11_hamming();
  const PartitionCode code = construct_mpc(fx.parent);
  const Decoder dec(code, fx.source);
  const OracleDecoder oracle(code, fx.source);
  EXPECT_EQ(oracle.image_size(), *fx.source.size());
  std::mt19937 rng(10);
  for (int t = 0; t < 10'000; ++t) {
    const Tuple sigma = random_member(fx.source, rng);
    const auto y = encode(code, sigma);
    ASSERT_EQ(oracle.decode(y), sigma);
    ASSERT_EQ(dec.decode(y), sigma);
  }
  // the scanning oracle agrees on a handful
  for (int t = 0; t < 3; ++t) {
    const Tuple sigma = random_member(fx.source, rng);
    EXPECT_EQ(oracle_decode(code, fx.source, encode(code, sigma)), sigma);
  }
}

TEST(Codec, OracleErrors) {
  const auto fx = corpus::z11_hamming();
  std::vector<Matrix> encoders = fx.printed_encoders;
  encoders[2] = encoders[2].row_range(0, 1);
  const PartitionCode bad(encoders);
  const auto rep = verify_compression(bad, fx.source);
  ASSERT_TRUE(rep.counterexample);
  EXPECT_MPC_ERROR(oracle_decode(bad, fx.source, encode(bad, rep.counterexample->first)), ErrorCode::Ambiguous);
  EXPECT_MPC_ERROR(oracle_decode(bad, fx.source, encode(bad, rep.counterexample->first), 1000), ErrorCode::TooLarge);
  const OracleDecoder oracle(bad, fx.source);
  EXPECT_MPC_ERROR(oracle.decode(encode(bad, rep.counterexample->first)), ErrorCode::Ambiguous);
  EXPECT_MPC_ERROR(OracleDecoder(bad, fx.source, 1000), ErrorCode::TooLarge);
}

// Every corpus code decodes every source element (sampled above 2e6 elements).
TEST(Codec, ZeroErrorRoundTrip) {
  for (const auto& fx : corpus::all_parents()) {
    const PartitionCode code = corpus::build(fx);
    const Decoder dec(code, fx.source);
    const Source& src = fx.source;
    std::atomic<std::uint64_t> failures{0}, tested{0};
    if (*src.size() <= 2'000'000) {
      parallel_ranges(*src.shift_count(), resolve_workers(0), [&](unsigned, std::uint64_t b, std::uint64_t e) {
        for (auto wi = b; wi < e; ++wi) {
          const Vec w = vector_at(src.field().order(), src.block_len(), wi);
          for (std::size_t k = 0; k < src.rep_count(); ++k) {
            const Tuple sigma = src.compose(w, k);
            if (dec.decode(encode(code, sigma)) != sigma) ++failures;
            ++tested;
          }
        }
      });
      EXPECT_EQ(tested.load(), *src.size());
    } else {
      std::mt19937 rng(1);
      for (int t = 0; t < 100'000; ++t) {
        const Tuple sigma = random_member(src, rng);
        if (dec.decode(encode(code, sigma)) != sigma) ++failures;
      }
    }
    EXPECT_EQ(failures.load(), 0U) << fx.name;
  }
}
