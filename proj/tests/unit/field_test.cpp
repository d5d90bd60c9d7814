#include <gtest/gtest.h>

#include <set>

#include "expect_error.hpp"
#include "mpc/field.hpp"

using mpc::Elem;
using mpc::ErrorCode;
using mpc::Field;

namespace {

// Schoolbook product of coefficient vectors reduced by a monic modulus; shares
// nothing with the library's tables.
std::vector<std::uint32_t> poly_mulmod(std::uint32_t p, const std::vector<std::uint32_t>& mod,
                                       const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  const std::size_t u = mod.size() - 1;
  std::vector<std::uint32_t> prod(2 * u, 0);
  for (std::size_t i = 0; i < u; ++i)
    for (std::size_t j = 0; j < u; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  for (std::size_t d = prod.size(); d-- > u;) {
    const std::uint32_t c = prod[d];
    if (!c) continue;
    for (std::size_t k = 0; k <= u; ++k) prod[d - u + k] = (prod[d - u + k] + (p - c) * mod[k] % p) % p;
  }
  prod.resize(u);
  return prod;
}

struct FieldCase {
  std::uint32_t characteristic, extension_degree;
  std::vector<std::uint32_t> modulus;
};

std::vector<FieldCase> small_fields() {
  return {{2, 1, {}},          {3, 1, {}},          {5, 1, {}},           {7, 1, {}},
          {11, 1, {}},         {13, 1, {}},         {2, 2, {1, 1, 1}},    {2, 3, {1, 1, 0, 1}},
          {3, 2, {1, 0, 1}},   {2, 4, {1, 1, 0, 0, 1}}, {5, 2, {2, 0, 1}}};
}

}  // namespace

TEST(Field, MakesPrimeAndExtensionFields) {
  const Field z11 = Field::make(11);
  EXPECT_EQ(z11.order(), 11U);
  EXPECT_TRUE(z11.is_prime_field());
  const Field gf4 = Field::make(2, 2, {1, 1, 1});
  EXPECT_EQ(gf4.order(), 4U);
  EXPECT_FALSE(gf4.is_prime_field());
}

TEST(Field, RejectsBadParameters) {
  EXPECT_MPC_ERROR(Field::make(4), ErrorCode::NonPrimeP);
  EXPECT_MPC_ERROR(Field::make(1), ErrorCode::NonPrimeP);
  EXPECT_MPC_ERROR(Field::make(2, 2, {1, 0, 1}), ErrorCode::ReducibleModulus);  // (x+1)^2
  EXPECT_MPC_ERROR(Field::make(2, 2), ErrorCode::DegreeMismatch);
  EXPECT_MPC_ERROR(Field::make(5, 1, {1, 1}), ErrorCode::DegreeMismatch);
  EXPECT_MPC_ERROR(Field::make(2, 2, {1, 1, 0, 1}), ErrorCode::DegreeMismatch);
}

TEST(Field, Gf4AlphaSquaredIsAlphaPlusOne) {
  const Field f = Field::make(2, 2, {1, 1, 1});
  const Elem alpha = f.from_coeffs(std::vector<std::uint32_t>{0, 1});
  const Elem alpha_plus_one = f.from_coeffs(std::vector<std::uint32_t>{1, 1});
  EXPECT_EQ(f.mul(alpha, alpha), alpha_plus_one);
  EXPECT_EQ(f.add(f.mul(alpha, alpha), f.add(alpha, f.one())), f.zero());
}

TEST(Field, SmallArithmeticFacts) {
  const Field z11 = Field::make(11);
  EXPECT_EQ(z11.add(9, 2), 0U);
  const Field z5 = Field::make(5);
  EXPECT_EQ(z5.inv(2), 3U);
  EXPECT_MPC_ERROR(z5.inv(0), ErrorCode::ZeroInverse);
  EXPECT_EQ(z11.from_int(-2), 9U);
}

TEST(Field, ElementsAreZeroFirstAndDistinct) {
  const Field z5 = Field::make(5);
  auto els = z5.elements();
  ASSERT_EQ(els.size(), 5U);
  for (Elem a = 0; a < 5; ++a) EXPECT_EQ(els[a].code(), a);
  const Field gf4 = Field::make(2, 2, {1, 1, 1});
  auto g = gf4.elements();
  ASSERT_EQ(g.size(), 4U);
  EXPECT_TRUE(g.front().is_zero());
  std::set<std::vector<std::uint32_t>> coeffs;
  for (const auto& e : g) coeffs.insert(e.coeffs());
  EXPECT_EQ(coeffs.size(), 4U);
  EXPECT_EQ(Field::make(11).elements().size(), 11U);
}

TEST(Field, FieldElemOperatorsAndMismatch) {
  const Field z7 = Field::make(7);
  const auto a = z7.elem(3), b = z7.elem(5);
  EXPECT_EQ((a + b).code(), 1U);
  EXPECT_EQ((a * b).code(), 1U);
  EXPECT_EQ((a / b * b), a);
  EXPECT_EQ((-a).code(), 4U);
  const Field z5 = Field::make(5);
  EXPECT_MPC_ERROR(a + z5.elem(1), ErrorCode::FieldMismatch);
}

TEST(Field, ExtensionProductsMatchPolynomialArithmetic) {
  for (const auto& fc : small_fields()) {
    if (fc.extension_degree == 1) continue;
    const Field f = Field::make(fc.characteristic, fc.extension_degree, fc.modulus);
    for (Elem a = 0; a < f.order(); ++a) {
      for (Elem b = 0; b < f.order(); ++b) {
        EXPECT_EQ(f.coeffs(f.mul(a, b)), poly_mulmod(fc.characteristic, fc.modulus, f.coeffs(a), f.coeffs(b))) << f.name();
        std::vector<std::uint32_t> sum(fc.extension_degree);
        for (std::size_t i = 0; i < fc.extension_degree; ++i) sum[i] = (f.coeffs(a)[i] + f.coeffs(b)[i]) % fc.characteristic;
        EXPECT_EQ(f.coeffs(f.add(a, b)), sum);
      }
    }
  }
}

TEST(Field, AxiomsHoldExhaustively) {
  for (const auto& fc : small_fields()) {
    const Field f = Field::make(fc.characteristic, fc.extension_degree, fc.modulus);
    const Elem q = f.order();
    for (Elem a = 0; a < q; ++a) {
      EXPECT_EQ(f.add(a, 0), a);
      EXPECT_EQ(f.mul(a, 1), a);
      EXPECT_EQ(f.add(a, f.neg(a)), 0U);
      EXPECT_EQ(f.mul(a, 0), 0U);
      if (a) {
        EXPECT_EQ(f.mul(a, f.inv(a)), 1U);
        EXPECT_EQ(f.inv(f.inv(a)), a);
        EXPECT_EQ(f.pow(a, q - 1), 1U) << f.name();
      }
      for (Elem b = 0; b < q; ++b) {
        EXPECT_EQ(f.add(a, b), f.add(b, a));
        EXPECT_EQ(f.mul(a, b), f.mul(b, a));
        if (a && b) EXPECT_NE(f.mul(a, b), 0U);
        for (Elem c = 0; c < q; ++c) {
          ASSERT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
          ASSERT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
          ASSERT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        }
      }
    }
  }
}

TEST(Field, MultiplicativeGroupOrder) {
  // The smallest e > 0 with a^e = 1 divides q - 1, and some element reaches q - 1.
  for (const auto& fc : small_fields()) {
    const Field f = Field::make(fc.characteristic, fc.extension_degree, fc.modulus);
    const Elem q = f.order();
    bool primitive = false;
    for (Elem a = 1; a < q; ++a) {
      Elem x = a;
      std::uint32_t ord = 1;
      while (x != 1) {
        x = f.mul(x, a);
        ++ord;
      }
      EXPECT_EQ((q - 1) % ord, 0U);
      primitive = primitive || ord == q - 1;
    }
    EXPECT_TRUE(primitive) << f.name();
  }
}

TEST(Field, PrimalityHelper) {
  EXPECT_TRUE(mpc::is_prime(2));
  EXPECT_TRUE(mpc::is_prime(11));
  EXPECT_FALSE(mpc::is_prime(1));
  EXPECT_FALSE(mpc::is_prime(25));
}
