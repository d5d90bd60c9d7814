#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "mpc/error.hpp"

namespace mpc {

/// Compact element code. For GF(p^u) the code is sum_i c_i * p^i where c_i is
/// the coefficient of alpha^i, so code order is the canonical enumeration order
/// and equality of codes is equality of elements.
using Elem = std::uint32_t;

class FieldElem;

namespace detail {

struct FieldData {
  std::uint32_t characteristic = 0;
  std::uint32_t extension_degree = 0;
  std::uint32_t order = 0;
  std::vector<std::uint32_t> modulus;  // constant term first, monic, length degree+1 (empty for prime fields)
  // Dense tables; built for prime fields up to 2^16 (inverse only) and for
  // extension fields up to kTableLimit elements (add/mul/neg/inverse).
  std::vector<Elem> add_table;
  std::vector<Elem> mul_table;
  std::vector<Elem> neg_table;
  std::vector<Elem> inv_table;
};

inline constexpr std::uint32_t kTableLimit = 1024;

Elem slow_add(const FieldData& f, Elem a, Elem b);
Elem slow_mul(const FieldData& f, Elem a, Elem b);
Elem slow_neg(const FieldData& f, Elem a);
Elem slow_inv(const FieldData& f, Elem a);

}  // namespace detail

/// A finite field Z_p or GF(p^u) with an explicit irreducible modulus.
/// Cheap to copy; the underlying tables are shared and immutable.
class Field {
 public:
  /// Validates p (trial division) and, for u > 1, the modulus: monic,
  /// degree exactly u, and without monic factors of degree <= u/2.
  static Field make(std::uint32_t p, std::uint32_t u = 1, std::vector<std::uint32_t> modulus = {});

  std::uint32_t characteristic() const noexcept { return data_->characteristic; }
  std::uint32_t extension_degree() const noexcept { return data_->extension_degree; }
  std::uint32_t order() const noexcept { return data_->order; }
  const std::vector<std::uint32_t>& modulus() const noexcept { return data_->modulus; }
  bool is_prime_field() const noexcept { return data_->extension_degree == 1; }

  Elem zero() const noexcept { return 0; }
  Elem one() const noexcept { return 1; }

  Elem add(Elem a, Elem b) const noexcept {
    const auto& f = *data_;
    if (f.extension_degree == 1) {
      const Elem terms = a + b;
      return terms >= f.characteristic ? terms - f.characteristic : terms;
    }
    if (!f.add_table.empty()) return f.add_table[static_cast<std::size_t>(a) * f.order + b];
    return detail::slow_add(f, a, b);
  }

  Elem neg(Elem a) const noexcept {
    const auto& f = *data_;
    if (f.extension_degree == 1) return a == 0 ? 0 : f.characteristic - a;
    if (!f.neg_table.empty()) return f.neg_table[a];
    return detail::slow_neg(f, a);
  }

  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

  Elem mul(Elem a, Elem b) const noexcept {
    const auto& f = *data_;
    if (f.extension_degree == 1) return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % f.characteristic);
    if (!f.mul_table.empty()) return f.mul_table[static_cast<std::size_t>(a) * f.order + b];
    return detail::slow_mul(f, a, b);
  }

  /// Throws Error(ZeroInverse) for a == 0.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const noexcept;

  /// Image of an integer in the prime subfield (negative values wrap).
  Elem from_int(std::int64_t v) const noexcept;
  /// Throws ShapeError on a wrong length or an out-of-range coefficient.
  Elem from_coeffs(std::span<const std::uint32_t> coeffs) const;
  std::vector<std::uint32_t> coeffs(Elem a) const;
  bool contains(Elem a) const noexcept { return a < data_->order; }

  FieldElem elem(Elem code) const;
  /// All p^u elements, zero first, in code order.
  std::vector<FieldElem> elements() const;

  /// "Z11" or "GF(2^2)".
  std::string name() const;

  friend bool operator==(const Field& a, const Field& b) noexcept {
    return a.data_ == b.data_ ||
           (a.data_->characteristic == b.data_->characteristic && a.data_->extension_degree == b.data_->extension_degree && a.data_->modulus == b.data_->modulus);
  }

 private:
  explicit Field(std::shared_ptr<const detail::FieldData> data) : data_(std::move(data)) {}
  std::shared_ptr<const detail::FieldData> data_;
};

/// A field element bound to its field; arithmetic across different fields
/// throws Error(FieldMismatch).
class FieldElem {
 public:
  FieldElem(Field field, Elem code);

  const Field& field() const noexcept { return field_; }
  Elem code() const noexcept { return code_; }
  std::vector<std::uint32_t> coeffs() const { return field_.coeffs(code_); }
  bool is_zero() const noexcept { return code_ == 0; }

  FieldElem inverse() const { return {field_, field_.inv(code_)}; }

  friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a) { return {a.field_, a.field_.neg(a.code_)}; }

  friend bool operator==(const FieldElem& a, const FieldElem& b) noexcept {
    return a.code_ == b.code_ && a.field_ == b.field_;
  }

 private:
  Field field_;
  Elem code_;
};

bool is_prime(std::uint64_t len) noexcept;

}  // namespace mpc
