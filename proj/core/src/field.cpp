#include "mpc/field.hpp"

#include <limits>

namespace mpc {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonPrimeP: return "NonPrimeP";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::ZeroInverse: return "ZeroInverse";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::DependentRows: return "DependentRows";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::Inconsistent: return "Inconsistent";
    case ErrorCode::NotInRowSpace: return "NotInRowSpace";
    case ErrorCode::ShiftCollision: return "ShiftCollision";
    case ErrorCode::ShapeError: return "ShapeError";
    case ErrorCode::ZeroInL: return "ZeroInL";
    case ErrorCode::NotInSource: return "NotInSource";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NoDecomposition: return "NoDecomposition";
    case ErrorCode::NotPerfectSize: return "NotPerfectSize";
    case ErrorCode::IndivisibleSN: return "IndivisibleSN";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::ProportionalColumns: return "ProportionalColumns";
    case ErrorCode::BadPartition: return "BadPartition";
    case ErrorCode::NonInvertibleU: return "NonInvertibleU";
    case ErrorCode::NotInjectiveStack: return "NotInjectiveStack";
    case ErrorCode::WrongNullspace: return "WrongNullspace";
    case ErrorCode::NoWitness: return "NoWitness";
    case ErrorCode::DuplicateSyndrome: return "DuplicateSyndrome";
    case ErrorCode::UnknownSyndrome: return "UnknownSyndrome";
    case ErrorCode::Ambiguous: return "Ambiguous";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::DecompositionMismatch: return "DecompositionMismatch";
    case ErrorCode::InvalidCompression: return "InvalidCompression";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t len) noexcept {
  if (len < 2) return false;
  for (std::uint64_t d = 2; d * d <= len; ++d) {
    if (len % d == 0) return false;
  }
  return true;
}

namespace {

using Poly = std::vector<std::uint32_t>;  // constant term first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // p is prime; Fermat.
  std::uint64_t result = 1, base = a % p, e = p - 2;
  while (e > 0) {
    if (e & 1U) result = result * base % p;
    base = base * base % p;
    e >>= 1U;
  }
  return static_cast<std::uint32_t>(result);
}

// Remainder of a modulo the monic polynomial m.
Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  const std::size_t dm = m.size() - 1;
  trim(a);
  while (a.size() > dm) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      const std::uint64_t sub = lead * m[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

Poly decode(const detail::FieldData& f, Elem code) {
  Poly c(f.extension_degree, 0);
  for (std::uint32_t i = 0; i < f.extension_degree; ++i) {
    c[i] = code % f.characteristic;
    code /= f.characteristic;
  }
  return c;
}

Elem encode(const detail::FieldData& f, const Poly& c) {
  Elem code = 0;
  for (std::size_t i = c.size(); i-- > 0;) code = code * f.characteristic + c[i];
  return code;
}

bool modulus_irreducible(const Poly& m, std::uint32_t p) {
  const std::size_t u = m.size() - 1;
  if (u <= 1) return true;
  // Try every monic divisor candidate of degree 1..u/2.
  for (std::size_t d = 1; d <= u / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly g(d + 1, 0);
      std::uint64_t t = idx;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(t % p);
        t /= p;
      }
      g[d] = 1;
      if (poly_mod(m, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

namespace detail {

Elem slow_add(const FieldData& f, Elem a, Elem b) {
  Poly x = decode(f, a), y = decode(f, b);
  for (std::uint32_t i = 0; i < f.extension_degree; ++i) x[i] = (x[i] + y[i]) % f.characteristic;
  return encode(f, x);
}

Elem slow_neg(const FieldData& f, Elem a) {
  Poly x = decode(f, a);
  for (auto& c : x) c = c == 0 ? 0 : f.characteristic - c;
  return encode(f, x);
}

Elem slow_mul(const FieldData& f, Elem a, Elem b) {
  const Poly x = decode(f, a), y = decode(f, b);
  Poly prod(2 * f.extension_degree - 1, 0);
  for (std::uint32_t i = 0; i < f.extension_degree; ++i) {
    for (std::uint32_t j = 0; j < f.extension_degree; ++j) {
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(x[i]) * y[j]) % f.characteristic);
    }
  }
  Poly r = poly_mod(std::move(prod), f.modulus, f.characteristic);
  r.resize(f.extension_degree, 0);
  return encode(f, r);
}

Elem slow_inv(const FieldData& f, Elem a) {
  // a^(q-2) by square-and-multiply.
  Elem result = 1, base = a;
  std::uint64_t e = static_cast<std::uint64_t>(f.order) - 2;
  while (e > 0) {
    if (e & 1U) result = slow_mul(f, result, base);
    base = slow_mul(f, base, base);
    e >>= 1U;
  }
  return result;
}

}  // namespace detail

Field Field::make(std::uint32_t p, std::uint32_t u, std::vector<std::uint32_t> modulus) {
  if (!is_prime(p)) throw Error(ErrorCode::NonPrimeP, std::to_string(p) + " is not prime");
  if (u < 1) throw Error(ErrorCode::DegreeMismatch, "extension degree must be >= 1");
  if (u == 1 && !modulus.empty()) {
    throw Error(ErrorCode::DegreeMismatch, "a modulus is only accepted for u > 1");
  }
  if (u > 1 && modulus.size() != static_cast<std::size_t>(u) + 1) {
    throw Error(ErrorCode::DegreeMismatch,
                "modulus must have u+1 = " + std::to_string(u + 1) + " coefficients");
  }
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < u; ++i) {
    q *= p;
    if (q > static_cast<std::uint64_t>(std::numeric_limits<std::int32_t>::max())) {
      throw Error(ErrorCode::DegreeMismatch, "field order exceeds 2^31");
    }
  }

  auto data = std::make_shared<detail::FieldData>();
  data->characteristic = p;
  data->extension_degree = u;
  data->order = static_cast<std::uint32_t>(q);

  if (u > 1) {
    for (auto c : modulus) {
      if (c >= p) throw Error(ErrorCode::DegreeMismatch, "modulus coefficient out of range");
    }
    if (modulus.back() != 1) throw Error(ErrorCode::DegreeMismatch, "modulus must be monic");
    if (!modulus_irreducible(modulus, p)) {
      throw Error(ErrorCode::ReducibleModulus, "modulus is reducible over Z_" + std::to_string(p));
    }
    data->modulus = std::move(modulus);
    if (data->order <= detail::kTableLimit) {
      const std::size_t qq = data->order;
      data->add_table.resize(qq * qq);
      data->mul_table.resize(qq * qq);
      data->neg_table.resize(qq);
      data->inv_table.assign(qq, 0);
      for (Elem a = 0; a < qq; ++a) {
        data->neg_table[a] = detail::slow_neg(*data, a);
        for (Elem b = 0; b < qq; ++b) {
          data->add_table[a * qq + b] = detail::slow_add(*data, a, b);
          data->mul_table[a * qq + b] = detail::slow_mul(*data, a, b);
        }
      }
      for (Elem a = 1; a < qq; ++a) {
        for (Elem b = 1; b < qq; ++b) {
          if (data->mul_table[a * qq + b] == 1) {
            data->inv_table[a] = b;
            break;
          }
        }
      }
    }
  } else if (p <= (1U << 16)) {
    data->inv_table.assign(p, 0);
    for (Elem a = 1; a < p; ++a) data->inv_table[a] = inv_mod(a, p);
  }
  return Field(std::move(data));
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw Error(ErrorCode::ZeroInverse, "zero has no inverse in " + name());
  const auto& f = *data_;
  if (!f.inv_table.empty()) return f.inv_table[a];
  if (f.extension_degree == 1) return inv_mod(a, f.characteristic);
  return detail::slow_inv(f, a);
}

Elem Field::pow(Elem a, std::uint64_t e) const noexcept {
  Elem result = 1, base = a;
  while (e > 0) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return result;
}

Elem Field::from_int(std::int64_t v) const noexcept {
  const auto p = static_cast<std::int64_t>(data_->characteristic);
  std::int64_t r = v % p;
  if (r < 0) r += p;
  return static_cast<Elem>(r);
}

Elem Field::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() != data_->extension_degree) {
    throw Error(ErrorCode::ShapeError, "expected " + std::to_string(data_->extension_degree) + " coefficients");
  }
  for (auto c : coeffs) {
    if (c >= data_->characteristic) throw Error(ErrorCode::ShapeError, "coefficient out of range");
  }
  return encode(*data_, Poly(coeffs.begin(), coeffs.end()));
}

std::vector<std::uint32_t> Field::coeffs(Elem a) const { return decode(*data_, a); }

FieldElem Field::elem(Elem code) const { return FieldElem(*this, code); }

std::vector<FieldElem> Field::elements() const {
  std::vector<FieldElem> out;
  out.reserve(order());
  for (Elem a = 0; a < order(); ++a) out.emplace_back(*this, a);
  return out;
}

std::string Field::name() const {
  if (data_->extension_degree == 1) return "Z" + std::to_string(data_->characteristic);
  return "GF(" + std::to_string(data_->characteristic) + "^" + std::to_string(data_->extension_degree) + ")";
}

FieldElem::FieldElem(Field field, Elem code) : field_(std::move(field)), code_(code) {
  if (!field_.contains(code_)) throw Error(ErrorCode::ShapeError, "element code out of range");
}

namespace {
void require_same(const FieldElem& a, const FieldElem& b) {
  if (!(a.field() == b.field())) {
    throw Error(ErrorCode::FieldMismatch, a.field().name() + " vs " + b.field().name());
  }
}
}  // namespace

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
  require_same(a, b);
  return {a.field_, a.field_.add(a.code_, b.code_)};
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) {
  require_same(a, b);
  return {a.field_, a.field_.sub(a.code_, b.code_)};
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  require_same(a, b);
  return {a.field_, a.field_.mul(a.code_, b.code_)};
}

FieldElem operator/(const FieldElem& a, const FieldElem& b) {
  require_same(a, b);
  return {a.field_, a.field_.div(a.code_, b.code_)};
}

}  // namespace mpc
