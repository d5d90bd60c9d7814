#include "mpc/hashing.hpp"

#include <algorithm>
#include <limits>

namespace mpc {

std::optional<std::uint64_t> checked_pow(std::uint64_t q, std::uint64_t e) noexcept {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (q != 0 && r > std::numeric_limits<std::uint64_t>::max() / q) return std::nullopt;
    r *= q;
  }
  return r;
}

std::vector<Elem> vector_at(std::uint32_t q, std::size_t n, std::uint64_t index) {
  std::vector<Elem> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = static_cast<Elem>(index % q);
    index /= q;
  }
  return v;
}

std::uint64_t index_of(std::uint32_t q, std::span<const Elem> v) noexcept {
  std::uint64_t idx = 0;
  for (std::size_t i = v.size(); i-- > 0;) idx = idx * q + v[i];
  return idx;
}

VectorCodec::VectorCodec(std::uint32_t q, std::size_t len) : q_(q), len_(len), per_word_(0), words_(1) {
  // digits per 64-bit word: largest d with q^d representable
  std::uint64_t cap = 1;
  while (cap <= std::numeric_limits<std::uint64_t>::max() / q_) {
    cap *= q_;
    ++per_word_;
  }
  if (per_word_ == 0) per_word_ = 1;
  words_ = len_ <= per_word_ ? 1 : (len_ + per_word_ - 1) / per_word_;
}

std::uint64_t VectorCodec::pack(std::span<const Elem> v) const noexcept {
  std::uint64_t k = 0;
  for (std::size_t i = v.size(); i-- > 0;) k = k * q_ + v[i];
  return k;
}

std::vector<std::uint64_t> VectorCodec::pack_wide(std::span<const Elem> v) const {
  std::vector<std::uint64_t> out(words_, 0);
  for (std::size_t w = 0; w < words_; ++w) {
    const std::size_t begin = w * per_word_;
    const std::size_t end = std::min(v.size(), begin + per_word_);
    std::uint64_t k = 0;
    for (std::size_t i = end; i-- > begin;) k = k * q_ + v[i];
    out[w] = k;
  }
  return out;
}

}  // namespace mpc
