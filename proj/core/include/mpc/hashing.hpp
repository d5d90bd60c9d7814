#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mpc/field.hpp"

namespace mpc {

/// q^e, or nullopt when it does not fit in 64 bits.
std::optional<std::uint64_t> checked_pow(std::uint64_t q, std::uint64_t e) noexcept;

/// The vector of F^n with the given index; coordinate 0 is the least
/// significant base-q digit.
std::vector<Elem> vector_at(std::uint32_t q, std::size_t n, std::uint64_t index);
/// Inverse of vector_at (caller guarantees q^n fits in 64 bits).
std::uint64_t index_of(std::uint32_t q, std::span<const Elem> v) noexcept;

/// Packs vectors of element codes into base-q machine words for hashing.
class VectorCodec {
 public:
  VectorCodec(std::uint32_t q, std::size_t len);

  std::size_t length() const noexcept { return len_; }
  bool single_word() const noexcept { return words_ == 1; }
  std::size_t words() const noexcept { return words_; }

  /// Only valid when single_word().
  std::uint64_t pack(std::span<const Elem> v) const noexcept;
  std::vector<std::uint64_t> pack_wide(std::span<const Elem> v) const;

 private:
  std::uint32_t q_;
  std::size_t len_;
  std::size_t per_word_;
  std::size_t words_;
};

struct WideKeyHash {
  std::size_t operator()(const std::vector<std::uint64_t>& k) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto w : k) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

/// Hash map keyed by fixed-length field vectors.
template <class Value>
class VectorMap {
 public:
  VectorMap(std::uint32_t q, std::size_t len) : codec_(q, len) {}

  /// Inserts if absent; returns the stored value and whether it was inserted.
  std::pair<const Value*, bool> emplace(std::span<const Elem> key, Value value) {
    if (codec_.single_word()) {
      auto [it, ok] = narrow_.emplace(codec_.pack(key), std::move(value));
      return {&it->second, ok};
    }
    auto [it, ok] = wide_.emplace(codec_.pack_wide(key), std::move(value));
    return {&it->second, ok};
  }

  const Value* find(std::span<const Elem> key) const {
    if (codec_.single_word()) {
      auto it = narrow_.find(codec_.pack(key));
      return it == narrow_.end() ? nullptr : &it->second;
    }
    auto it = wide_.find(codec_.pack_wide(key));
    return it == wide_.end() ? nullptr : &it->second;
  }

  bool contains(std::span<const Elem> key) const { return find(key) != nullptr; }
  std::size_t size() const noexcept { return codec_.single_word() ? narrow_.size() : wide_.size(); }
  void reserve(std::size_t n) {
    if (codec_.single_word()) narrow_.reserve(n);
    else wide_.reserve(n);
  }

 private:
  VectorCodec codec_;
  std::unordered_map<std::uint64_t, Value> narrow_;
  std::unordered_map<std::vector<std::uint64_t>, Value, WideKeyHash> wide_;
};

/// Set of fixed-length field vectors.
class VectorSet {
 public:
  VectorSet(std::uint32_t q, std::size_t len) : map_(q, len) {}
  bool insert(std::span<const Elem> v) { return map_.emplace(v, Unit{}).second; }
  bool contains(std::span<const Elem> v) const { return map_.contains(v); }
  std::size_t size() const noexcept { return map_.size(); }
  void reserve(std::size_t n) { map_.reserve(n); }

 private:
  struct Unit {};
  VectorMap<Unit> map_;
};

}  // namespace mpc
