#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mpc/hashing.hpp"
#include "mpc/linalg.hpp"

namespace mpc {

/// One joint output (x_1, ..., x_s); every component has length n.
using Tuple = std::vector<Vec>;

enum class SourceKind { Hamming, GeneralizedHamming, Explicit };

std::string_view to_string(SourceKind kind) noexcept;

inline constexpr std::uint64_t kDefaultEnumerationCap = 50'000'000;

/// A deviation-symmetric source given by its representative set D: the source
/// is every tuple (w, ..., w) + delta with w in F^n and delta in D.
class Source {
 public:
  /// Validates shapes and that no two representatives differ by a uniform
  /// shift. Throws ShapeError / ShiftCollision.
  static Source make(Field field, std::size_t len, std::size_t terms, std::vector<Tuple> reps,
                     SourceKind kind = SourceKind::Explicit, std::vector<Elem> deviation_set = {});

  const Field& field() const noexcept { return field_; }
  std::size_t block_len() const noexcept { return n_; }
  std::size_t terminals() const noexcept { return s_; }
  const std::vector<Tuple>& reps() const noexcept { return reps_; }
  std::size_t rep_count() const noexcept { return reps_.size(); }
  SourceKind kind() const noexcept { return kind_; }
  /// The deviation scalars for the Hamming kinds (all of F* for Hamming).
  const std::vector<Elem>& deviation_set() const noexcept { return deviation_set_; }

  /// |F|^n, or nullopt on overflow.
  std::optional<std::uint64_t> shift_count() const noexcept;
  /// |S| = |F|^n |D|, or nullopt on overflow.
  std::optional<std::uint64_t> size() const noexcept;

  /// Stacked form of every representative, in D order.
  std::vector<Vec> vectorize() const;
  static Vec stack(const Tuple& t);
  Tuple unstack(std::span<const Elem> v) const;

  /// (w, ..., w) + reps()[index].
  Tuple compose(std::span<const Elem> w, std::size_t index) const;

  struct Decomposition {
    Vec shift;
    std::size_t index;
  };
  /// Throws NotInSource (or ShapeError).
  Decomposition decompose(const Tuple& sigma) const;
  std::optional<Decomposition> try_decompose(const Tuple& sigma) const;
  bool contains(const Tuple& sigma) const { return try_decompose(sigma).has_value(); }

  /// Calls fn(shift_index, rep_index, sigma) for every element of S in
  /// shift-major order. Throws TooLarge above `cap`.
  void for_each_element(const std::function<void(std::uint64_t, std::size_t, const Tuple&)>& fn,
                        std::uint64_t cap = kDefaultEnumerationCap) const;

 private:
  Source(Field field, std::size_t len, std::size_t terms)
      : field_(std::move(field)), n_(len), s_(terms), canonical_(field_.order(), (terms > 0 ? terms - 1 : 0) * len) {}

  // First s-1 components of sigma minus (sigma_s, ..., sigma_s), stacked.
  Vec canonical_key(const Tuple& sigma) const;
  void check_shape(const Tuple& t) const;

  Field field_;
  std::size_t n_;
  std::size_t s_;
  std::vector<Tuple> reps_;
  SourceKind kind_ = SourceKind::Explicit;
  std::vector<Elem> deviation_set_;
  VectorMap<std::size_t> canonical_;
};

/// D for the Hamming source: the zero tuple plus a*e_j at one terminal
/// (s >= 3), or (0, a*e_j) for s == 2.
Source hamming_source(const Field& field, std::size_t len, std::size_t terms);
/// Same shape with a restricted to `deviations`; for s == 2 the set is closed
/// under negation first. Throws ZeroInL.
Source generalized_hamming_source(const Field& field, std::size_t len, std::size_t terms, std::vector<Elem> deviations);

/// Replaces each delta by (v(delta), ..., v(delta)) + delta; same source.
Source rerepresent(const Source& source, const std::function<Vec(std::size_t, const Tuple&)>& shift_of);
/// Subtracts the chosen terminal's component from every component.
Source component_fix(const Source& source, std::size_t terminal);

/// Upper bound on the number of pair differences (|F|^n |D|^2), saturating.
std::uint64_t s_plus_bound(const Source& source) noexcept;
/// Calls fn(sigma) for every tuple (w + d_1 - f_1, ..., w + d_s - f_s), w in
/// F^n, delta and zeta in D, skipping the zero tuple. Repeats are not
/// filtered. Return false from fn to stop early. Throws TooLarge above cap.
void for_each_s_plus(const Source& source, const std::function<bool(const Tuple&)>& fn,
                     std::uint64_t cap = kDefaultEnumerationCap);

/// Sorted, duplicate-free nonzero elements; L together with -L.
std::vector<Elem> symmetric_closure(const Field& field, std::span<const Elem> set);

}  // namespace mpc
