#include "mpc/source.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace mpc {

std::string_view to_string(SourceKind kind) noexcept {
  switch (kind) {
    case SourceKind::Hamming: return "hamming";
    case SourceKind::GeneralizedHamming: return "generalized_hamming";
    case SourceKind::Explicit: return "explicit";
  }
  return "explicit";
}

Source Source::make(Field field, std::size_t len, std::size_t terms, std::vector<Tuple> reps, SourceKind kind,
                    std::vector<Elem> deviation_set) {
  if (len < 1) throw Error(ErrorCode::ShapeError, "block length must be >= 1");
  if (terms < 2) throw Error(ErrorCode::ShapeError, "need at least two terminals");
  if (reps.empty()) throw Error(ErrorCode::ShapeError, "representative set is empty");
  Source src(std::move(field), len, terms);
  src.kind_ = kind;
  src.deviation_set_ = std::move(deviation_set);
  src.canonical_.reserve(reps.size());
  for (std::size_t i = 0; i < reps.size(); ++i) {
    src.check_shape(reps[i]);
    const auto [prev, inserted] = src.canonical_.emplace(src.canonical_key(reps[i]), i);
    if (!inserted) {
      throw Error(ErrorCode::ShiftCollision, "representatives " + std::to_string(*prev) + " and " + std::to_string(i) +
                                                 " differ by a uniform shift");
    }
  }
  src.reps_ = std::move(reps);
  return src;
}

void Source::check_shape(const Tuple& t) const {
  if (t.size() != s_) {
    throw Error(ErrorCode::ShapeError, "tuple has " + std::to_string(t.size()) + " components, expected " + std::to_string(s_));
  }
  for (const auto& c : t) {
    if (c.size() != n_) throw Error(ErrorCode::ShapeError, "component length " + std::to_string(c.size()) + " != n");
    for (auto e : c) {
      if (!field_.contains(e)) throw Error(ErrorCode::ShapeError, "entry outside the field");
    }
  }
}

Vec Source::canonical_key(const Tuple& sigma) const {
  Vec key;
  key.reserve((s_ - 1) * n_);
  const Vec& last = sigma[s_ - 1];
  for (std::size_t i = 0; i + 1 < s_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) key.push_back(field_.sub(sigma[i][j], last[j]));
  }
  return key;
}

std::optional<std::uint64_t> Source::shift_count() const noexcept { return checked_pow(field_.order(), n_); }

std::optional<std::uint64_t> Source::size() const noexcept {
  auto shifts = shift_count();
  if (!shifts) return std::nullopt;
  const std::uint64_t d = reps_.size();
  if (*shifts > UINT64_MAX / d) return std::nullopt;
  return *shifts * d;
}

Vec Source::stack(const Tuple& t) {
  Vec out;
  for (const auto& c : t) out.insert(out.end(), c.begin(), c.end());
  return out;
}

Tuple Source::unstack(std::span<const Elem> v) const {
  if (v.size() != s_ * n_) throw Error(ErrorCode::ShapeError, "stacked vector has the wrong length");
  Tuple t(s_);
  for (std::size_t i = 0; i < s_; ++i) t[i].assign(v.begin() + static_cast<std::ptrdiff_t>(i * n_),
                                                   v.begin() + static_cast<std::ptrdiff_t>((i + 1) * n_));
  return t;
}

std::vector<Vec> Source::vectorize() const {
  std::vector<Vec> out;
  out.reserve(reps_.size());
  for (const auto& d : reps_) out.push_back(stack(d));
  return out;
}

Tuple Source::compose(std::span<const Elem> w, std::size_t index) const {
  if (w.size() != n_) throw Error(ErrorCode::ShapeError, "shift has the wrong length");
  Tuple t = reps_.at(index);
  for (auto& c : t) {
    for (std::size_t j = 0; j < n_; ++j) c[j] = field_.add(c[j], w[j]);
  }
  return t;
}

std::optional<Source::Decomposition> Source::try_decompose(const Tuple& sigma) const {
  check_shape(sigma);
  const std::size_t* idx = canonical_.find(canonical_key(sigma));
  if (idx == nullptr) return std::nullopt;
  // w = sigma_s - d_s
  const Vec& ds = reps_[*idx][s_ - 1];
  Vec w(n_);
  for (std::size_t j = 0; j < n_; ++j) w[j] = field_.sub(sigma[s_ - 1][j], ds[j]);
  return Decomposition{std::move(w), *idx};
}

Source::Decomposition Source::decompose(const Tuple& sigma) const {
  auto d = try_decompose(sigma);
  if (!d) throw Error(ErrorCode::NotInSource, "tuple is not a shifted representative");
  return *std::move(d);
}

void Source::for_each_element(const std::function<void(std::uint64_t, std::size_t, const Tuple&)>& fn,
                              std::uint64_t cap) const {
  const auto total = size();
  if (!total || *total > cap) throw Error(ErrorCode::TooLarge, "source has more than " + std::to_string(cap) + " elements");
  const std::uint64_t shifts = *shift_count();
  for (std::uint64_t wi = 0; wi < shifts; ++wi) {
    const Vec w = vector_at(field_.order(), n_, wi);
    for (std::size_t k = 0; k < reps_.size(); ++k) fn(wi, k, compose(w, k));
  }
}

namespace {

Tuple zero_tuple(std::size_t len, std::size_t terms) { return Tuple(terms, Vec(len, 0)); }

std::vector<Tuple> single_deviation_reps(std::size_t len, std::size_t terms, std::span<const Elem> scalars,
                                         std::size_t first_terminal) {
  std::vector<Tuple> reps{zero_tuple(len, terms)};
  for (std::size_t i = first_terminal; i < terms; ++i) {
    for (std::size_t j = 0; j < len; ++j) {
      for (auto a : scalars) {
        Tuple t = zero_tuple(len, terms);
        t[i][j] = a;
        reps.push_back(std::move(t));
      }
    }
  }
  return reps;
}

}  // namespace

std::vector<Elem> symmetric_closure(const Field& field, std::span<const Elem> set) {
  std::set<Elem> out;
  for (auto a : set) {
    if (a == 0) continue;
    out.insert(a);
    out.insert(field.neg(a));
  }
  return {out.begin(), out.end()};
}

Source hamming_source(const Field& field, std::size_t len, std::size_t terms) {
  std::vector<Elem> nonzero;
  for (Elem a = 1; a < field.order(); ++a) nonzero.push_back(a);
  auto reps = single_deviation_reps(len, terms, nonzero, terms == 2 ? 1 : 0);
  return Source::make(field, len, terms, std::move(reps), SourceKind::Hamming, std::move(nonzero));
}

Source generalized_hamming_source(const Field& field, std::size_t len, std::size_t terms, std::vector<Elem> deviations) {
  if (deviations.empty()) throw Error(ErrorCode::ZeroInL, "deviation set is empty");
  for (auto a : deviations) {
    if (!field.contains(a)) throw Error(ErrorCode::ShapeError, "deviation outside the field");
    if (a == 0) throw Error(ErrorCode::ZeroInL, "deviation set contains zero");
  }
  std::sort(deviations.begin(), deviations.end());
  deviations.erase(std::unique(deviations.begin(), deviations.end()), deviations.end());
  std::vector<Elem> scalars = terms == 2 ? symmetric_closure(field, deviations) : deviations;
  auto reps = single_deviation_reps(len, terms, scalars, terms == 2 ? 1 : 0);
  return Source::make(field, len, terms, std::move(reps), SourceKind::GeneralizedHamming, std::move(deviations));
}

Source rerepresent(const Source& source, const std::function<Vec(std::size_t, const Tuple&)>& shift_of) {
  std::vector<Tuple> reps;
  reps.reserve(source.rep_count());
  for (std::size_t k = 0; k < source.rep_count(); ++k) {
    const Vec v = shift_of(k, source.reps()[k]);
    reps.push_back(source.compose(v, k));
  }
  return Source::make(source.field(), source.block_len(), source.terminals(), std::move(reps), SourceKind::Explicit);
}

Source component_fix(const Source& source, std::size_t terminal) {
  if (terminal >= source.terminals()) throw Error(ErrorCode::ShapeError, "terminal index out of range");
  const Field& f = source.field();
  return rerepresent(source, [&](std::size_t, const Tuple& d) {
    Vec v(source.block_len());
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = f.neg(d[terminal][j]);
    return v;
  });
}

std::uint64_t s_plus_bound(const Source& source) noexcept {
  const auto shifts = source.shift_count();
  const std::uint64_t d = source.rep_count();
  if (!shifts || d > UINT32_MAX) return UINT64_MAX;
  const std::uint64_t pairs = d * d;
  if (*shifts > UINT64_MAX / pairs) return UINT64_MAX;
  return *shifts * pairs;
}

void for_each_s_plus(const Source& source, const std::function<bool(const Tuple&)>& fn, std::uint64_t cap) {
  const std::uint64_t bound = s_plus_bound(source);
  if (bound > cap) throw Error(ErrorCode::TooLarge, "difference set bound exceeds " + std::to_string(cap));
  const Field& f = source.field();
  const std::size_t len = source.block_len(), terms = source.terminals();
  const std::uint64_t shifts = *source.shift_count();
  const auto& reps = source.reps();
  Tuple t(terms, Vec(len));
  for (std::size_t a = 0; a < reps.size(); ++a) {
    for (std::size_t b = 0; b < reps.size(); ++b) {
      Tuple diff(terms, Vec(len));
      for (std::size_t i = 0; i < terms; ++i) {
        for (std::size_t j = 0; j < len; ++j) diff[i][j] = f.sub(reps[a][i][j], reps[b][i][j]);
      }
      for (std::uint64_t wi = 0; wi < shifts; ++wi) {
        const Vec w = vector_at(f.order(), len, wi);
        bool zero = true;
        for (std::size_t i = 0; i < terms; ++i) {
          for (std::size_t j = 0; j < len; ++j) {
            t[i][j] = f.add(diff[i][j], w[j]);
            zero = zero && t[i][j] == 0;
          }
        }
        if (zero) continue;
        if (!fn(t)) return;
      }
    }
  }
}

}  // namespace mpc
