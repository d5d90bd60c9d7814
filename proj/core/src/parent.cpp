#include "mpc/parent.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <unordered_set>

namespace mpc {

ParentMatrix::ParentMatrix(std::vector<Matrix> blocks) : blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw Error(ErrorCode::ShapeError, "parent needs at least one block");
  for (const auto& b : blocks_) {
    if (!(b.field() == blocks_.front().field())) throw Error(ErrorCode::FieldMismatch, "parent blocks over different fields");
    if (b.rows() != blocks_.front().rows() || b.cols() != blocks_.front().cols()) {
      throw Error(ErrorCode::ShapeError, "parent blocks must share one shape");
    }
  }
}

ParentMatrix ParentMatrix::from_matrix(const Matrix& p, std::size_t terms) {
  if (terms == 0 || p.cols() % terms != 0) throw Error(ErrorCode::ShapeError, "column count is not a multiple of s");
  const std::size_t len = p.cols() / terms;
  std::vector<Matrix> blocks;
  for (std::size_t i = 0; i < terms; ++i) blocks.push_back(p.col_range(i * len, len));
  return ParentMatrix(std::move(blocks));
}

Matrix ParentMatrix::block_sum() const {
  Matrix sum = blocks_.front();
  for (std::size_t i = 1; i < blocks_.size(); ++i) sum = sum + blocks_[i];
  return sum;
}

ParentReport validate_parent(const ParentMatrix& parent, const Source& source) {
  if (!(parent.field() == source.field())) throw Error(ErrorCode::FieldMismatch, "parent and source fields differ");
  if (parent.terminals() != source.terminals() || parent.block_len() != source.block_len()) {
    throw Error(ErrorCode::ShapeError, "parent shape does not match the source");
  }
  ParentReport rep;
  rep.zero_sum = parent.zero_sum();
  const Matrix p = parent.matrix();
  VectorMap<std::size_t> images(source.field().order(), parent.height());
  images.reserve(source.rep_count());
  rep.injective = true;
  Vec img(parent.height());
  for (std::size_t k = 0; k < source.rep_count(); ++k) {
    const Vec d = Source::stack(source.reps()[k]);
    p.apply_into(d, img);
    const auto [prev, inserted] = images.emplace(img, k);
    if (!inserted && rep.injective) {
      rep.injective = false;
      rep.collision = std::make_pair(*prev, k);
    }
  }
  rep.image_size = images.size();
  const auto full = checked_pow(source.field().order(), parent.height());
  rep.bijective = rep.injective && full && *full == source.rep_count();
  return rep;
}

bool columns_pairwise_independent(const Matrix& m) {
  const Field& f = m.field();
  VectorSet seen(f.order(), m.rows());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    const Vec c = m.column(j);
    if (vec_is_zero(c)) return false;
    if (!seen.insert(normalize_projective(f, c))) return false;
  }
  return true;
}

bool hamming_parent_check(const ParentMatrix& parent) {
  if (parent.terminals() == 2) return columns_pairwise_independent(parent.block(1));
  return columns_pairwise_independent(parent.matrix());
}

std::size_t min_r(const Field& field, std::uint64_t count) {
  const std::uint64_t q = field.order();
  std::size_t r = 1;
  std::uint64_t points = 1;  // (q^r - 1) / (q - 1)
  while (points < count) {
    ++r;
    points = points * q + 1;
  }
  return r;
}

std::vector<Vec> projective_points(const Field& field, std::size_t r) {
  const auto total = checked_pow(field.order(), r);
  if (!total || *total > (1ULL << 32)) throw Error(ErrorCode::TooLarge, "too many projective points");
  std::vector<Vec> out;
  for (std::uint64_t idx = 1; idx < *total; ++idx) {
    Vec v = vector_at(field.order(), r, idx);
    const auto it = std::find_if(v.begin(), v.end(), [](Elem e) { return e != 0; });
    if (*it == 1) out.push_back(std::move(v));
  }
  return out;
}

CosetDecomposition coset_decompose(const Field& field, std::vector<Elem> multipliers) {
  if (multipliers.empty()) throw Error(ErrorCode::NoDecomposition, "empty multiplier set");
  for (auto a : multipliers) {
    if (a == 0) throw Error(ErrorCode::ZeroInL, "multiplier set contains zero");
    if (!field.contains(a)) throw Error(ErrorCode::ShapeError, "multiplier outside the field");
  }
  std::sort(multipliers.begin(), multipliers.end());
  multipliers.erase(std::unique(multipliers.begin(), multipliers.end()), multipliers.end());
  const std::uint32_t q = field.order();
  if ((q - 1) % multipliers.size() != 0) {
    throw Error(ErrorCode::NoDecomposition, std::to_string(multipliers.size()) + " does not divide " + std::to_string(q - 1));
  }
  std::vector<bool> covered(q, false);
  covered[0] = true;
  std::vector<Elem> reps;

  std::function<bool()> search = [&]() -> bool {
    Elem x = 1;
    while (x < q && covered[x]) ++x;
    if (x == q) return true;
    for (auto lambda : multipliers) {
      const Elem a = field.div(x, lambda);
      std::vector<Elem> images;
      bool ok = true;
      for (auto mu : multipliers) {
        const Elem img = field.mul(a, mu);
        if (covered[img] || std::find(images.begin(), images.end(), img) != images.end()) {
          ok = false;
          break;
        }
        images.push_back(img);
      }
      if (!ok) continue;
      for (auto img : images) covered[img] = true;
      reps.push_back(a);
      if (search()) return true;
      reps.pop_back();
      for (auto img : images) covered[img] = false;
    }
    return false;
  };
  if (!search()) throw Error(ErrorCode::NoDecomposition, "no coset representatives exist");
  return {std::move(multipliers), std::move(reps)};
}

ParentMatrix coset_parent(const Field& field, const std::vector<Elem>& multipliers, std::size_t terms, std::size_t len) {
  if (terms < 2 || len < 1) throw Error(ErrorCode::ShapeError, "need s >= 2 and n >= 1");
  const std::vector<Elem> scalars = terms == 2 ? symmetric_closure(field, multipliers) : multipliers;
  std::vector<Elem> sorted = scalars;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  const std::size_t columns = terms == 2 ? len : terms * len;
  const std::uint64_t count = 1 + static_cast<std::uint64_t>(sorted.size()) * columns;
  std::size_t r = 0;
  std::uint64_t power = 1;
  while (power < count) {
    power *= field.order();
    ++r;
  }
  if (power != count) {
    throw Error(ErrorCode::NotPerfectSize, std::to_string(count) + " is not a power of " + std::to_string(field.order()));
  }
  const auto dec = coset_decompose(field, sorted);
  if (columns % dec.k() != 0) {
    throw Error(ErrorCode::IndivisibleSN, std::to_string(dec.k()) + " does not divide " + std::to_string(columns));
  }
  const auto points = projective_points(field, r);
  const std::size_t needed = columns / dec.k();
  if (needed > points.size()) throw Error(ErrorCode::NotPerfectSize, "not enough projective points");

  std::vector<Vec> cols;
  for (std::size_t j = 0; j < needed; ++j) {
    for (auto a : dec.reps) cols.push_back(vec_scale(field, a, points[j]));
  }
  const Matrix body = Matrix::from_columns(field, r, cols);
  if (terms == 2) return ParentMatrix({Matrix(field, r, len), body});
  return ParentMatrix::from_matrix(body, terms);
}

namespace {

// Every representative is zero or has exactly one nonzero coordinate; returns
// the admissible scalars per stacked coordinate, or nullopt otherwise.
std::optional<std::vector<std::vector<Elem>>> single_deviation_scalars(const Source& source) {
  const std::size_t width = source.terminals() * source.block_len();
  std::vector<std::vector<Elem>> scalars(width);
  for (const auto& d : source.vectorize()) {
    std::size_t nonzero = 0, where = 0;
    for (std::size_t c = 0; c < width; ++c) {
      if (d[c] != 0) {
        ++nonzero;
        where = c;
      }
    }
    if (nonzero > 1) return std::nullopt;
    if (nonzero == 1) scalars[where].push_back(d[where]);
  }
  return scalars;
}

bool first_component_free(const Source& source) {
  return std::all_of(source.reps().begin(), source.reps().end(), [](const Tuple& t) { return vec_is_zero(t[0]); });
}

}  // namespace

ParentMatrix zero_sum_repair(const ParentMatrix& candidate, const Source& source, const RepairOptions& options) {
  if (validate_parent(candidate, source).ok()) return candidate;
  const Field& f = candidate.field();
  const std::size_t terms = candidate.terminals(), len = candidate.block_len(), r = candidate.height();

  if (terms == 2 && first_component_free(source)) {
    ParentMatrix fixed({-candidate.block(1), candidate.block(1)});
    if (validate_parent(fixed, source).ok()) return fixed;
    throw Error(ErrorCode::SearchExhausted, "second block is not injective on the representatives");
  }

  const auto scalars = single_deviation_scalars(source);
  if (!scalars) throw Error(ErrorCode::SearchExhausted, "regrouping search needs single-deviation representatives");
  const VectorCodec codec(f.order(), r);
  if (!codec.single_word()) throw Error(ErrorCode::SearchExhausted, "column space too large for the regrouping search");

  // Pool of rescaled candidate columns, in candidate order.
  std::vector<Vec> pool;
  {
    std::unordered_set<std::uint64_t> seen;
    const Matrix p = candidate.matrix();
    for (std::size_t c = 0; c < p.cols(); ++c) {
      const Vec col = p.column(c);
      if (vec_is_zero(col)) continue;
      for (Elem a = 1; a < f.order(); ++a) {
        Vec v = vec_scale(f, a, col);
        if (seen.insert(codec.pack(v)).second) pool.push_back(std::move(v));
      }
    }
  }

  const bool want_perfect = options.require_perfect && validate_parent(candidate, source).bijective;
  // rank Q_1 + .. + rank Q_s + n - rank(stack Q) == n + r
  auto reaches_perfect = [&](const ParentMatrix& p) {
    std::size_t total = 0;
    for (const auto& q : p.blocks()) total += rank(q);
    return total == r + rank(vstack(p.blocks()));
  };

  std::unordered_set<std::uint64_t> used;
  std::vector<Vec> placed(terms * len, Vec(r, 0));
  std::uint64_t nodes = 0;
  // Heuristic first pass: keep the stacked blocks at full column rank.
  bool independent_stack = false;
  auto stack_columns_independent = [&](std::size_t upto) {
    std::vector<Vec> cols;
    for (std::size_t j = 0; j <= upto; ++j) {
      Vec c;
      for (std::size_t t = 0; t < terms; ++t) c.insert(c.end(), placed[t * len + j].begin(), placed[t * len + j].end());
      cols.push_back(std::move(c));
    }
    return rank(Matrix::from_columns(f, terms * r, cols)) == cols.size();
  };

  auto images_free = [&](const Vec& x, std::size_t coord, std::vector<std::uint64_t>& keys) {
    keys.clear();
    if (vec_is_zero(x)) return false;
    for (auto a : (*scalars)[coord]) {
      const std::uint64_t k = codec.pack(vec_scale(f, a, x));
      if (used.count(k) != 0 || std::find(keys.begin(), keys.end(), k) != keys.end()) return false;
      keys.push_back(k);
    }
    return true;
  };

  // slot = j * (s-1) + t for block t < s-1 at position j
  std::function<bool(std::size_t)> place = [&](std::size_t slot) -> bool {
    if (++nodes > options.node_budget) {
      throw Error(ErrorCode::SearchExhausted, "node budget of " + std::to_string(options.node_budget) + " exhausted");
    }
    const std::size_t j = slot / (terms - 1);
    const std::size_t t = slot % (terms - 1);
    if (j == len) {
      return !want_perfect || reaches_perfect(ParentMatrix::from_matrix(Matrix::from_columns(f, r, placed), terms));
    }
    std::vector<std::uint64_t> keys;
    for (const auto& x : pool) {
      const std::size_t coord = t * len + j;
      if (!images_free(x, coord, keys)) continue;
      for (auto k : keys) used.insert(k);
      placed[coord] = x;
      bool done = false;
      if (t + 1 == terms - 1) {
        Vec last(r, 0);
        for (std::size_t b = 0; b + 1 < terms; ++b) last = vec_sub(f, last, placed[b * len + j]);
        std::vector<std::uint64_t> last_keys;
        const std::size_t last_coord = (terms - 1) * len + j;
        if (images_free(last, last_coord, last_keys)) {
          for (auto k : last_keys) used.insert(k);
          placed[last_coord] = last;
          done = (!independent_stack || stack_columns_independent(j)) && place(slot + 1);
          if (!done) {
            for (auto k : last_keys) used.erase(k);
          }
        }
      } else {
        done = place(slot + 1);
      }
      if (done) return true;
      for (auto k : keys) used.erase(k);
    }
    return false;
  };

  // Representatives without a deviation map to zero; keep zero out of the image.
  const Vec zero(r, 0);
  bool found = false;
  for (const bool prune : {true, false}) {
    if (prune && !(want_perfect && len <= (terms - 1) * r)) continue;
    independent_stack = prune;
    used.clear();
    used.insert(codec.pack(zero));
    nodes = 0;
    try {
      found = place(0);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::SearchExhausted || !prune) throw;
    }
    if (found) break;
  }
  if (!found) throw Error(ErrorCode::SearchExhausted, "no zero-sum regrouping exists");
  ParentMatrix repaired = ParentMatrix::from_matrix(Matrix::from_columns(f, r, placed), terms);
  if (!validate_parent(repaired, source).ok()) {
    throw Error(ErrorCode::SearchExhausted, "regrouped parent failed validation");
  }
  return repaired;
}

ParentMatrix s2_parent(const Matrix& q2) {
  if (!columns_pairwise_independent(q2)) {
    throw Error(ErrorCode::ProportionalColumns, "two columns of the second block are proportional");
  }
  return ParentMatrix({-q2, q2});
}

}  // namespace mpc
