#include "mpc/code.hpp"

#include <string>
#include <unordered_map>

#include "mpc/parallel.hpp"

namespace mpc {

PartitionCode::PartitionCode(std::vector<Matrix> encoders, std::optional<Witness> witness)
    : H_(std::move(encoders)), witness_(std::move(witness)) {
  if (H_.size() < 2) throw Error(ErrorCode::ShapeError, "a code needs at least two encoders");
  for (const auto& h : H_) {
    if (!(h.field() == H_.front().field())) throw Error(ErrorCode::FieldMismatch, "encoders over different fields");
    if (h.cols() != H_.front().cols()) throw Error(ErrorCode::ShapeError, "encoders must share the block length");
  }
}

std::size_t PartitionCode::total_length() const noexcept {
  std::size_t m = 0;
  for (const auto& h : H_) m += h.rows();
  return m;
}

namespace {

std::vector<Matrix> split_rows(const Matrix& t, const std::vector<std::size_t>& partition, std::size_t terms) {
  if (partition.size() != terms) {
    throw Error(ErrorCode::BadPartition, "partition has " + std::to_string(partition.size()) + " parts, expected " +
                                             std::to_string(terms));
  }
  std::size_t sum = 0;
  for (auto p : partition) sum += p;
  if (sum != t.rows()) {
    throw Error(ErrorCode::BadPartition, "partition sums to " + std::to_string(sum) + ", expected " + std::to_string(t.rows()));
  }
  std::vector<Matrix> parts;
  std::size_t offset = 0;
  for (auto p : partition) {
    parts.push_back(t.row_range(offset, p));
    offset += p;
  }
  return parts;
}

Matrix stacked_blocks(const ParentMatrix& parent) { return vstack(parent.blocks()); }

}  // namespace

PartitionCode construct_mpc(const ParentMatrix& parent, std::optional<std::vector<std::size_t>> partition,
                            std::optional<std::vector<Matrix>> mixers) {
  const Field& f = parent.field();
  const std::size_t terms = parent.terminals();
  Matrix basis_rows = row_basis(stacked_blocks(parent));
  Matrix complement_rows = complete_to_invertible(basis_rows);
  std::vector<std::size_t> parts = partition ? *partition : std::vector<std::size_t>(terms, 0);
  if (!partition) parts[0] = complement_rows.rows();
  std::vector<Matrix> extra = split_rows(complement_rows, parts, terms);

  std::vector<Matrix> indep, coords, encoders, Us;
  for (std::size_t i = 0; i < terms; ++i) {
    indep.push_back(independent_rows(parent.block(i)));
    coords.push_back(express_rows(parent.block(i), indep.back()));
    const Matrix base = vstack(extra[i], indep[i]);
    const std::size_t m = base.rows();
    if (mixers) {
      if (mixers->size() != terms) throw Error(ErrorCode::NonInvertibleU, "expected one U per terminal");
      const Matrix& u = (*mixers)[i];
      if (u.rows() != m || u.cols() != m) {
        throw Error(ErrorCode::NonInvertibleU, "U_" + std::to_string(i + 1) + " must be " + std::to_string(m) + "x" +
                                                   std::to_string(m));
      }
      if (rank(u) != m) throw Error(ErrorCode::NonInvertibleU, "U_" + std::to_string(i + 1) + " is singular");
      Us.push_back(u);
    } else {
      Us.push_back(Matrix::identity(f, m));
    }
    encoders.push_back(Us.back() * base);
  }
  Matrix stack_coords = express_rows(basis_rows, vstack(indep));
  Matrix inv_basis = inverse(vstack(basis_rows, complement_rows));
  Witness w{WitnessKind::Full, parent, std::move(basis_rows), std::move(complement_rows), std::move(indep), std::move(extra), std::move(Us),
            std::move(coords), std::move(stack_coords), std::move(inv_basis), std::move(parts)};
  return PartitionCode(std::move(encoders), std::move(w));
}

PartitionCode construct_pre_mpc(const ParentMatrix& parent, const Matrix& t_prime, std::vector<std::size_t> partition,
                                std::optional<std::vector<Matrix>> encoder_override) {
  const std::size_t terms = parent.terminals(), len = parent.block_len();
  if (t_prime.cols() != len) throw Error(ErrorCode::ShapeError, "T' must have n columns");
  const Matrix stack = stacked_blocks(parent);
  if (rank(vstack(stack, t_prime)) != len) {
    throw Error(ErrorCode::NotInjectiveStack, "stacking the blocks with T' does not reach rank n");
  }
  std::vector<Matrix> extra = split_rows(t_prime, partition, terms);
  std::vector<Matrix> encoders, indep;
  for (std::size_t i = 0; i < terms; ++i) {
    const Matrix base = vstack(extra[i], parent.block(i));
    indep.push_back(parent.block(i));
    if (encoder_override) {
      if (encoder_override->size() != terms) throw Error(ErrorCode::WrongNullspace, "expected one override per terminal");
      const Matrix& h = (*encoder_override)[i];
      if (h.cols() != len || !same_row_space(h, base)) {
        throw Error(ErrorCode::WrongNullspace, "override H_" + std::to_string(i + 1) + " has the wrong null space");
      }
      encoders.push_back(h);
    } else {
      encoders.push_back(base);
    }
  }
  Witness w{WitnessKind::PreOnly, parent, row_basis(stack), t_prime, std::move(indep), std::move(extra), {}, {},
            std::nullopt, std::nullopt, std::move(partition)};
  return PartitionCode(std::move(encoders), std::move(w));
}

std::size_t min_total_length(const ParentMatrix& parent) {
  std::size_t total = 0;
  for (const auto& q : parent.blocks()) total += rank(q);
  return total + parent.block_len() - rank(stacked_blocks(parent));
}

RatioReport ratio_report(const PartitionCode& code) {
  if (!code.witness()) throw Error(ErrorCode::NoWitness, "ratio report needs the parent blocks");
  const ParentMatrix& parent = code.witness()->parent;
  RatioReport rep;
  const std::size_t len = code.block_len();
  for (std::size_t i = 0; i < code.terminals(); ++i) {
    rep.ratios.push_back({code.encoded_len(i), len});
    const std::size_t rq = rank(parent.block(i));
    const std::size_t extra = code.encoded_len(i) >= rq ? code.encoded_len(i) - rq : 0;
    rep.extra.push_back(extra);
    rep.extra_total += extra;
  }
  rep.sum_ratio = {code.total_length(), len};
  rep.required_extra = len - rank(stacked_blocks(parent));
  rep.bound_holds = rep.extra_total >= rep.required_extra;
  rep.minimal = code.total_length() == min_total_length(parent);
  return rep;
}

namespace {

// Concatenated encodings blockdiag(H) * stack(sigma).
void encode_into(const PartitionCode& code, const Tuple& sigma, Vec& out) {
  out.clear();
  for (std::size_t i = 0; i < code.terminals(); ++i) {
    const Vec y = code.encoder(i).apply(sigma[i]);
    out.insert(out.end(), y.begin(), y.end());
  }
}

Tuple uniform_plus(const Source& source, const Vec& w, std::size_t index) { return source.compose(w, index); }

void check_shapes(const PartitionCode& code, const Source& source) {
  if (!(code.field() == source.field())) throw Error(ErrorCode::FieldMismatch, "code and source fields differ");
  if (code.terminals() != source.terminals() || code.block_len() != source.block_len()) throw Error(ErrorCode::ShapeError, "code shape does not match the source");
}

}  // namespace

VerifyReport verify_compression(const PartitionCode& code, const Source& source, VerifyMode mode,
                                const VerifyOptions& options) {
  check_shapes(code, source);
  const Field& f = code.field();
  const std::size_t len = code.block_len();
  const Matrix stacked_enc = vstack(code.encoders());
  VerifyReport rep;
  rep.trivial_intersection = rank(stacked_enc) == len;

  if (mode == VerifyMode::Structural) {
    if (!rep.trivial_intersection) {
      const Vec w = nullspace_basis(stacked_enc).column(0);
      rep.counterexample = std::make_pair(uniform_plus(source, w, 0), source.reps()[0]);
      return rep;
    }
    const Matrix annihilator = left_annihilator(stacked_enc);
    VectorMap<std::size_t> keys(f.order(), annihilator.rows());
    keys.reserve(source.rep_count());
    Vec y;
    for (std::size_t k = 0; k < source.rep_count(); ++k) {
      encode_into(code, source.reps()[k], y);
      const auto [prev, inserted] = keys.emplace(annihilator.apply(y), k);
      ++rep.checked;
      if (!inserted) {
        Vec ya, yb;
        encode_into(code, source.reps()[*prev], ya);
        encode_into(code, source.reps()[k], yb);
        const Vec w = solve(stacked_enc, vec_sub(f, ya, yb));
        rep.counterexample = std::make_pair(uniform_plus(source, w, k), source.reps()[*prev]);
        return rep;
      }
    }
    rep.pass = true;
    return rep;
  }

  const auto total = source.size();
  if (!total || *total > options.cap) {
    throw Error(ErrorCode::TooLarge, "source has more than " + std::to_string(options.cap) + " elements");
  }
  const std::uint64_t shifts = *source.shift_count();
  const std::uint64_t reps = source.rep_count();
  const std::size_t total_len = code.total_length();
  const VectorCodec codec(f.order(), total_len);
  auto tuple_at = [&](std::uint64_t flat) {
    return uniform_plus(source, vector_at(f.order(), len, flat / reps), static_cast<std::size_t>(flat % reps));
  };

  if (codec.single_word()) {
    std::vector<std::uint64_t> packed(*total);
    parallel_ranges(shifts, resolve_workers(options.workers), [&](unsigned, std::uint64_t begin, std::uint64_t end) {
      Vec y;
      for (std::uint64_t wi = begin; wi < end; ++wi) {
        const Vec w = vector_at(f.order(), len, wi);
        for (std::size_t k = 0; k < reps; ++k) {
          encode_into(code, source.compose(w, k), y);
          packed[wi * reps + k] = codec.pack(y);
        }
      }
    });
    std::unordered_map<std::uint64_t, std::uint64_t> seen;
    seen.reserve(packed.size());
    for (std::uint64_t i = 0; i < packed.size(); ++i) {
      const auto [it, inserted] = seen.emplace(packed[i], i);
      ++rep.checked;
      if (!inserted) {
        rep.counterexample = std::make_pair(tuple_at(i), tuple_at(it->second));
        return rep;
      }
    }
  } else {
    VectorMap<std::uint64_t> seen(f.order(), total_len);
    Vec y;
    for (std::uint64_t i = 0; i < *total; ++i) {
      const Tuple sigma = tuple_at(i);
      encode_into(code, sigma, y);
      const auto [prev, inserted] = seen.emplace(y, i);
      ++rep.checked;
      if (!inserted) {
        rep.counterexample = std::make_pair(sigma, tuple_at(*prev));
        return rep;
      }
    }
  }
  rep.pass = true;
  return rep;
}

PerfectReport is_perfect(const PartitionCode& code, const Source& source) {
  check_shapes(code, source);
  PerfectReport rep;
  rep.exponent = static_cast<std::int64_t>(code.total_length()) - static_cast<std::int64_t>(code.block_len());
  rep.rep_count = source.rep_count();
  if (rep.exponent >= 0) {
    const auto size = checked_pow(code.field().order(), static_cast<std::uint64_t>(rep.exponent));
    rep.perfect = size && *size == rep.rep_count;
  }
  if (code.witness()) {
    const ParentMatrix& parent = code.witness()->parent;
    if (rep.exponent >= 0 && parent.height() == static_cast<std::size_t>(rep.exponent) && rank(parent.matrix()) == parent.height()) {
      rep.parent_bijective = validate_parent(parent, source).bijective;
    }
  }
  return rep;
}

}  // namespace mpc
