#include "mpc/analysis.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "mpc/parallel.hpp"

namespace mpc {

SubspaceBasis make_subspace(const Matrix& columns) {
  if (rank(columns) != columns.cols()) throw Error(ErrorCode::DependentRows, "subspace basis columns are dependent");
  return {columns};
}

namespace {

Matrix column_vector(const Field& f, const Vec& v) { return Matrix::from_columns(f, v.size(), {v}); }

// Columns of `extra` added greedily to `base` whenever they raise the rank.
Matrix greedy_complement(const Matrix& base, const Matrix& extra) {
  std::vector<Vec> picked;
  Matrix current = base;
  std::size_t r = rank(current);
  for (std::size_t j = 0; j < extra.cols(); ++j) {
    const Matrix parts[] = {current, column_vector(base.field(), extra.column(j))};
    Matrix next = hstack(parts);
    const std::size_t nr = rank(next);
    if (nr > r) {
      picked.push_back(extra.column(j));
      current = std::move(next);
      r = nr;
    }
  }
  return Matrix::from_columns(base.field(), base.rows(), picked);
}

Matrix join(const Matrix& a, const Matrix& b) {
  const Matrix parts[] = {a, b};
  return hstack(parts);
}

bool is_direct(const Matrix& a, const Matrix& b) { return rank(join(a, b)) == a.cols() + b.cols(); }

}  // namespace

PartitionCode nullspace_shift(const PartitionCode& code, const std::vector<std::size_t>& perm, const SubspaceBasis& carried,
                              std::optional<std::vector<SubspaceBasis>> complements) {
  const std::size_t terms = code.terminals(), len = code.block_len();
  const Field& f = code.field();
  {
    std::vector<std::size_t> sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (sorted.size() != terms || sorted[i] != i) throw Error(ErrorCode::DecompositionMismatch, "not a permutation of the terminals");
    }
  }
  if (carried.ambient() != len || !(carried.basis.field() == f)) throw Error(ErrorCode::DecompositionMismatch, "K lives in the wrong space");
  if (rank(carried.basis) != carried.dim()) throw Error(ErrorCode::DecompositionMismatch, "K basis is dependent");
  if (complements && complements->size() != terms - 1 && complements->size() != terms) {
    throw Error(ErrorCode::DecompositionMismatch, "expected s-1 complements");
  }

  std::vector<Matrix> kept_kernels;
  for (std::size_t i = 0; i + 1 < terms; ++i) {
    const Matrix& h = code.encoder(perm[i]);
    if (!(h * carried.basis).is_zero()) {
      throw Error(ErrorCode::DecompositionMismatch, "K is not inside the kernel of H_" + std::to_string(perm[i] + 1));
    }
    const Matrix kernel = nullspace_basis(h);
    Matrix ni = complements ? (*complements)[i].basis : greedy_complement(carried.basis, kernel);
    if (ni.rows() != len || !(h * ni).is_zero() || !is_direct(carried.basis, ni) || carried.dim() + ni.cols() != kernel.cols()) {
      throw Error(ErrorCode::DecompositionMismatch,
                  "kernel of H_" + std::to_string(perm[i] + 1) + " is not K plus the given complement");
    }
    kept_kernels.push_back(std::move(ni));
  }
  const Matrix last = nullspace_basis(code.encoder(perm[terms - 1]));
  if (!is_direct(carried.basis, last)) {
    throw Error(ErrorCode::DecompositionMismatch, "K meets the kernel of H_" + std::to_string(perm[terms - 1] + 1));
  }
  kept_kernels.push_back(last);

  std::vector<Matrix> encoders(terms, Matrix(f, 0, len));
  encoders[perm[0]] = left_annihilator(kept_kernels[0]);
  for (std::size_t i = 1; i < terms; ++i) encoders[perm[i]] = left_annihilator(join(carried.basis, kept_kernels[i]));
  return PartitionCode(std::move(encoders));
}

ParentMatrix extract_parent(const PartitionCode& code, const Source& source) {
  const auto check = verify_compression(code, source, VerifyMode::Structural);
  if (!check.pass) throw Error(ErrorCode::InvalidCompression, "encoders are not injective on the source");
  const Field& f = code.field();
  const std::size_t terms = code.terminals(), len = code.block_len();
  Matrix equalizer(f, (terms - 1) * len, terms * len);
  for (std::size_t i = 0; i + 1 < terms; ++i) {
    for (std::size_t j = 0; j < len; ++j) {
      equalizer(i * len + j, i * len + j) = 1;
      equalizer(i * len + j, (i + 1) * len + j) = f.neg(1);
    }
  }
  const Matrix null_x = nullspace_basis(equalizer);
  const Matrix null_j = nullspace_basis(block_diag(code.encoders()));
  const Matrix joint_kernel = join(null_x, null_j);
  if (rank(joint_kernel) != joint_kernel.cols()) throw Error(ErrorCode::InvalidCompression, "kernels of X and J intersect");
  return ParentMatrix::from_matrix(left_annihilator(joint_kernel), terms);
}

CompressibleVerdict compressible(const Source& source, std::uint64_t cap) {
  const std::uint64_t d = source.rep_count();
  if (d > 0 && d * d > cap) throw Error(ErrorCode::TooLarge, "pair count exceeds " + std::to_string(cap));
  const Field& f = source.field();
  const std::size_t terms = source.terminals(), len = source.block_len();
  std::vector<VectorSet> forbidden(terms, VectorSet(f.order(), len));
  const auto& reps = source.reps();
  Tuple gamma(terms, Vec(len));
  Vec dir(len);
  for (std::size_t a = 0; a < reps.size(); ++a) {
    for (std::size_t b = a + 1; b < reps.size(); ++b) {
      for (std::size_t i = 0; i < terms; ++i) {
        for (std::size_t j = 0; j < len; ++j) gamma[i][j] = f.sub(reps[a][i][j], reps[b][i][j]);
      }
      for (std::size_t odd = 0; odd < terms; ++odd) {
        const std::size_t ref = odd == 0 ? 1 : 0;
        bool common = true;
        for (std::size_t i = 0; i < terms && common; ++i) {
          if (i != odd && i != ref && gamma[i] != gamma[ref]) common = false;
        }
        if (!common) continue;
        for (std::size_t j = 0; j < len; ++j) dir[j] = f.sub(gamma[odd][j], gamma[ref][j]);
        if (vec_is_zero(dir)) continue;
        forbidden[odd].insert(normalize_projective(f, dir));
      }
    }
  }

  CompressibleVerdict verdict;
  for (auto& set : forbidden) verdict.forbidden.push_back(set.size());
  const auto total = checked_pow(f.order(), len);
  for (std::size_t i = 0; i < terms && !verdict.compressible; ++i) {
    if (total) {
      const std::uint64_t points = (*total - 1) / (f.order() - 1);
      if (forbidden[i].size() >= points) continue;
    }
    // Some projective direction is free; take the first in index order.
    for (std::uint64_t idx = 1; !total || idx < *total; ++idx) {
      Vec v = vector_at(f.order(), len, idx);
      const auto it = std::find_if(v.begin(), v.end(), [](Elem e) { return e != 0; });
      if (*it != 1 || forbidden[i].contains(v)) continue;
      verdict.compressible = true;
      verdict.terminal = i;
      verdict.direction = std::move(v);
      break;
    }
  }
  if (verdict.compressible) {
    const Matrix row = column_vector(f, verdict.direction).transpose();
    verdict.basis_change = vstack(row, complete_to_invertible(row)).transpose();
  }
  return verdict;
}

PartitionCode compressing_code(const Source& source, const CompressibleVerdict& verdict) {
  if (!verdict.compressible) throw Error(ErrorCode::NotFound, "source is not compressible");
  const Field& f = source.field();
  std::vector<Matrix> encoders;
  for (std::size_t i = 0; i < source.terminals(); ++i) {
    encoders.push_back(i == verdict.terminal ? left_annihilator(column_vector(f, verdict.direction))
                                      : Matrix::identity(f, source.block_len()));
  }
  return PartitionCode(std::move(encoders));
}

std::vector<Matrix> enumerate_subspaces(const Field& field, std::size_t len) {
  const auto total = checked_pow(field.order(), len);
  if (!total || *total > 16) throw Error(ErrorCode::TooLarge, "subspace enumeration needs |F|^n <= 16");
  const std::uint32_t q = field.order();
  std::vector<Matrix> out;
  for (std::size_t k = 0; k <= len; ++k) {
    // pivot sets in lexicographic order
    std::vector<std::size_t> piv(k);
    for (std::size_t i = 0; i < k; ++i) piv[i] = i;
    while (true) {
      std::vector<std::pair<std::size_t, std::size_t>> free;  // (row, col)
      for (std::size_t t = 0; t < k; ++t) {
        for (std::size_t c = piv[t] + 1; c < len; ++c) {
          if (std::find(piv.begin(), piv.end(), c) == piv.end()) free.emplace_back(t, c);
        }
      }
      const std::uint64_t combos = *checked_pow(q, free.size());
      for (std::uint64_t code = 0; code < combos; ++code) {
        Matrix rows(field, k, len);
        for (std::size_t t = 0; t < k; ++t) rows(t, piv[t]) = 1;
        std::uint64_t c = code;
        for (const auto& [t, col] : free) {
          rows(t, col) = static_cast<Elem>(c % q);
          c /= q;
        }
        out.push_back(rows.transpose());
      }
      // next combination
      std::size_t i = k;
      while (i > 0 && piv[i - 1] == len - k + i - 1) --i;
      if (i == 0) break;
      ++piv[i - 1];
      for (std::size_t j = i; j < k; ++j) piv[j] = piv[j - 1] + 1;
    }
  }
  return out;
}

BruteMinResult brute_min_M(const Source& source, unsigned workers) {
  const Field& f = source.field();
  const std::size_t terms = source.terminals(), len = source.block_len();
  const auto vcount = checked_pow(f.order(), len);
  if (!vcount || *vcount > 16 || terms > 3) throw Error(ErrorCode::TooLarge, "brute force needs |F|^n <= 16 and s <= 3");
  const std::uint32_t q = f.order();
  const std::uint64_t space_size = *vcount;

  const auto subspaces = enumerate_subspaces(f, len);
  std::vector<std::uint32_t> masks;
  for (const auto& b : subspaces) {
    std::uint32_t mask = 0;
    const std::uint64_t combos = *checked_pow(q, b.cols());
    for (std::uint64_t c = 0; c < combos; ++c) {
      const Vec coeffs = vector_at(q, b.cols(), c);
      mask |= 1U << index_of(q, b.apply(coeffs));
    }
    masks.push_back(mask);
  }

  // Difference set as index tuples (t_1, .., t_s) packed base V.
  const std::uint64_t cells = *checked_pow(space_size, terms);
  std::vector<bool> diff(cells, false);
  const auto& reps = source.reps();
  for (const auto& da : reps) {
    for (const auto& db : reps) {
      for (std::uint64_t wi = 0; wi < space_size; ++wi) {
        const Vec w = vector_at(q, len, wi);
        std::uint64_t flat = 0, scale = 1;
        for (std::size_t i = 0; i < terms; ++i) {
          Vec c(len);
          for (std::size_t j = 0; j < len; ++j) c[j] = f.add(w[j], f.sub(da[i][j], db[i][j]));
          flat += index_of(q, c) * scale;
          scale *= space_size;
        }
        if (flat != 0) diff[flat] = true;
      }
    }
  }
  std::vector<std::vector<std::uint32_t>> elems;  // components of each nonzero difference
  for (std::uint64_t flat = 1; flat < cells; ++flat) {
    if (!diff[flat]) continue;
    std::vector<std::uint32_t> t(terms);
    std::uint64_t x = flat;
    for (std::size_t i = 0; i < terms; ++i) {
      t[i] = static_cast<std::uint32_t>(x % space_size);
      x /= space_size;
    }
    elems.push_back(std::move(t));
  }

  const std::size_t count = subspaces.size();
  struct Best {
    long sum = -1;
    std::vector<std::size_t> pick;
  };
  const unsigned pool = resolve_workers(workers);
  std::vector<Best> best(pool);

  // The last kernel must avoid every last component of a difference whose
  // other components already lie in their kernels.
  auto finish = [&](const std::vector<std::size_t>& pick, Best& acc) {
    std::uint32_t banned = 0;
    for (const auto& t : elems) {
      bool inside = true;
      for (std::size_t i = 0; i + 1 < terms && inside; ++i) inside = (masks[pick[i]] >> t[i]) & 1U;
      if (inside) banned |= 1U << t[terms - 1];
    }
    if (banned & 1U) return;
    long partial = 0;
    for (auto p : pick) partial += static_cast<long>(subspaces[p].cols());
    for (std::size_t last = 0; last < count; ++last) {
      if (masks[last] & banned) continue;
      const long total = partial + static_cast<long>(subspaces[last].cols());
      if (total > acc.sum) {
        acc.sum = total;
        acc.pick = pick;
        acc.pick.push_back(last);
      }
    }
  };

  parallel_ranges(count, pool, [&](unsigned worker, std::uint64_t begin, std::uint64_t end) {
    Best& acc = best[worker];
    for (std::uint64_t first = begin; first < end; ++first) {
      if (terms == 2) {
        finish({first}, acc);
      } else {
        for (std::size_t second = 0; second < count; ++second) finish({first, second}, acc);
      }
    }
  });

  Best overall;
  for (auto& b : best) {
    if (b.sum > overall.sum) overall = b;  // workers hold increasing ranges, so ties keep the earliest
  }
  BruteMinResult res;
  res.min_total = terms * len - static_cast<std::size_t>(overall.sum);
  for (auto p : overall.pick) res.kernels.push_back(subspaces[p]);
  return res;
}

PartitionCode code_from_kernels(const Field& field, std::size_t len, const std::vector<Matrix>& kernels) {
  std::vector<Matrix> encoders;
  for (const auto& k : kernels) {
    if (k.rows() != len || !(k.field() == field)) throw Error(ErrorCode::ShapeError, "kernel basis has the wrong shape");
    encoders.push_back(left_annihilator(k));
  }
  return PartitionCode(std::move(encoders));
}

}  // namespace mpc
