#include "mpc/codec.hpp"

#include <optional>
#include <string>

namespace mpc {

std::vector<Vec> encode(const PartitionCode& code, const Tuple& sigma) {
  if (sigma.size() != code.terminals()) throw Error(ErrorCode::ShapeError, "tuple has the wrong number of components");
  std::vector<Vec> y;
  y.reserve(code.terminals());
  for (std::size_t i = 0; i < code.terminals(); ++i) y.push_back(code.encoder(i).apply(sigma[i]));
  return y;
}

namespace {

Vec concat(const std::vector<Vec>& parts) {
  Vec out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

// Rows [first, first + count) of an identity of size total.
Matrix selector(const Field& f, std::size_t first, std::size_t count, std::size_t total) {
  Matrix m(f, count, total);
  for (std::size_t i = 0; i < count; ++i) m(i, first + i) = 1;
  return m;
}

}  // namespace

Decoder::Decoder(const PartitionCode& code, const Source& source)
    : code_(code),
      source_(source),
      syndrome_(code.field(), 0, 0),
      recovery_(code.field(), 0, 0),
      table_(code.field().order(), code.witness() ? code.witness()->parent.height() : 0) {
  if (!code.witness() || code.witness()->kind != WitnessKind::Full) {
    throw Error(ErrorCode::NoWitness, "the fast decoder needs a full construction witness");
  }
  if (!(code.field() == source.field()) || code.terminals() != source.terminals() || code.block_len() != source.block_len()) {
    throw Error(ErrorCode::ShapeError, "code and source do not match");
  }
  const Witness& wit = *code.witness();
  const Field& f = code.field();
  const std::size_t terms = code.terminals();
  const std::size_t total_len = code.total_length();

  std::vector<Matrix> u_inv;
  std::vector<Matrix> pick_c, pick_g;
  std::size_t offset = 0;
  for (std::size_t i = 0; i < terms; ++i) {
    u_inv.push_back(inverse(wit.mixers[i]));
    const std::size_t g = wit.extra_rows[i].rows();
    const std::size_t c = wit.independent[i].rows();
    pick_g.push_back(selector(f, offset, g, total_len));
    pick_c.push_back(selector(f, offset + g, c, total_len));
    offset += g + c;
  }
  const Matrix unmix = block_diag(u_inv);
  const Matrix sel_c = vstack(pick_c);
  const Matrix sel_g = vstack(pick_g);
  syndrome_ = hstack(wit.block_coords) * sel_c * unmix;
  recovery_ = *wit.inv_basis * vstack(*wit.stack_coords * sel_c, sel_g) * unmix;

  table_.reserve(source.rep_count());
  offsets_.reserve(source.rep_count());
  for (std::size_t k = 0; k < source.rep_count(); ++k) {
    const Vec y = concat(encode(code, source.reps()[k]));
    const auto [prev, inserted] = table_.emplace(syndrome_.apply(y), k);
    if (!inserted) {
      throw Error(ErrorCode::DuplicateSyndrome, "representatives " + std::to_string(*prev) + " and " + std::to_string(k) +
                                                    " share a syndrome");
    }
    offsets_.push_back(recovery_.apply(y));
  }
}

Tuple Decoder::decode(const std::vector<Vec>& y) const {
  if (y.size() != code_.terminals()) throw Error(ErrorCode::ShapeError, "codeword has the wrong number of parts");
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i].size() != code_.encoded_len(i)) throw Error(ErrorCode::ShapeError, "codeword part has the wrong length");
  }
  const Vec flat = concat(y);
  const Vec syn = syndrome_.apply(flat);
  const std::size_t* idx = table_.find(syn);
  if (idx == nullptr) throw Error(ErrorCode::UnknownSyndrome, "syndrome matches no representative");
  const Field& f = code_.field();
  const Vec w = vec_sub(f, recovery_.apply(flat), offsets_[*idx]);
  Tuple x = source_.compose(w, *idx);
  if (encode(code_, x) != y) throw Error(ErrorCode::UnknownSyndrome, "codeword is not the encoding of a source tuple");
  return x;
}

Tuple oracle_decode(const PartitionCode& code, const Source& source, const std::vector<Vec>& y, std::uint64_t cap) {
  std::optional<Tuple> found;
  source.for_each_element(
      [&](std::uint64_t, std::size_t, const Tuple& sigma) {
        if (encode(code, sigma) != y) return;
        if (found) throw Error(ErrorCode::Ambiguous, "two source tuples share this codeword");
        found = sigma;
      },
      cap);
  if (!found) throw Error(ErrorCode::NotFound, "no source tuple has this codeword");
  return *found;
}

OracleDecoder::OracleDecoder(const PartitionCode& code, const Source& source, std::uint64_t cap)
    : code_(code),
      source_(source),
      image_(code.field().order(), code.total_length()),
      ambiguous_(code.field().order(), code.total_length()) {
  const auto total = source.size();
  if (!total || *total > cap) throw Error(ErrorCode::TooLarge, "source has more than " + std::to_string(cap) + " elements");
  image_.reserve(*total);
  const std::uint64_t reps = source.rep_count();
  source.for_each_element(
      [&](std::uint64_t wi, std::size_t k, const Tuple& sigma) {
        Vec flat;
        for (const auto& part : encode(code_, sigma)) flat.insert(flat.end(), part.begin(), part.end());
        if (!image_.emplace(flat, wi * reps + k).second) ambiguous_.insert(flat);
      },
      cap);
}

Tuple OracleDecoder::decode(const std::vector<Vec>& y) const {
  if (y.size() != code_.terminals()) throw Error(ErrorCode::ShapeError, "codeword has the wrong number of parts");
  Vec flat;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i].size() != code_.encoded_len(i)) throw Error(ErrorCode::ShapeError, "codeword part has the wrong length");
    flat.insert(flat.end(), y[i].begin(), y[i].end());
  }
  if (ambiguous_.contains(flat)) throw Error(ErrorCode::Ambiguous, "two source tuples share this codeword");
  const std::uint64_t* idx = image_.find(flat);
  if (!idx) throw Error(ErrorCode::NotFound, "no source tuple has this codeword");
  const std::uint64_t reps = source_.rep_count();
  return source_.compose(vector_at(code_.field().order(), code_.block_len(), *idx / reps), static_cast<std::size_t>(*idx % reps));
}

}  // namespace mpc
