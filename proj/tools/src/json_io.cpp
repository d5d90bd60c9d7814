#include "mpc_cli/json_io.hpp"

#include <fstream>

namespace mpc::cli {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const json& need(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

std::size_t need_size(const json& j, const char* key) {
  const json& v = need(j, key);
  if (!v.is_number_unsigned()) bad(std::string("\"") + key + "\" must be a non-negative integer");
  return v.get<std::size_t>();
}

}  // namespace

json to_json(const Field& f) {
  json j{{"p", f.characteristic()}, {"u", f.extension_degree()}};
  if (!f.is_prime_field()) j["modulus"] = f.modulus();
  return j;
}

Field field_from_json(const json& j) {
  const auto p = need(j, "p").get<std::uint32_t>();
  const auto u = j.value("u", 1U);
  std::vector<std::uint32_t> modulus;
  if (j.contains("modulus")) modulus = j.at("modulus").get<std::vector<std::uint32_t>>();
  return Field::make(p, u, modulus);
}

json elem_to_json(const Field& f, Elem a) {
  if (f.is_prime_field()) return a;
  return f.coeffs(a);
}

Elem elem_from_json(const Field& f, const json& j) {
  if (j.is_number_integer()) {
    const auto v = j.get<std::int64_t>();
    if (f.is_prime_field()) return f.from_int(v);
    if (v < 0 || v >= static_cast<std::int64_t>(f.order())) bad("element code out of range for " + f.name());
    return static_cast<Elem>(v);
  }
  if (j.is_array() && !f.is_prime_field()) {
    auto c = j.get<std::vector<std::uint32_t>>();
    if (c.size() > f.extension_degree()) bad("too many coefficients for " + f.name());
    c.resize(f.extension_degree(), 0);
    for (auto x : c) {
      if (x >= f.characteristic()) bad("coefficient out of range for " + f.name());
    }
    return f.from_coeffs(c);
  }
  bad("bad element for " + f.name());
}

json vec_to_json(const Field& f, const Vec& v) {
  json out = json::array();
  for (auto a : v) out.push_back(elem_to_json(f, a));
  return out;
}

Vec vec_from_json(const Field& f, const json& j) {
  if (!j.is_array()) bad("vector must be an array");
  Vec v;
  v.reserve(j.size());
  for (const auto& e : j) v.push_back(elem_from_json(f, e));
  return v;
}

json tuple_to_json(const Field& f, const Tuple& t) {
  json out = json::array();
  for (const auto& v : t) out.push_back(vec_to_json(f, v));
  return out;
}

Tuple tuple_from_json(const Field& f, const json& j) {
  if (!j.is_array()) bad("tuple must be an array of vectors");
  Tuple t;
  for (const auto& v : j) t.push_back(vec_from_json(f, v));
  return t;
}

json to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const auto r = m.row(i);
    rows.push_back(vec_to_json(m.field(), Vec(r.begin(), r.end())));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

Matrix matrix_from_json(const Field& f, const json& j) {
  const json& entries = j.is_array() ? j : need(j, "entries");
  if (!entries.is_array()) bad("matrix entries must be an array of rows");
  std::size_t rows = entries.size();
  std::size_t cols = rows ? entries.front().size() : 0;
  if (j.is_object()) {
    rows = need_size(j, "rows");
    cols = need_size(j, "cols");
    if (entries.size() != rows) bad("matrix row count does not match \"rows\"");
  }
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const Vec r = vec_from_json(f, entries[i]);
    if (r.size() != cols) bad("matrix row " + std::to_string(i) + " has the wrong length");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = r[c];
  }
  return m;
}

std::string kind_name(SourceKind kind) {
  switch (kind) {
    case SourceKind::Hamming: return "hamming";
    case SourceKind::GeneralizedHamming: return "generalized_hamming";
    case SourceKind::Explicit: return "explicit";
  }
  return "explicit";
}

SourceKind kind_from_name(const std::string& name) {
  if (name == "hamming") return SourceKind::Hamming;
  if (name == "generalized-hamming" || name == "generalized_hamming") return SourceKind::GeneralizedHamming;
  if (name == "explicit") return SourceKind::Explicit;
  bad("unknown source kind \"" + name + "\"");
}

json to_json(const Source& src) {
  const Field& f = src.field();
  json reps_json = json::array();
  for (const auto& t : src.reps()) reps_json.push_back(tuple_to_json(f, t));
  json j{{"field", to_json(f)}, {"n", src.block_len()}, {"s", src.terminals()}, {"kind", kind_name(src.kind())}, {"D", reps_json}};
  if (src.kind() != SourceKind::Explicit) j["L"] = vec_to_json(f, src.deviation_set());
  return j;
}

Source source_from_json(const json& j) {
  const Field f = field_from_json(need(j, "field"));
  const std::size_t len = need_size(j, "n");
  const std::size_t terms = need_size(j, "s");
  const SourceKind kind = kind_from_name(j.value("kind", std::string("explicit")));
  Vec deviations;
  if (j.contains("L")) deviations = vec_from_json(f, j.at("L"));
  if (!j.contains("D")) {
    if (kind == SourceKind::Hamming) return hamming_source(f, len, terms);
    if (kind == SourceKind::GeneralizedHamming) return generalized_hamming_source(f, len, terms, deviations);
    bad("explicit source needs \"D\"");
  }
  std::vector<Tuple> reps;
  for (const auto& t : j.at("D")) reps.push_back(tuple_from_json(f, t));
  return Source::make(f, len, terms, std::move(reps), kind, std::move(deviations));
}

json to_json(const ParentMatrix& p) {
  json blocks = json::array();
  for (const auto& q : p.blocks()) blocks.push_back(to_json(q));
  return {{"field", to_json(p.field())}, {"r", p.height()}, {"s", p.terminals()}, {"n", p.block_len()}, {"blocks", blocks}};
}

ParentMatrix parent_from_json(const json& j) {
  const Field f = field_from_json(need(j, "field"));
  if (j.contains("P")) return ParentMatrix::from_matrix(matrix_from_json(f, j.at("P")), need_size(j, "s"));
  std::vector<Matrix> blocks;
  for (const auto& b : need(j, "blocks")) blocks.push_back(matrix_from_json(f, b));
  if (blocks.empty()) bad("parent has no blocks");
  ParentMatrix p(std::move(blocks));
  if (j.contains("s") && need_size(j, "s") != p.terminals()) bad("\"s\" does not match the block count");
  if (j.contains("n") && need_size(j, "n") != p.block_len()) bad("\"n\" does not match the block width");
  if (j.contains("r") && need_size(j, "r") != p.height()) bad("\"r\" does not match the block height");
  return p;
}

json to_json(const PartitionCode& code) {
  json encoders = json::array();
  for (const auto& h : code.encoders()) encoders.push_back(to_json(h));
  json j{{"field", to_json(code.field())}, {"n", code.block_len()}, {"s", code.terminals()}, {"H", encoders}};
  if (const auto& w = code.witness()) {
    json wj{{"parent", to_json(w->parent)}, {"partition", w->partition}};
    if (w->kind == WitnessKind::Full) {
      wj["kind"] = "full";
      json mixers = json::array();
      for (const auto& u : w->mixers) mixers.push_back(to_json(u));
      wj["U"] = mixers;
    } else {
      wj["kind"] = "pre";
      wj["T"] = to_json(w->complement);
    }
    j["witness"] = wj;
  }
  return j;
}

PartitionCode code_from_json(const json& j) {
  const Field f = field_from_json(need(j, "field"));
  std::vector<Matrix> encoders;
  for (const auto& h : need(j, "H")) encoders.push_back(matrix_from_json(f, h));
  if (!j.contains("witness") || j.at("witness").is_null()) {
    PartitionCode code(std::move(encoders));
    if (j.contains("n") && need_size(j, "n") != code.block_len()) bad("\"n\" does not match the encoders");
    return code;
  }
  const json& w = j.at("witness");
  const ParentMatrix parent = parent_from_json(need(w, "parent"));
  const auto partition = need(w, "partition").get<std::vector<std::size_t>>();
  if (w.value("kind", std::string("full")) == "pre") {
    return construct_pre_mpc(parent, matrix_from_json(f, need(w, "T")), partition, encoders);
  }
  std::optional<std::vector<Matrix>> mixers;
  if (w.contains("U")) {
    mixers.emplace();
    for (const auto& u : w.at("U")) mixers->push_back(matrix_from_json(f, u));
  }
  PartitionCode code = construct_mpc(parent, partition, mixers);
  if (code.encoders() != encoders) bad("witness does not reproduce the stored encoders");
  return code;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    bad(path + ": " + e.what());
  }
}

}  // namespace mpc::cli
