#include "mpc_cli/cli.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "mpc/mpc.hpp"
#include "mpc_cli/json_io.hpp"

namespace mpc::cli {

namespace {

struct Globals {
  std::string out_path;
  unsigned workers = 1;
  std::uint64_t cap = 2'000'000;
};

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  const Globals& globals;

  void emit(const json& j) const {
    if (globals.out_path.empty()) {
      out << j.dump(2) << '\n';
      return;
    }
    std::ofstream f(globals.out_path);
    if (!f) throw Error(ErrorCode::ParseError, "cannot write " + globals.out_path);
    f << j.dump(2) << '\n';
  }
};

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "bad integer \"" + item + "\" in list \"" + text + "\"");
    }
  }
  return out;
}

std::vector<std::size_t> parse_size_list(const std::string& text) {
  std::vector<std::size_t> out;
  for (auto v : parse_int_list(text)) {
    if (v < 0) throw Error(ErrorCode::ParseError, "negative entry in \"" + text + "\"");
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

Vec elems_from_list(const Field& f, const std::string& text) {
  Vec out;
  for (auto v : parse_int_list(text)) out.push_back(elem_from_json(f, json(v)));
  return out;
}

std::vector<Matrix> matrices_from_json(const Field& f, const json& j, const char* key) {
  const json& list = j.is_object() ? j.at(key) : j;
  std::vector<Matrix> out;
  for (const auto& m : list) out.push_back(matrix_from_json(f, m));
  return out;
}

int exit_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::SearchExhausted:
    case ErrorCode::InvalidCompression:
    case ErrorCode::DuplicateSyndrome:
      return kExitFail;
    default:
      return kExitInvalid;
  }
}

json error_record(const std::string& code, const std::string& message) {
  return {{"error", code}, {"message", message}};
}

json error_record(const Error& e) {
  const std::string what = e.what();
  const std::string prefix = std::string(to_string(e.code())) + ": ";
  return error_record(std::string(to_string(e.code())),
                      what.rfind(prefix, 0) == 0 ? what.substr(prefix.size()) : what);
}

// ---- make-source ----

struct MakeSourceArgs {
  std::string kind;
  std::uint32_t characteristic = 0;
  std::uint32_t extension_degree = 1;
  std::string modulus;
  std::size_t block_len = 0;
  std::size_t terminals = 0;
  std::string deviations;
  std::string d_file;
};

int cmd_make_source(const MakeSourceArgs& a, const Io& io) {
  const SourceKind kind = kind_from_name(a.kind);
  std::optional<Field> field;
  if (a.characteristic) {
    std::vector<std::uint32_t> modulus;
    for (auto c : parse_int_list(a.modulus)) modulus.push_back(static_cast<std::uint32_t>(c));
    field = Field::make(a.characteristic, a.extension_degree, modulus);
  }
  if (kind == SourceKind::Explicit) {
    if (a.d_file.empty()) throw Error(ErrorCode::ParseError, "explicit sources need --D-file");
    const json doc = read_json_file(a.d_file);
    if (!field && doc.is_object() && doc.contains("field")) field = field_from_json(doc.at("field"));
    if (!field) throw Error(ErrorCode::ParseError, "no field given (--p or \"field\" in the D file)");
    const json& list = doc.is_object() ? doc.at("D") : doc;
    std::vector<Tuple> reps;
    for (const auto& t : list) reps.push_back(tuple_from_json(*field, t));
    if (reps.empty()) throw Error(ErrorCode::ShapeError, "D is empty");
    const std::size_t terms = a.terminals ? a.terminals : reps.front().size();
    const std::size_t len = a.block_len ? a.block_len : (reps.front().empty() ? 0 : reps.front().front().size());
    io.emit(to_json(Source::make(*field, len, terms, std::move(reps))));
    return kExitPass;
  }
  if (!field) throw Error(ErrorCode::ParseError, "--p is required");
  if (!a.block_len || !a.terminals) throw Error(ErrorCode::ParseError, "--n and --s are required");
  if (kind == SourceKind::Hamming) {
    io.emit(to_json(hamming_source(*field, a.block_len, a.terminals)));
  } else {
    if (a.deviations.empty()) throw Error(ErrorCode::ParseError, "generalized-hamming needs --L");
    io.emit(to_json(generalized_hamming_source(*field, a.block_len, a.terminals, elems_from_list(*field, a.deviations))));
  }
  return kExitPass;
}

// ---- make-parent ----

struct MakeParentArgs {
  std::string source;
  std::string method;
  std::string blocks_file;
  std::uint64_t budget = RepairOptions{}.node_budget;
};

json parent_report(const ParentReport& r) {
  json j{{"zero_sum", r.zero_sum}, {"injective", r.injective}, {"bijective", r.bijective}, {"image_size", r.image_size}};
  if (r.collision) j["collision"] = {r.collision->first, r.collision->second};
  return j;
}

int cmd_make_parent(const MakeParentArgs& a, const Io& io) {
  const Source src = source_from_json(read_json_file(a.source));
  const Field& f = src.field();
  std::string method = a.method;
  if (method.empty()) method = a.blocks_file.empty() ? "coset" : "file";
  std::optional<ParentMatrix> parent;
  if (method == "file") {
    if (a.blocks_file.empty()) throw Error(ErrorCode::ParseError, "--method file needs --blocks-file");
    json doc = read_json_file(a.blocks_file);
    if (doc.is_array()) doc = json{{"blocks", doc}};
    if (!doc.contains("field")) doc["field"] = to_json(f);
    parent = parent_from_json(doc);
  } else if (method == "coset") {
    if (src.kind() == SourceKind::Explicit) {
      throw Error(ErrorCode::ParseError, "the coset construction needs a (generalized) Hamming source");
    }
    const ParentMatrix candidate = coset_parent(f, src.deviation_set(), src.terminals(), src.block_len());
    RepairOptions opts;
    opts.node_budget = a.budget;
    parent = zero_sum_repair(candidate, src, opts);
  } else if (method == "hamming-s2") {
    if (src.kind() != SourceKind::Hamming || src.terminals() != 2) {
      throw Error(ErrorCode::ParseError, "hamming-s2 needs a Hamming source with s = 2");
    }
    const std::size_t r = min_r(f, src.block_len());
    const auto pts = projective_points(f, r);
    parent = s2_parent(Matrix::from_columns(f, r, std::vector<Vec>(pts.begin(), pts.begin() + static_cast<long>(src.block_len()))));
  } else {
    throw Error(ErrorCode::ParseError, "unknown method \"" + method + "\"");
  }
  const ParentReport rep = validate_parent(*parent, src);
  json j = to_json(*parent);
  j["report"] = parent_report(rep);
  io.emit(j);
  return rep.ok() ? kExitPass : kExitFail;
}

// ---- construct ----

struct ConstructArgs {
  std::string parent;
  std::string partition;
  std::string u_file;
  std::string t_file;
};

int cmd_construct(const ConstructArgs& a, const Io& io) {
  const ParentMatrix parent = parent_from_json(read_json_file(a.parent));
  const Field& f = parent.field();
  std::optional<std::vector<std::size_t>> partition;
  if (!a.partition.empty()) partition = parse_size_list(a.partition);
  if (!a.t_file.empty()) {
    if (!partition) throw Error(ErrorCode::BadPartition, "a pre-code needs --partition");
    const json doc = read_json_file(a.t_file);
    const Matrix t = matrix_from_json(f, doc.is_object() && doc.contains("T") ? doc.at("T") : doc);
    io.emit(to_json(construct_pre_mpc(parent, t, *partition)));
    return kExitPass;
  }
  std::optional<std::vector<Matrix>> mixers;
  if (!a.u_file.empty()) mixers = matrices_from_json(f, read_json_file(a.u_file), "U");
  io.emit(to_json(construct_mpc(parent, partition, mixers)));
  return kExitPass;
}

// ---- verify / perfect / ratio / min-length ----

struct CodeSourceArgs {
  std::string code;
  std::string source;
};

int cmd_verify(const CodeSourceArgs& a, const std::string& mode_name, const Io& io) {
  const PartitionCode code = code_from_json(read_json_file(a.code));
  const Source src = source_from_json(read_json_file(a.source));
  VerifyMode mode;
  if (mode_name == "structural") {
    mode = VerifyMode::Structural;
  } else if (mode_name == "exhaustive") {
    mode = VerifyMode::Exhaustive;
  } else {
    throw Error(ErrorCode::ParseError, "unknown mode \"" + mode_name + "\"");
  }
  VerifyOptions opts;
  opts.cap = io.globals.cap;
  opts.workers = io.globals.workers;
  const VerifyReport rep = verify_compression(code, src, mode, opts);
  json j{{"pass", rep.pass}, {"trivial_intersection", rep.trivial_intersection}, {"checked", rep.checked},
         {"mode", mode_name}, {"M", code.total_length()}};
  if (rep.counterexample) {
    j["counterexample"] = {{"a", tuple_to_json(code.field(), rep.counterexample->first)},
                           {"b", tuple_to_json(code.field(), rep.counterexample->second)}};
  }
  io.emit(j);
  return rep.pass ? kExitPass : kExitFail;
}

int cmd_perfect(const CodeSourceArgs& a, const Io& io) {
  const PartitionCode code = code_from_json(read_json_file(a.code));
  const Source src = source_from_json(read_json_file(a.source));
  const PerfectReport rep = is_perfect(code, src);
  json j{{"perfect", rep.perfect}, {"exponent", rep.exponent}, {"rep_count", rep.rep_count},
         {"field_order", code.field().order()}, {"M", code.total_length()}, {"n", code.block_len()}};
  if (rep.parent_bijective) j["parent_bijective"] = *rep.parent_bijective;
  io.emit(j);
  return rep.perfect ? kExitPass : kExitFail;
}

json fraction(const Fraction& fr) { return {{"num", fr.num}, {"den", fr.den}}; }

int cmd_ratio(const std::string& code_path, const Io& io) {
  const PartitionCode code = code_from_json(read_json_file(code_path));
  const RatioReport rep = ratio_report(code);
  json ratios = json::array();
  for (const auto& r : rep.ratios) ratios.push_back(fraction(r));
  io.emit({{"ratios", ratios},
           {"sum_ratio", fraction(rep.sum_ratio)},
           {"extra", rep.extra},
           {"extra_total", rep.extra_total},
           {"required_extra", rep.required_extra},
           {"bound_holds", rep.bound_holds},
           {"minimal", rep.minimal}});
  return rep.bound_holds ? kExitPass : kExitFail;
}

int cmd_min_length(const std::string& parent_path, const std::string& code_path, const Io& io) {
  const ParentMatrix parent = parent_from_json(read_json_file(parent_path));
  const std::size_t m = min_total_length(parent);
  json j{{"min_M", m}};
  if (!code_path.empty()) {
    const PartitionCode code = code_from_json(read_json_file(code_path));
    j["M"] = code.total_length();
    j["excess"] = static_cast<std::int64_t>(code.total_length()) - static_cast<std::int64_t>(m);
  }
  io.emit(j);
  return kExitPass;
}

// ---- encode / decode / roundtrip ----

std::istream& open_input(const std::string& path, std::ifstream& file, std::istream& fallback) {
  if (path.empty() || path == "-") return fallback;
  file.open(path);
  if (!file) throw Error(ErrorCode::ParseError, "cannot open " + path);
  return file;
}

std::ostream& open_output(const Globals& g, std::ofstream& file, std::ostream& fallback) {
  if (g.out_path.empty()) return fallback;
  file.open(g.out_path);
  if (!file) throw Error(ErrorCode::ParseError, "cannot write " + g.out_path);
  return file;
}

// Runs fn on every nonblank line; failures become error records and the stream continues.
int stream_lines(std::istream& in, std::ostream& out, const std::function<json(const json&)>& fn) {
  std::string line;
  std::size_t lineno = 0;
  bool failed = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json rec;
    try {
      rec = fn(json::parse(line));
    } catch (const Error& e) {
      rec = error_record(e);
      failed = true;
    } catch (const json::exception& e) {
      rec = error_record("ParseError", e.what());
      failed = true;
    }
    if (rec.contains("error")) rec["line"] = lineno;
    out << rec.dump() << '\n';
  }
  return failed ? kExitFail : kExitPass;
}

std::vector<Vec> codeword_from_json(const PartitionCode& code, const json& j) {
  std::vector<Vec> y = tuple_from_json(code.field(), j);
  if (y.size() != code.terminals()) throw Error(ErrorCode::ShapeError, "codeword needs " + std::to_string(code.terminals()) + " parts");
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i].size() != code.encoded_len(i)) {
      throw Error(ErrorCode::ShapeError, "part " + std::to_string(i + 1) + " must have length " + std::to_string(code.encoded_len(i)));
    }
  }
  return y;
}

int cmd_encode(const std::string& code_path, const std::string& in_path, const Io& io) {
  const PartitionCode code = code_from_json(read_json_file(code_path));
  std::ifstream fin;
  std::ofstream fout;
  std::istream& in = open_input(in_path, fin, io.in);
  std::ostream& out = open_output(io.globals, fout, io.out);
  return stream_lines(in, out, [&](const json& rec) {
    const Tuple x = tuple_from_json(code.field(), rec.at("x"));
    if (x.size() != code.terminals()) throw Error(ErrorCode::ShapeError, "tuple needs " + std::to_string(code.terminals()) + " parts");
    for (const auto& xi : x) {
      if (xi.size() != code.block_len()) throw Error(ErrorCode::ShapeError, "components must have length " + std::to_string(code.block_len()));
    }
    return json{{"y", tuple_to_json(code.field(), encode(code, x))}};
  });
}

bool has_full_witness(const PartitionCode& code) {
  return code.witness() && code.witness()->kind == WitnessKind::Full;
}

int cmd_decode(const CodeSourceArgs& a, const std::string& in_path, const Io& io) {
  const PartitionCode code = code_from_json(read_json_file(a.code));
  const Source src = source_from_json(read_json_file(a.source));
  std::optional<Decoder> decoder;
  if (has_full_witness(code)) decoder.emplace(code, src);
  std::ifstream fin;
  std::ofstream fout;
  std::istream& in = open_input(in_path, fin, io.in);
  std::ostream& out = open_output(io.globals, fout, io.out);
  const std::uint64_t cap = io.globals.cap;
  return stream_lines(in, out, [&](const json& rec) {
    const auto y = codeword_from_json(code, rec.at("y"));
    const Tuple x = decoder ? decoder->decode(y) : oracle_decode(code, src, y, cap);
    return json{{"x", tuple_to_json(code.field(), x)}};
  });
}

struct RoundtripArgs {
  std::string code;
  std::string source;
  bool exhaustive = false;
  std::uint64_t samples = 10'000;
  std::uint64_t seed = 1;
};

int cmd_roundtrip(const RoundtripArgs& a, const Io& io) {
  const PartitionCode code = code_from_json(read_json_file(a.code));
  const Source src = source_from_json(read_json_file(a.source));
  std::optional<Decoder> decoder;
  if (has_full_witness(code)) decoder.emplace(code, src);
  const Field& f = code.field();
  const std::uint64_t cap = io.globals.cap;
  auto ok = [&](const Tuple& sigma) {
    const auto y = encode(code, sigma);
    try {
      return (decoder ? decoder->decode(y) : oracle_decode(code, src, y, cap)) == sigma;
    } catch (const Error& e) {
      if (e.code() == ErrorCode::TooLarge) throw;
      return false;
    }
  };

  std::atomic<std::uint64_t> tested{0}, failures{0};
  if (a.exhaustive) {
    const auto total = src.size();
    if (!total || *total > cap) throw Error(ErrorCode::TooLarge, "source has more than " + std::to_string(cap) + " elements");
    const std::uint64_t shifts = *src.shift_count();
    parallel_ranges(shifts, resolve_workers(io.globals.workers), [&](unsigned, std::uint64_t begin, std::uint64_t end) {
      std::uint64_t t = 0, bad = 0;
      for (std::uint64_t wi = begin; wi < end; ++wi) {
        const Vec w = vector_at(f.order(), src.block_len(), wi);
        for (std::size_t k = 0; k < src.rep_count(); ++k) {
          ++t;
          if (!ok(src.compose(w, k))) ++bad;
        }
      }
      tested += t;
      failures += bad;
    });
  } else {
    std::mt19937_64 rng(a.seed);
    std::uniform_int_distribution<Elem> elem(0, f.order() - 1);
    std::uniform_int_distribution<std::size_t> rep(0, src.rep_count() - 1);
    for (std::uint64_t i = 0; i < a.samples; ++i) {
      Vec w(src.block_len());
      for (auto& x : w) x = elem(rng);
      ++tested;
      if (!ok(src.compose(w, rep(rng)))) ++failures;
    }
  }
  io.emit({{"mode", a.exhaustive ? "exhaustive" : "samples"},
           {"tested", tested.load()},
           {"failures", failures.load()},
           {"decoder", decoder ? "table" : "oracle"}});
  return failures == 0 ? kExitPass : kExitFail;
}

// ---- analysis ----

int cmd_extract_parent(const CodeSourceArgs& a, const Io& io) {
  const PartitionCode code = code_from_json(read_json_file(a.code));
  const Source src = source_from_json(read_json_file(a.source));
  const ParentMatrix parent = extract_parent(code, src);
  json j = to_json(parent);
  j["report"] = parent_report(validate_parent(parent, src));
  j["report"]["min_M"] = min_total_length(parent);
  io.emit(j);
  return kExitPass;
}

struct ShiftArgs {
  std::string code;
  std::string perm;
  std::string k_file;
  std::string complements_file;
};

int cmd_shift(const ShiftArgs& a, const Io& io) {
  const PartitionCode code = code_from_json(read_json_file(a.code));
  const Field& f = code.field();
  std::vector<std::size_t> perm;
  if (a.perm.empty()) {
    for (std::size_t i = 0; i < code.terminals(); ++i) perm.push_back(i);
  } else {
    for (auto p : parse_size_list(a.perm)) {
      if (p == 0) throw Error(ErrorCode::ParseError, "--perm is 1-based");
      perm.push_back(p - 1);
    }
  }
  Matrix k(f, code.block_len(), 0);
  if (!a.k_file.empty()) {
    const json doc = read_json_file(a.k_file);
    k = matrix_from_json(f, doc.is_object() && doc.contains("K") ? doc.at("K") : doc);
  }
  std::optional<std::vector<SubspaceBasis>> complements;
  if (!a.complements_file.empty()) {
    complements.emplace();
    for (const auto& m : matrices_from_json(f, read_json_file(a.complements_file), "N")) {
      complements->push_back(make_subspace(m));
    }
  }
  io.emit(to_json(nullspace_shift(code, perm, make_subspace(k), complements)));
  return kExitPass;
}

int cmd_compressible(const std::string& source_path, const std::string& code_out, const Io& io) {
  const Source src = source_from_json(read_json_file(source_path));
  const CompressibleVerdict v = compressible(src);
  json j{{"compressible", v.compressible}, {"forbidden", v.forbidden}};
  if (v.compressible) {
    json w{{"terminal", v.terminal + 1}, {"v", vec_to_json(src.field(), v.direction)}};
    if (v.basis_change) w["basis_change"] = to_json(*v.basis_change);
    j["witness"] = w;
    if (!code_out.empty()) {
      const PartitionCode code = compressing_code(src, v);
      std::ofstream f(code_out);
      if (!f) throw Error(ErrorCode::ParseError, "cannot write " + code_out);
      f << to_json(code).dump(2) << '\n';
      j["M"] = code.total_length();
    }
  }
  io.emit(j);
  return v.compressible ? kExitPass : kExitFail;
}

int cmd_brute_min(const std::string& source_path, const Io& io) {
  const Source src = source_from_json(read_json_file(source_path));
  const BruteMinResult r = brute_min_M(src, resolve_workers(io.globals.workers));
  json kernels = json::array();
  for (const auto& k : r.kernels) kernels.push_back(to_json(k));
  io.emit({{"min_M", r.min_total}, {"kernels", kernels}, {"sn", src.terminals() * src.block_len()}});
  return kExitPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Matrix partition codes for confined-correlated sources", "mpc"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--out", g.out_path, "Write the report or artifact here instead of stdout");
  app.add_option("--workers", g.workers, "Worker threads for exhaustive commands (0 = all cores)");
  app.add_option("--cap", g.cap, "Largest source size enumerated exhaustively");

  auto sub = [&](const char* name, const char* help) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->fallthrough();
    return cmd;
  };

  MakeSourceArgs ms;
  auto* c_ms = sub("make-source", "Build a source (hamming, generalized-hamming or explicit)");
  c_ms->add_option("--kind", ms.kind)->required();
  c_ms->add_option("--p", ms.characteristic);
  c_ms->add_option("--u", ms.extension_degree);
  c_ms->add_option("--modulus", ms.modulus, "Comma list, constant term first");
  c_ms->add_option("--n", ms.block_len);
  c_ms->add_option("--s", ms.terminals);
  c_ms->add_option("--L", ms.deviations, "Comma list of deviation scalars");
  c_ms->add_option("--D-file", ms.d_file);

  MakeParentArgs mp;
  auto* c_mp = sub("make-parent", "Build or load a parent matrix and validate it on a source");
  c_mp->add_option("source", mp.source)->required();
  c_mp->add_option("--method", mp.method, "coset | hamming-s2 | file");
  c_mp->add_option("--blocks-file", mp.blocks_file);
  c_mp->add_option("--budget", mp.budget, "Node budget of the zero-sum search");

  ConstructArgs ca;
  auto* c_co = sub("construct", "Build the partition code of a parent");
  c_co->add_option("parent", ca.parent)->required();
  c_co->add_option("--partition", ca.partition, "Rows of T per terminal, comma list");
  c_co->add_option("--U-file", ca.u_file);
  c_co->add_option("--T-file", ca.t_file, "Build a pre-code from this T'");

  CodeSourceArgs cs;
  std::string mode = "structural";
  auto* c_ve = sub("verify", "Check that a code compresses a source losslessly");
  c_ve->add_option("code", cs.code)->required();
  c_ve->add_option("source", cs.source)->required();
  c_ve->add_option("--mode", mode, "structural | exhaustive");

  auto* c_pe = sub("perfect", "Check |F|^M = |S|");
  c_pe->add_option("code", cs.code)->required();
  c_pe->add_option("source", cs.source)->required();

  std::string code_path, parent_path, in_path, code_out;
  auto* c_ra = sub("ratio", "Per-terminal ratios and the extra-row bound");
  c_ra->add_option("code", code_path)->required();

  auto* c_ml = sub("min-length", "Minimal total length for a parent");
  c_ml->add_option("parent", parent_path)->required();
  c_ml->add_option("--code", code_path, "Compare against this code");

  auto* c_en = sub("encode", "Stream {\"x\":...} lines to {\"y\":...} lines");
  c_en->add_option("code", code_path)->required();
  c_en->add_option("--in", in_path);

  auto* c_de = sub("decode", "Stream {\"y\":...} lines to {\"x\":...} lines");
  c_de->add_option("code", cs.code)->required();
  c_de->add_option("source", cs.source)->required();
  c_de->add_option("--in", in_path);

  RoundtripArgs rt;
  auto* c_rt = sub("roundtrip", "Encode then decode source tuples");
  c_rt->add_option("code", rt.code)->required();
  c_rt->add_option("source", rt.source)->required();
  c_rt->add_flag("--exhaustive", rt.exhaustive);
  c_rt->add_option("--samples", rt.samples);
  c_rt->add_option("--seed", rt.seed);

  auto* c_ex = sub("extract-parent", "Recover a parent matrix from any lossless code");
  c_ex->add_option("code", cs.code)->required();
  c_ex->add_option("source", cs.source)->required();

  ShiftArgs sh;
  auto* c_sh = sub("shift", "Move a shared null-space component between terminals");
  c_sh->add_option("code", sh.code)->required();
  c_sh->add_option("--perm", sh.perm, "1-based terminal order, comma list");
  c_sh->add_option("--K-file", sh.k_file, "Basis of K as columns");
  c_sh->add_option("--complements-file", sh.complements_file);

  std::string source_path;
  auto* c_cm = sub("compressible", "Decide whether any terminal can drop a dimension");
  c_cm->add_option("source", source_path)->required();
  c_cm->add_option("--code-out", code_out, "Write a compressing code here");

  auto* c_bm = sub("brute-min", "Exhaustive minimal total length (tiny sources)");
  c_bm->add_option("source", source_path)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitPass;
    }
    err << error_record("ParseError", e.what()).dump() << '\n';
    return kExitInvalid;
  }

  if (const char* env = std::getenv("MPC_WORKERS")) {
    try {
      g.workers = static_cast<unsigned>(std::stoul(env));
    } catch (const std::exception&) {
      err << error_record("ParseError", std::string("bad MPC_WORKERS value \"") + env + "\"").dump() << '\n';
      return kExitInvalid;
    }
  }

  const Io io{in, out, err, g};
  try {
    if (*c_ms) return cmd_make_source(ms, io);
    if (*c_mp) return cmd_make_parent(mp, io);
    if (*c_co) return cmd_construct(ca, io);
    if (*c_ve) return cmd_verify(cs, mode, io);
    if (*c_pe) return cmd_perfect(cs, io);
    if (*c_ra) return cmd_ratio(code_path, io);
    if (*c_ml) return cmd_min_length(parent_path, code_path, io);
    if (*c_en) return cmd_encode(code_path, in_path, io);
    if (*c_de) return cmd_decode(cs, in_path, io);
    if (*c_rt) return cmd_roundtrip(rt, io);
    if (*c_ex) return cmd_extract_parent(cs, io);
    if (*c_sh) return cmd_shift(sh, io);
    if (*c_cm) return cmd_compressible(source_path, code_out, io);
    if (*c_bm) return cmd_brute_min(source_path, io);
  } catch (const Error& e) {
    err << error_record(e).dump() << '\n';
    return exit_for(e.code());
  } catch (const json::exception& e) {
    err << error_record("ParseError", e.what()).dump() << '\n';
    return kExitInvalid;
  } catch (const std::out_of_range& e) {
    err << error_record("ShapeError", e.what()).dump() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}

}  // namespace mpc::cli
