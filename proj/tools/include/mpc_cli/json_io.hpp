#pragma once

// JSON forms of the library types. Elements of prime fields are integers;
// elements of extension fields are coefficient arrays, constant term first.
// Loaders also accept a bare integer element code for extension fields.

#include <nlohmann/json.hpp>

#include "mpc/mpc.hpp"

namespace mpc::cli {

using json = nlohmann::json;

json to_json(const Field& f);
Field field_from_json(const json& j);

json elem_to_json(const Field& f, Elem a);
Elem elem_from_json(const Field& f, const json& j);

json vec_to_json(const Field& f, const Vec& v);
Vec vec_from_json(const Field& f, const json& j);

json tuple_to_json(const Field& f, const Tuple& t);
Tuple tuple_from_json(const Field& f, const json& j);

/// {"rows", "cols", "entries": [[...], ...]}. A bare array of rows is also read.
json to_json(const Matrix& m);
Matrix matrix_from_json(const Field& f, const json& j);

json to_json(const Source& src);
Source source_from_json(const json& j);
std::string kind_name(SourceKind kind);
SourceKind kind_from_name(const std::string& name);

json to_json(const ParentMatrix& p);
ParentMatrix parent_from_json(const json& j);

/// The witness is stored as the inputs that rebuild it (parent, partition, U
/// or T'); loading rebuilds it and checks that H comes out unchanged.
json to_json(const PartitionCode& code);
PartitionCode code_from_json(const json& j);

json read_json_file(const std::string& path);

}  // namespace mpc::cli
