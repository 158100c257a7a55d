#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "lpalab/classify.hpp"

namespace lpa {

using Json = nlohmann::ordered_json;

/// Graph JSON: {"vertices": <n or list of names>,
///              "edges": [{"from": i-or-name, "to": j-or-name, "count": c}...]}.
MultiGraph graph_from_json(const Json& j);  // BadGraphFile
Json graph_to_json(const MultiGraph& g);

/// Compact two-vertex form "l1,t1;l2,t2".
MultiGraph graph_from_compact(const std::string& text);  // BadGraphFile

/// Accepts a path to a JSON file, or an inline "sig:l1,t1;l2,t2" literal.
MultiGraph load_graph(const std::string& path_or_sig);

/// Matrix JSON: {"rows": [[...], ...]}.
IntMatrix matrix_from_json(const Json& j);  // BadGraphFile
Json matrix_to_json(const IntMatrix& m);
IntMatrix load_matrix(const std::string& path);

Json group_to_json(const FgAbelianGroup& g);
Json element_to_json(const GroupElement& e);
Json descriptor_to_json(const AlgebraDescriptor& d);
Json bundle_to_json(const InvariantBundle& b);
Json classify_to_json(const ClassifyResult& c);
Json witness_path_to_json(const WitnessPath& w);
Json decision_to_json(const IsoDecision& d);
Json table_row_to_json(const TableRow& r);

std::string bundle_to_text(const InvariantBundle& b);
std::string classify_to_text(const ClassifyResult& c);
std::string decision_to_text(const IsoDecision& d);
std::string table_to_csv(const std::vector<TableRow>& rows);
std::string table_to_text(const std::vector<TableRow>& rows);

/// FNV-1a digest of raw input bytes, as 16 hex digits.
std::string digest(const std::string& bytes);

std::string read_file(const std::string& path);  // BadGraphFile on I/O failure

}  // namespace lpa
