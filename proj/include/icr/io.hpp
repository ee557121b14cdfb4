#pragma once

#include "icr/cone.hpp"
#include "icr/delta_rep.hpp"
#include "icr/limits.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace icr {

using Json = nlohmann::json;

/// Malformed input. The message starts with the JSON pointer of the
/// offending field (or the parser's line/column for syntax errors).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Collects non-fatal diagnostics such as auto-canonicalized antichains.
struct Diagnostics {
  std::vector<std::string> warnings;
};

Json to_json(const Rat& r);
Json to_json(const VecPlus& v);
Json to_json(const BoxUnion& c);
Json to_json(const ScalarFn& f);
Json to_json(const Mapping& f);
Json to_json(const TSet& t);
Json to_json(const ESpec& e);
Json to_json(const ScalarSeq& s);
Json to_json(const SetSequence& s);
Json to_json(const MappingSequence& s);

Rat rat_from_json(const Json& j, Diagnostics* d = nullptr);
VecPlus vec_from_json(const Json& j, Diagnostics* d = nullptr);
BoxUnion set_from_json(const Json& j, Diagnostics* d = nullptr);
Mapping mapping_from_json(const Json& j, Diagnostics* d = nullptr);
TSet tset_from_json(const Json& j, Diagnostics* d = nullptr);
ESpec espec_from_json(const Json& j, Diagnostics* d = nullptr);
SetSequence sequence_from_json(const Json& j, Diagnostics* d = nullptr);
MappingSequence mapping_sequence_from_json(const Json& j, Diagnostics* d = nullptr);

/// Parses JSON text, mapping syntax errors to ParseError with position.
Json parse_text(const std::string& text);
Json read_json_file(const std::string& path);

/// Comma separated rationals, e.g. "1/2,3".
VecPlus parse_point(const std::string& text);

/// Canonical text: sorted keys, two-space indent, trailing newline.
std::string dump(const Json& j);

}  // namespace icr
