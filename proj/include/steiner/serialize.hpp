#pragma once

// JSON documents for complexes and presentations.
//
//   adc:       {"kind": "adc", "generators": [{"name", "dim", "boundary": {name: coeff}} |
//                                             {"name", "dim": 0, "augmentation"}]}
//   polygraph: {"kind": "polygraph", "generators": [{"name", "dim", "src": EXPR, "tgt": EXPR}]}
//   EXPR:      {"gen": name} | {"id": EXPR} | {"comp": [level, EXPR, EXPR]}
//
// Output is canonical: sorted keys, generators in (dimension, declaration)
// order, two-space indentation and a trailing newline.

#include <string>
#include <variant>

#include <json.hpp>

#include "steiner/adc.hpp"
#include "steiner/nu.hpp"
#include "steiner/polygraph.hpp"
#include "steiner/relation_graph.hpp"

namespace steiner {

using Json = nlohmann::json;

using Document = std::variant<Adc, Presentation>;

Json to_json(const Adc& complex);
Json to_json(const Presentation& P);
Json to_json(const Presentation& P, const CellExpr& e);
Json to_json(const IntVector& v);
Json to_json(const NuTable& t);
Json to_json(const RelationGraph& g);
Json to_json(const Verdict& v);

std::string serialize(const Adc& complex);
std::string serialize(const Presentation& P);
std::string serialize(const Document& doc);

/// Throws Error(parse) with a byte offset for malformed text, Error(schema)
/// for well-formed documents with bad fields and Error(validation) when the
/// structure fails its own laws.
Document parse_document(const std::string& text);
Adc adc_from_json(const Json& j);
Presentation presentation_from_json(const Json& j);
CellExpr expr_from_json(const Presentation& P, const Json& j);

} // namespace steiner
