#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qpd/diagram.hpp"
#include "qpd/verify.hpp"

namespace qpd {

// JSON document: {"n":4,"covers":[[0,1],...],"left":[[1,2],...],"name":"D4"}
// with fields in exactly that order and "name" optional.
struct DiagramDocument {
  int n = 0;
  std::vector<Pair> covers;
  std::vector<Pair> left;
  std::optional<std::string> name;

  friend bool operator==(const DiagramDocument&, const DiagramDocument&) = default;
};

// Throws MalformedDocument with a JSON-pointer location.
DiagramDocument parse_document(std::string_view text);
DiagramDocument document_from_json(const nlohmann::ordered_json& j);
// Compact canonical text: fixed field order, pair lists sorted.
std::string serialize(const DiagramDocument& doc);
nlohmann::ordered_json to_json(const DiagramDocument& doc);

Diagram to_diagram(const DiagramDocument& doc);
// Hasse covers and left pairs of `d`, sorted.
DiagramDocument to_document(const Diagram& d, std::optional<std::string> name = {});
DiagramDocument to_document(const RawDiagram& raw);

struct LayoutPoint {
  int x = 0;
  int y = 0;
  friend bool operator==(const LayoutPoint&, const LayoutPoint&) = default;
};

// x = lambda position - rho position, y = lambda position + rho position.
std::vector<LayoutPoint> layout(const Diagram& d);
std::string render_dot(const Diagram& d);

nlohmann::ordered_json report_to_json(const EnumerationReport& report,
                                      bool with_timing);

}  // namespace qpd
