#include "qpd/io.hpp"

#include <algorithm>
#include <sstream>

#include "qpd/error.hpp"

namespace qpd {

using nlohmann::ordered_json;

namespace {

[[noreturn]] void malformed(const std::string& message, const std::string& where) {
  throw DiagramError(ErrorKind::MalformedDocument, message, where);
}

std::vector<Pair> read_pairs(const ordered_json& j, const std::string& field) {
  const std::string where = "/" + field;
  if (!j.contains(field)) malformed("missing field \"" + field + "\"", where);
  const auto& arr = j.at(field);
  if (!arr.is_array()) malformed("\"" + field + "\" must be an array", where);
  std::vector<Pair> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const auto& p = arr[i];
    const std::string at = where + "/" + std::to_string(i);
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() ||
        !p[1].is_number_integer()) {
      malformed("expected a pair of integers", at);
    }
    out.emplace_back(p[0].get<int>(), p[1].get<int>());
  }
  return out;
}

ordered_json pairs_json(std::vector<Pair> pairs) {
  std::sort(pairs.begin(), pairs.end());
  ordered_json arr = ordered_json::array();
  for (const auto& [a, b] : pairs) arr.push_back({a, b});
  return arr;
}

}  // namespace

DiagramDocument document_from_json(const ordered_json& j) {
  if (!j.is_object()) malformed("document must be a JSON object", "");
  for (const auto& [key, value] : j.items()) {
    if (key != "n" && key != "covers" && key != "left" && key != "name") {
      malformed("unknown field \"" + key + "\"", "/" + key);
    }
  }
  DiagramDocument doc;
  if (!j.contains("n") || !j.at("n").is_number_integer()) {
    malformed("\"n\" must be an integer", "/n");
  }
  doc.n = j.at("n").get<int>();
  doc.covers = read_pairs(j, "covers");
  doc.left = read_pairs(j, "left");
  if (j.contains("name")) {
    if (!j.at("name").is_string()) malformed("\"name\" must be a string", "/name");
    doc.name = j.at("name").get<std::string>();
  }
  return doc;
}

DiagramDocument parse_document(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    malformed(std::string("invalid JSON: ") + e.what(), "");
  }
  return document_from_json(j);
}

ordered_json to_json(const DiagramDocument& doc) {
  ordered_json j;
  j["n"] = doc.n;
  j["covers"] = pairs_json(doc.covers);
  j["left"] = pairs_json(doc.left);
  if (doc.name) j["name"] = *doc.name;
  return j;
}

std::string serialize(const DiagramDocument& doc) { return to_json(doc).dump(); }

Diagram to_diagram(const DiagramDocument& doc) {
  return validate(RawDiagram{doc.n, doc.covers, doc.left});
}

DiagramDocument to_document(const Diagram& d, std::optional<std::string> name) {
  return DiagramDocument{d.size(), d.order().cover_pairs(), d.left_pairs(),
                         std::move(name)};
}

DiagramDocument to_document(const RawDiagram& raw) {
  return DiagramDocument{raw.n, raw.covers, raw.left, std::nullopt};
}

std::vector<LayoutPoint> layout(const Diagram& d) {
  std::vector<LayoutPoint> out(d.size());
  for (int x = 0; x < d.size(); ++x) {
    out[x] = {d.lambda_position(x) - d.rho_position(x),
              d.lambda_position(x) + d.rho_position(x)};
  }
  return out;
}

std::string render_dot(const Diagram& d) {
  const auto pts = layout(d);
  std::ostringstream os;
  os << "digraph diagram {\n"
     << "  graph [inputscale=1, splines=line];\n"
     << "  node [shape=circle, width=0.3, fixedsize=true];\n"
     << "  edge [dir=none];\n";
  for (int x = 0; x < d.size(); ++x) {
    os << "  " << x << " [pos=\"" << pts[x].x << ',' << pts[x].y << "!\"];\n";
  }
  for (const auto& [lo, hi] : d.order().cover_pairs()) {
    os << "  " << lo << " -> " << hi << ";\n";
  }
  os << "}\n";
  return os.str();
}

ordered_json report_to_json(const EnumerationReport& report, bool with_timing) {
  ordered_json j;
  j["size"] = report.size;
  j["count"] = report.count;
  j["expected"] = report.expected;
  j["passed"] = report.passed();
  ordered_json props = ordered_json::array();
  for (const auto& r : report.results) {
    ordered_json p;
    p["name"] = r.name;
    p["checked"] = r.checked;
    p["failures"] = r.failures;
    if (r.witness) {
      ordered_json w;
      w["perm"] = r.witness->perm.perm;
      w["detail"] = r.witness->detail;
      if (r.witness->diagram) w["diagram"] = to_json(to_document(*r.witness->diagram));
      p["witness"] = w;
    }
    props.push_back(p);
  }
  j["properties"] = props;
  if (with_timing) j["elapsed_ms"] = report.elapsed.count();
  return j;
}

}  // namespace qpd
