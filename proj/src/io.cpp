#include "envelope_kit/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "envelope_kit/error.hpp"

namespace envkit {

using nlohmann::json;

InstanceDocument parse_instance(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::kParseError, e.what());
  }
  if (!root.is_object() || !root.contains("elements") || !root.contains("covers")) {
    throw Error(ErrorKind::kParseError, "expected an object with \"elements\" and \"covers\"");
  }
  const auto& elements = root["elements"];
  const auto& covers = root["covers"];
  if (!elements.is_array() || !covers.is_array()) {
    throw Error(ErrorKind::kParseError, "\"elements\" and \"covers\" must be arrays");
  }
  InstanceDocument doc;
  for (const auto& e : elements) {
    if (!e.is_string()) throw Error(ErrorKind::kParseError, "element labels must be strings");
    doc.elements.push_back(e.get<std::string>());
  }
  for (const auto& c : covers) {
    if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string()) {
      throw Error(ErrorKind::kParseError, "each cover must be a pair of labels");
    }
    doc.covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
  }
  return doc;
}

InstanceDocument read_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kParseError, "cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str());
}

std::string serialize_instance(const InstanceDocument& doc) {
  json covers = json::array();
  for (const auto& [lo, hi] : doc.covers) covers.push_back({lo, hi});
  json root;
  root["elements"] = doc.elements;
  root["covers"] = std::move(covers);
  return root.dump(2) + "\n";
}

Poset to_poset(const InstanceDocument& doc) { return Poset::from_covers(doc.elements, doc.covers); }

InstanceDocument to_document(const Poset& p) {
  InstanceDocument doc;
  doc.elements = p.names();
  for (const auto& [lo, hi] : p.covers()) doc.covers.emplace_back(p.name(lo), p.name(hi));
  return doc;
}

json item_json(const VerificationItem& item, bool timings) {
  json out;
  out["name"] = item.name;
  out["status"] = to_string(item.status);
  if (!item.witness.empty()) out["witness"] = item.witness;
  if (!item.note.empty()) out["note"] = item.note;
  if (timings) out["seconds"] = item.seconds;
  return out;
}

json report_json(const VerificationReport& report, bool timings) {
  json items = json::array();
  for (const auto& item : report.items) items.push_back(item_json(item, timings));
  const auto doc = to_document(report.poset);
  json covers = json::array();
  for (const auto& [lo, hi] : doc.covers) covers.push_back({lo, hi});
  json out;
  out["instance"] = report.instance_id;
  out["elements"] = doc.elements;
  out["covers"] = std::move(covers);
  out["passed"] = report.all_passed();
  out["failures"] = report.failures();
  out["zero_not_preserved"] = report.zero_not_preserved;
  out["items"] = std::move(items);
  return out;
}

json summary_json(const SweepSummary& summary, bool timings) {
  json sizes = json::array();
  for (const auto& s : summary.sizes) {
    sizes.push_back({{"size", s.size}, {"posets", s.posets}, {"instances", s.instances}, {"passed", s.passed}});
  }
  json reports = json::array();
  for (const auto& r : summary.reports) reports.push_back(report_json(r, timings));
  json out;
  out["max_size"] = summary.max_size;
  out["instances"] = summary.instances;
  out["failures"] = summary.failures;
  out["zero_caveat_instances"] = summary.zero_caveat_instances;
  out["sizes"] = std::move(sizes);
  out["reports"] = std::move(reports);
  if (timings) out["seconds"] = summary.seconds;
  return out;
}

namespace {

std::string quote(const std::string& label) {
  std::string out = "\"";
  for (char c : label) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string hasse_dot(const std::string& graph_name, std::vector<std::string> labels,
                      const std::vector<std::pair<std::size_t, std::size_t>>& covers) {
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& [lo, hi] : covers) edges.emplace_back(labels[lo], labels[hi]);
  std::sort(labels.begin(), labels.end());
  std::sort(edges.begin(), edges.end());
  std::ostringstream out;
  out << "digraph " << quote(graph_name) << " {\n  rankdir=BT;\n";
  for (const auto& l : labels) out << "  " << quote(l) << ";\n";
  for (const auto& [lo, hi] : edges) out << "  " << quote(lo) << " -> " << quote(hi) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace

std::string dot_poset(const Poset& p, const std::string& graph_name) {
  return hasse_dot(graph_name, p.names(), p.covers());
}

std::string dot_envelope(const FilterLattice& e) {
  std::vector<std::string> labels;
  for (FilterIndex f = 0; f < e.size(); ++f) labels.push_back(e.label(f));
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (FilterIndex f = 0; f < e.size(); ++f) {
    for (FilterIndex g = 0; g < e.size(); ++g) {
      if (f == g || !e.leq(f, g)) continue;
      bool cover = true;
      for (FilterIndex h = 0; h < e.size() && cover; ++h) {
        if (h != f && h != g && e.leq(f, h) && e.leq(h, g)) cover = false;
      }
      if (cover) covers.emplace_back(f, g);
    }
  }
  return hasse_dot("envelope", std::move(labels), covers);
}

}  // namespace envkit
