#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "envelope_kit/birkhoff.hpp"
#include "envelope_kit/enumeration.hpp"
#include "envelope_kit/poset.hpp"

namespace envkit {

// {"elements": [...], "covers": [[lo, hi], ...]}, kept exactly as written.
struct InstanceDocument {
  std::vector<std::string> elements;
  std::vector<LabeledPair> covers;

  friend bool operator==(const InstanceDocument&, const InstanceDocument&) = default;
};

// Throws ParseError on malformed JSON or a wrong shape.
InstanceDocument parse_instance(const std::string& text);
InstanceDocument read_instance(const std::string& path);
std::string serialize_instance(const InstanceDocument& doc);

Poset to_poset(const InstanceDocument& doc);
// Cover relation of p, in index order.
InstanceDocument to_document(const Poset& p);

nlohmann::json item_json(const VerificationItem& item, bool timings);
nlohmann::json report_json(const VerificationReport& report, bool timings);
nlohmann::json summary_json(const SweepSummary& summary, bool timings);

// Hasse diagrams; nodes in lexicographic label order, edges point upwards.
std::string dot_poset(const Poset& p, const std::string& graph_name = "poset");
std::string dot_envelope(const FilterLattice& e);

}  // namespace envkit
