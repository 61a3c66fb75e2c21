// envelope-kit: build and check the envelopes of a finite distributive
// strong upper semilattice.
//
// Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 bad input
// or usage.

#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "envelope_kit/birkhoff.hpp"
#include "envelope_kit/enumeration.hpp"
#include "envelope_kit/envelope_equiv.hpp"
#include "envelope_kit/error.hpp"
#include "envelope_kit/io.hpp"
#include "envelope_kit/semilattice.hpp"
#include "envelope_kit/valuation_ring.hpp"

using namespace envkit;
using nlohmann::json;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

bool is_input_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParseError:
    case ErrorKind::kCycleDetected:
    case ErrorKind::kDuplicateLabel:
    case ErrorKind::kUnknownLabel:
    case ErrorKind::kSizeCap:
      return true;
    default:
      return false;
  }
}

struct Options {
  std::string path;
  std::string method = "both";
  std::string target = "poset";
  std::size_t max_size = 4;
  std::size_t jobs = 1;
  std::uint64_t seed = 0;
  bool json = false;
  bool timings = false;
};

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

Sus load(const Options& o) { return Sus::validate(to_poset(read_instance(o.path))); }

int cmd_check(const Options& o) {
  const Poset p = to_poset(read_instance(o.path));
  try {
    const Sus s = Sus::validate(p);
    if (o.json) {
      emit({{"valid", true},
            {"elements", s.size()},
            {"meet_irreducibles", s.meet_irreducibles().size()},
            {"minimal", s.minimal().size()},
            {"lattice", s.is_lattice()}});
    } else {
      std::cout << "distributive strong upper semilattice: " << s.size() << " elements, "
                << s.meet_irreducibles().size() << " meet-irreducible, " << s.minimal().size()
                << " minimal" << (s.is_lattice() ? ", lattice" : "") << "\n";
    }
    return kPass;
  } catch (const Error& e) {
    if (is_input_error(e.kind())) throw;
    if (o.json) {
      emit({{"valid", false}, {"error", std::string(to_string(e.kind()))}, {"message", e.what()}});
    } else {
      std::cout << "not a distributive strong upper semilattice: " << e.what() << "\n";
    }
    return kFail;
  }
}

json birkhoff_json(const FilterLattice& e) {
  const Sus& s = e.source();
  json filters = json::array();
  for (FilterIndex f = 0; f < e.size(); ++f) filters.push_back(e.label(f));
  json nu = json::object();
  for (Element x = 0; x < s.size(); ++x) nu[s.name(x)] = e.label(e.nu(x));
  const Sus d = e.as_sus();
  json covers = json::array();
  for (const auto& [lo, hi] : d.poset().covers()) covers.push_back({e.label(lo), e.label(hi)});
  return {{"size", e.size()}, {"filters", filters}, {"covers", covers}, {"nu", nu},
          {"nu_bijective", e.size() == s.size()}};
}

json valuation_json(const ValuationRing& r, const FilterLattice& e) {
  const auto venv = build_venvelope(r, e);
  std::vector<bool> in_image(e.size(), false);
  for (Element x = 0; x < r.dim(); ++x) in_image[e.nu(x)] = true;
  json elements = json::array();
  for (std::size_t i = 0; i < venv.size(); ++i) {
    elements.push_back({{"value", r.format(venv.elements[i])},
                        {"filter", e.label(venv.filter_of[i])},
                        {"new", !in_image[venv.filter_of[i]]}});
  }
  return {{"size", venv.size()}, {"elements", elements}};
}

int cmd_envelope(const Options& o) {
  const Sus s = load(o);
  const auto e = FilterLattice::build(s);
  json out;
  int status = kPass;
  if (o.method == "birkhoff" || o.method == "both") out["birkhoff"] = birkhoff_json(e);
  if (o.method == "valuation" || o.method == "both") {
    const auto r = ValuationRing::build(s);
    out["valuation"] = valuation_json(r, e);
    if (o.method == "both") {
      const auto item = check_equivalence(r, e, o.seed);
      out["isomorphic"] = item.passed();
      if (!item.passed()) {
        out["witness"] = item.witness;
        status = kFail;
      }
    }
  }
  if (o.json) {
    emit(out);
    return status;
  }
  if (out.contains("birkhoff")) {
    const auto& b = out["birkhoff"];
    std::cout << "filter lattice: " << b["size"].get<std::size_t>() << " elements\n";
    for (const auto& f : b["filters"]) std::cout << "  " << f.get<std::string>() << "\n";
    std::cout << "nu:\n";
    for (Element x = 0; x < s.size(); ++x) {
      std::cout << "  " << s.name(x) << " -> " << b["nu"][s.name(x)].get<std::string>() << "\n";
    }
    std::cout << "nu bijective: " << (b["nu_bijective"].get<bool>() ? "yes" : "no") << "\n";
  }
  if (out.contains("valuation")) {
    const auto& v = out["valuation"];
    std::cout << "valuation envelope: " << v["size"].get<std::size_t>() << " elements\n";
    for (const auto& el : v["elements"]) {
      std::cout << "  " << el["value"].get<std::string>() << "  ~ " << el["filter"].get<std::string>()
                << (el["new"].get<bool>() ? "  (new)" : "") << "\n";
    }
  }
  if (out.contains("isomorphic")) {
    std::cout << "isomorphic: " << (out["isomorphic"].get<bool>() ? "yes" : "no") << "\n";
    if (out.contains("witness")) std::cout << "  " << out["witness"].get<std::string>() << "\n";
  }
  return status;
}

int cmd_vring(const Options& o) {
  const Sus s = load(o);
  const auto r = ValuationRing::build(s);
  const auto basis = check_basis(r);
  json relations = json::array();
  for (const auto& row : r.relations().rows()) relations.push_back(r.format(row));
  json snf = json::array();
  for (const auto& d : r.snf_invariants()) snf.push_back(d.get_str());
  json iota = json::object();
  for (Element x = 0; x < s.size(); ++x) iota[s.name(x)] = r.format(r.iota(x));
  json basis_names = json::array();
  for (auto c : r.basis_columns()) basis_names.push_back(s.name(c));
  const json out = {{"generators", r.generators().size()}, {"relations", relations},
                    {"snf", snf},                          {"rank", r.rank()},
                    {"basis", basis_names},                {"iota", iota},
                    {"basis_is_meet_irreducibles", basis.passed()}};
  if (o.json) {
    emit(out);
  } else {
    std::cout << "generators: " << r.generators().size() << "\n";
    std::cout << "relation basis (Hermite form):\n";
    for (const auto& row : relations) std::cout << "  " << row.get<std::string>() << " = 0\n";
    std::cout << "invariant factors: [";
    for (std::size_t i = 0; i < snf.size(); ++i) std::cout << (i ? ", " : "") << snf[i].get<std::string>();
    std::cout << "]\nrank: " << r.rank() << "\n";
    std::cout << "basis:";
    for (const auto& b : basis_names) std::cout << " " << b.get<std::string>();
    std::cout << "\n";
    for (Element x = 0; x < s.size(); ++x) {
      std::cout << "iota(" << s.name(x) << ") = " << iota[s.name(x)].get<std::string>() << "\n";
    }
    std::cout << "basis = meet-irreducibles: " << (basis.passed() ? "yes" : "no") << "\n";
  }
  return basis.passed() ? kPass : kFail;
}

void print_report(const VerificationReport& report, bool timings) {
  for (const auto& item : report.items) {
    std::cout << to_string(item.status) << "  " << item.name;
    if (timings) std::cout << "  (" << item.seconds << " s)";
    if (!item.witness.empty()) std::cout << "  " << item.witness;
    if (!item.note.empty()) std::cout << "  [" << item.note << "]";
    std::cout << "\n";
  }
  std::cout << (report.all_passed() ? "all checks passed" : "FAILED") << " (" << report.failures()
            << " failures)\n";
}

int cmd_verify(const Options& o) {
  const Sus s = load(o);
  const auto report = run_suite(s, {o.seed});
  if (o.json) {
    emit(report_json(report, o.timings));
  } else {
    print_report(report, o.timings);
  }
  return report.all_passed() ? kPass : kFail;
}

int cmd_sweep(const Options& o) {
  const auto summary = sweep(o.max_size, o.jobs, {o.seed});
  if (o.json) {
    emit(summary_json(summary, o.timings));
  } else {
    std::cout << "size  posets  instances  passed\n";
    for (const auto& s : summary.sizes) {
      std::cout << s.size << "  " << s.posets << "  " << s.instances << "  " << s.passed << "\n";
    }
    for (const auto& r : summary.reports) {
      if (r.all_passed()) continue;
      std::cout << "instance " << r.instance_id << ":\n";
      print_report(r, false);
    }
    std::cout << "instances: " << summary.instances << ", failures: " << summary.failures
              << ", bottom not preserved on " << summary.zero_caveat_instances << " instances\n";
    if (o.timings) std::cout << "seconds: " << summary.seconds << "\n";
  }
  return summary.failures == 0 ? kPass : kFail;
}

int cmd_dot(const Options& o) {
  if (o.target == "poset") {
    std::cout << dot_poset(to_poset(read_instance(o.path)));
  } else {
    std::cout << dot_envelope(FilterLattice::build(load(o)));
  }
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Envelopes of finite distributive strong upper semilattices"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* cmd, bool needs_path) {
    if (needs_path) cmd->add_option("path", o.path, "instance JSON file")->required();
    cmd->add_flag("--json", o.json, "machine-readable output");
    cmd->add_option("--seed", o.seed, "seed for randomised valuations");
    cmd->add_flag("--timings", o.timings, "include per-check wall times");
  };
  auto* check = app.add_subcommand("check", "validate an instance");
  add_common(check, true);
  auto* envelope = app.add_subcommand("envelope", "build the envelope(s)");
  add_common(envelope, true);
  envelope->add_option("--method", o.method)->check(CLI::IsMember({"birkhoff", "valuation", "both"}));
  auto* vring = app.add_subcommand("vring", "presentation of the valuation ring");
  add_common(vring, true);
  auto* verify = app.add_subcommand("verify", "run every check on one instance");
  add_common(verify, true);
  auto* sweep_cmd = app.add_subcommand("sweep", "run every check on all small instances");
  add_common(sweep_cmd, false);
  sweep_cmd->add_option("--max-size", o.max_size)->check(CLI::Range(std::size_t{1}, kMaxEnumerationSize));
  sweep_cmd->add_option("--jobs", o.jobs)->check(CLI::PositiveNumber);
  auto* dot = app.add_subcommand("dot", "Hasse diagram in DOT");
  add_common(dot, true);
  dot->add_option("--target", o.target)->check(CLI::IsMember({"poset", "envelope"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*check) return cmd_check(o);
    if (*envelope) return cmd_envelope(o);
    if (*vring) return cmd_vring(o);
    if (*verify) return cmd_verify(o);
    if (*sweep_cmd) return cmd_sweep(o);
    return cmd_dot(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_input_error(e.kind()) ? kUsage : kFail;
  }
}
