// The decision surface: classify a forbidden pair {K1,3, X}, decide class
// membership of a concrete graph, and produce constructive imperfection
// witnesses in the infinite case.
#pragma once

#include "clawperf/catalog.hpp"
#include "clawperf/families.hpp"
#include "clawperf/holes.hpp"
#include "clawperf/iso.hpp"

namespace clawperf {

struct PairCase {
  enum class Kind { AllPerfect, FiniteExceptions, Infinite };
  Kind kind = Kind::AllPerfect;
  int alpha_threshold = 4;
  // AllPerfect: the first maximal graph containing X. Infinite: the
  // unavoidable witness (empty at thresholds 2/3, whose families are out
  // of scope here).
  std::string witness;
  FamilyId family = FamilyId::None;
  bool family_is_convention = false;  // claw-only witness: F1 by convention
};

// The five maximal graphs of script-X, in the theorem's print order.
inline const std::vector<std::string>& script_x_names() {
  static const std::vector<std::string> names{"P6", "K1uP5", "2P3", "Z2", "K1uZ1"};
  return names;
}

inline std::optional<std::string> in_script_X(const Catalog& cat, const Graph& x) {
  for (const auto& name : script_x_names())
    if (contains_induced(cat.named(name), x)) return name;
  return std::nullopt;
}

// The fifteen unavoidable graphs, in the order printed in the proof.
inline const std::vector<std::string>& unavoidable_names() {
  static const std::vector<std::string> names{
      "5K1", "3K1uK2", "3K2", "K2uP4", "K1_3", "C4", "C5", "C6",
      "C7",  "K4",     "D",   "H",     "B",    "K2uK3", "K1uZ2"};
  return names;
}

inline FamilyId family_for_witness(const std::string& witness) {
  if (witness == "B") return FamilyId::F2;
  if (witness == "K2uK3") return FamilyId::F4;
  if (witness == "5K1" || witness == "3K1uK2" || witness == "K1uZ2" || witness == "3K2" ||
      witness == "K2uP4")
    return FamilyId::F3;
  if (witness == "C4" || witness == "C5" || witness == "C6" || witness == "C7" ||
      witness == "K4" || witness == "D" || witness == "H" || witness == "K1_3")
    return FamilyId::F1;
  throw std::invalid_argument("unknown witness: " + witness);
}

inline PairCase classify_pair(const Catalog& cat, const Graph& x, int alpha_threshold = 4) {
  PairCase out;
  out.alpha_threshold = alpha_threshold;
  if (alpha_threshold == 2 || alpha_threshold == 3) {
    const std::vector<std::string> maximal = alpha_threshold == 2
                                                 ? std::vector<std::string>{"Z1", "P4"}
                                                 : std::vector<std::string>{"Z2", "P5"};
    for (const auto& name : maximal)
      if (contains_induced(cat.named(name), x)) {
        out.kind = PairCase::Kind::AllPerfect;
        out.witness = name;
        return out;
      }
    out.kind = PairCase::Kind::Infinite;  // prior paper's families, not built here
    return out;
  }
  if (alpha_threshold != 4) throw std::invalid_argument("alpha threshold must be 2, 3 or 4");
  if (auto w = in_script_X(cat, x)) {
    out.kind = PairCase::Kind::AllPerfect;
    out.witness = *w;
    return out;
  }
  if (are_isomorphic(x, cat.named("2K1uK3"))) {
    out.kind = PairCase::Kind::FiniteExceptions;
    return out;
  }
  out.kind = PairCase::Kind::Infinite;
  for (const auto& name : unavoidable_names())
    if (contains_induced(x, cat.named(name))) {
      out.witness = name;
      break;
    }
  if (out.witness.empty())
    throw std::logic_error("unavoidability failed: transcription alarm for D/H/B");
  out.family = family_for_witness(out.witness);
  out.family_is_convention = (out.witness == "K1_3");
  return out;
}

inline std::string unavoidable_witness(const Catalog& cat, const Graph& x) {
  PairCase pc = classify_pair(cat, x, 4);
  if (pc.kind != PairCase::Kind::Infinite)
    throw std::invalid_argument("X belongs to script-X or {2K1uK3}; no witness applies");
  return pc.witness;
}

struct Membership {
  bool in_class = false;
  std::string failing_predicate;  // first failed predicate when !in_class
};

// Connected, K1,3-free, X-free, not an odd cycle, alpha >= 4, in that order.
inline Membership member_of_class_G(const Graph& g, const Graph& x) {
  if (g.order() == 0 || !is_connected(g)) return {false, "not connected"};
  if (contains_induced(g, claw_graph())) return {false, "not K1,3-free"};
  if (contains_induced(g, x)) return {false, "not X-free"};
  if (is_odd_cycle_graph(g)) return {false, "is an odd cycle"};
  if (independence_number(g) < 4) return {false, "independence number below 4"};
  return {true, ""};
}

struct Verdict {
  bool in_class = false;
  std::string failing_predicate;
  enum class Outcome { Perfect, Exception, Imperfect };
  Outcome outcome = Outcome::Perfect;
  int exception_index = 0;  // 1-based catalog index when outcome == Exception
  std::optional<HoleCertificate> certificate;
};

inline std::vector<std::pair<int, Graph>> exception_list(const Catalog& cat) {
  std::vector<std::pair<int, Graph>> out;
  for (const auto& e : cat.entries())
    if (e.name.size() >= 2 && e.name[0] == 'E' &&
        std::isdigit(static_cast<unsigned char>(e.name[1])))
      out.emplace_back(std::stoi(e.name.substr(1)), e.graph);
  return out;
}

inline Verdict verdict(const Catalog& cat, const Graph& g, const Graph& x) {
  Verdict v;
  Membership m = member_of_class_G(g, x);
  v.in_class = m.in_class;
  if (!m.in_class) {
    v.failing_predicate = m.failing_predicate;
    return v;
  }
  PerfectnessResult p = is_perfect(g);
  if (p.perfect) {
    v.outcome = Verdict::Outcome::Perfect;
    return v;
  }
  if (are_isomorphic(x, cat.named("2K1uK3")))
    for (const auto& [idx, eg] : exception_list(cat))
      if (are_isomorphic(g, eg)) {
        v.outcome = Verdict::Outcome::Exception;
        v.exception_index = idx;
        v.certificate = p.certificate;
        return v;
      }
  v.outcome = Verdict::Outcome::Imperfect;
  v.certificate = p.certificate;
  return v;
}

}  // namespace clawperf
