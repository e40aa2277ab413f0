#pragma once

#include <map>
#include <string>
#include <vector>

#include "sylow/aut.hpp"
#include "sylow/subgroup.hpp"

namespace sylow {

struct SubgroupClass {
  Subgroup rep;              // lex-least member of the conjugacy class
  std::size_t order = 0;
  std::size_t class_size = 0;
  bool centric = false;
  Verdict radical = Verdict::undecided;
  std::string certificate;
  std::string label;         // pattern name, empty if unmatched
};

struct SubgroupCatalog {
  const GroupTable* amb = nullptr;
  std::uint64_t total_subgroups = 0;
  bool complete = true;
  std::vector<SubgroupClass> classes; // sorted by (order, label, least element)
};

// All subgroups of S up to S-conjugacy, built bottom-up by cyclic extension.
// Guaranteed for |S| = 64; |S| = 729 is best effort behind allow_partial.
SubgroupCatalog enumerate_subgroups(const GroupTable& t, const Caps& caps = {},
                                    bool allow_partial = false);

// Fills centric / radical flags and pattern labels; returns false when the
// survivor set does not exactly match the family's expected patterns.
struct RcReport {
  bool survivors_match = false;
  std::vector<std::string> discrepancies;
  std::size_t survivor_classes = 0;
  std::size_t undecided = 0;
};
RcReport classify_rc(SubgroupCatalog& cat, const Caps& caps = {});

std::string catalog_json(const SubgroupCatalog& cat, const RcReport& rep);
std::string catalog_table(const SubgroupCatalog& cat, const RcReport& rep);

} // namespace sylow
