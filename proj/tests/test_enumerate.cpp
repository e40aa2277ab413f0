#include "doctest.h"

#include <map>
#include <set>

#include "sylow/enumerate.hpp"

using namespace sylow;

TEST_CASE("g2(2): catalog structure and the radical-centric proposition") {
  auto t = build_group(Family::g2, 2);
  SubgroupCatalog cat = enumerate_subgroups(*t);

  // Trivial and full subgroups present.
  bool has_trivial = false, has_full = false;
  std::size_t total_from_classes = 0;
  for (const auto& c : cat.classes) {
    total_from_classes += c.class_size;
    if (c.order == 1) has_trivial = true;
    if (c.order == t->order()) has_full = true;
  }
  CHECK(has_trivial);
  CHECK(has_full);
  CHECK(total_from_classes == cat.total_subgroups);

  // Every maximal subgroup found by the Frattini-quotient construction is in
  // the catalog.
  std::set<std::vector<std::uint64_t>> keys;
  std::map<std::vector<std::uint64_t>, std::size_t> class_index;
  for (std::size_t i = 0; i < cat.classes.size(); ++i)
    class_index[cat.classes[i].rep.elems.words()] = i;
  for (const auto& m : maximal_subgroups(whole_group(*t))) {
    bool found = false;
    for (std::uint32_t g = 0; g < t->order() && !found; ++g)
      if (class_index.count(conjugate_subgroup(m, g).elems.words())) found = true;
    CHECK(found);
  }

  RcReport rep = classify_rc(cat);
  CHECK(rep.undecided == 0);
  CHECK(rep.survivors_match);
  CHECK(rep.discrepancies.empty());

  // Survivors: S, the two unipotent radicals, and five classes of order-8
  // maximal elementary abelians.
  std::multiset<std::size_t> survivor_orders;
  std::size_t ea_classes = 0;
  for (const auto& c : cat.classes)
    if (c.centric && c.radical == Verdict::yes) {
      survivor_orders.insert(c.order);
      if (c.label == "maximal elementary abelian q^3") ++ea_classes;
    }
  CHECK(survivor_orders.count(64) == 1);
  CHECK(survivor_orders.count(32) == 2);
  CHECK(survivor_orders.count(8) == 5);
  CHECK(survivor_orders.size() == 8);
  CHECK(ea_classes == 5);
}

TEST_CASE("psu4(2): the radical-centric proposition") {
  auto t = build_group(Family::su4, 2);
  SubgroupCatalog cat = enumerate_subgroups(*t);
  RcReport rep = classify_rc(cat);
  CHECK(rep.undecided == 0);
  CHECK(rep.survivors_match);
  CHECK(rep.discrepancies.empty());

  std::map<std::string, std::size_t> by_label;
  for (const auto& c : cat.classes)
    if (c.centric && c.radical == Verdict::yes) by_label[c.label] += 1;
  CHECK(by_label["S"] == 1);
  CHECK(by_label["Q1"] == 1);
  CHECK(by_label["Q2 = J(S)"] == 1);
  CHECK(by_label.count("C_S(x), x in S'\\Z(S)"));
  CHECK(by_label.count("A(Q1) not in Q2"));

  // The centralizer classes have order 2^5; the A(Q1) ones order 2^3.
  for (const auto& c : cat.classes) {
    if (c.label == "C_S(x), x in S'\\Z(S)") CHECK(c.order == 32);
    if (c.label == "A(Q1) not in Q2") CHECK(c.order == 8);
  }
}

TEST_CASE("enumeration closure invariant and class flag uniformity (g2(2))") {
  auto t = build_group(Family::g2, 2);
  SubgroupCatalog cat = enumerate_subgroups(*t);
  std::set<std::vector<std::uint64_t>> keys;
  std::vector<Subgroup> reps;
  for (const auto& c : cat.classes) reps.push_back(c.rep);
  // Recollect all subgroups from class orbits.
  std::vector<Subgroup> all;
  for (const auto& r : reps) {
    std::vector<Subgroup> orbit{r};
    keys.insert(r.elems.words());
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (std::uint32_t g = 0; g < t->order(); ++g) {
        Subgroup c = conjugate_subgroup(orbit[i], g);
        if (keys.insert(c.elems.words()).second) orbit.push_back(c);
      }
    for (auto& h : orbit) all.push_back(h);
  }
  CHECK(all.size() == cat.total_subgroups);

  // For every subgroup H and order-2 element x of N_S(H) mod H, the cyclic
  // extension <H, x> is again in the catalog.
  const int p = t->p();
  for (const auto& h : all) {
    if (h.order() == t->order()) continue;
    Subgroup n = normalizer(*t, h);
    n.elems.for_each([&](std::size_t xi) {
      std::uint32_t x = static_cast<std::uint32_t>(xi);
      if (h.elems.test(x)) return;
      std::uint32_t xp = static_cast<std::uint32_t>(t->index_of(t->pow(t->element_at(x), p)));
      if (!h.elems.test(xp)) return;
      Subgroup ext = extend_closure(h, {x});
      CHECK(keys.count(ext.elems.words()));
    });
  }

  // Centric flag is constant on classes (spot check two members per class).
  for (const auto& c : cat.classes) {
    Subgroup other = conjugate_subgroup(c.rep, whole_group(*t).gens[0]);
    CHECK(is_s_centric(*t, other) == c.centric);
  }
}
