#include "sylow/enumerate.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "json.hpp"

namespace sylow {

namespace {

using Key = std::vector<std::uint64_t>;

Subgroup extend_by_normalizing_element(const GroupTable& t, const Subgroup& h, std::uint32_t x,
                                       int p) {
  // x normalizes H and x^p lies in H, so <H, x> = H u Hx u ... u Hx^{p-1}.
  Bitset el = h.elems;
  std::uint32_t xp = x;
  for (int e = 1; e < p; ++e) {
    h.elems.for_each([&](std::size_t a) { el.set(t.mul_idx(static_cast<std::uint32_t>(a), xp)); });
    xp = t.mul_idx(xp, x);
  }
  Subgroup r;
  r.amb = &t;
  r.elems = std::move(el);
  r.gens = h.gens;
  r.gens.push_back(x);
  return r;
}

} // namespace

SubgroupCatalog enumerate_subgroups(const GroupTable& t, const Caps& caps, bool allow_partial) {
  t.require_enumerable();
  const std::uint64_t m = t.order();
  if (m > 64 && !allow_partial && m > 729)
    throw CapError("subgroup enumeration supports |S| <= 729 (use allow_partial beyond 64)");
  if (m > 729) throw CapError("subgroup enumeration capped at |S| = 729");
  const int p = t.p();

  std::vector<std::uint32_t> ppow(m);
  for (std::uint32_t i = 0; i < m; ++i)
    ppow[i] = static_cast<std::uint32_t>(t.index_of(t.pow(t.element_at(i), p)));

  SubgroupCatalog cat;
  cat.amb = &t;

  std::set<Key> seen;
  std::vector<Subgroup> layer{trivial_subgroup(t)};
  std::vector<Subgroup> all = layer;
  seen.insert(layer[0].elems.words());

  while (!layer.empty()) {
    std::vector<Subgroup> next;
    for (const auto& h : layer) {
      if (h.order() == m) continue;
      Subgroup n = normalizer(t, h);
      n.elems.for_each([&](std::size_t xi) {
        std::uint32_t x = static_cast<std::uint32_t>(xi);
        if (h.elems.test(x) || !h.elems.test(ppow[x])) return;
        Subgroup ext = extend_by_normalizing_element(t, h, x, p);
        if (seen.insert(ext.elems.words()).second) {
          next.push_back(ext);
          all.push_back(next.back());
        }
      });
    }
    layer = std::move(next);
  }
  cat.total_subgroups = all.size();

  // Conjugacy classes: orbit of the element set under S-conjugation.
  std::map<Key, std::size_t> class_of;
  std::vector<std::uint32_t> sgens = whole_group(t).gens;
  for (const auto& h : all) {
    Key k = h.elems.words();
    if (class_of.count(k)) continue;
    std::size_t cid = cat.classes.size();
    std::vector<Subgroup> orbit{h};
    class_of[k] = cid;
    Key best = k;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (auto g : sgens) {
        Subgroup c = conjugate_subgroup(orbit[i], g);
        Key ck = c.elems.words();
        if (!class_of.count(ck)) {
          class_of[ck] = cid;
          if (ck < best) best = ck;
          orbit.push_back(std::move(c));
        }
      }
    }
    SubgroupClass sc;
    for (auto& o : orbit)
      if (o.elems.words() == best) {
        sc.rep = o;
        break;
      }
    sc.rep.gens = extract_generators(t, sc.rep.elems);
    sc.rep.recipe = "class" + std::to_string(cid);
    sc.order = sc.rep.order();
    sc.class_size = orbit.size();
    cat.classes.push_back(std::move(sc));
  }

  // Double-count oracle: class sizes must recount the full list.
  std::size_t sum = 0;
  for (const auto& c : cat.classes) sum += c.class_size;
  if (sum != cat.total_subgroups)
    throw std::logic_error("class sizes do not recount the subgroup total");
  return cat;
}

namespace {

struct Pattern {
  std::string label;
  std::vector<Key> class_keys; // canonical (lex-least) class representatives
};

Key class_key_of(const GroupTable& t, const Subgroup& h, const std::vector<std::uint32_t>& sgens) {
  Key best = h.elems.words();
  std::set<Key> orbit{best};
  std::vector<Subgroup> queue{h};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (auto g : sgens) {
      Subgroup c = conjugate_subgroup(queue[i], g);
      Key k = c.elems.words();
      if (orbit.insert(k).second) {
        if (k < best) best = k;
        queue.push_back(std::move(c));
      }
    }
  return best;
}

std::vector<Pattern> expected_patterns(const GroupTable& t) {
  std::vector<std::uint32_t> sgens = whole_group(t).gens;
  std::vector<Pattern> pats;
  auto add = [&](const std::string& label, const Subgroup& h) {
    Key k = class_key_of(t, h, sgens);
    for (auto& pat : pats)
      if (pat.label == label) {
        if (std::find(pat.class_keys.begin(), pat.class_keys.end(), k) == pat.class_keys.end())
          pat.class_keys.push_back(k);
        return;
      }
    pats.push_back(Pattern{label, {k}});
  };

  add("S", whole_group(t));
  if (t.family() == Family::g2) {
    // The two unipotent radicals; for q > 2 these are C_S(Z3(S)/Z(S)) and
    // C_S(Z2(S)).
    add("C_S(Z3/Z1)", q1_of(t));
    add("C_S(Z2)", q2_of(t));
    for (const auto& a : maximal_elementary_abelians(whole_group(t)))
      add("maximal elementary abelian q^3", a);
  } else {
    Subgroup q1 = q1_of(t);
    Subgroup q2 = q2_of(t);
    add("Q1", q1);
    add("Q2 = J(S)", q2);
    Subgroup sp = derived(whole_group(t));
    Subgroup z = center_of_group(t);
    sp.elems.for_each([&](std::size_t x) {
      if (z.contains(static_cast<std::uint32_t>(x)) || x == 0) return;
      add("C_S(x), x in S'\\Z(S)", centralizer_of_element(t, static_cast<std::uint32_t>(x)));
    });
    for (const auto& a : max_rank_elementary_abelians(q1))
      if (!a.elems.subset_of(q2.elems)) add("A(Q1) not in Q2", a);
  }
  return pats;
}

} // namespace

RcReport classify_rc(SubgroupCatalog& cat, const Caps& caps) {
  const GroupTable& t = *cat.amb;
  RcReport rep;

  for (auto& c : cat.classes) {
    c.centric = is_s_centric(t, c.rep);
    RadicalResult r = is_s_radical(t, c.rep, caps, true);
    c.radical = r.radical;
    c.certificate = r.certificate;
    if (c.radical == Verdict::undecided) ++rep.undecided;
  }

  auto pats = expected_patterns(t);
  std::map<Key, std::string> label_of;
  for (const auto& pat : pats)
    for (const auto& k : pat.class_keys) label_of[k] = pat.label;

  std::set<Key> survivor_keys, expected_keys;
  for (auto& c : cat.classes) {
    Key k = c.rep.elems.words();
    auto it = label_of.find(k);
    if (it != label_of.end()) c.label = it->second;
    if (c.centric && c.radical == Verdict::yes) {
      ++rep.survivor_classes;
      survivor_keys.insert(k);
      if (c.label.empty())
        rep.discrepancies.push_back("survivor of order " + std::to_string(c.order) +
                                    " matches no expected pattern");
    }
  }
  for (const auto& [k, label] : label_of) {
    expected_keys.insert(k);
    if (!survivor_keys.count(k))
      rep.discrepancies.push_back("expected pattern '" + label + "' is not a survivor");
  }
  rep.survivors_match = survivor_keys == expected_keys && rep.undecided == 0;

  // Deterministic class order: (order, label, least element index).
  std::sort(cat.classes.begin(), cat.classes.end(), [](const SubgroupClass& a, const SubgroupClass& b) {
    if (a.order != b.order) return a.order < b.order;
    if (a.label != b.label) return a.label < b.label;
    return a.rep.elems.words() < b.rep.elems.words();
  });
  return rep;
}

std::string catalog_json(const SubgroupCatalog& cat, const RcReport& rep) {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["family"] = family_name(cat.amb->family());
  j["q"] = cat.amb->q();
  j["total_subgroups"] = cat.total_subgroups;
  j["complete"] = cat.complete;
  j["survivors_match_patterns"] = rep.survivors_match;
  j["undecided"] = rep.undecided;
  j["discrepancies"] = rep.discrepancies;
  nlohmann::ordered_json classes = nlohmann::ordered_json::array();
  for (const auto& c : cat.classes) {
    nlohmann::ordered_json e;
    e["order"] = c.order;
    e["class_size"] = c.class_size;
    e["centric"] = c.centric;
    e["radical"] = c.radical == Verdict::yes ? "yes" : c.radical == Verdict::no ? "no" : "undecided";
    e["label"] = c.label;
    e["generators"] = c.rep.gens;
    e["certificate"] = c.certificate;
    classes.push_back(e);
  }
  j["classes"] = classes;
  return j.dump(2);
}

std::string catalog_table(const SubgroupCatalog& cat, const RcReport& rep) {
  std::ostringstream os;
  os << "S-centric, S-radical subgroup classes of Syl_" << cat.amb->p() << "("
     << (cat.amb->family() == Family::g2 ? "G2" : "PSU4") << "(" << cat.amb->q() << ")), |S| = "
     << cat.amb->order() << "\n";
  os << "classes: " << cat.classes.size() << ", subgroups: " << cat.total_subgroups << "\n";
  os << "order  class_size  centric  radical    label\n";
  for (const auto& c : cat.classes) {
    if (!(c.centric && c.radical == Verdict::yes)) continue;
    char buf[160];
    std::snprintf(buf, sizeof buf, "%-6zu %-11zu %-8s %-10s %s\n", c.order, c.class_size,
                  c.centric ? "yes" : "no",
                  c.radical == Verdict::yes ? "yes" : c.radical == Verdict::no ? "no" : "undecided",
                  c.label.empty() ? "(unmatched)" : c.label.c_str());
    os << buf;
  }
  os << (rep.survivors_match ? "survivors match the expected patterns\n"
                             : "MISMATCH against the expected patterns\n");
  for (const auto& d : rep.discrepancies) os << "  discrepancy: " << d << "\n";
  return os.str();
}

} // namespace sylow
