#include "sylow/subgroup.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "json.hpp"

namespace sylow {

std::vector<std::uint32_t> Subgroup::element_list() const {
  std::vector<std::uint32_t> out;
  out.reserve(order());
  elems.for_each([&](std::size_t i) { out.push_back(static_cast<std::uint32_t>(i)); });
  return out;
}

Subgroup trivial_subgroup(const GroupTable& t) {
  t.require_enumerable();
  Subgroup h;
  h.amb = &t;
  h.elems = Bitset(t.order());
  h.elems.set(0);
  h.recipe = "1";
  return h;
}

Subgroup closure(const GroupTable& t, const std::vector<std::uint32_t>& gens_in,
                 std::string recipe) {
  t.require_enumerable();
  Subgroup h;
  h.amb = &t;
  h.elems = Bitset(t.order());
  h.elems.set(0);
  h.recipe = std::move(recipe);
  for (auto g : gens_in)
    if (g != 0 && std::find(h.gens.begin(), h.gens.end(), g) == h.gens.end()) h.gens.push_back(g);
  std::deque<std::uint32_t> queue{0};
  while (!queue.empty()) {
    std::uint32_t x = queue.front();
    queue.pop_front();
    for (auto g : h.gens) {
      std::uint32_t y = t.mul_idx(x, g);
      if (!h.elems.test(y)) {
        h.elems.set(y);
        queue.push_back(y);
      }
    }
  }
  return h;
}

Subgroup extend_closure(const Subgroup& h, const std::vector<std::uint32_t>& extra) {
  const GroupTable& t = *h.amb;
  Subgroup r = h;
  for (auto g : extra)
    if (g != 0 && std::find(r.gens.begin(), r.gens.end(), g) == r.gens.end()) r.gens.push_back(g);
  std::deque<std::uint32_t> queue;
  r.elems.for_each([&](std::size_t i) { queue.push_back(static_cast<std::uint32_t>(i)); });
  for (auto g : extra)
    if (!r.elems.test(g)) {
      r.elems.set(g);
      queue.push_back(g);
    }
  while (!queue.empty()) {
    std::uint32_t x = queue.front();
    queue.pop_front();
    for (auto g : r.gens) {
      std::uint32_t y = t.mul_idx(x, g);
      if (!r.elems.test(y)) {
        r.elems.set(y);
        queue.push_back(y);
      }
    }
  }
  return r;
}

std::vector<std::uint32_t> root_subgroup_gens(const GroupTable& t, int root) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t v = 1; v < t.root_field(root).q(); ++v)
    out.push_back(
        static_cast<std::uint32_t>(t.index_of(t.root_element(root, static_cast<felt>(v)))));
  return out;
}

// One generator per GF(p)-basis vector of the root's parameter field; enough
// because the root subgroups are parameter-additive.
static std::vector<std::uint32_t> root_basis_gens(const GroupTable& t, int root) {
  std::vector<std::uint32_t> out;
  const Field& f = t.root_field(root);
  for (std::uint32_t v = 1; v < f.q(); v *= f.p())
    out.push_back(
        static_cast<std::uint32_t>(t.index_of(t.root_element(root, static_cast<felt>(v)))));
  return out;
}

Subgroup root_subgroup_product(const GroupTable& t, const std::vector<int>& roots,
                               std::string recipe) {
  std::vector<std::uint32_t> gens;
  for (int r : roots)
    for (auto g : root_basis_gens(t, r)) gens.push_back(g);
  return closure(t, gens, std::move(recipe));
}

std::vector<std::uint32_t> extract_generators(const GroupTable& t, const Bitset& elems) {
  std::vector<std::uint32_t> gens;
  Subgroup cur = trivial_subgroup(t);
  std::size_t target = elems.count();
  if (cur.order() == target) return gens;
  bool done = false;
  elems.for_each([&](std::size_t i) {
    if (done || cur.elems.test(i)) return;
    gens.push_back(static_cast<std::uint32_t>(i));
    cur = extend_closure(cur, {static_cast<std::uint32_t>(i)});
    if (cur.order() == target) done = true;
  });
  return gens;
}

Subgroup from_elements(const GroupTable& t, Bitset elems, std::string recipe) {
  Subgroup h;
  h.amb = &t;
  h.elems = std::move(elems);
  h.gens = extract_generators(t, h.elems);
  h.recipe = std::move(recipe);
  return h;
}

bool is_subgroup_closed(const Subgroup& h) {
  const GroupTable& t = *h.amb;
  if (!h.elems.test(0)) return false;
  for (auto g : h.gens)
    if (!h.elems.test(g)) return false;
  auto els = h.element_list();
  for (auto a : els) {
    if (!h.elems.test(t.inv_idx(a))) return false;
    for (auto b : els)
      if (!h.elems.test(t.mul_idx(a, b))) return false;
  }
  return true;
}

Subgroup conjugate_subgroup(const Subgroup& h, std::uint32_t g) {
  const GroupTable& t = *h.amb;
  Bitset el(t.order());
  h.elems.for_each([&](std::size_t i) { el.set(t.conj_idx(static_cast<std::uint32_t>(i), g)); });
  Subgroup r;
  r.amb = &t;
  r.elems = std::move(el);
  for (auto x : h.gens) r.gens.push_back(t.conj_idx(x, g));
  r.recipe = h.recipe.empty() ? "" : h.recipe + "^g";
  return r;
}

Subgroup whole_group(const GroupTable& t) {
  t.require_enumerable();
  Bitset el(t.order());
  for (std::uint32_t i = 0; i < t.order(); ++i) el.set(i);
  Subgroup s;
  s.amb = &t;
  s.elems = std::move(el);
  for (int r = 0; r < t.num_roots(); ++r)
    for (auto g : root_basis_gens(t, r)) s.gens.push_back(g);
  s.recipe = "S";
  return s;
}

Subgroup centralizer_of_element(const GroupTable& t, std::uint32_t x) {
  t.require_enumerable();
  Bitset el(t.order());
  for (std::uint32_t g = 0; g < t.order(); ++g)
    if (t.mul_idx(g, x) == t.mul_idx(x, g)) el.set(g);
  return from_elements(t, std::move(el), "C(x" + std::to_string(x) + ")");
}

Subgroup centralizer(const GroupTable& t, const Subgroup& h) {
  t.require_enumerable();
  const auto gens = h.gens.empty() ? extract_generators(t, h.elems) : h.gens;
  if (gens.empty()) return whole_group(t);
  Bitset el(t.order());
  bool first = true;
  for (auto x : gens) {
    Bitset cx(t.order());
    for (std::uint32_t g = 0; g < t.order(); ++g)
      if (t.mul_idx(g, x) == t.mul_idx(x, g)) cx.set(g);
    if (first) {
      el = cx;
      first = false;
    } else {
      el &= cx;
    }
  }
  return from_elements(t, std::move(el), "C_S(" + h.recipe + ")");
}

Subgroup normalizer(const GroupTable& t, const Subgroup& h) {
  t.require_enumerable();
  const auto gens = h.gens.empty() ? extract_generators(t, h.elems) : h.gens;
  Bitset el(t.order());
  for (std::uint32_t g = 0; g < t.order(); ++g) {
    bool ok = true;
    for (auto x : gens)
      if (!h.elems.test(t.conj_idx(x, g))) {
        ok = false;
        break;
      }
    if (ok) el.set(g);
  }
  return from_elements(t, std::move(el), "N_S(" + h.recipe + ")");
}

Subgroup centralizer_in(const Subgroup& k, std::uint32_t x) {
  const GroupTable& t = *k.amb;
  Bitset el(t.order());
  k.elems.for_each([&](std::size_t g) {
    if (t.mul_idx(static_cast<std::uint32_t>(g), x) == t.mul_idx(x, static_cast<std::uint32_t>(g)))
      el.set(g);
  });
  return from_elements(t, std::move(el), "C_{" + k.recipe + "}(x" + std::to_string(x) + ")");
}

Subgroup center(const Subgroup& h) {
  const GroupTable& t = *h.amb;
  const auto gens = h.gens.empty() ? extract_generators(t, h.elems) : h.gens;
  Bitset el(t.order());
  h.elems.for_each([&](std::size_t x) {
    for (auto g : gens)
      if (t.mul_idx(static_cast<std::uint32_t>(x), g) !=
          t.mul_idx(g, static_cast<std::uint32_t>(x)))
        return;
    el.set(x);
  });
  return from_elements(t, std::move(el), "Z(" + h.recipe + ")");
}

Subgroup quotient_centralizer(const GroupTable& t, const Subgroup& within, const Subgroup& h,
                              const Subgroup& modulo) {
  const auto gens = h.gens.empty() ? extract_generators(t, h.elems) : h.gens;
  Bitset el(t.order());
  within.elems.for_each([&](std::size_t g) {
    for (auto x : gens)
      if (!modulo.elems.test(t.comm_idx(static_cast<std::uint32_t>(g), x))) return;
    el.set(g);
  });
  return from_elements(t, std::move(el), "C(" + h.recipe + "/" + modulo.recipe + ")");
}

Subgroup commutator_subgroup(const GroupTable& t, const Subgroup& a, const Subgroup& b) {
  const auto bgens = b.gens.empty() ? extract_generators(t, b.elems) : b.gens;
  Bitset commgens(t.order());
  a.elems.for_each([&](std::size_t x) {
    for (auto y : bgens) commgens.set(t.comm_idx(static_cast<std::uint32_t>(x), y));
  });
  std::vector<std::uint32_t> gl;
  commgens.for_each([&](std::size_t i) {
    if (i) gl.push_back(static_cast<std::uint32_t>(i));
  });
  Subgroup k = closure(t, gl, "");
  // Normal closure under conjugation by B.
  for (;;) {
    std::vector<std::uint32_t> extra;
    k.elems.for_each([&](std::size_t x) {
      for (auto g : bgens) {
        std::uint32_t c = t.conj_idx(static_cast<std::uint32_t>(x), g);
        if (!k.elems.test(c)) extra.push_back(c);
      }
    });
    if (extra.empty()) break;
    k = extend_closure(k, extra);
  }
  k.recipe = "[" + a.recipe + "," + b.recipe + "]";
  return k;
}

std::vector<Subgroup> upper_central_series(const Subgroup& h) {
  const GroupTable& t = *h.amb;
  std::vector<Subgroup> out;
  Subgroup prev = trivial_subgroup(t);
  for (int i = 1;; ++i) {
    Subgroup z = quotient_centralizer(t, h, h, prev);
    z.recipe = "Z" + std::to_string(i) + "(" + h.recipe + ")";
    if (z.order() == prev.order()) break; // stabilized short of H: not nilpotent
    out.push_back(z);
    if (z.order() == h.order()) break;
    prev = out.back();
  }
  return out;
}

std::vector<Subgroup> lower_central_series(const Subgroup& h) {
  const GroupTable& t = *h.amb;
  std::vector<Subgroup> out{h};
  for (;;) {
    Subgroup next = commutator_subgroup(t, out.back(), h);
    next.recipe = "gamma" + std::to_string(out.size() + 1) + "(" + h.recipe + ")";
    if (next.order() == out.back().order()) break;
    out.push_back(next);
    if (next.order() == 1) break;
  }
  return out;
}

std::vector<Subgroup> derived_series(const Subgroup& h) {
  const GroupTable& t = *h.amb;
  std::vector<Subgroup> out{h};
  for (;;) {
    Subgroup next = commutator_subgroup(t, out.back(), out.back());
    next.recipe = h.recipe + std::string(out.size(), '\'');
    if (next.order() == out.back().order()) break;
    out.push_back(next);
    if (next.order() == 1) break;
  }
  return out;
}

Subgroup derived(const Subgroup& h) {
  Subgroup d = commutator_subgroup(*h.amb, h, h);
  d.recipe = h.recipe + "'";
  return d;
}

static std::uint32_t pth_power_idx(const GroupTable& t, std::uint32_t x) {
  return static_cast<std::uint32_t>(t.index_of(t.pow(t.element_at(x), t.p())));
}

Subgroup frattini(const Subgroup& h) {
  const GroupTable& t = *h.amb;
  Subgroup d = derived(h);
  std::vector<std::uint32_t> extra;
  Bitset seen(t.order());
  h.elems.for_each([&](std::size_t x) {
    std::uint32_t y = pth_power_idx(t, static_cast<std::uint32_t>(x));
    if (y && !seen.test(y) && !d.elems.test(y)) {
      seen.set(y);
      extra.push_back(y);
    }
  });
  Subgroup f = extend_closure(d, extra);
  f.recipe = "Phi(" + h.recipe + ")";
  return f;
}

Subgroup omega(const Subgroup& h) {
  const GroupTable& t = *h.amb;
  std::vector<std::uint32_t> gens;
  h.elems.for_each([&](std::size_t x) {
    if (x && t.order_of_idx(static_cast<std::uint32_t>(x)) == static_cast<std::uint32_t>(t.p()))
      gens.push_back(static_cast<std::uint32_t>(x));
  });
  return closure(t, gens, "Omega(" + h.recipe + ")");
}

Subgroup agemo(const Subgroup& h) {
  const GroupTable& t = *h.amb;
  Bitset pw(t.order());
  h.elems.for_each(
      [&](std::size_t x) { pw.set(pth_power_idx(t, static_cast<std::uint32_t>(x))); });
  std::vector<std::uint32_t> gens;
  pw.for_each([&](std::size_t i) {
    if (i) gens.push_back(static_cast<std::uint32_t>(i));
  });
  return closure(t, gens, "Agemo(" + h.recipe + ")");
}

std::vector<Subgroup> maximal_elementary_abelians(const Subgroup& h) {
  const GroupTable& t = *h.amb;
  const int p = t.p();

  std::vector<std::uint32_t> cand;
  h.elems.for_each([&](std::size_t x) {
    if (x && t.order_of_idx(static_cast<std::uint32_t>(x)) == static_cast<std::uint32_t>(p))
      cand.push_back(static_cast<std::uint32_t>(x));
  });
  const std::size_t nc = cand.size();
  std::vector<Bitset> commute(nc, Bitset(nc));
  for (std::size_t i = 0; i < nc; ++i)
    for (std::size_t j = 0; j < nc; ++j)
      if (t.mul_idx(cand[i], cand[j]) == t.mul_idx(cand[j], cand[i])) commute[i].set(j);

  // Every maximal elementary abelian subgroup contains Omega(Z(H)), so the
  // search only grows chains above it.
  Subgroup zc = center(h);
  std::vector<std::uint32_t> basegens;
  zc.elems.for_each([&](std::size_t x) {
    if (x && t.order_of_idx(static_cast<std::uint32_t>(x)) == static_cast<std::uint32_t>(p))
      basegens.push_back(static_cast<std::uint32_t>(x));
  });
  Subgroup base = closure(t, basegens, "Omega(Z(" + h.recipe + "))");

  struct Node {
    Bitset elems; // over the ambient index space
    Bitset avail; // candidate positions that commute with everything so far
  };
  auto cand_membership = [&](const Bitset& elems) {
    Bitset in(nc);
    for (std::size_t i = 0; i < nc; ++i)
      if (elems.test(cand[i])) in.set(i);
    return in;
  };

  Node start;
  start.elems = base.elems;
  {
    Bitset in = cand_membership(start.elems);
    start.avail = Bitset(nc);
    for (std::size_t i = 0; i < nc; ++i)
      if (!in.test(i)) start.avail.set(i);
  }

  std::set<std::vector<std::uint64_t>> seen;
  std::vector<Subgroup> maximal;
  std::set<std::vector<std::uint64_t>> maximal_seen;
  std::deque<Node> queue;
  queue.push_back(start);
  seen.insert(start.elems.words());

  while (!queue.empty()) {
    Node node = std::move(queue.front());
    queue.pop_front();
    if (node.avail.count() == 0) {
      if (maximal_seen.insert(node.elems.words()).second)
        maximal.push_back(from_elements(t, node.elems, "maxEA(" + h.recipe + ")"));
      continue;
    }
    node.avail.for_each([&](std::size_t j) {
      Bitset el = node.elems;
      std::uint32_t xp = cand[j];
      for (int e = 1; e < p; ++e) {
        node.elems.for_each(
            [&](std::size_t a) { el.set(t.mul_idx(static_cast<std::uint32_t>(a), xp)); });
        xp = t.mul_idx(xp, cand[j]);
      }
      if (!seen.insert(el.words()).second) return;
      Node next;
      next.elems = el;
      Bitset in = cand_membership(el);
      next.avail = node.avail;
      next.avail &= commute[j];
      Bitset notin(nc);
      for (std::size_t i = 0; i < nc; ++i)
        if (!in.test(i)) notin.set(i);
      next.avail &= notin;
      queue.push_back(std::move(next));
    });
  }
  std::sort(maximal.begin(), maximal.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elems.words() < b.elems.words();
  });
  return maximal;
}

std::vector<Subgroup> max_rank_elementary_abelians(const Subgroup& h) {
  auto all = maximal_elementary_abelians(h);
  std::size_t best = 0;
  for (const auto& a : all) best = std::max(best, a.order());
  std::vector<Subgroup> out;
  for (auto& a : all)
    if (a.order() == best) out.push_back(std::move(a));
  return out;
}

Subgroup thompson(const Subgroup& h) {
  const GroupTable& t = *h.amb;
  auto tops = max_rank_elementary_abelians(h);
  std::vector<std::uint32_t> gens;
  for (const auto& a : tops)
    for (auto g : a.gens) gens.push_back(g);
  return closure(t, gens, "J(" + h.recipe + ")");
}

std::vector<Subgroup> maximal_subgroups(const Subgroup& h) {
  const GroupTable& t = *h.amb;
  const int p = t.p();
  Subgroup phi = frattini(h);
  if (phi.order() == h.order()) return {};

  auto els = h.element_list();
  std::vector<std::int32_t> pos(t.order(), -1);
  for (std::size_t i = 0; i < els.size(); ++i) pos[els[i]] = static_cast<std::int32_t>(i);

  const std::size_t m = els.size();
  std::vector<std::int32_t> label(m, -1);
  std::vector<std::uint32_t> rep;
  for (std::size_t i = 0; i < m; ++i) {
    if (label[i] >= 0) continue;
    std::int32_t cid = static_cast<std::int32_t>(rep.size());
    rep.push_back(els[i]);
    phi.elems.for_each(
        [&](std::size_t f) { label[pos[t.mul_idx(els[i], static_cast<std::uint32_t>(f))]] = cid; });
  }
  const std::size_t ncosets = rep.size();
  auto cmul = [&](std::int32_t a, std::int32_t b) { return label[pos[t.mul_idx(rep[a], rep[b])]]; };

  // Assign GF(p)^r coordinates to the cosets of the elementary abelian quotient.
  std::vector<std::vector<int>> vec(ncosets);
  std::vector<bool> known(ncosets, false);
  known[label[0]] = true;
  std::vector<std::uint32_t> basis;
  for (std::size_t i = 0; i < m; ++i) {
    std::int32_t c = label[i];
    if (known[c]) continue;
    basis.push_back(els[i]);
    std::vector<std::int32_t> snap;
    for (std::size_t k = 0; k < ncosets; ++k)
      if (known[k]) snap.push_back(static_cast<std::int32_t>(k));
    std::int32_t ce = c;
    for (int e = 1; e < p; ++e) {
      for (auto c0 : snap) {
        std::int32_t cn = cmul(c0, ce);
        std::vector<int> v = vec[c0];
        v.resize(basis.size(), 0);
        v[basis.size() - 1] = e;
        vec[cn] = std::move(v);
        known[cn] = true;
      }
      ce = cmul(ce, c);
    }
  }
  const std::size_t r = basis.size();
  for (auto& v : vec) v.resize(r, 0);

  std::vector<Subgroup> out;
  // Hyperplane normals up to scalar: highest nonzero digit equals 1.
  std::vector<int> a(r, 0);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < r; ++i) total *= static_cast<std::uint64_t>(p);
  for (std::uint64_t k = 1; k < total; ++k) {
    std::uint64_t kk = k;
    for (std::size_t i = 0; i < r; ++i) {
      a[i] = static_cast<int>(kk % p);
      kk /= p;
    }
    int lead = 0;
    for (std::size_t i = r; i-- > 0;)
      if (a[i]) {
        lead = a[i];
        break;
      }
    if (lead != 1) continue;
    Bitset el(t.order());
    for (std::size_t i = 0; i < m; ++i) {
      int s = 0;
      for (std::size_t d = 0; d < r; ++d) s += a[d] * vec[label[i]][d];
      if (s % p == 0) el.set(els[i]);
    }
    out.push_back(from_elements(t, std::move(el),
                                "maximal" + std::to_string(out.size()) + "(" + h.recipe + ")"));
  }
  return out;
}

bool is_abelian(const Subgroup& h) {
  const GroupTable& t = *h.amb;
  const auto gens = h.gens.empty() ? extract_generators(t, h.elems) : h.gens;
  for (auto a : gens)
    for (auto b : gens)
      if (t.mul_idx(a, b) != t.mul_idx(b, a)) return false;
  return true;
}

bool is_elementary_abelian(const Subgroup& h) {
  const GroupTable& t = *h.amb;
  if (!is_abelian(h)) return false;
  bool ok = true;
  h.elems.for_each([&](std::size_t x) {
    if (x && t.order_of_idx(static_cast<std::uint32_t>(x)) != static_cast<std::uint32_t>(t.p()))
      ok = false;
  });
  return ok;
}

std::uint32_t subgroup_exponent(const Subgroup& h) {
  const GroupTable& t = *h.amb;
  std::uint32_t mx = 1;
  h.elems.for_each(
      [&](std::size_t x) { mx = std::max(mx, t.order_of_idx(static_cast<std::uint32_t>(x))); });
  return mx;
}

bool is_s_centric(const GroupTable& t, const Subgroup& e) {
  return centralizer(t, e).elems.subset_of(e.elems);
}

Subgroup center_of_group(const GroupTable& t) {
  Subgroup z = center(whole_group(t));
  z.recipe = "Z(S)";
  return z;
}

Subgroup q1_of(const GroupTable& t) {
  if (t.family() == Family::g2) return root_subgroup_product(t, {1, 2, 3, 4, 5}, "Q1");
  return root_subgroup_product(t, {0, 2, 3}, "Q1");
}

Subgroup q2_of(const GroupTable& t) {
  if (t.family() == Family::g2) return root_subgroup_product(t, {0, 2, 3, 4, 5}, "Q2");
  return root_subgroup_product(t, {1, 2, 3}, "Q2");
}

std::optional<PruneWitness> chain_centralizer_prune(const GroupTable& t, const Subgroup& e) {
  Subgroup n = normalizer(t, e);
  Subgroup c = centralizer(t, e);
  std::vector<std::uint32_t> ecs_gens = e.gens;
  for (auto g : c.gens) ecs_gens.push_back(g);
  Subgroup ecs = closure(t, ecs_gens, "E*C_S(E)");
  if (n.order() == ecs.order()) return std::nullopt;

  // Characteristic subgroups of E from a fixed recipe vocabulary.
  std::vector<Subgroup> family;
  auto push = [&](Subgroup s, const std::string& tag) {
    s.recipe = tag;
    for (const auto& f : family)
      if (f.elems == s.elems) return;
    family.push_back(std::move(s));
  };
  push(trivial_subgroup(t), "1");
  {
    Subgroup eself = e;
    push(eself, "E");
  }
  push(center(e), "Z(E)");
  push(derived(e), "E'");
  push(frattini(e), "Phi(E)");
  push(omega(e), "Omega(E)");
  push(agemo(e), "Agemo(E)");
  auto ucs = upper_central_series(e);
  for (std::size_t i = 0; i < ucs.size(); ++i) {
    push(ucs[i], "Z" + std::to_string(i + 1) + "(E)");
    push(omega(ucs[i]), "Omega(Z" + std::to_string(i + 1) + "(E))");
    push(agemo(ucs[i]), "Agemo(Z" + std::to_string(i + 1) + "(E))");
  }
  auto lcs = lower_central_series(e);
  for (std::size_t i = 1; i < lcs.size(); ++i)
    push(lcs[i], "gamma" + std::to_string(i + 1) + "(E)");
  if (e.order() <= 4096) push(thompson(e), "J(E)");

  // One round of centralizers, intersections, products and commutators over
  // the base list; every result is again characteristic in E.
  const std::size_t base_count = family.size();
  for (std::size_t i = 0; i < base_count; ++i) {
    Bitset ce(t.order());
    e.elems.for_each([&](std::size_t x) {
      for (auto g : family[i].gens)
        if (t.mul_idx(static_cast<std::uint32_t>(x), g) !=
            t.mul_idx(g, static_cast<std::uint32_t>(x)))
          return;
      ce.set(x);
    });
    push(from_elements(t, std::move(ce)), "C_E(" + family[i].recipe + ")");
    for (std::size_t j = i + 1; j < base_count; ++j) {
      Bitset inter = family[i].elems;
      inter &= family[j].elems;
      push(from_elements(t, std::move(inter)), family[i].recipe + "&" + family[j].recipe);
      std::vector<std::uint32_t> pg = family[i].gens;
      for (auto g : family[j].gens) pg.push_back(g);
      push(closure(t, pg), family[i].recipe + "*" + family[j].recipe);
      push(commutator_subgroup(t, family[i], family[j]),
           "[" + family[i].recipe + "," + family[j].recipe + "]");
    }
  }

  // Greedy maximal chain through the family, ordered by size.
  std::sort(family.begin(), family.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elems.words() < b.elems.words();
  });
  std::vector<Subgroup> chain;
  chain.push_back(trivial_subgroup(t));
  for (auto& f : family)
    if (f.order() > chain.back().order() && f.order() < e.order() &&
        chain.back().elems.subset_of(f.elems))
      chain.push_back(f);
  {
    Subgroup top = e;
    top.recipe = "E";
    chain.push_back(top);
  }

  std::optional<PruneWitness> found;
  n.elems.for_each([&](std::size_t yi) {
    if (found || ecs.elems.test(yi)) return;
    std::uint32_t y = static_cast<std::uint32_t>(yi);
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      bool ok = true;
      chain[i + 1].elems.for_each([&](std::size_t x) {
        if (!ok) return;
        if (!chain[i].elems.test(t.comm_idx(static_cast<std::uint32_t>(x), y))) ok = false;
      });
      if (!ok) return;
    }
    found = PruneWitness{chain, y};
  });
  return found;
}

std::string subgroup_json(const Subgroup& h) {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["ambient"] = {{"family", family_name(h.amb->family())}, {"q", h.amb->q()}};
  j["order"] = h.order();
  j["recipe"] = h.recipe;
  j["generators"] = h.gens;
  return j.dump(2);
}

} // namespace sylow
