#include "sylow/aut.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace sylow {

LocalGroup make_local(const Subgroup& h) {
  const GroupTable& t = *h.amb;
  LocalGroup g;
  g.p = t.p();
  g.to_amb = h.element_list();
  g.m = static_cast<std::uint32_t>(g.to_amb.size());
  if (g.m > 4096) throw CapError("subgroup too large for a local table");
  std::unordered_map<std::uint32_t, std::uint16_t> back;
  back.reserve(g.m * 2);
  for (std::uint32_t i = 0; i < g.m; ++i) back[g.to_amb[i]] = static_cast<std::uint16_t>(i);
  g.mul.resize(std::size_t(g.m) * g.m);
  g.inv.resize(g.m);
  g.ord.resize(g.m);
  for (std::uint32_t i = 0; i < g.m; ++i) {
    g.inv[i] = back.at(t.inv_idx(g.to_amb[i]));
    g.ord[i] = static_cast<std::uint16_t>(t.order_of_idx(g.to_amb[i]));
    for (std::uint32_t j = 0; j < g.m; ++j)
      g.mul[std::size_t(i) * g.m + j] = back.at(t.mul_idx(g.to_amb[i], g.to_amb[j]));
  }
  return g;
}

namespace {

std::vector<bool> local_closure(const LocalGroup& g, const std::vector<std::uint16_t>& gens) {
  std::vector<bool> in(g.m, false);
  in[0] = true;
  std::vector<std::uint16_t> queue{0};
  while (!queue.empty()) {
    std::uint16_t x = queue.back();
    queue.pop_back();
    for (auto h : gens) {
      std::uint16_t y = g.mul2(x, h);
      if (!in[y]) {
        in[y] = true;
        queue.push_back(y);
      }
    }
  }
  return in;
}

std::size_t count(const std::vector<bool>& v) {
  std::size_t c = 0;
  for (bool b : v) c += b;
  return c;
}

std::uint16_t comm2(const LocalGroup& g, std::uint16_t a, std::uint16_t b) {
  return g.mul2(g.mul2(g.inv[g.mul2(b, a)], a), b);
}

std::vector<bool> local_frattini(const LocalGroup& g) {
  std::vector<std::uint16_t> gens;
  std::vector<bool> seen(g.m, false);
  for (std::uint16_t a = 0; a < g.m; ++a) {
    std::uint16_t ap = a;
    for (int k = 1; k < g.p; ++k) ap = g.mul2(ap, a);
    if (ap && !seen[ap]) {
      seen[ap] = true;
      gens.push_back(ap);
    }
    for (std::uint16_t b = 0; b < g.m; ++b) {
      std::uint16_t c = comm2(g, a, b);
      if (c && !seen[c]) {
        seen[c] = true;
        gens.push_back(c);
      }
    }
  }
  return local_closure(g, gens);
}

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

} // namespace

std::vector<std::uint16_t> minimal_generating_set(const LocalGroup& g) {
  std::vector<bool> phi = local_frattini(g);
  std::vector<std::uint16_t> phigens;
  for (std::uint16_t x = 1; x < g.m; ++x)
    if (phi[x]) phigens.push_back(x);

  std::vector<std::uint16_t> gens;
  std::vector<std::uint16_t> span = phigens;
  std::vector<bool> cur = local_closure(g, span);
  for (std::uint16_t a = 0; a < g.m && count(cur) < g.m; ++a) {
    if (cur[a]) continue;
    gens.push_back(a);
    span.push_back(a);
    cur = local_closure(g, span);
  }
  // <gens, Phi> = G implies <gens> = G (Phi is the non-generator set).
  return gens;
}

std::vector<std::uint32_t> invariant_profiles(const LocalGroup& g) {
  const std::uint32_t m = g.m;
  std::vector<std::uint32_t> cls(m, 0xffffffff);
  std::vector<std::uint32_t> clssize(m, 0);
  for (std::uint16_t x = 0; x < m; ++x) {
    if (cls[x] != 0xffffffff) continue;
    std::vector<std::uint16_t> orbit{x};
    cls[x] = x;
    for (std::size_t k = 0; k < orbit.size(); ++k)
      for (std::uint16_t c = 0; c < m; ++c) {
        std::uint16_t y = g.mul2(g.mul2(g.inv[c], orbit[k]), c);
        if (cls[y] == 0xffffffff) {
          cls[y] = x;
          orbit.push_back(y);
        }
      }
    for (auto y : orbit) clssize[y] = static_cast<std::uint32_t>(orbit.size());
  }

  std::vector<bool> phi = local_frattini(g);
  std::vector<bool> der = [&] {
    std::vector<std::uint16_t> gens;
    std::vector<bool> seen(m, false);
    for (std::uint16_t a = 0; a < m; ++a)
      for (std::uint16_t b = 0; b < m; ++b) {
        std::uint16_t c = comm2(g, a, b);
        if (c && !seen[c]) {
          seen[c] = true;
          gens.push_back(c);
        }
      }
    return local_closure(g, gens);
  }();
  std::vector<bool> cen(m, false);
  for (std::uint16_t x = 0; x < m; ++x) {
    bool central = true;
    for (std::uint16_t y = 0; y < m && central; ++y)
      if (g.mul2(x, y) != g.mul2(y, x)) central = false;
    cen[x] = central;
  }

  std::vector<std::uint32_t> prof(m);
  for (std::uint16_t x = 0; x < m; ++x) {
    std::uint64_t h = 1469598103934665603ull;
    h = mix(h, g.ord[x]);
    h = mix(h, clssize[x]);
    h = mix(h, cen[x] ? 1 : 0);
    h = mix(h, der[x] ? 1 : 0);
    h = mix(h, phi[x] ? 1 : 0);
    prof[x] = static_cast<std::uint32_t>(h ^ (h >> 32));
  }

  for (int round = 0; round < 8; ++round) {
    std::vector<std::uint32_t> next(m);
    for (std::uint16_t x = 0; x < m; ++x) {
      std::uint16_t xp = x;
      for (int k = 1; k < g.p; ++k) xp = g.mul2(xp, x);
      std::uint64_t acc = 0;
      for (std::uint16_t y = 0; y < m; ++y)
        if (g.mul2(x, y) == g.mul2(y, x)) acc += 0x9e3779b97f4a7c15ull * (prof[y] | 1);
      std::uint64_t h = 1469598103934665603ull;
      h = mix(h, prof[x]);
      h = mix(h, prof[xp]);
      h = mix(h, acc);
      next[x] = static_cast<std::uint32_t>(h ^ (h >> 32));
    }
    std::map<std::uint32_t, int> a, b;
    for (std::uint16_t x = 0; x < m; ++x) {
      a[prof[x]] = 1;
      b[next[x]] = 1;
    }
    bool stable = a.size() == b.size();
    prof = std::move(next);
    if (stable) break;
  }
  return prof;
}

namespace {

struct Backtracker {
  const LocalGroup& g;
  const Caps& caps;
  std::vector<std::uint16_t> gens;
  std::vector<std::vector<std::uint16_t>> cands;
  std::vector<Perm> found;
  std::uint64_t nodes = 0;

  Backtracker(const LocalGroup& g_, const Caps& c) : g(g_), caps(c) {}

  // Extends the partial map by img[gen] = image and closes it under products;
  // false on any conflict. img entries 0xffff are undefined.
  bool assign(std::vector<std::uint16_t>& img, std::vector<bool>& used, std::uint16_t gen,
              std::uint16_t image) const {
    std::vector<std::uint16_t> defined;
    defined.reserve(g.m);
    for (std::uint16_t x = 0; x < g.m; ++x)
      if (img[x] != 0xffff) defined.push_back(x);
    std::vector<std::uint16_t> pending;
    auto put = [&](std::uint16_t x, std::uint16_t y) {
      if (img[x] != 0xffff) return img[x] == y;
      if (used[y]) return false;
      img[x] = y;
      used[y] = true;
      defined.push_back(x);
      pending.push_back(x);
      return true;
    };
    if (!put(gen, image)) return false;
    std::size_t pi = 0;
    while (pi < pending.size()) {
      std::uint16_t z = pending[pi++];
      for (std::size_t di = 0; di < defined.size(); ++di) {
        std::uint16_t d = defined[di];
        if (!put(g.mul2(z, d), g.mul2(img[z], img[d]))) return false;
        if (!put(g.mul2(d, z), g.mul2(img[d], img[z]))) return false;
      }
    }
    return true;
  }

  void search(std::size_t k, const std::vector<std::uint16_t>& img, const std::vector<bool>& used) {
    if (++nodes > caps.aut_nodes) throw CapError("automorphism backtracking node budget exceeded");
    if (k == gens.size()) {
      finalize(img);
      return;
    }
    for (std::uint16_t image : cands[k]) {
      if (used[image]) continue;
      std::vector<std::uint16_t> img2 = img;
      std::vector<bool> used2 = used;
      if (!assign(img2, used2, gens[k], image)) continue;
      search(k + 1, img2, used2);
    }
  }

  void finalize(const std::vector<std::uint16_t>& img) {
    for (std::uint16_t x = 0; x < g.m; ++x)
      if (img[x] == 0xffff) return; // generators failed to generate: impossible
    std::vector<bool> hit(g.m, false);
    for (std::uint16_t x = 0; x < g.m; ++x) {
      if (hit[img[x]]) return;
      hit[img[x]] = true;
    }
    for (std::uint16_t x = 0; x < g.m; ++x)
      for (std::uint16_t y = 0; y < g.m; ++y)
        if (img[g.mul2(x, y)] != g.mul2(img[x], img[y])) return;
    found.emplace_back(img.begin(), img.end());
    if (found.size() > caps.aut_order) throw CapError("automorphism group order cap exceeded");
  }
};

} // namespace

AutGroup aut_group(const LocalGroup& g, const Caps& caps) {
  AutGroup out;
  if (g.m == 1) {
    out.elements = {Perm{0}};
    out.order = 1;
    return out;
  }
  Backtracker bt(g, caps);
  bt.gens = minimal_generating_set(g);
  auto prof = invariant_profiles(g);
  bt.cands.resize(bt.gens.size());
  for (std::size_t k = 0; k < bt.gens.size(); ++k)
    for (std::uint16_t x = 0; x < g.m; ++x)
      if (prof[x] == prof[bt.gens[k]]) bt.cands[k].push_back(x);

  // Most constrained generator first.
  std::vector<std::size_t> order(bt.gens.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return bt.cands[a].size() < bt.cands[b].size();
  });
  {
    std::vector<std::uint16_t> gens2;
    std::vector<std::vector<std::uint16_t>> cands2;
    for (auto i : order) {
      gens2.push_back(bt.gens[i]);
      cands2.push_back(bt.cands[i]);
    }
    bt.gens = std::move(gens2);
    bt.cands = std::move(cands2);
  }

  std::vector<std::uint16_t> img(g.m, 0xffff);
  std::vector<bool> used(g.m, false);
  img[0] = 0;
  used[0] = true;
  bt.search(0, img, used);

  out.elements = std::move(bt.found);
  std::sort(out.elements.begin(), out.elements.end());
  out.order = out.elements.size();
  out.nodes = bt.nodes;
  return out;
}

std::vector<Perm> inner_automorphisms(const LocalGroup& g) {
  std::vector<Perm> inn;
  std::map<Perm, bool> seen;
  for (std::uint16_t c = 0; c < g.m; ++c) {
    Perm p(g.m);
    for (std::uint16_t x = 0; x < g.m; ++x) p[x] = g.mul2(g.mul2(g.inv[c], x), c);
    if (seen.emplace(p, true).second) inn.push_back(std::move(p));
  }
  std::sort(inn.begin(), inn.end());
  return inn;
}

static Perm compose(const Perm& a, const Perm& b) {
  // apply a, then b
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = b[a[i]];
  return c;
}

std::vector<Perm> close_perm_group(const std::vector<Perm>& gens, std::uint64_t cap) {
  if (gens.empty()) return {};
  const std::size_t n = gens[0].size();
  Perm id(n);
  for (std::size_t i = 0; i < n; ++i) id[i] = static_cast<std::uint16_t>(i);
  std::vector<Perm> elements{id};
  std::map<Perm, bool> in;
  in[id] = true;
  // Dimino-style: grow generator by generator, sweeping cosets of the
  // previously closed set.
  for (const auto& gnew : gens) {
    if (in.count(gnew)) continue;
    std::vector<Perm> reps{gnew};
    std::size_t prev = elements.size();
    in[gnew] = true;
    elements.push_back(gnew);
    for (std::size_t r = 0; r < reps.size(); ++r) {
      for (std::size_t i = 0; i < prev; ++i) {
        Perm x = compose(elements[i], reps[r]);
        if (in.emplace(x, true).second) elements.push_back(std::move(x));
      }
      for (const auto& g2 : gens) {
        Perm x = compose(reps[r], g2);
        if (in.emplace(x, true).second) {
          elements.push_back(x);
          reps.push_back(std::move(x));
        }
      }
      if (elements.size() > cap) throw CapError("permutation closure cap exceeded");
    }
    // Sweep products of everything until closed (handles interleaving).
    bool grew = true;
    while (grew) {
      grew = false;
      std::size_t sz = elements.size();
      for (std::size_t i = 0; i < sz; ++i)
        for (std::size_t j = 0; j < sz; ++j) {
          Perm x = compose(elements[i], elements[j]);
          if (in.emplace(x, true).second) {
            elements.push_back(std::move(x));
            grew = true;
            if (elements.size() > cap) throw CapError("permutation closure cap exceeded");
          }
        }
    }
  }
  std::sort(elements.begin(), elements.end());
  return elements;
}

// ---------------------------------------------------------------------------
// Out(E) = Aut(E)/Inn(E) as a small abstract group, and its p-core.

namespace {

struct OutGroup {
  std::vector<Perm> reps;           // canonical (lex-min) coset representatives
  std::map<Perm, std::uint16_t> coset_of; // every Aut element -> coset id
  std::uint16_t id_coset = 0;

  std::uint16_t mul(std::uint16_t a, std::uint16_t b) const {
    return coset_of.at(compose(reps[a], reps[b]));
  }
  std::uint16_t inverse(std::uint16_t a) const {
    const Perm& p = reps[a];
    Perm inv(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<std::uint16_t>(i);
    return coset_of.at(inv);
  }
  std::size_t size() const { return reps.size(); }
};

OutGroup make_out(const std::vector<Perm>& aut, const std::vector<Perm>& inn) {
  OutGroup o;
  for (const auto& a : aut) {
    if (o.coset_of.count(a)) continue;
    std::uint16_t cid = static_cast<std::uint16_t>(o.reps.size());
    Perm best = a;
    for (const auto& i : inn) {
      Perm ai = compose(a, i);
      if (ai < best) best = ai;
      o.coset_of[std::move(ai)] = cid;
    }
    o.reps.push_back(std::move(best));
  }
  Perm id(aut[0].size());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<std::uint16_t>(i);
  o.id_coset = o.coset_of.at(id);
  return o;
}

std::uint16_t out_order_of(const OutGroup& o, std::uint16_t x) {
  std::uint16_t y = x, n = 1;
  while (y != o.id_coset) {
    y = o.mul(y, x);
    ++n;
  }
  return n;
}

std::vector<bool> out_p_core(const OutGroup& o, int p) {
  const std::size_t n = o.size();
  std::uint64_t ppart = 1;
  {
    std::uint64_t m = n;
    while (m % p == 0) {
      m /= p;
      ppart *= p;
    }
  }
  std::vector<bool> in_p(n, false);
  in_p[o.id_coset] = true;
  std::vector<std::uint16_t> pelems{o.id_coset};
  while (pelems.size() < ppart) {
    bool grown = false;
    for (std::uint16_t x = 0; x < n && !grown; ++x) {
      if (in_p[x]) continue;
      std::uint16_t ord = out_order_of(o, x);
      bool pel = true;
      for (std::uint16_t v = ord; v > 1;) {
        if (v % p) {
          pel = false;
          break;
        }
        v = static_cast<std::uint16_t>(v / p);
      }
      if (!pel) continue;
      std::uint16_t xi = o.inverse(x);
      bool norm = true;
      for (auto e : pelems)
        if (!in_p[o.mul(o.mul(xi, e), x)]) {
          norm = false;
          break;
        }
      if (!norm) continue;
      // adjoin x and close
      std::vector<std::uint16_t> queue = pelems;
      in_p[x] = true;
      pelems.push_back(x);
      queue.push_back(x);
      std::size_t qi = 0;
      while (qi < queue.size()) {
        std::uint16_t a = queue[qi++];
        for (std::size_t bi = 0; bi < pelems.size(); ++bi) {
          std::uint16_t c = o.mul(a, pelems[bi]);
          if (!in_p[c]) {
            in_p[c] = true;
            pelems.push_back(c);
            queue.push_back(c);
          }
          c = o.mul(pelems[bi], a);
          if (!in_p[c]) {
            in_p[c] = true;
            pelems.push_back(c);
            queue.push_back(c);
          }
        }
      }
      grown = true;
    }
    if (!grown) throw std::logic_error("Sylow growth stalled in Out(E)");
  }

  std::vector<bool> core = in_p;
  for (std::uint16_t x = 0; x < n; ++x) {
    std::uint16_t xi = o.inverse(x);
    std::vector<bool> conj(n, false);
    for (auto e : pelems) conj[o.mul(o.mul(xi, e), x)] = true;
    for (std::size_t i = 0; i < n; ++i) core[i] = core[i] && conj[i];
  }
  return core;
}

} // namespace

RadicalResult is_s_radical(const GroupTable& t, const Subgroup& e, const Caps& caps,
                           bool allow_prune) {
  RadicalResult res;
  Subgroup n = normalizer(t, e);
  Subgroup c = centralizer(t, e);
  std::vector<std::uint32_t> ecs_gens = e.gens;
  for (auto g : c.gens) ecs_gens.push_back(g);
  Subgroup ecs = closure(t, ecs_gens, "E*C_S(E)");

  if (n.order() == ecs.order()) {
    res.radical = Verdict::yes;
    res.certificate = "trivial Out_S(E)";
    return res;
  }
  if (is_elementary_abelian(e)) {
    res.radical = Verdict::yes;
    res.certificate = "elementary abelian: O_p(GL_m(p)) = 1";
    return res;
  }
  if (allow_prune) {
    auto w = chain_centralizer_prune(t, e);
    if (w) {
      res.radical = Verdict::no;
      res.witness = w->witness;
      std::string chain;
      for (const auto& f : w->chain) chain += (chain.empty() ? "" : " < ") + f.recipe;
      res.certificate = "chain witness y=" + std::to_string(w->witness) + " centralizing " + chain;
      return res;
    }
  }

  try {
    LocalGroup lg = make_local(e);
    AutGroup aut = aut_group(lg, caps);
    res.aut_order = aut.order;
    auto inn = inner_automorphisms(lg);
    OutGroup og = make_out(aut.elements, inn);
    if (og.size() > 8192) throw CapError("Out(E) too large");
    std::vector<bool> core = out_p_core(og, t.p());

    std::unordered_map<std::uint32_t, std::uint16_t> back;
    for (std::uint32_t i = 0; i < lg.m; ++i) back[lg.to_amb[i]] = static_cast<std::uint16_t>(i);

    Bitset seen = ecs.elems;
    std::optional<std::uint32_t> bad;
    n.elems.for_each([&](std::size_t yi) {
      if (bad || seen.test(yi)) return;
      std::uint32_t y = static_cast<std::uint32_t>(yi);
      ecs.elems.for_each(
          [&](std::size_t z) { seen.set(t.mul_idx(y, static_cast<std::uint32_t>(z))); });
      Perm py(lg.m);
      for (std::uint32_t i = 0; i < lg.m; ++i) py[i] = back.at(t.conj_idx(lg.to_amb[i], y));
      auto it = og.coset_of.find(py);
      if (it == og.coset_of.end()) throw std::logic_error("N_S(E) conjugation missing from Aut(E)");
      if (it->second != og.id_coset && core[it->second]) bad = y;
    });
    if (bad) {
      res.radical = Verdict::no;
      res.witness = bad;
      res.certificate = "|Aut|=" + std::to_string(aut.order) + ", y=" + std::to_string(*bad) +
                        " maps into O_p(Out(E))";
    } else {
      res.radical = Verdict::yes;
      res.certificate =
          "|Aut|=" + std::to_string(aut.order) + ", Out_S(E) meets O_p(Out(E)) trivially";
    }
  } catch (const CapError& err) {
    res.radical = Verdict::undecided;
    res.certificate = std::string("cap: ") + err.what();
  }
  return res;
}

} // namespace sylow
