#include "doctest.h"

#include <set>

#include "sylow/subgroup.hpp"

using namespace sylow;

namespace {
std::uint64_t qpow(std::uint64_t q, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= q;
  return r;
}
} // namespace

TEST_CASE("closures") {
  auto t = build_group(Family::su4, 2);
  CHECK(trivial_subgroup(*t).order() == 1);
  CHECK(closure(*t, {}).order() == 1);

  // J(S) generators: the three later root subgroups, order q^4.
  Subgroup j = root_subgroup_product(*t, {1, 2, 3});
  CHECK(j.order() == 16);
  Subgroup s = root_subgroup_product(*t, {0, 1, 2, 3});
  CHECK(s.order() == t->order());
  CHECK(is_subgroup_closed(j));
}

TEST_CASE("computed centers") {
  // g2, p=2 and p>=5: Z(S) = X_{3a+2b} of order q; p=3: order q^2.
  for (std::uint32_t q : {2u, 4u, 5u}) {
    auto t = build_group(Family::g2, q);
    Subgroup z = center_of_group(*t);
    CHECK(z.order() == q);
    for (std::uint32_t v = 0; v < q; ++v)
      CHECK(z.contains(static_cast<std::uint32_t>(
          t->index_of(t->root_element(5, static_cast<felt>(v))))));
  }
  {
    auto t = build_group(Family::g2, 3);
    CHECK(center_of_group(*t).order() == 9);
    CHECK(center_of_group(*build_group(Family::g2, 9)).order() == 81);
  }
  // su4: Z(S) = X_{2a+b} of order q.
  for (std::uint32_t q : {2u, 3u, 4u}) {
    auto t = build_group(Family::su4, q);
    Subgroup z = center_of_group(*t);
    CHECK(z.order() == q);
    for (std::uint32_t v = 0; v < q; ++v)
      CHECK(z.contains(static_cast<std::uint32_t>(
          t->index_of(t->root_element(3, static_cast<felt>(v))))));
  }
}

TEST_CASE("central root elements") {
  auto t = build_group(Family::g2, 3);
  Subgroup z = center_of_group(*t);
  for (std::uint32_t v = 0; v < 3; ++v) {
    CHECK(z.contains(static_cast<std::uint32_t>(t->index_of(t->root_element(5, static_cast<felt>(v))))));
    CHECK(z.contains(static_cast<std::uint32_t>(t->index_of(t->root_element(3, static_cast<felt>(v))))));
  }
}

TEST_CASE("upper central series orders") {
  // g2, p=2, q>2: orders q, q^2, q^4 and then S.
  {
    std::uint32_t q = 4;
    auto t = build_group(Family::g2, q);
    auto z = upper_central_series(whole_group(*t));
    REQUIRE(z.size() == 4);
    CHECK(z[0].order() == q);
    CHECK(z[1].order() == qpow(q, 2));
    CHECK(z[2].order() == qpow(q, 4));
    CHECK(z[3].order() == qpow(q, 6));
  }
  // q=2 degenerates: |Z2| = 8 and class 3. Frozen from an independent
  // SU3(3):2 model of the same Sylow subgroup.
  {
    auto t = build_group(Family::g2, 2);
    auto z = upper_central_series(whole_group(*t));
    REQUIRE(z.size() == 3);
    CHECK(z[0].order() == 2);
    CHECK(z[1].order() == 8);
    CHECK(z[2].order() == 64);
  }
  // g2, p>=5: orders q, q^2, q^3, q^4 and the two central series coincide.
  {
    auto t = build_group(Family::g2, 5);
    Subgroup s = whole_group(*t);
    auto z = upper_central_series(s);
    REQUIRE(z.size() == 5);
    for (int i = 0; i < 4; ++i) CHECK(z[i].order() == qpow(5, i + 1));
    auto g = lower_central_series(s);
    REQUIRE(g.size() == 6); // S > S' > ... > 1
    for (int i = 1; i <= 4; ++i) CHECK(g[i].elems == z[4 - i].elems);
  }
  // Abelian subgroup: series is just the subgroup itself.
  {
    auto t = build_group(Family::su4, 2);
    Subgroup j = root_subgroup_product(*t, {1, 2, 3});
    REQUIRE(is_abelian(j));
    auto z = upper_central_series(j);
    REQUIRE(z.size() == 1);
    CHECK(z[0].elems == j.elems);
  }
}

TEST_CASE("frattini, omega, agemo") {
  // Elementary abelian: Phi trivial.
  {
    auto t = build_group(Family::su4, 2);
    Subgroup j = root_subgroup_product(*t, {1, 2, 3});
    REQUIRE(is_elementary_abelian(j));
    CHECK(frattini(j).order() == 1);
    CHECK(omega(j).elems == j.elems);
    CHECK(agemo(j).order() == 1);
  }
  // g2, p=2: Phi(Q1) = Z(Q1) = Z(S).
  for (std::uint32_t q : {2u, 4u}) {
    auto t = build_group(Family::g2, q);
    Subgroup q1 = q1_of(*t);
    CHECK(q1.order() == qpow(q, 5));
    Subgroup z = center_of_group(*t);
    CHECK(frattini(q1).elems == z.elems);
    CHECK(center(q1).elems == z.elems);
  }
  // g2, p=3: Omega(S) = S and Agemo(S) = Z(S).
  {
    auto t = build_group(Family::g2, 3);
    Subgroup s = whole_group(*t);
    CHECK(omega(s).order() == s.order());
    CHECK(agemo(s).elems == center_of_group(*t).elems);
  }
}

TEST_CASE("quotient centralizer definitions of Q1, Q2 (q > 2)") {
  for (std::uint32_t q : {4u, 5u}) {
    auto t = build_group(Family::g2, q);
    Subgroup s = whole_group(*t);
    auto z = upper_central_series(s);
    Subgroup q1 = quotient_centralizer(*t, s, z[2], z[0]); // C_S(Z3/Z1)
    Subgroup q2 = quotient_centralizer(*t, s, z[1], trivial_subgroup(*t)); // C_S(Z2)
    CHECK(q1.elems == q1_of(*t).elems);
    CHECK(q2.elems == q2_of(*t).elems);
    CHECK(q1.order() == qpow(q, 5));
    CHECK(q2.order() == qpow(q, 5));
  }
}

TEST_CASE("maximal elementary abelians of g2(2): the five classes") {
  auto t = build_group(Family::g2, 2);
  Subgroup s = whole_group(*t);
  auto eas = maximal_elementary_abelians(s);
  // All of order q^3, exactly 8 subgroups in 5 conjugacy classes.
  for (const auto& a : eas) CHECK(a.order() == 8);
  CHECK(eas.size() == 8);
  std::set<std::vector<std::uint64_t>> classes;
  for (const auto& a : eas) {
    std::vector<std::uint64_t> best = a.elems.words();
    for (std::uint32_t g = 0; g < t->order(); ++g) {
      auto cg = conjugate_subgroup(a, g).elems.words();
      if (cg < best) best = cg;
    }
    classes.insert(best);
  }
  CHECK(classes.size() == 5);

  // Normalizer orders: Q2, Q1, Q1, S, S split as {32, 32, 32, 64, 64}.
  std::multiset<std::size_t> norms;
  for (const auto& a : eas) {
    Subgroup n = normalizer(*t, a);
    if (n.order() == t->order()) norms.insert(64);
  }
  CHECK(norms.count(64) == 2); // W and X are normal in S

  // The named ones: T, U, V, W, X as root products.
  auto contains = [&](const Subgroup& target) {
    for (const auto& a : eas)
      if (a.elems == target.elems) return true;
    return false;
  };
  CHECK(contains(root_subgroup_product(*t, {0, 4, 5}))); // T
  CHECK(contains(root_subgroup_product(*t, {1, 3, 5}))); // U
  CHECK(contains(root_subgroup_product(*t, {1, 2, 5}))); // V
  CHECK(contains(root_subgroup_product(*t, {3, 4, 5}))); // W
  CHECK(contains(root_subgroup_product(*t, {2, 4, 5}))); // X
}

TEST_CASE("thompson subgroup of su4") {
  for (std::uint32_t q : {2u, 3u}) {
    auto t = build_group(Family::su4, q);
    Subgroup j = thompson(whole_group(*t));
    CHECK(j.order() == qpow(q, 4));
    CHECK(j.elems == root_subgroup_product(*t, {1, 2, 3}).elems);
    // An elementary abelian is its own Thompson subgroup.
    CHECK(thompson(j).elems == j.elems);
  }
}

TEST_CASE("maximal subgroups") {
  {
    auto t = build_group(Family::g2, 3);
    auto ms = maximal_subgroups(whole_group(*t));
    // Rank of S/Phi(S) is 3 at q=3 (the q=3 Frobenius degenerates S'): 13
    // index-3 subgroups, of which exactly Q1 and Q2 have exponent 3.
    CHECK(ms.size() == 13);
    Subgroup q1 = q1_of(*t), q2 = q2_of(*t);
    int exp3 = 0;
    bool q1found = false, q2found = false;
    for (const auto& m : ms) {
      CHECK(m.order() == qpow(3, 5));
      CHECK(frattini(whole_group(*t)).elems.subset_of(m.elems));
      if (subgroup_exponent(m) == 3) {
        ++exp3;
        if (m.elems == q1.elems) q1found = true;
        if (m.elems == q2.elems) q2found = true;
      }
    }
    CHECK(exp3 == 2);
    CHECK(q1found);
    CHECK(q2found);
  }
  {
    auto t = build_group(Family::g2, 9, BuildOptions{.enum_cap = 531441});
    auto ms = maximal_subgroups(whole_group(*t));
    // Frattini-quotient rank oracle: count must be (p^r - 1)/(p - 1).
    Subgroup s = whole_group(*t);
    Subgroup phi = frattini(s);
    std::uint64_t idx = s.order() / phi.order();
    int r = 0;
    while (idx > 1) idx /= 3, ++r;
    CHECK(r == 4);
    CHECK(ms.size() == (qpow(3, r) - 1) / 2);
    CHECK(ms.size() == 40);
  }
}

TEST_CASE("centric test and centralizer identities") {
  auto t = build_group(Family::su4, 3);
  Subgroup s = whole_group(*t);
  CHECK(is_s_centric(*t, s));
  Subgroup q2 = q2_of(*t);
  CHECK(is_abelian(q2));
  CHECK(is_s_centric(*t, q2)); // self-centralizing
  CHECK(!is_s_centric(*t, center_of_group(*t)));

  // centralizer(H) equals the intersection of element centralizers.
  Subgroup q1 = q1_of(*t);
  Subgroup ch = centralizer(*t, q1);
  Bitset inter = centralizer_of_element(*t, q1.element_list()[1]).elems;
  for (auto x : q1.element_list()) inter &= centralizer_of_element(*t, x).elems;
  CHECK(ch.elems == inter);
}

TEST_CASE("su4 centralizer orders from the structure lemmas") {
  auto t = build_group(Family::su4, 3);
  Subgroup s = whole_group(*t);
  Subgroup sp = derived(s);
  CHECK(sp.order() == 27); // S' = X_{a+b} X_{2a+b}
  Subgroup z = center_of_group(*t);
  // x in S' \ Z(S): |C_S(x)| = q^5.
  std::uint32_t x1 = 0, x2 = 0;
  sp.elems.for_each([&](std::size_t i) {
    if (!z.contains(static_cast<std::uint32_t>(i)) && !x1) x1 = static_cast<std::uint32_t>(i);
  });
  REQUIRE(x1);
  CHECK(centralizer_of_element(*t, x1).order() == qpow(3, 5));
  // x of order p outside Q2: |C_S(x)| = q^4, contained in Q1.
  Subgroup q1 = q1_of(*t), q2 = q2_of(*t);
  for (std::uint32_t i = 1; i < t->order() && !x2; ++i)
    if (!q2.contains(i) && t->order_of_idx(i) == 3) x2 = i;
  REQUIRE(x2);
  Subgroup c2 = centralizer_of_element(*t, x2);
  CHECK(c2.order() == qpow(3, 4));
  CHECK(c2.elems.subset_of(q1.elems));
}

TEST_CASE("chain centralizer prune soundness") {
  auto t = build_group(Family::g2, 2);
  // Q1 meet Q2 has nontrivial Out_S and is not radical; the prune witness, if
  // found, must genuinely centralize the chain from outside E*C_S(E).
  Subgroup q1 = q1_of(*t), q2 = q2_of(*t);
  Bitset inter = q1.elems;
  inter &= q2.elems;
  Subgroup e = from_elements(*t, inter, "Q1&Q2");
  auto w = chain_centralizer_prune(*t, e);
  REQUIRE(w.has_value());
  CHECK(!e.contains(w->witness));
  Subgroup c = centralizer(*t, e);
  CHECK(!c.contains(w->witness));
  REQUIRE(w->chain.size() >= 2);
  CHECK(w->chain.front().order() == 1);
  CHECK(w->chain.back().elems == e.elems);
  for (std::size_t i = 0; i + 1 < w->chain.size(); ++i) {
    CHECK(w->chain[i].elems.subset_of(w->chain[i + 1].elems));
    w->chain[i + 1].elems.for_each([&](std::size_t x) {
      CHECK(w->chain[i].elems.test(t->comm_idx(static_cast<std::uint32_t>(x), w->witness)));
    });
  }
  // S itself has no witness (no outer S-conjugation at all).
  CHECK(!chain_centralizer_prune(*t, whole_group(*t)).has_value());
}
