#include "doctest.h"

#include <set>

#include "sylow/aut.hpp"

using namespace sylow;

namespace {

Subgroup find_cyclic4(const GroupTable& t) {
  for (std::uint32_t i = 1; i < t.order(); ++i)
    if (t.order_of_idx(i) == 4) return closure(t, {i}, "C4");
  throw std::logic_error("no order-4 element");
}

} // namespace

TEST_CASE("minimal generating sets") {
  auto t = build_group(Family::g2, 2);
  // Elementary abelian 2^3 -> 3 generators.
  Subgroup w = root_subgroup_product(*t, {3, 4, 5});
  REQUIRE(is_elementary_abelian(w));
  CHECK(minimal_generating_set(make_local(w)).size() == 3);
  // The whole Sylow group: Frattini-quotient rank is 3 at q=2.
  CHECK(minimal_generating_set(make_local(whole_group(*t))).size() == 3);
  // su4 Q1 is ultraspecial with |Q1/Phi(Q1)| = q^4: rank 4n.
  auto u = build_group(Family::su4, 2);
  CHECK(minimal_generating_set(make_local(q1_of(*u))).size() == 4);
}

TEST_CASE("Aut of elementary abelian 2^3 is GL3(2)") {
  auto t = build_group(Family::g2, 2);
  Subgroup w = root_subgroup_product(*t, {3, 4, 5});
  LocalGroup lg = make_local(w);
  AutGroup aut = aut_group(lg);
  // |GL_3(2)| = (8-1)(8-2)(8-4), computed independently.
  std::uint64_t want = (8 - 1) * (8 - 2) * (8 - 4);
  CHECK(aut.order == want);
  // Every emitted automorphism preserves multiplication (spot re-check).
  for (const auto& a : aut.elements) {
    for (std::uint16_t x = 0; x < lg.m; ++x)
      for (std::uint16_t y = 0; y < lg.m; ++y)
        REQUIRE(a[lg.mul2(x, y)] == lg.mul2(a[x], a[y]));
  }
  // GL_3(2) is simple: the normal closure of any involution is everything;
  // hence the 2-core is trivial. Independent oracle for p_core.
  auto inn = inner_automorphisms(lg);
  CHECK(inn.size() == 1); // abelian
}

TEST_CASE("Aut of cyclic group of order 4 has order 2") {
  auto t = build_group(Family::su4, 2);
  Subgroup c4 = find_cyclic4(*t);
  REQUIRE(c4.order() == 4);
  AutGroup aut = aut_group(make_local(c4));
  CHECK(aut.order == 2);
}

TEST_CASE("Inn(Q) has order |Q/Z(Q)|") {
  auto t = build_group(Family::g2, 2);
  Subgroup s = whole_group(*t);
  LocalGroup lg = make_local(s);
  auto inn = inner_automorphisms(lg);
  CHECK(inn.size() == s.order() / center(s).order());
}

TEST_CASE("dimino closure on a symmetric group") {
  // S_3 on 3 points from two transpositions.
  Perm a{1, 0, 2}, b{0, 2, 1};
  auto g = close_perm_group({a, b}, 1000);
  CHECK(g.size() == 6);
  CHECK_THROWS_AS(close_perm_group({a, b}, 3), CapError);
}

TEST_CASE("radical decisions") {
  auto t = build_group(Family::g2, 2);
  Subgroup s = whole_group(*t);
  // S itself is S-radical (Out_S(S) trivial).
  auto rs = is_s_radical(*t, s);
  CHECK(rs.radical == Verdict::yes);

  // Q2 = C_S(Z2(S)) interpretation: the unipotent radical root product.
  auto rq2 = is_s_radical(*t, q2_of(*t));
  CHECK(rq2.radical == Verdict::yes);
  auto rq1 = is_s_radical(*t, q1_of(*t));
  CHECK(rq1.radical == Verdict::yes);

  // Maximal elementary abelians of order 8 are radical (fast path).
  for (const auto& a : maximal_elementary_abelians(s)) {
    auto r = is_s_radical(*t, a);
    CHECK(r.radical == Verdict::yes);
  }

  // Q1 meet Q2 is not radical.
  Bitset inter = q1_of(*t).elems;
  inter &= q2_of(*t).elems;
  auto rint = is_s_radical(*t, from_elements(*t, inter, "Q1&Q2"));
  CHECK(rint.radical == Verdict::no);
}

TEST_CASE("prune fast path agrees with the full decision on g2(2) centric subgroups") {
  auto t = build_group(Family::g2, 2);
  Subgroup s = whole_group(*t);
  // Differential test over every subgroup generated by up to 2 elements plus
  // the named ones (the full subgroup sweep lives in the enumeration tests).
  std::set<std::vector<std::uint64_t>> seen;
  std::vector<Subgroup> sample;
  for (std::uint32_t a = 1; a < t->order(); a += 3)
    for (std::uint32_t b = a + 1; b < t->order(); b += 7) {
      Subgroup h = closure(*t, {a, b});
      if (seen.insert(h.elems.words()).second) sample.push_back(h);
    }
  for (const auto& h : sample) {
    auto with_prune = is_s_radical(*t, h, {}, true);
    auto without = is_s_radical(*t, h, {}, false);
    REQUIRE(with_prune.radical == without.radical);
  }
}
