#include "doctest.h"

#include <map>
#include <vector>

#include "sylow/field.hpp"

using namespace sylow;

namespace {

// Independent schoolbook oracle: multiply polynomial coordinate vectors and
// reduce by the modulus, without going through the Field tables.
felt naive_mul(const Field& f, felt a, felt b) {
  int p = f.p(), n = f.n();
  std::vector<int> prod(2 * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + f.coeff(a, i) * f.coeff(b, j)) % p;
  for (int d = 2 * n - 1; d >= n; --d) {
    int c = prod[d];
    if (!c) continue;
    for (int i = 0; i <= n; ++i) {
      int k = d - n + i;
      prod[k] = ((prod[k] - c * f.modulus()[i]) % p + p) % p;
    }
  }
  felt idx = 0;
  for (int i = n - 1; i >= 0; --i) idx = static_cast<felt>(idx * p + prod[i]);
  return idx;
}

const std::vector<std::pair<int, int>> kSupported = {
    {2, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 1}, {3, 2}, {3, 3},
    {3, 4}, {5, 1}, {5, 2},  {7, 1}, {7, 2},  {11, 1}, {11, 2}, {13, 1},
};

} // namespace

TEST_CASE("default moduli") {
  CHECK(default_modulus(2, 1) == std::vector<int>{0, 1});
  CHECK(default_modulus(2, 2) == std::vector<int>{1, 1, 1});
  // Lexicographically least degree-2 irreducible over GF(3) is x^2 + 1.
  CHECK(default_modulus(3, 2) == std::vector<int>{1, 0, 1});
  CHECK_THROWS_AS(default_modulus(4, 1), ConfigError);
  CHECK_THROWS_AS(default_modulus(2, 11), ConfigError);
}

TEST_CASE("field axioms, exhaustive over the supported table") {
  for (auto [p, n] : kSupported) {
    auto fp = make_field(p, n);
    const Field& f = *fp;
    std::uint32_t q = f.q();
    REQUIRE(q <= 169);
    for (std::uint32_t a = 0; a < q; ++a) {
      CHECK(f.add(static_cast<felt>(a), 0) == a);
      CHECK(f.mul(static_cast<felt>(a), 1) == a);
      CHECK(f.add(static_cast<felt>(a), f.neg(static_cast<felt>(a))) == 0);
      if (a) CHECK(f.mul(static_cast<felt>(a), f.inv(static_cast<felt>(a))) == 1);
      for (std::uint32_t b = 0; b < q; ++b) {
        CHECK(f.add(static_cast<felt>(a), static_cast<felt>(b)) ==
              f.add(static_cast<felt>(b), static_cast<felt>(a)));
        CHECK(f.mul(static_cast<felt>(a), static_cast<felt>(b)) ==
              naive_mul(f, static_cast<felt>(a), static_cast<felt>(b)));
        for (std::uint32_t c = 0; c < q; c += (q > 32 ? 7 : 1)) {
          CHECK(f.mul(f.mul(static_cast<felt>(a), static_cast<felt>(b)), static_cast<felt>(c)) ==
                f.mul(static_cast<felt>(a), f.mul(static_cast<felt>(b), static_cast<felt>(c))));
          CHECK(f.mul(f.add(static_cast<felt>(a), static_cast<felt>(b)), static_cast<felt>(c)) ==
                f.add(f.mul(static_cast<felt>(a), static_cast<felt>(c)),
                      f.mul(static_cast<felt>(b), static_cast<felt>(c))));
        }
      }
    }
  }
}

TEST_CASE("GF(4) multiplication matches the frozen value") {
  auto f = make_field(2, 2);
  // w has index 2, w+1 index 3; w*w = w+1 under modulus w^2+w+1.
  CHECK(f->mul(2, 2) == 3);
  CHECK(f->inv(1) == 1);
}

TEST_CASE("errors: inv(0), mismatched fields, bad modulus") {
  auto f = make_field(2, 2);
  auto g = make_field(3, 1);
  CHECK_THROWS_AS(f->inv(0), std::domain_error);
  CHECK_THROWS_AS(add(fq(*f, 1), fq(*g, 1)), UsageError);
  std::vector<int> reducible{1, 0, 1}; // x^2+1 = (x+1)^2 over GF(2)
  CHECK_THROWS_AS(make_field(2, 2, &reducible), ConfigError);
}

TEST_CASE("quadratic extension: frobenius, trace, norm") {
  for (int pn : {2, 3, 4, 5, 7, 8, 9}) {
    int p = pn, n = 1;
    if (pn == 4) p = 2, n = 2;
    if (pn == 8) p = 2, n = 3;
    if (pn == 9) p = 3, n = 2;
    auto K = make_field(p, n);
    auto L = make_field(p, 2 * n);
    QuadExt ext(K, L);
    std::uint32_t q = K->q(), qq = L->q();

    // Embedding is a ring monomorphism.
    std::map<felt, felt> seen;
    for (std::uint32_t a = 0; a < q; ++a) {
      CHECK(!seen.count(ext.embed(static_cast<felt>(a))));
      seen[ext.embed(static_cast<felt>(a))] = static_cast<felt>(a);
      for (std::uint32_t b = 0; b < q; ++b) {
        CHECK(ext.embed(K->add(static_cast<felt>(a), static_cast<felt>(b))) ==
              L->add(ext.embed(static_cast<felt>(a)), ext.embed(static_cast<felt>(b))));
        CHECK(ext.embed(K->mul(static_cast<felt>(a), static_cast<felt>(b))) ==
              L->mul(ext.embed(static_cast<felt>(a)), ext.embed(static_cast<felt>(b))));
      }
    }
    CHECK(ext.embed(1) == 1);

    int fixed = 0;
    for (std::uint32_t x = 0; x < qq; ++x) {
      felt fx = ext.frobenius(static_cast<felt>(x));
      // Repeated squaring oracle for x^q.
      felt want = 1;
      for (std::uint32_t k = 0; k < q; ++k) want = L->mul(want, static_cast<felt>(x));
      CHECK(fx == want);
      CHECK(ext.frobenius(fx) == x);
      if (fx == x) {
        ++fixed;
        CHECK(ext.in_subfield(static_cast<felt>(x)));
      } else {
        CHECK(!ext.in_subfield(static_cast<felt>(x)));
      }
      // Automorphism property.
      for (std::uint32_t y = 0; y < qq; y += (qq > 32 ? 5 : 1))
        CHECK(ext.frobenius(L->mul(static_cast<felt>(x), static_cast<felt>(y))) ==
              L->mul(fx, ext.frobenius(static_cast<felt>(y))));
    }
    CHECK(fixed == static_cast<int>(q));

    // Trace additive and surjective, norm multiplicative and surjective.
    std::vector<bool> tr_hit(q, false), nm_hit(q, false);
    for (std::uint32_t x = 0; x < qq; ++x) {
      tr_hit[ext.trace(static_cast<felt>(x))] = true;
      if (x) nm_hit[ext.norm(static_cast<felt>(x))] = true;
      for (std::uint32_t y = 0; y < qq; y += (qq > 32 ? 5 : 1)) {
        CHECK(ext.trace(L->add(static_cast<felt>(x), static_cast<felt>(y))) ==
              K->add(ext.trace(static_cast<felt>(x)), ext.trace(static_cast<felt>(y))));
        CHECK(ext.norm(L->mul(static_cast<felt>(x), static_cast<felt>(y))) ==
              K->mul(ext.norm(static_cast<felt>(x)), ext.norm(static_cast<felt>(y))));
      }
    }
    for (std::uint32_t a = 0; a < q; ++a) {
      CHECK(tr_hit[a]);
      if (a) CHECK(nm_hit[a]);
    }
  }
}

TEST_CASE("GF(4) over GF(2): frozen trace/norm values") {
  auto K = make_field(2, 1);
  auto L = make_field(2, 2);
  QuadExt ext(K, L);
  // w = index 2: w + w^2 = 1 and w * w^2 = w^3 = 1.
  CHECK(ext.trace(0) == 0);
  CHECK(ext.norm(1) == 1);
  CHECK(ext.trace(2) == 1);
  CHECK(ext.norm(2) == 1);
  CHECK(ext.frobenius(2) == 3); // w^2 = w + 1
}
