#include "sylow/field.hpp"

#include <algorithm>
#include <stdexcept>

namespace sylow {

namespace {

// Polynomial helpers over GF(p), coefficient lists low degree first.

void trim(std::vector<int>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::vector<int> poly_mul(const std::vector<int>& a, const std::vector<int>& b, int p) {
  if (a.empty() || b.empty()) return {};
  std::vector<int> r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  trim(r);
  return r;
}

// Remainder of a by a monic divisor m. After trim the leading coefficient of
// a is nonzero, so each round strictly lowers the degree.
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& m, int p) {
  trim(a);
  const int dm = static_cast<int>(m.size()) - 1;
  while (!a.empty() && static_cast<int>(a.size()) - 1 >= dm) {
    int da = static_cast<int>(a.size()) - 1;
    int c = a[da];
    for (int i = 0; i <= dm; ++i) {
      int k = da - dm + i;
      a[k] = ((a[k] - c * m[i]) % p + p) % p;
    }
    trim(a);
  }
  return a;
}

std::vector<int> digits(std::uint64_t k, int p, int len) {
  std::vector<int> d(len);
  for (int i = 0; i < len; ++i) {
    d[i] = static_cast<int>(k % p);
    k /= p;
  }
  return d;
}

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

} // namespace

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

bool is_irreducible(const std::vector<int>& poly, int p) {
  const int n = static_cast<int>(poly.size()) - 1;
  if (n < 1 || poly[n] != 1) return false;
  if (n == 1) return true;
  // Trial division by every monic polynomial of degree 1..n/2.
  for (int d = 1; 2 * d <= n; ++d) {
    std::uint64_t count = ipow(p, d);
    for (std::uint64_t k = 0; k < count; ++k) {
      std::vector<int> g = digits(k, p, d);
      g.push_back(1);
      if (poly_mod(poly, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<int> default_modulus(int p, int n) {
  if (!is_prime(p) || n < 1)
    throw ConfigError("default_modulus: p must be prime and n positive");
  if (n == 1) return {0, 1};
  std::uint64_t q = ipow(p, n);
  if (q > kMaxFieldOrder)
    throw ConfigError("default_modulus: no built-in modulus for p^n = " + std::to_string(q) +
                      "; supply one explicitly");
  // Lexicographically least monic irreducible: scan constant-first digit strings.
  for (std::uint64_t k = 0; k < q; ++k) {
    std::vector<int> cand = digits(k, p, n);
    cand.push_back(1);
    if (is_irreducible(cand, p)) return cand;
  }
  throw ConfigError("default_modulus: search failed"); // unreachable for prime p
}

Field::Field(int p, int n, std::vector<int> modulus)
    : p_(p), n_(n), modulus_(std::move(modulus)) {
  if (!is_prime(p_)) throw ConfigError("Field: p is not prime");
  if (n_ < 1) throw ConfigError("Field: n must be positive");
  if (static_cast<int>(modulus_.size()) != n_ + 1 || modulus_[n_] != 1)
    throw ConfigError("Field: modulus must be monic of degree n");
  for (int& c : modulus_) c = ((c % p_) + p_) % p_;
  if (!is_irreducible(modulus_, p_))
    throw ConfigError("Field: modulus is reducible over GF(p)");
  std::uint64_t q64 = ipow(p_, n_);
  if (q64 > 0xffff) throw ConfigError("Field: p^n too large");
  q_ = static_cast<std::uint32_t>(q64);

  std::vector<std::vector<int>> polys(q_);
  for (std::uint32_t i = 0; i < q_; ++i) {
    polys[i] = digits(i, p_, n_);
    trim(polys[i]);
  }
  auto encode = [&](const std::vector<int>& a) {
    std::uint32_t idx = 0;
    for (std::size_t i = a.size(); i-- > 0;) idx = idx * p_ + a[i];
    return static_cast<felt>(idx);
  };

  add_.resize(std::size_t(q_) * q_);
  mul_.resize(std::size_t(q_) * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  for (std::uint32_t i = 0; i < q_; ++i) {
    std::vector<int> m(n_, 0);
    for (std::size_t k = 0; k < polys[i].size(); ++k) m[k] = (p_ - polys[i][k]) % p_;
    trim(m);
    neg_[i] = encode(m);
    for (std::uint32_t j = 0; j < q_; ++j) {
      std::vector<int> s(n_, 0);
      for (int k = 0; k < n_; ++k) {
        int ai = k < static_cast<int>(polys[i].size()) ? polys[i][k] : 0;
        int bi = k < static_cast<int>(polys[j].size()) ? polys[j][k] : 0;
        s[k] = (ai + bi) % p_;
      }
      trim(s);
      add_[std::size_t(i) * q_ + j] = encode(s);
      mul_[std::size_t(i) * q_ + j] = encode(poly_mod(poly_mul(polys[i], polys[j], p_), modulus_, p_));
    }
  }
  for (std::uint32_t i = 1; i < q_; ++i)
    for (std::uint32_t j = 1; j < q_; ++j)
      if (mul(static_cast<felt>(i), static_cast<felt>(j)) == 1) {
        inv_[i] = static_cast<felt>(j);
        break;
      }
}

felt Field::inv(felt a) const {
  if (a == 0) throw std::domain_error("Field::inv: zero has no inverse");
  return inv_[a];
}

felt Field::pow(felt a, long long k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  felt r = 1, b = a;
  while (k) {
    if (k & 1) r = mul(r, b);
    b = mul(b, b);
    k >>= 1;
  }
  return r;
}

felt Field::scalar(long long c) const {
  long long r = c % p_;
  if (r < 0) r += p_;
  return static_cast<felt>(r);
}

int Field::coeff(felt a, int i) const {
  std::uint32_t v = a;
  for (int k = 0; k < i; ++k) v /= p_;
  return static_cast<int>(v % p_);
}

FieldPtr make_field(int p, int n, const std::vector<int>* modulus) {
  if (modulus) return std::make_shared<Field>(p, n, *modulus);
  return std::make_shared<Field>(p, n, default_modulus(p, n));
}

QuadExt::QuadExt(FieldPtr base, FieldPtr ext) : base_(std::move(base)), ext_(std::move(ext)) {
  const Field& K = *base_;
  const Field& L = *ext_;
  if (L.p() != K.p() || L.n() != 2 * K.n())
    throw ConfigError("QuadExt: extension must have degree 2 over the base");

  // Least root of the base modulus inside L gives the embedding.
  felt root = 0;
  bool found = false;
  for (std::uint32_t x = 0; x < L.q() && !found; ++x) {
    felt acc = 0, xp = 1;
    for (std::size_t i = 0; i < K.modulus().size(); ++i) {
      acc = L.add(acc, L.mul(L.scalar(K.modulus()[i]), xp));
      xp = L.mul(xp, static_cast<felt>(x));
    }
    if (acc == 0) {
      root = static_cast<felt>(x);
      found = true;
    }
  }
  if (!found) throw ConfigError("QuadExt: base modulus has no root in the extension");

  embed_.resize(K.q());
  pull_.assign(L.q(), kNone);
  for (std::uint32_t a = 0; a < K.q(); ++a) {
    felt acc = 0, rp = 1;
    for (int i = 0; i < K.n(); ++i) {
      acc = L.add(acc, L.mul(L.scalar(K.coeff(static_cast<felt>(a), i)), rp));
      rp = L.mul(rp, root);
    }
    embed_[a] = acc;
    pull_[acc] = static_cast<felt>(a);
  }

  frob_.resize(L.q());
  trace_.resize(L.q());
  norm_.resize(L.q());
  for (std::uint32_t x = 0; x < L.q(); ++x) {
    felt fx = L.pow(static_cast<felt>(x), K.q());
    frob_[x] = fx;
    felt tr = L.add(static_cast<felt>(x), fx);
    felt nm = L.mul(static_cast<felt>(x), fx);
    if (pull_[tr] == kNone || pull_[nm] == kNone)
      throw ConfigError("QuadExt: trace/norm left the subfield (embedding is broken)");
    trace_[x] = pull_[tr];
    norm_[x] = pull_[nm];
  }
}

felt QuadExt::pull(felt x) const {
  if (pull_[x] == kNone) throw std::domain_error("QuadExt::pull: element is not in the subfield");
  return pull_[x];
}

Fq fq(const Field& f, felt v) {
  if (v >= f.q()) throw UsageError("fq: element index out of range");
  return Fq{&f, v};
}

static void check_same(Fq a, Fq b) {
  if (a.field != b.field) throw UsageError("field arithmetic on mismatched fields");
}

Fq add(Fq a, Fq b) {
  check_same(a, b);
  return Fq{a.field, a.field->add(a.v, b.v)};
}
Fq neg(Fq a) { return Fq{a.field, a.field->neg(a.v)}; }
Fq mul(Fq a, Fq b) {
  check_same(a, b);
  return Fq{a.field, a.field->mul(a.v, b.v)};
}
Fq inv(Fq a) { return Fq{a.field, a.field->inv(a.v)}; }
Fq pow(Fq a, long long k) { return Fq{a.field, a.field->pow(a.v, k)}; }

} // namespace sylow
