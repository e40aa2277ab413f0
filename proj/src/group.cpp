#include "sylow/group.hpp"

#include <algorithm>
#include <cassert>
#include <cstring>
#include <fstream>
#include <random>
#include <thread>

#include "json.hpp"

namespace sylow {

std::string family_name(Family f) { return f == Family::g2 ? "g2" : "su4"; }

Family parse_family(const std::string& s) {
  if (s == "g2" || s == "G2") return Family::g2;
  if (s == "su4" || s == "SU4" || s == "psu4") return Family::su4;
  throw UsageError("unknown family '" + s + "' (expected g2 or su4)");
}

namespace {

// Root indices in collection order.
enum G2Root { g2_a = 0, g2_b, g2_ab, g2_2ab, g2_3ab, g2_3a2b };
enum Su4Root { su4_a = 0, su4_b, su4_ab, su4_2ab };

RootDatum make_g2_datum(bool alt) {
  RootDatum d;
  d.family = Family::g2;
  d.num_roots = 6;
  d.root_name = {"a", "b", "a+b", "2a+b", "3a+b", "3a+2b"};
  d.root_in_ext = {false, false, false, false, false, false};
  // Structure constants for [x_a(t), x_b(u)] etc.; the alt flag is the same
  // group with x_a(t) reparametrized as x_a(-t), which flips every constant
  // whose t-exponent is odd.
  auto s = [&](int c, int te) { return (alt && (te & 1)) ? -c : c; };
  using K = CommTerm::Kind;
  d.table[g2_a][g2_b] = {
      {g2_ab, K::monomial, s(-1, 1), 1, 1},
      {g2_2ab, K::monomial, s(-1, 2), 2, 1},
      {g2_3ab, K::monomial, s(1, 3), 3, 1},
      {g2_3a2b, K::monomial, s(-2, 3), 3, 2},
  };
  d.table[g2_a][g2_ab] = {
      {g2_2ab, K::monomial, s(-2, 1), 1, 1},
      {g2_3ab, K::monomial, s(3, 2), 2, 1},
      {g2_3a2b, K::monomial, s(3, 1), 1, 2},
  };
  d.table[g2_a][g2_2ab] = {{g2_3ab, K::monomial, s(3, 1), 1, 1}};
  d.table[g2_b][g2_3ab] = {{g2_3a2b, K::monomial, 1, 1, 1}};
  d.table[g2_ab][g2_2ab] = {{g2_3a2b, K::monomial, 3, 1, 1}};
  return d;
}

RootDatum make_su4_datum(const int signs[3]) {
  RootDatum d;
  d.family = Family::su4;
  d.num_roots = 4;
  d.root_name = {"a", "b", "a+b", "2a+b", nullptr, nullptr};
  d.root_in_ext = {true, false, true, false, false, false};
  using K = CommTerm::Kind;
  d.table[su4_a][su4_b] = {
      {su4_ab, K::monomial, signs[0], 1, 1},
      {su4_2ab, K::norm_tu, signs[1]},
  };
  d.table[su4_a][su4_ab] = {{su4_2ab, K::trace_herm, signs[2]}};
  return d;
}

struct Letter {
  std::uint8_t root;
  felt co;
};

constexpr int kWordCap = 192;

std::uint64_t ipow64(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

} // namespace

GroupTable::GroupTable(Family family, int p, int n, const BuildOptions& opt)
    : p_(p), n_(n), enum_cap_(opt.enum_cap), g2_alt_(opt.g2_alt_signs) {
  signs_[0] = opt.su4_signs[0];
  signs_[1] = opt.su4_signs[1];
  signs_[2] = opt.su4_signs[2];
  if (!is_prime(p_) || n_ < 1) throw ConfigError("GroupTable: q must be a prime power");
  std::uint64_t q64 = ipow64(p_, n_);
  if (q64 > kMaxFieldOrder) throw ConfigError("GroupTable: q out of supported range");
  q_ = static_cast<std::uint32_t>(q64);

  base_ = opt.modulus.empty() ? make_field(p_, n_) : make_field(p_, n_, &opt.modulus);

  if (family == Family::su4) {
    for (int s : signs_)
      if (s != 1 && s != -1) throw ConfigError("su4 signs must be +-1");
    if (signs_[1] != -signs_[0] * signs_[2])
      throw ConfigError("su4 signs are inconsistent: need epsilon' = -epsilon*epsilon''");
    ext_ = make_field(p_, 2 * n_);
    quad_ = std::make_unique<QuadExt>(base_, ext_);
    datum_ = make_su4_datum(signs_);
  } else {
    datum_ = make_g2_datum(g2_alt_);
  }

  order_ = 1;
  radix_prod_[0] = 1;
  for (int r = 0; r < datum_.num_roots; ++r) {
    radix_[r] = root_field(r).q();
    order_ *= radix_[r];
    radix_prod_[r + 1] = radix_prod_[r] * radix_[r];
  }
}

void GroupTable::require_enumerable() const {
  if (!enumerable())
    throw CapError("group of order " + std::to_string(order_) +
                   " exceeds the enumeration cap " + std::to_string(enum_cap_));
}

GroupElement GroupTable::root_element(int root, felt t) const {
  if (root < 0 || root >= datum_.num_roots) throw UsageError("root index out of range");
  if (t >= root_field(root).q())
    throw std::domain_error("parameter outside the root's field");
  GroupElement e;
  e.c[root] = t;
  return e;
}

void GroupTable::comm_word(int i, felt t, int j, felt u,
                           std::array<std::pair<int, felt>, 4>& out, int& len) const {
  len = 0;
  const auto& terms = datum_.table[i][j];
  for (const auto& tm : terms) {
    const Field& Ft = root_field(tm.target);
    felt v = 0;
    switch (tm.kind) {
      case CommTerm::monomial: {
        felt tv = t, uv = u;
        if (datum_.root_in_ext[tm.target]) {
          if (!datum_.root_in_ext[i]) tv = quad_->embed(tv);
          if (!datum_.root_in_ext[j]) uv = quad_->embed(uv);
        }
        v = Ft.mul(Ft.scalar(tm.c), Ft.mul(Ft.pow(tv, tm.te), Ft.pow(uv, tm.ue)));
        break;
      }
      case CommTerm::norm_tu:
        v = Ft.mul(Ft.scalar(tm.c), Ft.mul(quad_->norm(t), u));
        break;
      case CommTerm::trace_herm: {
        const Field& L = *ext_;
        v = Ft.mul(Ft.scalar(tm.c), quad_->trace(L.mul(t, quad_->frobenius(u))));
        break;
      }
    }
    if (v != 0) out[len++] = {tm.target, v};
  }
}

namespace {

struct Word {
  Letter w[kWordCap];
  int len = 0;

  void push(std::uint8_t root, felt co) {
    if (co == 0) return;
    assert(len < kWordCap);
    w[len++] = Letter{root, co};
  }
  void push_element(const GroupTable& t, const GroupElement& a) {
    for (int r = 0; r < t.num_roots(); ++r) push(static_cast<std::uint8_t>(r), a.c[r]);
  }
  void push_inverse(const GroupTable& t, const GroupElement& a) {
    for (int r = t.num_roots() - 1; r >= 0; --r)
      if (a.c[r] != 0) push(static_cast<std::uint8_t>(r), t.root_field(r).neg(a.c[r]));
  }
  void insert(int pos, const std::pair<int, felt>* letters, int count) {
    assert(len + count <= kWordCap);
    std::memmove(w + pos + count, w + pos, sizeof(Letter) * (len - pos));
    for (int k = 0; k < count; ++k)
      w[pos + k] = Letter{static_cast<std::uint8_t>(letters[k].first), letters[k].second};
    len += count;
  }
  void erase(int pos, int count) {
    std::memmove(w + pos, w + pos + count, sizeof(Letter) * (len - pos - count));
    len -= count;
  }
};

// Collection from the left: repeatedly fix the first out-of-order adjacent
// pair, inserting the commutator correction behind it. Corrections involve
// only strictly later roots, so the process terminates.
GroupElement collect(const GroupTable& t, Word& word) {
  int i = 0;
  long guard = 0;
  while (i + 1 < word.len) {
    if (++guard > 2'000'000) throw std::logic_error("collection failed to terminate");
    Letter& a = word.w[i];
    Letter& b = word.w[i + 1];
    if (a.root == b.root) {
      felt s = t.root_field(a.root).add(a.co, b.co);
      if (s == 0) {
        word.erase(i, 2);
      } else {
        a.co = s;
        word.erase(i + 1, 1);
      }
      if (i > 0) --i;
    } else if (a.root > b.root) {
      // x_A(ta) x_B(tb) = x_B(tb) x_A(ta) [x_A(ta), x_B(tb)], and the last
      // factor is the inverse of the tabulated [x_B(tb), x_A(ta)].
      std::array<std::pair<int, felt>, 4> cw;
      int cn = 0;
      t.comm_word(b.root, b.co, a.root, a.co, cw, cn);
      std::swap(word.w[i], word.w[i + 1]);
      if (cn > 0) {
        std::array<std::pair<int, felt>, 4> invw;
        for (int k = 0; k < cn; ++k) {
          auto [root, co] = cw[cn - 1 - k];
          invw[k] = {root, t.root_field(root).neg(co)};
        }
        word.insert(i + 2, invw.data(), cn);
      }
      if (i > 0) --i;
    } else {
      ++i;
    }
  }
  GroupElement out;
  for (int k = 0; k < word.len; ++k) out.c[word.w[k].root] = word.w[k].co;
  return out;
}

} // namespace

GroupElement GroupTable::mul(const GroupElement& a, const GroupElement& b) const {
  Word w;
  w.push_element(*this, a);
  w.push_element(*this, b);
  return collect(*this, w);
}

GroupElement GroupTable::inv(const GroupElement& a) const {
  Word w;
  w.push_inverse(*this, a);
  return collect(*this, w);
}

GroupElement GroupTable::comm(const GroupElement& a, const GroupElement& b) const {
  Word w;
  w.push_inverse(*this, a);
  w.push_inverse(*this, b);
  w.push_element(*this, a);
  w.push_element(*this, b);
  return collect(*this, w);
}

GroupElement GroupTable::conjugate(const GroupElement& a, const GroupElement& g) const {
  Word w;
  w.push_inverse(*this, g);
  w.push_element(*this, a);
  w.push_element(*this, g);
  return collect(*this, w);
}

GroupElement GroupTable::pow(const GroupElement& a, long long k) const {
  GroupElement base = a;
  if (k < 0) {
    base = inv(a);
    k = -k;
  }
  GroupElement r = identity();
  while (k) {
    if (k & 1) r = mul(r, base);
    base = mul(base, base);
    k >>= 1;
  }
  return r;
}

std::uint32_t GroupTable::element_order(const GroupElement& a) const {
  GroupElement x = a;
  std::uint32_t ord = 1;
  while (!(x == identity())) {
    x = pow(x, p_);
    ord *= p_;
    if (ord > 1u << 20) throw std::logic_error("element order overflow");
  }
  return ord;
}

std::uint64_t GroupTable::index_of(const GroupElement& a) const {
  std::uint64_t idx = 0;
  for (int r = 0; r < datum_.num_roots; ++r) idx += radix_prod_[r] * a.c[r];
  return idx;
}

GroupElement GroupTable::element_at(std::uint64_t idx) const {
  GroupElement e;
  for (int r = 0; r < datum_.num_roots; ++r) {
    e.c[r] = static_cast<felt>(idx % radix_[r]);
    idx /= radix_[r];
  }
  return e;
}

void GroupTable::ensure_tables() const {
  std::call_once(cache_once_, [this] {
    require_enumerable();
    const auto m = order_;
    inv_table_.resize(m);
    order_table_.resize(m);
    const bool with_mul = m <= kMulTableCap;
    if (with_mul) mul_table_.resize(m * m);
    for (std::uint64_t i = 0; i < m; ++i) {
      GroupElement a = element_at(i);
      inv_table_[i] = static_cast<std::uint32_t>(index_of(inv(a)));
      std::uint32_t ord = element_order(a);
      assert(ord < 256);
      order_table_[i] = static_cast<std::uint8_t>(ord);
      if (with_mul)
        for (std::uint64_t j = 0; j < m; ++j)
          mul_table_[i * m + j] = static_cast<std::uint32_t>(index_of(mul(a, element_at(j))));
    }
  });
}

std::uint32_t GroupTable::mul_idx(std::uint32_t a, std::uint32_t b) const {
  ensure_tables();
  if (!mul_table_.empty()) return mul_table_[std::uint64_t(a) * order_ + b];
  return static_cast<std::uint32_t>(index_of(mul(element_at(a), element_at(b))));
}

std::uint32_t GroupTable::inv_idx(std::uint32_t a) const {
  ensure_tables();
  return inv_table_[a];
}

std::uint32_t GroupTable::conj_idx(std::uint32_t a, std::uint32_t g) const {
  return mul_idx(mul_idx(inv_idx(g), a), g);
}

std::uint32_t GroupTable::comm_idx(std::uint32_t a, std::uint32_t b) const {
  return mul_idx(inv_idx(mul_idx(b, a)), mul_idx(a, b));
}

std::uint32_t GroupTable::order_of_idx(std::uint32_t a) const {
  ensure_tables();
  return order_table_[a];
}

std::uint32_t GroupTable::exponent() const {
  ensure_tables();
  std::uint8_t mx = 1;
  for (auto o : order_table_) mx = std::max(mx, o);
  return mx;
}

GroupPtr build_group(Family family, std::uint32_t q, const BuildOptions& opt) {
  if (q < 2) throw ConfigError("q must be at least 2");
  int p = 0;
  for (int d = 2; d <= static_cast<int>(q); ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  int n = 0;
  std::uint32_t m = q;
  while (m > 1) {
    if (m % p) throw ConfigError("q = " + std::to_string(q) + " is not a prime power");
    m /= p;
    ++n;
  }
  return std::make_shared<GroupTable>(family, p, n, opt);
}

// ---------------------------------------------------------------------------
// Matrix oracle

MatrixOracle::MatrixOracle(GroupPtr table) : t_(std::move(table)) {
  if (t_->family() != Family::su4)
    throw UsageError("matrix oracle is only available for the su4 family");
}

Mat4 MatrixOracle::identity() const {
  Mat4 m;
  for (int i = 0; i < 4; ++i) m.m[i * 4 + i] = 1;
  return m;
}

Mat4 MatrixOracle::of_root(int root, felt t) const {
  const Field& L = t_->ext();
  const QuadExt& Q = t_->quad();
  const int* s = t_->su4_signs();
  Mat4 m = identity();
  switch (root) {
    case su4_a:
      m.m[0 * 4 + 1] = t;
      m.m[2 * 4 + 3] = L.mul(L.scalar(s[1]), Q.frobenius(t));
      break;
    case su4_b:
      m.m[1 * 4 + 2] = Q.embed(t);
      break;
    case su4_ab:
      m.m[0 * 4 + 2] = L.mul(L.scalar(s[0]), t);
      m.m[1 * 4 + 3] = L.neg(L.mul(L.scalar(s[0] * s[1]), Q.frobenius(t)));
      break;
    case su4_2ab:
      m.m[0 * 4 + 3] = Q.embed(t);
      break;
    default:
      throw UsageError("bad su4 root");
  }
  return m;
}

Mat4 MatrixOracle::mul(const Mat4& a, const Mat4& b) const {
  const Field& L = t_->ext();
  Mat4 c;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      felt acc = 0;
      for (int k = 0; k < 4; ++k) acc = L.add(acc, L.mul(a.m[i * 4 + k], b.m[k * 4 + j]));
      c.m[i * 4 + j] = acc;
    }
  return c;
}

Mat4 MatrixOracle::of_element(const GroupElement& a) const {
  Mat4 m = identity();
  for (int r = 0; r < t_->num_roots(); ++r)
    if (a.c[r] != 0) m = mul(m, of_root(r, a.c[r]));
  return m;
}

MatrixOracle::Report MatrixOracle::check(std::uint64_t samples, std::uint64_t seed,
                                         int threads) const {
  Report rep;
  const std::uint64_t m = t_->order();
  rep.exhaustive = m * m <= std::max<std::uint64_t>(samples, 1'000'000);
  if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;

  if (rep.exhaustive) {
    std::vector<Mat4> mats(m);
    for (std::uint64_t i = 0; i < m; ++i) mats[i] = of_element(t_->element_at(i));
    std::vector<std::uint64_t> bad(threads, m * m);
    auto run = [&](int tid) {
      for (std::uint64_t a = tid; a < m; a += threads) {
        GroupElement ea = t_->element_at(a);
        for (std::uint64_t b = 0; b < m; ++b) {
          Mat4 prod = mul(mats[a], mats[b]);
          if (!(prod == mats[t_->index_of(t_->mul(ea, t_->element_at(b)))])) {
            bad[tid] = std::min(bad[tid], a * m + b);
            return;
          }
        }
      }
    };
    std::vector<std::thread> pool;
    for (int tid = 0; tid < threads; ++tid) pool.emplace_back(run, tid);
    for (auto& th : pool) th.join();
    rep.pairs_checked = m * m;
    std::uint64_t worst = *std::min_element(bad.begin(), bad.end());
    if (worst != m * m) {
      rep.pass = false;
      rep.witness_a = worst / m;
      rep.witness_b = worst % m;
    }
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> dist(0, m - 1);
    for (std::uint64_t k = 0; k < samples; ++k) {
      std::uint64_t a = dist(rng), b = dist(rng);
      GroupElement ea = t_->element_at(a), eb = t_->element_at(b);
      Mat4 prod = mul(of_element(ea), of_element(eb));
      if (!(prod == of_element(t_->mul(ea, eb)))) {
        rep.pass = false;
        rep.witness_a = a;
        rep.witness_b = b;
        break;
      }
      ++rep.pairs_checked;
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Cache serialization (little-endian, versioned)

namespace {

constexpr char kMagic[8] = {'S', 'Y', 'L', 'W', 'T', 'B', 'L', '1'};
constexpr std::uint32_t kVersion = 1;

void wr_bytes(std::ostream& os, const void* p, std::size_t n) {
  os.write(static_cast<const char*>(p), static_cast<std::streamsize>(n));
}
void wr_u64(std::ostream& os, std::uint64_t v) {
  unsigned char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
  wr_bytes(os, b, 8);
}
void wr_u32(std::ostream& os, std::uint32_t v) {
  unsigned char b[4];
  for (int i = 0; i < 4; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
  wr_bytes(os, b, 4);
}
void wr_i32(std::ostream& os, std::int32_t v) { wr_u32(os, static_cast<std::uint32_t>(v)); }

std::uint64_t rd_u64(std::istream& is) {
  unsigned char b[8];
  is.read(reinterpret_cast<char*>(b), 8);
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= std::uint64_t(b[i]) << (8 * i);
  return v;
}
std::uint32_t rd_u32(std::istream& is) {
  unsigned char b[4];
  is.read(reinterpret_cast<char*>(b), 4);
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= std::uint32_t(b[i]) << (8 * i);
  return v;
}
std::int32_t rd_i32(std::istream& is) { return static_cast<std::int32_t>(rd_u32(is)); }

} // namespace

void save_table(const GroupTable& t, const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw UsageError("cannot write cache file " + path);
  wr_bytes(os, kMagic, 8);
  wr_u32(os, kVersion);
  wr_u32(os, t.family() == Family::g2 ? 0 : 1);
  wr_u32(os, static_cast<std::uint32_t>(t.p()));
  wr_u32(os, static_cast<std::uint32_t>(t.n()));
  for (int k = 0; k < 3; ++k) wr_i32(os, t.su4_signs()[k]);
  wr_u32(os, t.g2_alt_signs() ? 1 : 0);
  const auto& mod = t.base().modulus();
  wr_u32(os, static_cast<std::uint32_t>(mod.size()));
  for (int c : mod) wr_i32(os, c);
  wr_u64(os, t.order());
  wr_u32(os, static_cast<std::uint32_t>(t.num_roots()));
  for (int i = 0; i < t.num_roots(); ++i)
    for (int j = i + 1; j < t.num_roots(); ++j) {
      const auto& terms = t.datum().table[i][j];
      wr_u32(os, static_cast<std::uint32_t>(terms.size()));
      for (const auto& tm : terms) {
        wr_u32(os, tm.target);
        wr_u32(os, static_cast<std::uint32_t>(tm.kind));
        wr_i32(os, tm.c);
        wr_u32(os, tm.te);
        wr_u32(os, tm.ue);
      }
    }
}

GroupPtr load_table(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw UsageError("cannot read cache file " + path);
  char magic[8];
  is.read(magic, 8);
  if (!is || std::memcmp(magic, kMagic, 8) != 0)
    throw ConfigError("cache file has wrong magic: " + path);
  if (rd_u32(is) != kVersion) throw ConfigError("cache file version mismatch: " + path);
  Family fam = rd_u32(is) == 0 ? Family::g2 : Family::su4;
  int p = static_cast<int>(rd_u32(is));
  int n = static_cast<int>(rd_u32(is));
  BuildOptions opt;
  for (int k = 0; k < 3; ++k) opt.su4_signs[k] = rd_i32(is);
  opt.g2_alt_signs = rd_u32(is) != 0;
  std::uint32_t mlen = rd_u32(is);
  opt.modulus.resize(mlen);
  for (auto& c : opt.modulus) c = rd_i32(is);
  std::uint64_t order = rd_u64(is);
  std::uint32_t nroots = rd_u32(is);

  auto table = std::make_shared<GroupTable>(fam, p, n, opt);
  if (table->order() != order || static_cast<std::uint32_t>(table->num_roots()) != nroots)
    throw ConfigError("cache file content mismatch: " + path);
  for (int i = 0; i < table->num_roots(); ++i)
    for (int j = i + 1; j < table->num_roots(); ++j) {
      const auto& terms = table->datum().table[i][j];
      if (rd_u32(is) != terms.size()) throw ConfigError("cache term count mismatch");
      for (const auto& tm : terms) {
        bool ok = rd_u32(is) == tm.target && rd_u32(is) == static_cast<std::uint32_t>(tm.kind) &&
                  rd_i32(is) == tm.c && rd_u32(is) == tm.te && rd_u32(is) == tm.ue;
        if (!ok) throw ConfigError("cache term mismatch");
      }
    }
  if (!is) throw ConfigError("cache file truncated: " + path);
  return table;
}

std::string table_cache_name(Family family, std::uint32_t q) {
  return "table-" + family_name(family) + "-q" + std::to_string(q) + ".bin";
}

std::string datum_json(const GroupTable& t) {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["family"] = family_name(t.family());
  j["q"] = t.q();
  j["p"] = t.p();
  j["n"] = t.n();
  j["order"] = t.order();
  j["modulus"] = t.base().modulus();
  if (t.family() == Family::su4) {
    j["ext_modulus"] = t.ext().modulus();
    j["signs"] = {t.su4_signs()[0], t.su4_signs()[1], t.su4_signs()[2]};
  }
  nlohmann::ordered_json roots = nlohmann::ordered_json::array();
  for (int r = 0; r < t.num_roots(); ++r) {
    nlohmann::ordered_json rr;
    rr["name"] = t.datum().root_name[r];
    rr["field_order"] = t.root_field(r).q();
    roots.push_back(rr);
  }
  j["roots"] = roots;
  nlohmann::ordered_json table = nlohmann::ordered_json::array();
  for (int i = 0; i < t.num_roots(); ++i)
    for (int jdx = i + 1; jdx < t.num_roots(); ++jdx) {
      for (const auto& tm : t.datum().table[i][jdx]) {
        nlohmann::ordered_json e;
        e["left"] = t.datum().root_name[i];
        e["right"] = t.datum().root_name[jdx];
        e["target"] = t.datum().root_name[tm.target];
        e["kind"] = tm.kind == CommTerm::monomial ? "monomial"
                    : tm.kind == CommTerm::norm_tu ? "norm_tu"
                                                   : "trace_herm";
        e["coeff"] = tm.c;
        if (tm.kind == CommTerm::monomial) {
          e["t_exp"] = tm.te;
          e["u_exp"] = tm.ue;
        }
        table.push_back(e);
      }
    }
  j["commutators"] = table;
  return j.dump(2);
}

} // namespace sylow
