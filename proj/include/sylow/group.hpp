#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "sylow/common.hpp"
#include "sylow/field.hpp"

namespace sylow {

enum class Family { g2, su4 };

std::string family_name(Family f);
Family parse_family(const std::string& s);

// Positive roots in collection order. Every commutator correction lands in a
// strictly later root, which is what makes collection terminate.
//   g2 : alpha, beta, alpha+beta, 2alpha+beta, 3alpha+beta, 3alpha+2beta
//   su4: alpha, beta, alpha+beta, 2alpha+beta
inline constexpr int kMaxRoots = 6;

struct CommTerm {
  enum Kind : std::uint8_t {
    monomial,   // c * t^te * u^ue, evaluated in the target root's field
    norm_tu,    // c * N(t) * u      (su4, GF(q) target)
    trace_herm, // c * Tr(t * u^q)   (su4, GF(q) target)
  };
  std::uint8_t target;
  Kind kind;
  int c;
  std::uint8_t te = 1, ue = 1;
};

struct RootDatum {
  Family family;
  int num_roots;
  std::array<const char*, kMaxRoots> root_name;
  std::array<bool, kMaxRoots> root_in_ext; // coordinate lives in GF(q^2)
  // table[i][j], i < j, is the word for [x_i(t), x_j(u)] in displayed order.
  std::array<std::array<std::vector<CommTerm>, kMaxRoots>, kMaxRoots> table;
};

struct GroupElement {
  std::array<felt, kMaxRoots> c{};
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

struct BuildOptions {
  std::vector<int> modulus;      // optional override for the GF(q) modulus
  int su4_signs[3] = {1, 1, -1}; // epsilon, epsilon', epsilon''; need e' = -e*e''
  bool g2_alt_signs = false;     // reparametrize x_alpha(t) -> x_alpha(-t)
  std::uint64_t enum_cap = 531441;
};

// One Sylow group family instance: field(s), instantiated commutator data and
// the mixed-radix indexing of normal forms. Immutable and shareable after
// construction; the enumeration caches are built lazily under a lock.
class GroupTable {
public:
  GroupTable(Family family, int p, int n, const BuildOptions& opt);

  Family family() const { return datum_.family; }
  int p() const { return p_; }
  int n() const { return n_; }
  std::uint32_t q() const { return q_; }
  std::uint64_t order() const { return order_; }
  int num_roots() const { return datum_.num_roots; }
  const RootDatum& datum() const { return datum_; }
  const Field& base() const { return *base_; }
  const Field& ext() const { return *ext_; }
  const QuadExt& quad() const { return *quad_; }
  const int* su4_signs() const { return signs_; }
  bool g2_alt_signs() const { return g2_alt_; }

  // The field a given root's coordinate ranges over.
  const Field& root_field(int r) const { return datum_.root_in_ext[r] ? *ext_ : *base_; }
  std::uint32_t radix(int r) const { return radix_[r]; }

  GroupElement identity() const { return GroupElement{}; }
  GroupElement root_element(int root, felt t) const;
  GroupElement mul(const GroupElement& a, const GroupElement& b) const;
  GroupElement inv(const GroupElement& a) const;
  GroupElement comm(const GroupElement& a, const GroupElement& b) const;
  GroupElement conjugate(const GroupElement& a, const GroupElement& g) const; // g^-1 a g
  GroupElement pow(const GroupElement& a, long long k) const;
  std::uint32_t element_order(const GroupElement& a) const;

  std::uint64_t index_of(const GroupElement& a) const;
  GroupElement element_at(std::uint64_t idx) const;

  bool enumerable() const { return order_ <= enum_cap_; }
  void require_enumerable() const;

  // Index-level ops (enumerable groups only; cached tables built on demand).
  std::uint32_t mul_idx(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv_idx(std::uint32_t a) const;
  std::uint32_t conj_idx(std::uint32_t a, std::uint32_t g) const;
  std::uint32_t comm_idx(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t order_of_idx(std::uint32_t a) const;

  // Exponent of the whole group (max element order; this is a p-group).
  std::uint32_t exponent() const;

  // Evaluates [x_i(t), x_j(u)] for i < j as (target, coefficient) letters.
  void comm_word(int i, felt t, int j, felt u,
                 std::array<std::pair<int, felt>, 4>& out, int& len) const;

private:
  void ensure_tables() const;

  int p_, n_;
  std::uint32_t q_;
  std::uint64_t order_;
  std::uint64_t enum_cap_;
  int signs_[3];
  bool g2_alt_;
  FieldPtr base_, ext_;
  std::unique_ptr<QuadExt> quad_;
  RootDatum datum_;
  std::array<std::uint32_t, kMaxRoots> radix_{};
  std::array<std::uint64_t, kMaxRoots + 1> radix_prod_{};

  mutable std::once_flag cache_once_;
  mutable std::vector<std::uint32_t> inv_table_;
  mutable std::vector<std::uint8_t> order_table_;
  mutable std::vector<std::uint32_t> mul_table_; // only when order <= kMulTableCap
  static constexpr std::uint64_t kMulTableCap = 1024;
};

using GroupPtr = std::shared_ptr<const GroupTable>;

GroupPtr build_group(Family family, std::uint32_t q, const BuildOptions& opt = {});

// 4x4 unitriangular matrices over GF(q^2) realizing the su4 root elements as
// products of elementary transvections; the independent oracle for collection.
struct Mat4 {
  std::array<felt, 16> m{};
  friend bool operator==(const Mat4&, const Mat4&) = default;
};

class MatrixOracle {
public:
  explicit MatrixOracle(GroupPtr table); // usage error for g2

  Mat4 identity() const;
  Mat4 of_root(int root, felt t) const;
  Mat4 of_element(const GroupElement& a) const;
  Mat4 mul(const Mat4& a, const Mat4& b) const;

  struct Report {
    std::uint64_t pairs_checked = 0;
    bool exhaustive = false;
    bool pass = true;
    std::uint64_t witness_a = 0, witness_b = 0;
  };
  // Compares oracle(a)*oracle(b) with oracle(mul(a,b)) over all pairs, or over
  // `samples` seeded pairs when the group is too large.
  Report check(std::uint64_t samples, std::uint64_t seed, int threads) const;

private:
  GroupPtr t_;
};

// Versioned cache of a built table (endianness-fixed little-endian integers).
void save_table(const GroupTable& t, const std::string& path);
GroupPtr load_table(const std::string& path);
std::string table_cache_name(Family family, std::uint32_t q);

// Root datum as JSON text (for documentation / dump).
std::string datum_json(const GroupTable& t);

} // namespace sylow
