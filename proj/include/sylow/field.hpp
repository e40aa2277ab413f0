#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "sylow/common.hpp"

namespace sylow {

using felt = std::uint16_t; // field element index, 0 = zero element

// Largest p^n for which a default modulus is searched.
inline constexpr std::uint32_t kMaxFieldOrder = 1024;

// Coefficient lists are low degree first. The degree-1 sentinel for a prime
// field is the polynomial x, i.e. {0, 1}.
std::vector<int> default_modulus(int p, int n);
bool is_prime(int p);
bool is_irreducible(const std::vector<int>& poly, int p);

// GF(p^n) in a polynomial basis over a monic irreducible modulus. Element
// indices are base-p digit strings of the coordinate vector, so index k has
// coordinates (k mod p, (k/p) mod p, ...). Index 0 is zero, index 1 is one and
// scalar c maps to index c. Immutable after construction; all ops are table
// lookups.
class Field {
public:
  Field(int p, int n, std::vector<int> modulus);
  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

  int p() const { return p_; }
  int n() const { return n_; }
  std::uint32_t q() const { return q_; }
  const std::vector<int>& modulus() const { return modulus_; }

  felt add(felt a, felt b) const { return add_[std::size_t(a) * q_ + b]; }
  felt mul(felt a, felt b) const { return mul_[std::size_t(a) * q_ + b]; }
  felt neg(felt a) const { return neg_[a]; }
  felt sub(felt a, felt b) const { return add(a, neg(b)); }
  felt inv(felt a) const;
  felt pow(felt a, long long k) const;
  felt scalar(long long c) const; // image of the integer c
  int coeff(felt a, int i) const; // i-th polynomial coordinate

  bool same(const Field& o) const { return this == &o; }

private:
  int p_, n_;
  std::uint32_t q_;
  std::vector<int> modulus_;
  std::vector<felt> add_, mul_, neg_, inv_;
};

using FieldPtr = std::shared_ptr<const Field>;

FieldPtr make_field(int p, int n, const std::vector<int>* modulus = nullptr);

// The quadratic extension GF(q^2) over GF(q), both realized over GF(p), with
// the subfield embedding, Frobenius t -> t^q, and trace / norm down to GF(q).
// The embedding sends the polynomial generator of the base field to its least
// indexed root in the extension, fixed once at construction.
class QuadExt {
public:
  QuadExt(FieldPtr base, FieldPtr ext);

  const Field& base() const { return *base_; }
  const Field& ext() const { return *ext_; }

  felt embed(felt a) const { return embed_[a]; }
  bool in_subfield(felt x) const { return pull_[x] != kNone; }
  felt pull(felt x) const; // inverse of embed; domain error off the subfield
  felt frobenius(felt x) const { return frob_[x]; }
  felt trace(felt x) const { return trace_[x]; } // value in the base field
  felt norm(felt x) const { return norm_[x]; }   // value in the base field

private:
  static constexpr felt kNone = 0xffff;
  FieldPtr base_, ext_;
  std::vector<felt> embed_, pull_, frob_, trace_, norm_;
};

// Value-semantic field element for the public arithmetic API. Operations on
// elements of different fields are usage errors.
struct Fq {
  const Field* field = nullptr;
  felt v = 0;

  friend bool operator==(const Fq&, const Fq&) = default;
};

Fq fq(const Field& f, felt v);
Fq add(Fq a, Fq b);
Fq neg(Fq a);
Fq mul(Fq a, Fq b);
Fq inv(Fq a);
Fq pow(Fq a, long long k);

} // namespace sylow
