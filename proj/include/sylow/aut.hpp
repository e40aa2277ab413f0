#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sylow/subgroup.hpp"

namespace sylow {

// A subgroup re-indexed as a standalone multiplication table, the working
// representation for automorphism computations. Index 0 is the identity.
struct LocalGroup {
  std::uint32_t m = 0;
  int p = 0;
  std::vector<std::uint32_t> to_amb;  // local index -> ambient index, ascending
  std::vector<std::uint16_t> mul;     // m * m
  std::vector<std::uint16_t> inv;
  std::vector<std::uint16_t> ord;

  std::uint16_t mul2(std::uint16_t a, std::uint16_t b) const { return mul[std::size_t(a) * m + b]; }
};

LocalGroup make_local(const Subgroup& h);

using Perm = std::vector<std::uint16_t>; // automorphism as a permutation of local indices

// Burnside basis: a generating set of size rank(Q / Phi(Q)).
std::vector<std::uint16_t> minimal_generating_set(const LocalGroup& g);

// Per-element automorphism-invariant fingerprints, iteratively refined.
std::vector<std::uint32_t> invariant_profiles(const LocalGroup& g);

struct AutGroup {
  std::vector<Perm> elements; // the full automorphism group
  std::uint64_t order = 0;
  bool complete = true;       // false when a cap was hit
  std::uint64_t nodes = 0;    // backtracking nodes visited
};

// Complete Aut(Q) by generator-image backtracking. Every returned map is
// verified as a bijective homomorphism on all pairs. Throws CapError when the
// node or order budget runs out.
AutGroup aut_group(const LocalGroup& g, const Caps& caps = {});

std::vector<Perm> inner_automorphisms(const LocalGroup& g);

// Dimino-style closure of a permutation set (used for generator-given groups).
std::vector<Perm> close_perm_group(const std::vector<Perm>& gens, std::uint64_t cap);

// An abstract finite group given by its element list and composition; used for
// Aut(Q) and for the quotient Out(Q) = Aut(Q)/Inn(Q).
struct PermGroupView {
  std::vector<Perm> elements;
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const; // indices into elements
  std::uint64_t inverse(std::uint64_t a) const;
  std::uint64_t id_index() const;
  std::uint64_t index_of(const Perm& p) const;
};

// Largest normal p-subgroup: a greedily grown Sylow p-subgroup intersected
// over all conjugates.
std::vector<std::uint64_t> p_core(const PermGroupView& g, int p);

enum class Verdict : std::uint8_t { yes, no, undecided };

struct RadicalResult {
  Verdict radical = Verdict::undecided;
  std::string certificate; // how the verdict was reached
  std::uint64_t aut_order = 0;
  std::optional<std::uint32_t> witness; // ambient element violating radicality
};

// Decides O_p(Out(E)) meet Out_S(E) = 1 for E <= S. Fast paths: trivial
// Out_S(E); elementary abelian E (O_p(GL_m(p)) = 1); a chain-centralizer
// witness. Otherwise computes Aut(E), Out(E) and the p-core literally.
RadicalResult is_s_radical(const GroupTable& t, const Subgroup& e, const Caps& caps = {},
                           bool allow_prune = true);

} // namespace sylow
