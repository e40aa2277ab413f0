#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sylow/common.hpp"
#include "sylow/group.hpp"

namespace sylow {

// A subgroup of the enumerated ambient group: generator indices plus the
// closed element-index set. Immutable once built.
struct Subgroup {
  const GroupTable* amb = nullptr;
  Bitset elems;
  std::vector<std::uint32_t> gens;
  std::string recipe; // construction tag, automorphism-invariant where claimed

  std::size_t order() const { return elems.count(); }
  bool contains(std::uint32_t x) const { return elems.test(x); }
  bool operator==(const Subgroup& o) const { return elems == o.elems; }
  bool subset_of(const Subgroup& o) const { return elems.subset_of(o.elems); }
  std::vector<std::uint32_t> element_list() const;
};

Subgroup trivial_subgroup(const GroupTable& t);
Subgroup whole_group(const GroupTable& t);
Subgroup closure(const GroupTable& t, const std::vector<std::uint32_t>& gens,
                 std::string recipe = "");
// Extends a closed set by extra elements (incremental closure).
Subgroup extend_closure(const Subgroup& h, const std::vector<std::uint32_t>& extra);
// All q parameter values of one root subgroup, as generators.
std::vector<std::uint32_t> root_subgroup_gens(const GroupTable& t, int root);
Subgroup root_subgroup_product(const GroupTable& t, const std::vector<int>& roots,
                               std::string recipe = "");
// Deterministic small generating set for a subgroup given by its element set.
std::vector<std::uint32_t> extract_generators(const GroupTable& t, const Bitset& elems);
Subgroup from_elements(const GroupTable& t, Bitset elems, std::string recipe = "");

bool is_subgroup_closed(const Subgroup& h); // debug validation
Subgroup conjugate_subgroup(const Subgroup& h, std::uint32_t g);

// Centralizers / normalizers inside the ambient group.
Subgroup centralizer_of_element(const GroupTable& t, std::uint32_t x);
Subgroup centralizer(const GroupTable& t, const Subgroup& h);
Subgroup normalizer(const GroupTable& t, const Subgroup& h);
// Same, computed inside a subgroup k.
Subgroup centralizer_in(const Subgroup& k, std::uint32_t x);
Subgroup center(const Subgroup& h);

// Elements g of `within` such that [g, h] lands in `modulo` for all h in H;
// this is the elementwise centralizer of H modulo a normal subgroup and
// realizes quotient centralizers such as C_S(Z3/Z1) without coset objects.
Subgroup quotient_centralizer(const GroupTable& t, const Subgroup& within, const Subgroup& h,
                              const Subgroup& modulo);

// Exact commutator subgroup [A, B] (normal closure of elementwise commutators).
Subgroup commutator_subgroup(const GroupTable& t, const Subgroup& a, const Subgroup& b);

std::vector<Subgroup> upper_central_series(const Subgroup& h);  // Z1 < Z2 < ... = H
std::vector<Subgroup> lower_central_series(const Subgroup& h);  // H = g1 > g2 > ... = 1
std::vector<Subgroup> derived_series(const Subgroup& h);        // H > H' > ... = 1

Subgroup derived(const Subgroup& h);
Subgroup frattini(const Subgroup& h);
Subgroup omega(const Subgroup& h);  // generated by elements of order dividing p
Subgroup agemo(const Subgroup& h);  // generated by p-th powers

// All inclusion-maximal elementary abelian subgroups of H. Each contains
// Omega(Z(H)), which bounds the search.
std::vector<Subgroup> maximal_elementary_abelians(const Subgroup& h);
// Elementary abelians of maximal rank in H.
std::vector<Subgroup> max_rank_elementary_abelians(const Subgroup& h);
Subgroup thompson(const Subgroup& h);

// All index-p subgroups of H, as preimages of hyperplanes of H/Phi(H).
std::vector<Subgroup> maximal_subgroups(const Subgroup& h);

bool is_elementary_abelian(const Subgroup& h);
bool is_abelian(const Subgroup& h);
std::uint32_t subgroup_exponent(const Subgroup& h);

// S-centric test: C_S(E) <= E.
bool is_s_centric(const GroupTable& t, const Subgroup& e);

// A certificate that E is not S-radical: a chain of characteristic subgroups
// of E together with an element of N_S(E) \ E*C_S(E) centralizing every
// quotient of the chain.
struct PruneWitness {
  std::vector<Subgroup> chain; // {1} = chain[0] < ... < chain.back() = E
  std::uint32_t witness;
};
std::optional<PruneWitness> chain_centralizer_prune(const GroupTable& t, const Subgroup& e);

// Named subgroups of S used throughout.
Subgroup center_of_group(const GroupTable& t);
Subgroup q1_of(const GroupTable& t); // unipotent radical containing X_beta (g2) / X_alpha-side (su4)
Subgroup q2_of(const GroupTable& t);

std::string subgroup_json(const Subgroup& h);

} // namespace sylow
