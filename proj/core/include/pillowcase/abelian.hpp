#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pillowcase/rational.hpp"

namespace pillowcase {

/// Element of a finite abelian group in invariant-factor coordinates.
using GroupElement = std::vector<long long>;

/// Finite abelian group in canonical form: invariant factors m1 | m2 | ... | mk,
/// each > 1; the trivial group is the empty list. Elements are coordinate
/// vectors with coords[i] in [0, m_i); reduction is canonical, so equality of
/// elements is coordinate equality.
class AbelianGroup {
 public:
  AbelianGroup() = default;
  explicit AbelianGroup(std::vector<long long> invariant_factors);

  const std::vector<long long>& moduli() const { return moduli_; }
  std::size_t rank() const { return moduli_.size(); }
  long long order() const { return order_; }
  long long exponent() const { return moduli_.empty() ? 1 : moduli_.back(); }
  bool is_trivial() const { return moduli_.empty(); }

  GroupElement zero() const { return GroupElement(rank(), 0); }
  GroupElement reduce(GroupElement x) const;
  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement sub(const GroupElement& a, const GroupElement& b) const;
  GroupElement neg(const GroupElement& a) const;
  GroupElement scalar_mul(long long n, const GroupElement& a) const;
  bool is_zero(const GroupElement& a) const;

  /// Standard generator e_i (order moduli()[i]).
  GroupElement generator(std::size_t i) const;

  /// Mixed-radix index of an element / inverse; fixes the enumeration order.
  long long index_of(const GroupElement& a) const;
  GroupElement element_at(long long index) const;
  std::vector<GroupElement> elements() const;

  std::string element_str(const GroupElement& a) const;

  bool operator==(const AbelianGroup& o) const { return moduli_ == o.moduli_; }

 private:
  std::vector<long long> moduli_;
  long long order_ = 1;
};

/// Smallest n >= 1 with n*x = 0.
long long element_order(const AbelianGroup& G, const GroupElement& x);

/// True iff the given elements generate G (checked by exact subgroup order).
bool generates(const AbelianGroup& G, const std::vector<GroupElement>& gens);

/// Character of G: homomorphism G -> Q/Z given by dual coordinates a_i in
/// [0, m_i); value at g is sum a_i g_i / m_i mod 1.
struct Character {
  std::vector<long long> dual;

  Turn value(const AbelianGroup& G, const GroupElement& g) const;
  bool is_trivial() const;
  Character conj(const AbelianGroup& G) const;
  bool operator==(const Character& o) const { return dual == o.dual; }
  std::string str() const;
};

/// All |G| characters, dual coordinates in mixed-radix order; the first is trivial.
std::vector<Character> enumerate_characters(const AbelianGroup& G);

/// Automorphism of G, stored as the images of the standard generators.
struct GroupAutomorphism {
  std::vector<GroupElement> images;  // images[i] = psi(e_i)

  GroupElement apply(const AbelianGroup& G, const GroupElement& x) const;
  GroupAutomorphism compose(const AbelianGroup& G, const GroupAutomorphism& inner) const;
  GroupAutomorphism inverse(const AbelianGroup& G) const;
  bool is_identity(const AbelianGroup& G) const;
  bool operator==(const GroupAutomorphism& o) const { return images == o.images; }
  std::string str(const AbelianGroup& G) const;
};

/// All automorphisms of G. Refuses (CapabilityError) when |G| > bound; the
/// Remark-2 sufficient tests cover the large cases.
std::vector<GroupAutomorphism> enumerate_automorphisms(const AbelianGroup& G,
                                                       long long bound = 64);

/// Character precomposed with an automorphism: g -> chi(psi(g)).
Character compose_with_automorphism(const AbelianGroup& G, const Character& chi,
                                    const GroupAutomorphism& psi);

struct CanonicalSubgroup {
  AbelianGroup group;
  std::vector<GroupElement> generators;  // inputs recoordinatized
};

/// Subgroup of prod Z/ambient_moduli[i] generated by the given vectors, in
/// invariant-factor form, together with the generators rewritten in the new
/// coordinates. Smith normal form over the ambient relations.
CanonicalSubgroup canonicalize_subgroup(const std::vector<long long>& ambient_moduli,
                                        const std::vector<std::vector<long long>>& generators);

/// Branch data: four deck-group elements with zero sum that generate G.
struct BranchTuple {
  std::array<GroupElement, 4> g;

  const GroupElement& operator[](std::size_t i) const { return g[i]; }
  GroupElement& operator[](std::size_t i) { return g[i]; }
  bool operator==(const BranchTuple& o) const { return g == o.g; }
  std::string str(const AbelianGroup& G) const;
  /// Throws InvalidInput when the sum is nonzero or the tuple does not generate.
  void validate(const AbelianGroup& G) const;
  std::vector<Turn> turns(const AbelianGroup& G, const Character& chi) const;
};

/// The unique character with chi(g_j) = turns[j], if the turns are consistent
/// with the relations among the g_j; otherwise throws InvalidInput naming a
/// violated relation.
Character character_from_turns(const AbelianGroup& G, const BranchTuple& tuple,
                               const std::array<Turn, 4>& turns);

/// The tangent character (value -1 on every g_j) when it exists.
std::optional<Character> tangent_character(const AbelianGroup& G, const BranchTuple& tuple);

}  // namespace pillowcase
