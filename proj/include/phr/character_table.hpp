#pragma once

// Irreducible characters by the Dixon-Schneider method, decomposition into
// irreducibles, central characters, and induction from enumerated subgroups.

#include <vector>

#include "phr/class_function.hpp"
#include "phr/field.hpp"

namespace phr {

struct CharacterTable {
  GroupPtr group;
  Modulus mod;
  std::vector<ClassFunction> irr;  // sorted by degree, then by residue vector
  std::vector<std::int64_t> degrees;

  std::size_t size() const { return irr.size(); }
  // Multiplicities <f, chi_i>.  Throws ComputationError if they fail to
  // reproduce f.
  std::vector<std::int64_t> decompose(const ClassFunction& f) const;
  // As decompose, but also requires a genuine character: nonnegative
  // multiplicities with sum m_i deg_i = deg f.
  std::vector<std::int64_t> decompose_character(const ClassFunction& f) const;
  ClassFunction compose(const std::vector<std::int64_t>& mult) const;
  // Index of an irreducible equal to f, or -1.
  long index_of(const ClassFunction& f) const;
};

CharacterTable dixon_table(const GroupPtr& g, const Modulus& m);

// Values omega(z) = chi(z)/chi(1) on the central classes (classes of size 1),
// as (class id, residue) pairs.  Throws DomainError unless <chi,chi> = 1.
std::vector<std::pair<Id, std::uint32_t>> central_character(const ClassFunction& chi);

// Ind_H^G of a function on H given per element of H (not necessarily a class
// function of H, e.g. a linear character of a unipotent subgroup).
ClassFunction induce_from_subgroup(const Subgroup& h, const Modulus& m, const std::vector<std::uint32_t>& per_element);
// Restriction of a class function of G to the elements of H, per element.
std::vector<std::uint32_t> restrict_to_subgroup(const Subgroup& h, const ClassFunction& f);

// Linear character of H given per element; checked to be a homomorphism into
// the roots of unity (exhaustively over all pairs).
void check_linear_character(const Subgroup& h, const Modulus& m, const std::vector<std::uint32_t>& per_element);

// <chi, Ind_U^G psi>, with Ind_U^G psi precomputed.
std::int64_t whittaker_multiplicity(const ClassFunction& gelfand_graev, const ClassFunction& chi);

// Character value tables for MultChar / AdditiveChar exponents.
std::uint32_t mult_char_value(const Modulus& m, const MultChar& chi, Elem x);
std::uint32_t add_char_value(const Modulus& m, const AdditiveChar& psi, Elem x);

}  // namespace phr
