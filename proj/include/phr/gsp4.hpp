#pragma once

// GSp(4,q) with J = [[0, I], [-I, 0]] and g J g^t = sim(g) J, its standard
// parabolics, and the finite Levi models of the five standard parahorics.
//
// Levi models are matrix groups: GL(1)^3 as 3x3 diagonals, GL(2) x GL(1) as
// blockdiag(A, s), GL(1) x GSp(2) as blockdiag(t, B), and the paramodular
// model {(a, b) : det a = det b} as 4x4 blockdiag(a, b).

#include <optional>
#include <string>
#include <vector>

#include "phr/group.hpp"

namespace phr {

enum class ParahoricKind { B, P, Q, K, J };

std::string to_string(ParahoricKind k);
ParahoricKind parse_parahoric(const std::string& s);
const std::vector<ParahoricKind>& all_parahorics();

Mat symplectic_form();
// sim(g) if g J g^t is a multiple of J, otherwise nullopt.
std::optional<Elem> similitude(const Field& f, const Mat& g);

// A parabolic subgroup with unipotent radical and a surjection onto a Levi
// model whose kernel is the radical.
struct ParabolicDatum {
  std::string name;
  GroupPtr ambient;
  Subgroup parabolic;
  Subgroup radical;
  GroupPtr levi;
  Hom projection;  // parabolic.group -> levi

  std::size_t index() const { return ambient->order() / parabolic.group->order(); }
};

// Builds and checks: radical equals the kernel, projection is onto,
// |P| = |U| |L|.
ParabolicDatum build_parabolic(const GroupPtr& ambient, const std::function<bool(const Mat&)>& pred,
                               const std::vector<Mat>& radical_gens, const GroupPtr& levi,
                               const std::function<Mat(const Mat&)>& levi_map, std::string name);

enum class ParabolicKind { Borel, Siegel, Klingen };

struct Gsp4Models {
  FieldPtr field;
  GroupPtr gl1, gl2;
  GroupPtr gsp4;
  Hom sim;  // gsp4 -> gl1

  GroupPtr levi_b;  // GL(1)^3
  GroupPtr levi_p;  // GL(2) x GL(1)
  GroupPtr levi_q;  // GL(1) x GSp(2)
  GroupPtr j0;      // (GL(2)^2)^0

  ParabolicDatum borel, siegel, klingen;  // in GSp(4)
  ParabolicDatum j_klingen, j_borel;      // images of the Klingen and Iwahori parahorics in the J-model
  ParabolicDatum p_borel, q_borel;        // Borels of the Siegel and Klingen Levi models
  GroupPtr gl1sq;                         // GL(1)^2
  ParabolicDatum gl2_borel;               // upper triangular Borel of GL(2)

  Subgroup unipotent_b;   // U_B in GSp(4)
  Subgroup unipotent_j;   // pairs of upper unitriangular matrices in the J-model
  Subgroup unipotent_gl2; // upper unitriangular in GL(2)

  std::vector<Id> swap;  // (a, b) -> (b, a) on the J-model
  Hom j_first, j_second;  // (a, b) -> a, (a, b) -> b
  Hom j_det;              // (a, b) -> det a

  const ParabolicDatum& parabolic(ParabolicKind k) const;
  GroupPtr levi_model(ParahoricKind k) const;
  unsigned q() const { return field->order(); }
};

std::size_t gsp4_order(unsigned q);
GroupPtr build_gsp4(const FieldPtr& f, std::size_t cap = Group::kDefaultCap);
Gsp4Models build_models(unsigned q, std::size_t cap = Group::kDefaultCap);

// Element permutation of the J-model induced by (a, b) -> (b, a); checked to
// be an involutive automorphism.
std::vector<Id> paramodular_swap(const GroupPtr& j0);

}  // namespace phr
