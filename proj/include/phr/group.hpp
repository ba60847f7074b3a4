#pragma once

// Fully enumerated matrix groups: BFS closure from generators, key -> id
// index, conjugacy classes, subgroups, homomorphisms and the det fiber product.

#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "phr/field.hpp"
#include "phr/flat_index.hpp"
#include "phr/mat.hpp"

namespace phr {

using Id = std::uint32_t;
constexpr Id kNoId = FlatIndex::kMissing;

struct ConjClasses {
  std::vector<Id> class_of;            // element id -> class id
  std::vector<Id> reps;                // minimal element id of each class
  std::vector<std::uint64_t> sizes;
  std::vector<std::uint64_t> centralizer;
  std::vector<Id> inverse;             // class of x^-1
  std::vector<unsigned> orders;        // element order of the representatives

  std::size_t count() const { return reps.size(); }
};

class Group;
using GroupPtr = std::shared_ptr<const Group>;

class Group {
 public:
  static constexpr std::size_t kDefaultCap = 20'000'000;

  // Closure of `gens`.  `projected` (if nonzero) is the known order, checked
  // against `cap` before any work and against the result afterwards.
  static GroupPtr generate(FieldPtr field, unsigned dim, const std::vector<Mat>& gens, std::string name,
                           std::size_t projected = 0, std::size_t cap = kDefaultCap);
  // The group whose element set is exactly `elems`; rejects non-closed sets.
  static GroupPtr from_elements(FieldPtr field, unsigned dim, const std::vector<Mat>& elems,
                                std::string name);

  const std::string& name() const { return name_; }
  const FieldPtr& field() const { return field_; }
  unsigned dim() const { return dim_; }
  std::size_t order() const { return keys_.size(); }

  Mat element(Id i) const { return decode(keys_[i], dim_); }
  Key key(Id i) const { return keys_[i]; }
  const std::vector<Key>& keys() const { return keys_; }
  Id find(const Mat& m) const { return index_.find(encode(m)); }
  Id find_key(Key k) const { return index_.find(k); }
  // Throws ComputationError if `m` is not an element.
  Id id_of(const Mat& m) const;

  Id mul(Id x, Id y) const;
  Id inv(Id x) const { return inv_[x]; }
  Id pow(Id x, std::int64_t e) const;
  unsigned element_order(Id x) const;

  const std::vector<Id>& generators() const { return gens_; }
  const ConjClasses& classes() const;
  Id class_of(Id x) const { return classes().class_of[x]; }
  Id power_class(Id cls, std::int64_t e) const;
  std::uint64_t exponent() const;
  bool is_abelian() const;

 private:
  Group() = default;
  void finish();

  std::string name_;
  FieldPtr field_;
  unsigned dim_ = 0;
  std::vector<Key> keys_;
  FlatIndex index_;
  std::vector<Id> gens_;
  std::vector<Id> inv_;
  mutable std::once_flag classes_once_;
  mutable std::unique_ptr<ConjClasses> classes_;
};

// Subgroup together with its embedding into the parent.
struct Subgroup {
  GroupPtr parent;
  GroupPtr group;
  std::vector<Id> to_parent;
};

Subgroup subgroup(const GroupPtr& g, const std::function<bool(const Mat&)>& pred, std::string name);
Subgroup subgroup_generated(const GroupPtr& g, const std::vector<Mat>& gens, std::string name);

// Homomorphism given by a matrix formula, checked exactly on every
// (element, generator) pair.
struct Hom {
  GroupPtr source;
  GroupPtr target;
  std::vector<Id> image;

  static Hom build(const GroupPtr& src, const GroupPtr& dst, const std::function<Mat(const Mat&)>& f);
  std::vector<Id> kernel() const;
  std::size_t image_size() const;
};

// {(a, b) : det a = det b} as block-diagonal matrices.  A 1x1 block is its
// own determinant.
GroupPtr fiber_product_det(const GroupPtr& a, const GroupPtr& b, std::string name);

// Standard generators and the groups built from them.
GroupPtr build_gl(FieldPtr field, unsigned n);  // n in {1, 2}
GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b, std::string name);

}  // namespace phr
