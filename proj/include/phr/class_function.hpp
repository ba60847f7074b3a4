#pragma once

// Class functions with values in Z/l, one residue per conjugacy class.

#include <functional>
#include <string>
#include <vector>

#include "phr/group.hpp"
#include "phr/modular.hpp"

namespace phr {

class ClassFunction {
 public:
  ClassFunction() = default;
  ClassFunction(GroupPtr g, Modulus m);  // the zero function

  static ClassFunction trivial(GroupPtr g, Modulus m);
  static ClassFunction regular(GroupPtr g, Modulus m);
  static ClassFunction from_values(GroupPtr g, Modulus m, std::vector<std::uint32_t> values);
  // Evaluates `f` at each class representative.
  static ClassFunction from_element_fn(GroupPtr g, Modulus m, const std::function<std::uint32_t(Id)>& f);

  const GroupPtr& group() const { return group_; }
  const Modulus& modulus() const { return mod_; }
  const std::vector<std::uint32_t>& values() const { return values_; }
  std::uint32_t operator[](std::size_t cls) const { return values_[cls]; }
  std::uint32_t at(Id element) const { return values_[group_->class_of(element)]; }
  std::size_t size() const { return values_.size(); }

  std::int64_t degree() const { return mod_.lift(values_.empty() ? 0 : values_[0]); }
  bool is_zero() const;

  ClassFunction operator+(const ClassFunction& o) const;
  ClassFunction operator-(const ClassFunction& o) const;
  ClassFunction operator*(const ClassFunction& o) const;  // pointwise
  ClassFunction scaled(std::int64_t k) const;
  ClassFunction& operator+=(const ClassFunction& o);
  bool operator==(const ClassFunction& o) const;
  bool operator!=(const ClassFunction& o) const { return !(*this == o); }
  // x -> f(x^-1), the complex conjugate of a character.
  ClassFunction dual() const;

  // First class where the two functions differ, or -1.
  long first_difference(const ClassFunction& o) const;
  std::string to_string() const;

 private:
  void check_compatible(const ClassFunction& o) const;

  GroupPtr group_;
  Modulus mod_;
  std::vector<std::uint32_t> values_;
};

// (1/|G|) sum_C |C| f(C) g(C^-1), lifted to the symmetric range.
std::int64_t inner_product(const ClassFunction& f, const ClassFunction& g);

}  // namespace phr
