#include "phr/class_function.hpp"

#include <sstream>

#include "phr/error.hpp"

namespace phr {

ClassFunction::ClassFunction(GroupPtr g, Modulus m) : group_(std::move(g)), mod_(m) {
  values_.assign(group_->classes().count(), 0);
}

ClassFunction ClassFunction::trivial(GroupPtr g, Modulus m) {
  ClassFunction f(std::move(g), m);
  for (auto& v : f.values_) v = 1;
  return f;
}

ClassFunction ClassFunction::regular(GroupPtr g, Modulus m) {
  ClassFunction f(std::move(g), m);
  f.values_[0] = m.from_int(static_cast<std::int64_t>(f.group_->order()));
  return f;
}

ClassFunction ClassFunction::from_values(GroupPtr g, Modulus m, std::vector<std::uint32_t> values) {
  ClassFunction f(std::move(g), m);
  if (values.size() != f.values_.size()) throw DomainError("class function has wrong number of values");
  f.values_ = std::move(values);
  return f;
}

ClassFunction ClassFunction::from_element_fn(GroupPtr g, Modulus m, const std::function<std::uint32_t(Id)>& fn) {
  ClassFunction f(std::move(g), m);
  const auto& reps = f.group_->classes().reps;
  for (std::size_t c = 0; c < reps.size(); ++c) f.values_[c] = fn(reps[c]) % m.ell;
  return f;
}

bool ClassFunction::is_zero() const {
  for (auto v : values_)
    if (v) return false;
  return true;
}

void ClassFunction::check_compatible(const ClassFunction& o) const {
  if (group_ != o.group_) throw DomainError("class functions live on different groups");
  if (!(mod_ == o.mod_)) throw DomainError("class functions use different moduli");
}

ClassFunction ClassFunction::operator+(const ClassFunction& o) const {
  ClassFunction r = *this;
  r += o;
  return r;
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& o) {
  check_compatible(o);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] = mod_.add(values_[i], o.values_[i]);
  return *this;
}

ClassFunction ClassFunction::operator-(const ClassFunction& o) const {
  check_compatible(o);
  ClassFunction r = *this;
  for (std::size_t i = 0; i < values_.size(); ++i) r.values_[i] = mod_.sub(values_[i], o.values_[i]);
  return r;
}

ClassFunction ClassFunction::operator*(const ClassFunction& o) const {
  check_compatible(o);
  ClassFunction r = *this;
  for (std::size_t i = 0; i < values_.size(); ++i) r.values_[i] = mod_.mul(values_[i], o.values_[i]);
  return r;
}

ClassFunction ClassFunction::scaled(std::int64_t k) const {
  ClassFunction r = *this;
  const std::uint32_t s = mod_.from_int(k);
  for (auto& v : r.values_) v = mod_.mul(v, s);
  return r;
}

bool ClassFunction::operator==(const ClassFunction& o) const {
  return group_ == o.group_ && mod_ == o.mod_ && values_ == o.values_;
}

ClassFunction ClassFunction::dual() const {
  ClassFunction r = *this;
  const auto& inv = group_->classes().inverse;
  for (std::size_t i = 0; i < values_.size(); ++i) r.values_[i] = values_[inv[i]];
  return r;
}

long ClassFunction::first_difference(const ClassFunction& o) const {
  check_compatible(o);
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (values_[i] != o.values_[i]) return static_cast<long>(i);
  return -1;
}

std::string ClassFunction::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < values_.size(); ++i) os << (i ? " " : "") << mod_.lift(values_[i]);
  os << "]";
  return os.str();
}

std::int64_t inner_product(const ClassFunction& f, const ClassFunction& g) {
  if (f.group() != g.group()) throw DomainError("inner product of functions on different groups");
  if (!(f.modulus() == g.modulus())) throw DomainError("inner product across moduli");
  const Modulus& m = f.modulus();
  const auto& cc = f.group()->classes();
  std::uint32_t s = 0;
  for (std::size_t i = 0; i < cc.count(); ++i)
    s = m.add(s, m.mul(m.from_int(static_cast<std::int64_t>(cc.sizes[i] % m.ell)), m.mul(f[i], g[cc.inverse[i]])));
  return m.lift(m.mul(s, m.inv(m.from_int(static_cast<std::int64_t>(f.group()->order() % m.ell)))));
}

}  // namespace phr
