#include "phr/group.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "phr/error.hpp"

namespace phr {

namespace {

struct Closure {
  std::vector<Key> keys;
  FlatIndex index;
};

// Extends `c` (closed under `gens[0..old)`) to the closure under all of `gens`.
void extend_closure(const Field& f, unsigned dim, Closure& c, const std::vector<Mat>& gens, std::size_t old,
                    std::size_t cap, const FlatIndex* allowed) {
  std::vector<Key> gen_keys;
  for (const Mat& g : gens) gen_keys.push_back(encode(g));
  auto visit = [&](std::size_t from, std::size_t gi) {
    Mat x = decode(c.keys[from], dim);
    Mat y = mul(f, x, gens[gi]);
    Key k = encode(y);
    if (c.index.find(k) != FlatIndex::kMissing) return;
    if (allowed && allowed->find(k) == FlatIndex::kMissing)
      throw DomainError("element set is not closed under multiplication");
    if (c.keys.size() >= cap)
      throw ResourceError("group order exceeds cap " + std::to_string(cap) + " (projected order at least " +
                          std::to_string(c.keys.size() + 1) + ")");
    c.index.insert(k, static_cast<Id>(c.keys.size()));
    c.keys.push_back(k);
  };
  const std::size_t old_size = c.keys.size();
  for (std::size_t i = 0; i < old_size; ++i)
    for (std::size_t gi = old; gi < gens.size(); ++gi) visit(i, gi);
  for (std::size_t i = old_size; i < c.keys.size(); ++i)
    for (std::size_t gi = 0; gi < gens.size(); ++gi) visit(i, gi);
}

std::vector<Mat> pick_generators(const Field& f, unsigned dim, const std::vector<Mat>& elems) {
  FlatIndex allowed(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) allowed.insert(encode(elems[i]), static_cast<Id>(i));
  const Key id_key = encode(Mat::identity(dim));
  if (allowed.find(id_key) == FlatIndex::kMissing) throw DomainError("element set lacks the identity");
  Closure c;
  c.index.reserve(elems.size());
  c.index.insert(id_key, 0);
  c.keys.push_back(id_key);
  std::vector<Mat> gens;
  for (const Mat& e : elems) {
    if (c.index.find(encode(e)) != FlatIndex::kMissing) continue;
    gens.push_back(e);
    extend_closure(f, dim, c, gens, gens.size() - 1, elems.size(), &allowed);
  }
  if (c.keys.size() != allowed.size()) throw DomainError("element set contains duplicates");
  return gens;
}

}  // namespace

GroupPtr Group::generate(FieldPtr field, unsigned dim, const std::vector<Mat>& gens, std::string name,
                         std::size_t projected, std::size_t cap) {
  if (field->order() > 16) throw DomainError("matrix groups need q <= 16");
  if (dim == 0 || dim > 4) throw DomainError("matrix dimension must be 1..4");
  if (projected > cap)
    throw ResourceError("projected order " + std::to_string(projected) + " of " + name + " exceeds cap " +
                        std::to_string(cap));
  for (const Mat& g : gens) {
    if (g.n != dim) throw DomainError("generator dimension mismatch in " + name);
    if (det(*field, g) == 0) throw DomainError("singular generator in " + name);
  }
  auto grp = std::shared_ptr<Group>(new Group());
  grp->name_ = std::move(name);
  grp->field_ = field;
  grp->dim_ = dim;
  Closure c;
  c.index.reserve(projected ? projected : 64);
  const Key id_key = encode(Mat::identity(dim));
  c.index.insert(id_key, 0);
  c.keys.push_back(id_key);
  extend_closure(*field, dim, c, gens, 0, cap, nullptr);
  if (projected && c.keys.size() != projected)
    throw ComputationError(grp->name_ + ": closure has order " + std::to_string(c.keys.size()) +
                           ", expected " + std::to_string(projected));
  grp->keys_ = std::move(c.keys);
  grp->index_ = std::move(c.index);
  for (const Mat& g : gens) grp->gens_.push_back(grp->index_.find(encode(g)));
  grp->finish();
  return grp;
}

GroupPtr Group::from_elements(FieldPtr field, unsigned dim, const std::vector<Mat>& elems, std::string name) {
  auto gens = pick_generators(*field, dim, elems);
  return generate(std::move(field), dim, gens, std::move(name), elems.size());
}

void Group::finish() {
  const Field& f = *field_;
  inv_.resize(keys_.size());
  for (std::size_t i = 0; i < keys_.size(); ++i) {
    Id j = index_.find(encode(inverse(f, element(static_cast<Id>(i)))));
    if (j == kNoId) throw ComputationError(name_ + ": inverse missing from closure");
    inv_[i] = j;
  }
  // Closure spot check: exhaustive for small groups, sampled otherwise.
  const std::size_t n = keys_.size();
  if (n <= 2000) {
    for (Id x = 0; x < n; ++x)
      for (Id y = 0; y < n; ++y) mul(x, y);
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (int t = 0; t < 2000; ++t) {
      Id x = static_cast<Id>(pick(rng)), y = static_cast<Id>(pick(rng)), z = static_cast<Id>(pick(rng));
      if (mul(mul(x, y), z) != mul(x, mul(y, z))) throw ComputationError(name_ + ": associativity check failed");
    }
  }
}

Id Group::id_of(const Mat& m) const {
  if (m.n != dim_) throw DomainError("dimension mismatch looking up an element of " + name_);
  Id i = find(m);
  if (i == kNoId) throw ComputationError("matrix " + to_string(*field_, m) + " is not in " + name_);
  return i;
}

Id Group::mul(Id x, Id y) const {
  Id r = index_.find(encode(phr::mul(*field_, element(x), element(y))));
  if (r == kNoId) throw ComputationError(name_ + ": product left the group");
  return r;
}

Id Group::pow(Id x, std::int64_t e) const {
  if (e < 0) {
    x = inv(x);
    e = -e;
  }
  Id r = 0, b = x;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

unsigned Group::element_order(Id x) const {
  unsigned o = 1;
  Id y = x;
  while (y != 0) {
    y = mul(y, x);
    ++o;
  }
  return o;
}

const ConjClasses& Group::classes() const {
  std::call_once(classes_once_, [this] {
    const std::size_t n = order();
    std::vector<Id> parent(n);
    std::iota(parent.begin(), parent.end(), Id{0});
    auto find_root = [&](Id x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
      }
      return x;
    };
    const Field& f = *field_;
    std::vector<std::pair<Mat, Mat>> gm;
    for (Id g : gens_) gm.emplace_back(element(g), element(inv_[g]));
    for (Id x = 0; x < n; ++x) {
      Mat mx = element(x);
      for (const auto& [g, gi] : gm) {
        Id y = index_.find(encode(phr::mul(f, phr::mul(f, g, mx), gi)));
        Id a = find_root(x), b = find_root(y);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    auto cc = std::make_unique<ConjClasses>();
    cc->class_of.assign(n, kNoId);
    std::vector<Id> root_class(n, kNoId);
    for (Id x = 0; x < n; ++x) {
      Id r = find_root(x);
      if (root_class[r] == kNoId) {
        root_class[r] = static_cast<Id>(cc->reps.size());
        cc->reps.push_back(x);
        cc->sizes.push_back(0);
      }
      cc->class_of[x] = root_class[r];
      ++cc->sizes[root_class[r]];
    }
    for (std::size_t c = 0; c < cc->count(); ++c) {
      cc->centralizer.push_back(n / cc->sizes[c]);
      cc->inverse.push_back(cc->class_of[inv_[cc->reps[c]]]);
      cc->orders.push_back(element_order(cc->reps[c]));
    }
    classes_ = std::move(cc);
  });
  return *classes_;
}

Id Group::power_class(Id cls, std::int64_t e) const {
  const auto& cc = classes();
  return cc.class_of[pow(cc.reps[cls], e)];
}

std::uint64_t Group::exponent() const {
  std::uint64_t e = 1;
  for (unsigned o : classes().orders) e = std::lcm(e, std::uint64_t{o});
  return e;
}

bool Group::is_abelian() const {
  for (Id a : gens_)
    for (Id b : gens_)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

Subgroup subgroup(const GroupPtr& g, const std::function<bool(const Mat&)>& pred, std::string name) {
  std::vector<Mat> elems;
  for (Id i = 0; i < g->order(); ++i) {
    Mat m = g->element(i);
    if (pred(m)) elems.push_back(m);
  }
  Subgroup s;
  s.parent = g;
  s.group = Group::from_elements(g->field(), g->dim(), elems, std::move(name));
  s.to_parent.resize(s.group->order());
  for (Id i = 0; i < s.group->order(); ++i) s.to_parent[i] = g->find_key(s.group->key(i));
  return s;
}

Subgroup subgroup_generated(const GroupPtr& g, const std::vector<Mat>& gens, std::string name) {
  for (const Mat& m : gens) g->id_of(m);
  Subgroup s;
  s.parent = g;
  s.group = Group::generate(g->field(), g->dim(), gens, std::move(name), 0, g->order());
  s.to_parent.resize(s.group->order());
  for (Id i = 0; i < s.group->order(); ++i) s.to_parent[i] = g->find_key(s.group->key(i));
  return s;
}

Hom Hom::build(const GroupPtr& src, const GroupPtr& dst, const std::function<Mat(const Mat&)>& f) {
  Hom h;
  h.source = src;
  h.target = dst;
  h.image.resize(src->order());
  for (Id i = 0; i < src->order(); ++i) h.image[i] = dst->id_of(f(src->element(i)));
  if (h.image[0] != 0) throw ComputationError("homomorphism does not fix the identity");
  for (Id x = 0; x < src->order(); ++x)
    for (Id g : src->generators())
      if (h.image[src->mul(x, g)] != dst->mul(h.image[x], h.image[g]))
        throw ComputationError("map " + src->name() + " -> " + dst->name() + " is not a homomorphism");
  return h;
}

std::vector<Id> Hom::kernel() const {
  std::vector<Id> k;
  for (Id i = 0; i < image.size(); ++i)
    if (image[i] == 0) k.push_back(i);
  return k;
}

std::size_t Hom::image_size() const {
  std::vector<bool> seen(target->order(), false);
  std::size_t n = 0;
  for (Id y : image)
    if (!seen[y]) {
      seen[y] = true;
      ++n;
    }
  return n;
}

namespace {

Elem block_det(const Field& f, const Mat& m) { return m.n == 1 ? m(0, 0) : det(f, m); }

}  // namespace

GroupPtr fiber_product_det(const GroupPtr& a, const GroupPtr& b, std::string name) {
  if (a->field()->order() != b->field()->order()) throw DomainError("fiber product of groups over different fields");
  const Field& f = *a->field();
  std::vector<std::vector<Id>> by_det_b(f.order());
  for (Id j = 0; j < b->order(); ++j) by_det_b[block_det(f, b->element(j))].push_back(j);
  std::vector<Mat> elems;
  for (Id i = 0; i < a->order(); ++i) {
    Mat x = a->element(i);
    for (Id j : by_det_b[block_det(f, x)]) elems.push_back(block_diag(x, b->element(j)));
  }
  return Group::from_elements(a->field(), a->dim() + b->dim(), elems, std::move(name));
}

GroupPtr build_gl(FieldPtr field, unsigned n) {
  const Elem g = field->generator();
  const unsigned q = field->order();
  if (n == 1) return Group::generate(field, 1, {Mat::diag({g})}, "GL(1," + std::to_string(q) + ")", q - 1);
  if (n != 2) throw DomainError("build_gl supports n = 1, 2");
  std::vector<Mat> gens{Mat::diag({g, 1}), Mat(2, {0, 1, 1, 0}), Mat(2, {1, 1, 0, 1})};
  const std::size_t order = std::size_t{q * q - 1} * (q * q - q);
  return Group::generate(field, 2, gens, "GL(2," + std::to_string(q) + ")", order);
}

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b, std::string name) {
  std::vector<Mat> gens;
  const Mat ia = Mat::identity(a->dim()), ib = Mat::identity(b->dim());
  for (Id g : a->generators()) gens.push_back(block_diag(a->element(g), ib));
  for (Id g : b->generators()) gens.push_back(block_diag(ia, b->element(g)));
  return Group::generate(a->field(), a->dim() + b->dim(), gens, std::move(name), a->order() * b->order());
}

}  // namespace phr
