#include "affrep/affine_group.hpp"

#include <algorithm>

namespace affrep {

void AffineGroup::validate(const GroupElement& g) const {
  if (k_->is_zero(g.a)) throw ZeroScaleError();
}

GroupElement AffineGroup::identity() const { return {k_->one(), k_->zero()}; }

GroupElement AffineGroup::compose(const GroupElement& g, const GroupElement& h) const {
  validate(g);
  validate(h);
  // (g . h)(x) = g(h(x)) = a_g a_h x + a_g b_h + b_g
  return {k_->mul(g.a, h.a), k_->add(k_->mul(g.a, h.b), g.b)};
}

GroupElement AffineGroup::inverse(const GroupElement& g) const {
  validate(g);
  FieldElement ai = k_->inv(g.a);
  return {ai, k_->neg(k_->mul(ai, g.b))};
}

GroupElement AffineGroup::iota(const FieldElement& b) const { return {k_->one(), b}; }

GroupElement AffineGroup::scaling(const FieldElement& a) const {
  if (k_->is_zero(a)) throw ZeroScaleError();
  return {a, k_->zero()};
}

FieldElement AffineGroup::proj(const GroupElement& g) const {
  validate(g);
  return g.a;
}

std::vector<GroupElement> AffineGroup::enumerate_group() const {
  std::vector<GroupElement> out;
  out.reserve(order());
  int q = k_->q();
  for (int m = 0; m < q - 1; ++m) {
    FieldElement a = k_->generator_pow(m);
    for (int bi = 0; bi < q; ++bi) {
      out.push_back({a, k_->elements()[bi]});
    }
  }
  return out;
}

int AffineGroup::element_index(const GroupElement& g) const {
  validate(g);
  return k_->log(g.a) * k_->q() + k_->element_index(g.b);
}

std::pair<GroupElement, GroupElement> AffineGroup::generators() const {
  return {scaling(k_->generator()), iota(k_->one())};
}

std::vector<std::vector<GroupElement>> AffineGroup::conjugacy_classes() const {
  std::vector<GroupElement> all = enumerate_group();
  std::vector<bool> seen(all.size(), false);
  std::vector<std::vector<GroupElement>> classes;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> orbit;
    for (const GroupElement& h : all) {
      GroupElement c = compose(h, compose(all[i], inverse(h)));
      int idx = element_index(c);
      if (!seen[idx]) {
        seen[idx] = true;
        orbit.push_back(idx);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    std::vector<GroupElement> cls;
    cls.reserve(orbit.size());
    for (int idx : orbit) cls.push_back(all[idx]);
    classes.push_back(std::move(cls));
  }
  return classes;
}

}  // namespace affrep
