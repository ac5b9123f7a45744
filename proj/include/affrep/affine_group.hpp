#pragma once

#include <utility>
#include <vector>

#include "affrep/finite_field.hpp"

namespace affrep {

// The affine map x -> ax + b with a in k^x, stored as the pair (a, b).
// Equivalent to the 2x2 matrix [[a, b], [0, 1]]; the pair law is checked
// against matrix multiplication in the tests.
struct GroupElement {
  FieldElement a;
  FieldElement b;

  bool operator==(const GroupElement&) const = default;
};

// The group G of affine automorphisms of a finite field, with the
// structural maps iota (translations), scaling (the splitting s) and
// proj (quotient onto k^x). Pure functions over an immutable field.
class AffineGroup {
 public:
  explicit AffineGroup(const FieldContext& field) : k_(&field) {}

  const FieldContext& field() const { return *k_; }
  int order() const { return k_->q() * (k_->q() - 1); }

  GroupElement identity() const;
  GroupElement compose(const GroupElement& g, const GroupElement& h) const;
  GroupElement inverse(const GroupElement& g) const;

  GroupElement iota(const FieldElement& b) const;     // x -> x + b
  GroupElement scaling(const FieldElement& a) const;  // x -> ax
  FieldElement proj(const GroupElement& g) const;     // the a-component

  // All q(q-1) elements, ordered lexicographically by (log a, element
  // index of b). Index 0 is the identity.
  std::vector<GroupElement> enumerate_group() const;

  // Index of g in enumerate_group() order.
  int element_index(const GroupElement& g) const;

  // {scaling(generator), iota(1)}; their closure under composition is G.
  std::pair<GroupElement, GroupElement> generators() const;

  // Partition of G into conjugacy classes by brute-force conjugation.
  // Classes are ordered by their least element in enumeration order, and
  // each class lists its members in enumeration order.
  std::vector<std::vector<GroupElement>> conjugacy_classes() const;

 private:
  void validate(const GroupElement& g) const;

  const FieldContext* k_;
};

}  // namespace affrep
