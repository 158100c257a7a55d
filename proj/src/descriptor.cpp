#include "lpalab/descriptor.hpp"

#include <algorithm>
#include <tuple>

namespace lpa {

AlgebraDescriptor::AlgebraDescriptor(Kind k, int64_t n, std::vector<AlgebraDescriptor> children)
    : kind_(k), n_(n), children_(std::move(children)) {}

AlgebraDescriptor AlgebraDescriptor::zero() { return {Kind::Zero, 0, {}}; }
AlgebraDescriptor AlgebraDescriptor::field() { return {Kind::Field, 0, {}}; }
AlgebraDescriptor AlgebraDescriptor::laurent() { return {Kind::Laurent, 0, {}}; }

AlgebraDescriptor AlgebraDescriptor::leavitt(int64_t n) {
  if (n < 2) raise(Errc::ShapeMismatch, "Leavitt descriptor needs n >= 2");
  return {Kind::Leavitt, n, {}};
}

AlgebraDescriptor AlgebraDescriptor::mat(int64_t size, AlgebraDescriptor arg) {
  if (size < 1) raise(Errc::ShapeMismatch, "matrix descriptor needs size >= 1");
  return {Kind::Mat, size, {std::move(arg)}};
}

AlgebraDescriptor AlgebraDescriptor::mat_inf(AlgebraDescriptor arg) {
  return {Kind::MatInf, 0, {std::move(arg)}};
}

AlgebraDescriptor AlgebraDescriptor::product(AlgebraDescriptor a, AlgebraDescriptor b) {
  // Flatten nested products and sort factors; products are commutative.
  std::vector<AlgebraDescriptor> factors;
  for (AlgebraDescriptor* d : {&a, &b}) {
    if (d->kind_ == Kind::Product)
      for (auto& c : d->children_) factors.push_back(std::move(c));
    else
      factors.push_back(std::move(*d));
  }
  std::sort(factors.begin(), factors.end());
  return {Kind::Product, 0, std::move(factors)};
}

AlgebraDescriptor AlgebraDescriptor::full() { return {Kind::Full, 0, {}}; }

bool AlgebraDescriptor::operator==(const AlgebraDescriptor& o) const {
  return kind_ == o.kind_ && n_ == o.n_ && children_ == o.children_;
}

bool AlgebraDescriptor::operator<(const AlgebraDescriptor& o) const {
  if (kind_ != o.kind_) return kind_ < o.kind_;
  if (n_ != o.n_) return n_ < o.n_;
  return std::lexicographical_compare(children_.begin(), children_.end(), o.children_.begin(),
                                      o.children_.end());
}

std::string AlgebraDescriptor::str() const {
  switch (kind_) {
    case Kind::Zero: return "0";
    case Kind::Field: return "K";
    case Kind::Laurent: return "K[x,x^-1]";
    case Kind::Leavitt: return "L(1," + std::to_string(n_) + ")";
    case Kind::Mat: return "M_" + std::to_string(n_) + "(" + children_[0].str() + ")";
    case Kind::MatInf: return "M_inf(" + children_[0].str() + ")";
    case Kind::Product: {
      std::string s;
      for (const auto& c : children_) {
        if (!s.empty()) s += " (+) ";
        s += c.str();
      }
      return s;
    }
    case Kind::Full: return "full";
  }
  return "?";
}

}  // namespace lpa
