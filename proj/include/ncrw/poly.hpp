#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

namespace ncrw {

// Dense univariate polynomial, coeffs[i] = coefficient of x^i.
template <class T>
class Polynomial {
 public:
  Polynomial() : coeffs_{T(0)} {}
  explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Polynomial monomial(std::size_t degree, T coeff = T(1)) {
    std::vector<T> c(degree + 1, T(0));
    c[degree] = std::move(coeff);
    return Polynomial(std::move(c));
  }

  std::size_t degree() const { return coeffs_.size() - 1; }
  const std::vector<T>& coeffs() const { return coeffs_; }

  T coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : T(0); }

  template <class X>
  X evaluate(const X& x) const {
    X acc = X(coeffs_.back());
    for (std::size_t i = coeffs_.size() - 1; i-- > 0;) {
      acc = acc * x + X(coeffs_[i]);
    }
    return acc;
  }

  bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }

  Polynomial operator+(const Polynomial& o) const {
    std::vector<T> c(std::max(coeffs_.size(), o.coeffs_.size()), T(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
    return Polynomial(std::move(c));
  }

  Polynomial operator-(const Polynomial& o) const {
    std::vector<T> c(std::max(coeffs_.size(), o.coeffs_.size()), T(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] -= o.coeffs_[i];
    return Polynomial(std::move(c));
  }

  Polynomial operator*(const Polynomial& o) const {
    std::vector<T> c(coeffs_.size() + o.coeffs_.size() - 1, T(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
        c[i + j] += coeffs_[i] * o.coeffs_[j];
      }
    }
    return Polynomial(std::move(c));
  }

  Polynomial operator*(const T& scalar) const {
    std::vector<T> c = coeffs_;
    for (auto& v : c) v *= scalar;
    return Polynomial(std::move(c));
  }

  // p(a*x + b), expanded by Horner in the affine argument.
  Polynomial compose_affine(const T& a, const T& b) const {
    Polynomial arg(std::vector<T>{b, a});
    Polynomial acc(std::vector<T>{coeffs_.back()});
    for (std::size_t i = coeffs_.size() - 1; i-- > 0;) {
      acc = acc * arg + Polynomial(std::vector<T>{coeffs_[i]});
    }
    return acc;
  }

  // p(x + c)
  Polynomial shift_argument(const T& c) const { return compose_affine(T(1), c); }

 private:
  void trim() {
    while (coeffs_.size() > 1 && coeffs_.back() == T(0)) coeffs_.pop_back();
    if (coeffs_.empty()) coeffs_.push_back(T(0));
  }

  std::vector<T> coeffs_;
};

}  // namespace ncrw
