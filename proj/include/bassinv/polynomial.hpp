#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bassinv/errors.hpp"
#include "bassinv/monomial.hpp"
#include "bassinv/rational.hpp"

namespace bassinv {

/// Variable names plus the active monomial order. When a deformation
/// parameter is present it is stored as the last variable.
struct Ring {
  std::vector<std::string> variables;
  std::optional<std::size_t> parameter;
  MonomialOrder order;

  Eigen::Index size() const { return static_cast<Eigen::Index>(variables.size()); }

  /// Number of variables excluding the parameter.
  Eigen::Index ambient_size() const { return parameter ? size() - 1 : size(); }

  std::optional<std::size_t> index_of(const std::string& name) const {
    for (std::size_t i = 0; i < variables.size(); ++i) {
      if (variables[i] == name) return i;
    }
    return std::nullopt;
  }

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.variables == b.variables && a.parameter == b.parameter && a.order == b.order;
  }
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::vector<std::string> variables,
                         std::optional<std::string> parameter = std::nullopt,
                         MonomialOrder order = MonomialOrder::grevlex()) {
  Ring ring;
  ring.variables = std::move(variables);
  if (parameter) {
    ring.parameter = ring.variables.size();
    ring.variables.push_back(*parameter);
  }
  if (ring.size() > kMaxVariables) throw PreconditionViolation("too many variables");
  if (order.kind() == MonomialOrder::Kind::WeightedGrevlex && order.weights().size() != ring.size()) {
    throw PreconditionViolation("weight vector length does not match the number of variables");
  }
  ring.order = std::move(order);
  return std::make_shared<const Ring>(std::move(ring));
}

inline RingPtr with_order(const RingPtr& ring, MonomialOrder order) {
  if (ring->order == order) return ring;
  Ring copy = *ring;
  copy.order = std::move(order);
  return std::make_shared<const Ring>(std::move(copy));
}

inline const RingPtr& xyz_ring() {
  static const RingPtr ring = make_ring({"x", "y", "z"});
  return ring;
}

/// Sparse multivariate polynomial over the field `Scalar`. Terms are kept
/// sorted in descending order for the ring's monomial order and carry no
/// zero coefficients.
template <typename Scalar>
class Polynomial {
 public:
  struct Term {
    Exponents exponents;
    Scalar coefficient;
  };

  explicit Polynomial(RingPtr ring = xyz_ring()) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, const Scalar& c) {
    Polynomial p(std::move(ring));
    if (c != Scalar(0)) p.terms_.push_back({Exponents::Zero(p.ring_->size()), c});
    return p;
  }

  static Polynomial variable(RingPtr ring, Eigen::Index index) {
    Polynomial p(std::move(ring));
    p.terms_.push_back({unit_exponents(p.ring_->size(), index), Scalar(1)});
    return p;
  }

  static Polynomial monomial(RingPtr ring, const Exponents& e, const Scalar& c = Scalar(1)) {
    Polynomial p(std::move(ring));
    if (c != Scalar(0)) p.terms_.push_back({e, c});
    return p;
  }

  /// Combines like terms and sorts; duplicate exponents are summed.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms) {
    std::map<Exponents, Scalar, ExponentsLess> acc;
    for (auto& t : terms) acc[t.exponents] += t.coefficient;
    Polynomial p(std::move(ring));
    for (auto& [e, c] : acc) {
      if (c != Scalar(0)) p.terms_.push_back({e, std::move(c)});
    }
    p.sort_terms();
    return p;
  }

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.front().exponents.sum() == 0);
  }

  const Exponents& leading_exponents() const { return terms_.front().exponents; }
  const Scalar& leading_coefficient() const { return terms_.front().coefficient; }

  bool uses_variable(Eigen::Index index) const {
    return std::any_of(terms_.begin(), terms_.end(),
                       [&](const Term& t) { return t.exponents(index) != 0; });
  }

  bool has_parameter() const {
    return ring_->parameter && uses_variable(static_cast<Eigen::Index>(*ring_->parameter));
  }

  /// Same polynomial, re-sorted for another order on the same variables.
  Polynomial with_order(const MonomialOrder& order) const {
    Polynomial p(bassinv::with_order(ring_, order));
    p.terms_ = terms_;
    p.sort_terms();
    return p;
  }

  Polynomial operator-() const {
    Polynomial p = *this;
    for (auto& t : p.terms_) t.coefficient = -t.coefficient;
    return p;
  }

  Polynomial& operator+=(const Polynomial& other) { return *this = merge(*this, other, Scalar(1)); }
  Polynomial& operator-=(const Polynomial& other) { return *this = merge(*this, other, Scalar(-1)); }
  Polynomial& operator*=(const Polynomial& other) { return *this = *this * other; }

  Polynomial& operator*=(const Scalar& c) {
    if (c == Scalar(0)) {
      terms_.clear();
    } else {
      for (auto& t : terms_) t.coefficient *= c;
    }
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Scalar& c) { return a *= c; }
  friend Polynomial operator*(const Scalar& c, Polynomial a) { return a *= c; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    const Polynomial rhs = b.in_ring_of(a);
    std::map<Exponents, Scalar, ExponentsLess> acc;
    for (const auto& s : a.terms_) {
      for (const auto& t : rhs.terms_) {
        acc[(s.exponents + t.exponents).eval()] += s.coefficient * t.coefficient;
      }
    }
    Polynomial p(a.ring_);
    for (auto& [e, c] : acc) {
      if (c != Scalar(0)) p.terms_.push_back({e, std::move(c)});
    }
    p.sort_terms();
    return p;
  }

  /// this - c * x^shift * g, in one merge pass.
  Polynomial minus_multiple(const Scalar& c, const Exponents& shift, const Polynomial& g) const {
    if (c == Scalar(0)) return *this;
    Polynomial result(ring_);
    result.terms_.reserve(terms_.size() + g.terms_.size());
    const MonomialOrder& order = ring_->order;
    auto i = terms_.begin();
    auto j = g.terms_.begin();
    while (i != terms_.end() || j != g.terms_.end()) {
      if (j == g.terms_.end()) {
        result.terms_.push_back(*i++);
        continue;
      }
      Exponents shifted = j->exponents + shift;
      const int cmp = i == terms_.end() ? -1 : order.compare(i->exponents, shifted);
      if (cmp > 0) {
        result.terms_.push_back(*i++);
      } else if (cmp < 0) {
        result.terms_.push_back({shifted, -(c * j->coefficient)});
        ++j;
      } else {
        Scalar v = i->coefficient - c * j->coefficient;
        if (v != Scalar(0)) result.terms_.push_back({shifted, std::move(v)});
        ++i;
        ++j;
      }
    }
    return result;
  }

  Polynomial derivative(Eigen::Index index) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
      const int k = t.exponents(index);
      if (k == 0) continue;
      Exponents e = t.exponents;
      e(index) = k - 1;
      out.push_back({e, t.coefficient * Scalar(k)});
    }
    // Differentiation keeps distinct exponents distinct and preserves order.
    Polynomial p(ring_);
    p.terms_ = std::move(out);
    return p;
  }

  /// Substitutes `value` for variable `index`; the variable stays in the ring
  /// but no longer occurs.
  Polynomial evaluate_variable(Eigen::Index index, const Scalar& value) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      Exponents e = t.exponents;
      Scalar c = t.coefficient;
      for (int k = 0; k < e(index); ++k) c *= value;
      e(index) = 0;
      out.push_back({e, c});
    }
    return from_terms(ring_, std::move(out));
  }

  /// Removes the leading term; no-op on zero.
  void drop_leading_term() {
    if (!terms_.empty()) terms_.erase(terms_.begin());
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    Polynomial p = *this;
    const Scalar inv = Scalar(1) / leading_coefficient();
    for (auto& t : p.terms_) t.coefficient *= inv;
    return p;
  }

  /// Re-expresses this polynomial in `target`, which must have the same variables.
  Polynomial in_ring(const RingPtr& target) const {
    if (ring_ == target || *ring_ == *target) {
      Polynomial p = *this;
      p.ring_ = target;
      return p;
    }
    if (ring_->variables != target->variables) {
      throw PreconditionViolation("polynomials live in different rings");
    }
    Polynomial p(target);
    p.terms_ = terms_;
    p.sort_terms();
    return p;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.ring_->variables != b.ring_->variables || a.terms_.size() != b.terms_.size()) return false;
    const Polynomial rhs = b.in_ring_of(a);
    for (std::size_t k = 0; k < a.terms_.size(); ++k) {
      if (!same_exponents(a.terms_[k].exponents, rhs.terms_[k].exponents) ||
          a.terms_[k].coefficient != rhs.terms_[k].coefficient) {
        return false;
      }
    }
    return true;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  Polynomial in_ring_of(const Polynomial& other) const {
    if (ring_ == other.ring_) return *this;
    return in_ring(other.ring_);
  }

  void sort_terms() {
    const MonomialOrder& order = ring_->order;
    std::sort(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) {
      return order.compare(a.exponents, b.exponents) > 0;
    });
  }

  static Polynomial merge(const Polynomial& a, const Polynomial& b, const Scalar& sign) {
    const Polynomial rhs = b.in_ring_of(a);
    return a.minus_multiple(-sign, Exponents::Zero(a.ring_->size()), rhs);
  }

  RingPtr ring_;
  std::vector<Term> terms_;
};

using RationalPolynomial = Polynomial<Rational>;

template <typename Scalar>
Polynomial<Scalar> pow(const Polynomial<Scalar>& base, unsigned exponent) {
  Polynomial<Scalar> result = Polynomial<Scalar>::constant(base.ring(), Scalar(1));
  Polynomial<Scalar> square = base;
  while (exponent) {
    if (exponent & 1U) result *= square;
    exponent >>= 1U;
    if (exponent) square = square * square;
  }
  return result;
}

template <typename Scalar>
Polynomial<Scalar> partial_derivative(const Polynomial<Scalar>& f, Eigen::Index variable) {
  if (variable < 0 || variable >= f.ring()->size()) {
    throw PreconditionViolation("variable index out of range");
  }
  return f.derivative(variable);
}

/// Replaces the deformation parameter by `value`. The result lives in the
/// ring without the parameter.
template <typename Scalar>
Polynomial<Scalar> substitute_parameter(const Polynomial<Scalar>& f, const Scalar& value) {
  const RingPtr& ring = f.ring();
  if (!ring->parameter) return f;
  const auto index = static_cast<Eigen::Index>(*ring->parameter);
  std::vector<std::string> names = ring->variables;
  names.erase(names.begin() + index);
  MonomialOrder order = ring->order;
  if (order.kind() == MonomialOrder::Kind::WeightedGrevlex) {
    Weights w(ring->size() - 1);
    for (Eigen::Index i = 0, k = 0; i < ring->size(); ++i) {
      if (i != index) w(k++) = order.weights()(i);
    }
    order = MonomialOrder::weighted_grevlex(w);
  }
  RingPtr target = make_ring(std::move(names), std::nullopt, std::move(order));
  std::vector<typename Polynomial<Scalar>::Term> terms;
  for (const auto& t : f.terms()) {
    Scalar c = t.coefficient;
    for (int k = 0; k < t.exponents(index); ++k) c *= value;
    Exponents e(target->size());
    for (Eigen::Index i = 0, k = 0; i < ring->size(); ++i) {
      if (i != index) e(k++) = t.exponents(i);
    }
    terms.push_back({e, c});
  }
  return Polynomial<Scalar>::from_terms(std::move(target), std::move(terms));
}

/// Drops the parameter slot from a polynomial that does not use it.
template <typename Scalar>
Polynomial<Scalar> drop_parameter(const Polynomial<Scalar>& f) {
  if (f.has_parameter()) throw PreconditionViolation("polynomial depends on the deformation parameter");
  return substitute_parameter(f, Scalar(0));
}

/// True iff every term has weighted degree `degree`.
template <typename Scalar>
bool is_weighted_homogeneous(const Polynomial<Scalar>& f, const Weights& w, std::int64_t degree) {
  return std::all_of(f.terms().begin(), f.terms().end(), [&](const auto& t) {
    return weighted_degree(t.exponents, w) == degree;
  });
}

template <typename Scalar>
bool is_weighted_homogeneous(const Polynomial<Scalar>& f, const Weights& w) {
  if (f.is_zero()) return true;
  return is_weighted_homogeneous(f, w, weighted_degree(f.leading_exponents(), w));
}

/// Canonical text form, e.g. `x^10+1/2*x^7*y-3*z`. Parsing it back yields
/// the same polynomial.
std::string to_string(const RationalPolynomial& f);

/// Parses the polynomial grammar: rational literals, variables, `^` with a
/// non-negative integer exponent, optional `*`, `/` by a literal, `+`, `-`
/// and parentheses.
RationalPolynomial parse_polynomial(std::string_view text,
                                    const std::vector<std::string>& variables = {"x", "y", "z"},
                                    const std::optional<std::string>& parameter = std::nullopt);

}  // namespace bassinv
