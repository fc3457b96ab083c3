#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>

#include "bassinv/linalg.hpp"
#include "bassinv/polynomial.hpp"

namespace bassinv {

/// Positive integer weights with gcd 1 and the common weighted degree.
struct WeightSystem {
  Weights weights;
  std::int64_t degree = 0;

  std::int64_t weight_sum() const { return weights.sum(); }

  friend bool operator==(const WeightSystem& a, const WeightSystem& b) {
    return a.degree == b.degree && a.weights.size() == b.weights.size() &&
           (a.weights.array() == b.weights.array()).all();
  }
};

std::string to_string(const WeightSystem& w);

namespace detail {

/// Scales a positive rational vector to coprime integers.
inline Weights normalize_weights(const Vector<Rational>& v) {
  Integer denominators(1);
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    denominators = boost::multiprecision::lcm(denominators, denominator(v(i)));
  }
  Integer common(0);
  std::vector<Integer> scaled;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    Integer k = numerator(v(i)) * (denominators / denominator(v(i)));
    common = boost::multiprecision::gcd(common, k);
    scaled.push_back(std::move(k));
  }
  Weights w(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    w(i) = (scaled[static_cast<std::size_t>(i)] / common).template convert_to<std::int64_t>();
  }
  return w;
}

inline bool all_positive(const Vector<Rational>& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v(i) <= 0) return false;
  }
  return true;
}

}  // namespace detail

/// Looks for positive weights making every monomial of `f` the same weighted
/// degree by solving the linear system on the exponent differences over Q.
/// When the solution space has dimension > 1 (only for degenerate inputs)
/// the sum of the echelon basis vectors is preferred, then a small search.
template <typename Scalar>
std::optional<WeightSystem> find_weights(const Polynomial<Scalar>& f) {
  if (f.is_zero()) throw PreconditionViolation("find_weights needs a nonzero polynomial");
  if (f.has_parameter()) throw PreconditionViolation("find_weights needs a parameter-free polynomial");
  const Eigen::Index n = f.ring()->ambient_size();
  const auto& terms = f.terms();

  Matrix<Rational> system = Matrix<Rational>::Zero(static_cast<Eigen::Index>(terms.size()) - 1, n);
  for (std::size_t k = 1; k < terms.size(); ++k) {
    for (Eigen::Index i = 0; i < n; ++i) {
      system(static_cast<Eigen::Index>(k - 1), i) = terms[k].exponents(i) - terms[0].exponents(i);
    }
  }
  const Matrix<Rational> basis = null_space<Rational>(system);
  if (basis.cols() == 0) return std::nullopt;

  std::optional<Vector<Rational>> chosen;
  Vector<Rational> sum = basis.rowwise().sum();
  if (detail::all_positive(sum)) {
    chosen = sum;
  } else if (basis.cols() <= 3) {
    // Positive combinations of up to three basis vectors, smallest first.
    const int r = static_cast<int>(basis.cols());
    for (int bound = 1; bound <= 6 && !chosen; ++bound) {
      std::vector<int> c(static_cast<std::size_t>(r), -bound);
      for (;;) {
        Vector<Rational> v = Vector<Rational>::Zero(n);
        for (int k = 0; k < r; ++k) v += Rational(c[static_cast<std::size_t>(k)]) * basis.col(k);
        if (detail::all_positive(v)) {
          chosen = v;
          break;
        }
        int k = 0;
        while (k < r && c[static_cast<std::size_t>(k)] == bound) c[static_cast<std::size_t>(k++)] = -bound;
        if (k == r) break;
        ++c[static_cast<std::size_t>(k)];
      }
    }
  }
  if (!chosen) return std::nullopt;

  WeightSystem w;
  w.weights = detail::normalize_weights(*chosen);
  w.degree = weighted_degree(terms[0].exponents.head(n), w.weights);
  if (w.degree <= 0) return std::nullopt;
  return w;
}

/// Checks sum_i w_i x_i df/dx_i == d f exactly.
template <typename Scalar>
bool euler_identity_check(const Polynomial<Scalar>& f, const WeightSystem& w) {
  const Eigen::Index n = f.ring()->ambient_size();
  if (w.weights.size() != n) return false;
  Polynomial<Scalar> lhs(f.ring());
  for (Eigen::Index i = 0; i < n; ++i) {
    lhs += Scalar(w.weights(i)) * (Polynomial<Scalar>::variable(f.ring(), i) * f.derivative(i));
  }
  return lhs == Scalar(w.degree) * f;
}

}  // namespace bassinv
