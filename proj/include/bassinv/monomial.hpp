#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>

#include <Eigen/Core>

namespace bassinv {

inline constexpr int kMaxVariables = 8;

/// Exponent vector of a monomial. Fixed-capacity storage, no heap allocation.
using Exponents = Eigen::Matrix<int, Eigen::Dynamic, 1, Eigen::ColMajor, kMaxVariables, 1>;

/// Positive integer weights attached to the variables.
using Weights = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

inline Exponents unit_exponents(Eigen::Index size, Eigen::Index variable, int power = 1) {
  Exponents e = Exponents::Zero(size);
  e(variable) = power;
  return e;
}

inline bool same_exponents(const Exponents& a, const Exponents& b) {
  return a.size() == b.size() && (a.array() == b.array()).all();
}

inline bool divides(const Exponents& divisor, const Exponents& e) {
  return (divisor.array() <= e.array()).all();
}

inline Exponents lcm(const Exponents& a, const Exponents& b) { return a.cwiseMax(b); }

inline bool coprime(const Exponents& a, const Exponents& b) {
  return ((a.array() == 0) || (b.array() == 0)).all();
}

inline int total_degree(const Exponents& e) { return e.sum(); }

inline std::int64_t weighted_degree(const Exponents& e, const Weights& w) {
  return w.dot(e.cast<std::int64_t>());
}

/// Lexicographic comparison of the raw exponent vectors; only for use as a
/// container key, not a monomial order.
struct ExponentsLess {
  bool operator()(const Exponents& a, const Exponents& b) const {
    for (Eigen::Index i = 0; i < a.size(); ++i) {
      if (a(i) != b(i)) return a(i) < b(i);
    }
    return false;
  }
};

/// Global monomial orders; variable 0 is the largest variable.
class MonomialOrder {
 public:
  enum class Kind { Grevlex, Lex, WeightedGrevlex };

  MonomialOrder() = default;

  static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex, {}); }
  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, {}); }
  static MonomialOrder weighted_grevlex(Weights weights) {
    return MonomialOrder(Kind::WeightedGrevlex, std::move(weights));
  }

  Kind kind() const noexcept { return kind_; }
  const Weights& weights() const noexcept { return weights_; }

  /// Three-way comparison: negative if a < b.
  int compare(const Exponents& a, const Exponents& b) const {
    switch (kind_) {
      case Kind::Lex:
        return compare_lex(a, b);
      case Kind::WeightedGrevlex: {
        const std::int64_t wa = weighted_degree(a, weights_);
        const std::int64_t wb = weighted_degree(b, weights_);
        if (wa != wb) return wa < wb ? -1 : 1;
        return compare_grevlex(a, b);
      }
      case Kind::Grevlex:
        break;
    }
    return compare_grevlex(a, b);
  }

  bool less(const Exponents& a, const Exponents& b) const { return compare(a, b) < 0; }

  std::string name() const;

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ == b.kind_ && a.weights_.size() == b.weights_.size() &&
           (a.weights_.array() == b.weights_.array()).all();
  }

 private:
  MonomialOrder(Kind kind, Weights weights) : kind_(kind), weights_(std::move(weights)) {}

  static int compare_lex(const Exponents& a, const Exponents& b) {
    for (Eigen::Index i = 0; i < a.size(); ++i) {
      if (a(i) != b(i)) return a(i) < b(i) ? -1 : 1;
    }
    return 0;
  }

  static int compare_grevlex(const Exponents& a, const Exponents& b) {
    const int da = total_degree(a);
    const int db = total_degree(b);
    if (da != db) return da < db ? -1 : 1;
    // Smaller exponent in the last differing variable wins.
    for (Eigen::Index i = a.size() - 1; i >= 0; --i) {
      if (a(i) != b(i)) return a(i) > b(i) ? -1 : 1;
    }
    return 0;
  }

  Kind kind_ = Kind::Grevlex;
  Weights weights_;
};

inline std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::Lex:
      return "lex";
    case Kind::WeightedGrevlex: {
      std::string s = "weighted-grevlex(";
      for (Eigen::Index i = 0; i < weights_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(weights_(i));
      }
      return s + ")";
    }
    case Kind::Grevlex:
      break;
  }
  return "grevlex";
}

}  // namespace bassinv
