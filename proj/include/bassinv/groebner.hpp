#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

#include "bassinv/errors.hpp"
#include "bassinv/polynomial.hpp"
#include "bassinv/weights.hpp"

namespace bassinv {

inline constexpr std::size_t kDefaultStaircaseLimit = 100000;

/// Scales `p` to a canonical representative of its class up to units. The
/// generic version makes `p` monic; over Q the coefficients become coprime
/// integers with a positive leading coefficient.
template <typename Scalar>
Polynomial<Scalar> primitive_part(const Polynomial<Scalar>& p) {
  return p.monic();
}

Polynomial<Rational> primitive_part(const Polynomial<Rational>& p);

/// Reduced Groebner basis. Generators are monic, inter-reduced and sorted by
/// ascending leading monomial.
template <typename Scalar>
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, std::vector<Polynomial<Scalar>> generators)
      : ring_(std::move(ring)), generators_(std::move(generators)) {}

  const RingPtr& ring() const noexcept { return ring_; }
  const MonomialOrder& order() const noexcept { return ring_->order; }
  const std::vector<Polynomial<Scalar>>& generators() const noexcept { return generators_; }
  std::size_t size() const noexcept { return generators_.size(); }

  bool is_unit_ideal() const {
    return generators_.size() == 1 && generators_.front().is_constant() && !generators_.front().is_zero();
  }

  std::vector<Exponents> leading_monomials() const {
    std::vector<Exponents> out;
    out.reserve(generators_.size());
    for (const auto& g : generators_) out.push_back(g.leading_exponents());
    return out;
  }

 private:
  RingPtr ring_;
  std::vector<Polynomial<Scalar>> generators_;
};

namespace detail {

template <typename Scalar>
Polynomial<Scalar> reduce(Polynomial<Scalar> p, const std::vector<const Polynomial<Scalar>*>& by) {
  std::vector<typename Polynomial<Scalar>::Term> remainder;
  while (!p.is_zero()) {
    const Exponents& lead = p.leading_exponents();
    const Polynomial<Scalar>* divisor = nullptr;
    for (const auto* g : by) {
      if (divides(g->leading_exponents(), lead)) {
        divisor = g;
        break;
      }
    }
    if (divisor) {
      const Scalar c = p.leading_coefficient() / divisor->leading_coefficient();
      p = p.minus_multiple(c, lead - divisor->leading_exponents(), *divisor);
    } else {
      remainder.push_back(p.terms().front());
      p.drop_leading_term();
    }
  }
  return Polynomial<Scalar>::from_terms(p.ring(), std::move(remainder));
}

}  // namespace detail

template <typename Scalar>
Polynomial<Scalar> s_polynomial(const Polynomial<Scalar>& f, const Polynomial<Scalar>& g) {
  const Exponents l = lcm(f.leading_exponents(), g.leading_exponents());
  const Polynomial<Scalar> left =
      Polynomial<Scalar>::monomial(f.ring(), l - f.leading_exponents(), Scalar(1) / f.leading_coefficient()) * f;
  return left.minus_multiple(Scalar(1) / g.leading_coefficient(), l - g.leading_exponents(), g);
}

/// Buchberger's algorithm with the Gebauer-Moeller criteria and the normal
/// selection strategy (smallest lcm first, ties by pair index).
template <typename Scalar>
GroebnerBasis<Scalar> buchberger(const std::vector<Polynomial<Scalar>>& input, const MonomialOrder& order) {
  if (input.empty()) return GroebnerBasis<Scalar>(with_order(xyz_ring(), order), {});
  RingPtr ring;
  {
    Polynomial<Scalar> probe = input.front();
    if (probe.ring()->parameter) probe = drop_parameter(probe);
    ring = with_order(probe.ring(), order);
  }

  struct Pair {
    std::size_t i;
    std::size_t j;
    Exponents lcm;
  };

  std::vector<Polynomial<Scalar>> polys;
  std::vector<std::size_t> basis;
  std::vector<Pair> pairs;

  auto unit_ideal = [&] {
    return GroebnerBasis<Scalar>(ring, {Polynomial<Scalar>::constant(ring, Scalar(1))});
  };
  auto current = [&] {
    std::vector<const Polynomial<Scalar>*> by;
    by.reserve(basis.size());
    for (std::size_t k : basis) by.push_back(&polys[k]);
    return by;
  };

  auto update = [&](std::size_t h) {
    const Exponents lh = polys[h].leading_exponents();
    std::deque<Pair> candidates;
    for (std::size_t g : basis) candidates.push_back({g, h, lcm(polys[g].leading_exponents(), lh)});

    std::vector<Pair> kept;
    while (!candidates.empty()) {
      Pair p = candidates.front();
      candidates.pop_front();
      const bool disjoint = coprime(polys[p.i].leading_exponents(), lh);
      auto divides_p = [&](const Pair& q) { return divides(q.lcm, p.lcm); };
      if (disjoint || (std::none_of(candidates.begin(), candidates.end(), divides_p) &&
                       std::none_of(kept.begin(), kept.end(), divides_p))) {
        kept.push_back(p);
      }
    }

    std::vector<Pair> next;
    for (const Pair& p : pairs) {
      const bool redundant = divides(lh, p.lcm) &&
                             !same_exponents(lcm(polys[p.i].leading_exponents(), lh), p.lcm) &&
                             !same_exponents(lcm(polys[p.j].leading_exponents(), lh), p.lcm);
      if (!redundant) next.push_back(p);
    }
    for (const Pair& p : kept) {
      if (!coprime(polys[p.i].leading_exponents(), lh)) next.push_back(p);
    }
    pairs = std::move(next);

    std::vector<std::size_t> next_basis;
    for (std::size_t g : basis) {
      if (!divides(lh, polys[g].leading_exponents())) next_basis.push_back(g);
    }
    next_basis.push_back(h);
    basis = std::move(next_basis);
  };

  // Returns false when the ideal turned out to be the whole ring.
  auto insert = [&](Polynomial<Scalar> r) {
    r = detail::reduce(std::move(r), current());
    if (r.is_zero()) return true;
    r = primitive_part(r);
    if (r.is_constant()) return false;
    polys.push_back(std::move(r));
    update(polys.size() - 1);
    return true;
  };

  for (const auto& f : input) {
    Polynomial<Scalar> g = f.ring()->parameter ? drop_parameter(f) : f;
    if (g.ring()->variables != ring->variables) throw PreconditionViolation("generators live in different rings");
    if (!insert(g.in_ring(ring))) return unit_ideal();
  }

  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
      const int c = order.compare(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      return std::tie(a.j, a.i) < std::tie(b.j, b.i);
    });
    const Pair pair = *best;
    pairs.erase(best);
    if (!insert(s_polynomial(polys[pair.i], polys[pair.j]))) return unit_ideal();
  }

  // Basis is minimal after the update steps; inter-reduce the tails.
  std::vector<Polynomial<Scalar>> reduced;
  for (std::size_t k : basis) {
    std::vector<const Polynomial<Scalar>*> others;
    for (std::size_t m : basis) {
      if (m != k) others.push_back(&polys[m]);
    }
    reduced.push_back(detail::reduce(polys[k], others).monic());
  }
  std::sort(reduced.begin(), reduced.end(), [&](const auto& a, const auto& b) {
    return order.less(a.leading_exponents(), b.leading_exponents());
  });
  return GroebnerBasis<Scalar>(ring, std::move(reduced));
}

/// Complete reduction of `p` modulo the basis.
template <typename Scalar>
Polynomial<Scalar> normal_form(const Polynomial<Scalar>& p, const GroebnerBasis<Scalar>& basis) {
  std::vector<const Polynomial<Scalar>*> by;
  for (const auto& g : basis.generators()) by.push_back(&g);
  Polynomial<Scalar> q = p.ring()->parameter && !basis.ring()->parameter ? drop_parameter(p) : p;
  return detail::reduce(q.in_ring(basis.ring()), by);
}

/// Standard monomials of the quotient ring, or the marker `infinite`.
struct Staircase {
  bool infinite = false;
  std::vector<Exponents> monomials;

  std::size_t size() const { return monomials.size(); }
};

template <typename Scalar>
bool is_zero_dimensional(const GroebnerBasis<Scalar>& basis) {
  if (basis.is_unit_ideal()) return true;
  const Eigen::Index n = basis.ring()->size();
  for (Eigen::Index i = 0; i < n; ++i) {
    const bool has_pure_power = std::any_of(basis.generators().begin(), basis.generators().end(), [&](const auto& g) {
      const Exponents& e = g.leading_exponents();
      return e(i) > 0 && e.sum() == e(i);
    });
    if (!has_pure_power) return false;
  }
  return true;
}

namespace detail {

inline bool is_standard(const Exponents& e, const std::vector<Exponents>& leads) {
  return std::none_of(leads.begin(), leads.end(), [&](const Exponents& l) { return divides(l, e); });
}

}  // namespace detail

template <typename Scalar>
Staircase staircase(const GroebnerBasis<Scalar>& basis, std::size_t limit = kDefaultStaircaseLimit) {
  Staircase result;
  if (basis.is_unit_ideal()) return result;
  if (!is_zero_dimensional(basis)) {
    result.infinite = true;
    return result;
  }
  const Eigen::Index n = basis.ring()->size();
  const std::vector<Exponents> leads = basis.leading_monomials();
  std::set<Exponents, ExponentsLess> seen;
  std::deque<Exponents> frontier;
  const Exponents one = Exponents::Zero(n);
  seen.insert(one);
  frontier.push_back(one);
  while (!frontier.empty()) {
    Exponents e = frontier.front();
    frontier.pop_front();
    result.monomials.push_back(e);
    if (result.monomials.size() > limit) {
      throw StaircaseLimitExceeded("staircase exceeds " + std::to_string(limit) + " monomials");
    }
    for (Eigen::Index i = 0; i < n; ++i) {
      Exponents next = e;
      ++next(i);
      if (detail::is_standard(next, leads) && seen.insert(next).second) frontier.push_back(next);
    }
  }
  const MonomialOrder& order = basis.order();
  std::sort(result.monomials.begin(), result.monomials.end(),
            [&](const Exponents& a, const Exponents& b) { return order.less(a, b); });
  return result;
}

/// dim over the coefficient field of the quotient ring; nullopt if infinite.
template <typename Scalar>
std::optional<std::size_t> quotient_dimension(const GroebnerBasis<Scalar>& basis,
                                              std::size_t limit = kDefaultStaircaseLimit) {
  const Staircase s = staircase(basis, limit);
  if (s.infinite) return std::nullopt;
  return s.size();
}

/// True iff every variable is nilpotent in the (finite dimensional) quotient,
/// i.e. the zero set of the ideal is at most the origin.
template <typename Scalar>
bool supported_only_at_origin(const GroebnerBasis<Scalar>& basis, std::size_t limit = kDefaultStaircaseLimit) {
  const auto dim = quotient_dimension(basis, limit);
  if (!dim) throw PreconditionViolation("supported_only_at_origin needs a zero-dimensional ideal");
  const RingPtr& ring = basis.ring();
  for (Eigen::Index i = 0; i < ring->size(); ++i) {
    const Polynomial<Scalar> xi = Polynomial<Scalar>::variable(ring, i);
    Polynomial<Scalar> power = normal_form(xi, basis);
    for (std::size_t k = 1; k < *dim && !power.is_zero(); ++k) power = normal_form(power * xi, basis);
    if (!power.is_zero()) return false;
  }
  return true;
}

/// Number of standard monomials of weighted degree <= cutoff. Requires a
/// basis of weighted-homogeneous generators; the weighted Hilbert function
/// of such an ideal does not depend on the monomial order.
template <typename Scalar>
std::size_t graded_staircase_count(const GroebnerBasis<Scalar>& basis, const WeightSystem& w, std::int64_t cutoff,
                                   std::size_t limit = kDefaultStaircaseLimit) {
  const Eigen::Index n = basis.ring()->size();
  if (w.weights.size() != n || (w.weights.array() <= 0).any()) {
    throw PreconditionViolation("weights must be positive, one per variable");
  }
  for (const auto& g : basis.generators()) {
    if (!is_weighted_homogeneous(g, w.weights)) {
      throw PreconditionViolation("basis generator " + to_string(g) + " is not weighted-homogeneous");
    }
  }
  if (cutoff < 0 || basis.is_unit_ideal()) return 0;
  const std::vector<Exponents> leads = basis.leading_monomials();

  std::size_t count = 0;
  Exponents e = Exponents::Zero(n);
  // Depth-first walk over exponent vectors of weighted degree <= cutoff.
  auto walk = [&](auto&& self, Eigen::Index var, std::int64_t budget) -> void {
    if (var == n) {
      if (detail::is_standard(e, leads)) {
        if (++count > limit) throw StaircaseLimitExceeded("graded staircase exceeds limit");
      }
      return;
    }
    for (int k = 0; k * w.weights(var) <= budget; ++k) {
      e(var) = k;
      self(self, var + 1, budget - k * w.weights(var));
    }
    e(var) = 0;
  };
  walk(walk, 0, cutoff);
  return count;
}

}  // namespace bassinv
