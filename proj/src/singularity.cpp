#include "bassinv/singularity.hpp"

namespace bassinv {

namespace {

RationalPolynomial parameter_free(const RationalPolynomial& f) {
  if (!f.ring()->parameter) return f;
  if (f.has_parameter()) throw PreconditionViolation("polynomial still depends on the deformation parameter");
  return drop_parameter(f);
}

std::vector<RationalPolynomial> monomials_of_degree(const RingPtr& ring, int degree) {
  std::vector<RationalPolynomial> out;
  const Eigen::Index n = ring->size();
  Exponents e = Exponents::Zero(n);
  auto walk = [&](auto&& self, Eigen::Index var, int remaining) -> void {
    if (var == n - 1) {
      e(var) = remaining;
      out.push_back(RationalPolynomial::monomial(ring, e));
      return;
    }
    for (int k = remaining; k >= 0; --k) {
      e(var) = k;
      self(self, var + 1, remaining - k);
    }
  };
  if (n > 0) walk(walk, 0, degree);
  return out;
}

}  // namespace

Polynomial<Rational> primitive_part(const Polynomial<Rational>& p) {
  if (p.is_zero()) return p;
  Integer denominators(1);
  Integer numerators(0);
  for (const auto& t : p.terms()) {
    denominators = boost::multiprecision::lcm(denominators, denominator(t.coefficient));
    numerators = boost::multiprecision::gcd(numerators, numerator(t.coefficient));
  }
  Rational scale(denominators, numerators);
  if (p.leading_coefficient() < 0) scale = -scale;
  return p * scale;
}

std::vector<RationalPolynomial> jacobian_ideal(const RationalPolynomial& f) {
  const RationalPolynomial g = parameter_free(f);
  std::vector<RationalPolynomial> partials;
  for (Eigen::Index i = 0; i < g.ring()->size(); ++i) partials.push_back(partial_derivative(g, i));
  return partials;
}

GroebnerBasis<Rational> certified_tjurina_basis(const RationalPolynomial& f, const AnalyzeOptions& options) {
  const RationalPolynomial g = parameter_free(f);
  std::vector<RationalPolynomial> generators = jacobian_ideal(g);
  generators.insert(generators.begin(), g);
  GroebnerBasis<Rational> basis = buchberger(generators, options.order);
  if (basis.is_unit_ideal()) throw SmoothPoint("the hypersurface " + to_string(g) + " is smooth");
  if (!quotient_dimension(basis, options.staircase_limit)) {
    throw NotIsolated("the singular locus of " + to_string(g) + " is positive-dimensional");
  }
  if (!supported_only_at_origin(basis, options.staircase_limit)) {
    throw SingularLocusNotAtOrigin("the singular locus of " + to_string(g) + " is not the origin alone");
  }
  return basis;
}

std::size_t tjurina_number(const RationalPolynomial& f, const AnalyzeOptions& options) {
  return *quotient_dimension(certified_tjurina_basis(f, options), options.staircase_limit);
}

std::size_t local_length_at_origin(const GroebnerBasis<Rational>& ideal, std::size_t limit) {
  std::size_t previous = 0;
  for (int degree = 1; static_cast<std::size_t>(degree) <= limit; ++degree) {
    std::vector<RationalPolynomial> generators = ideal.generators();
    for (auto& m : monomials_of_degree(ideal.ring(), degree)) generators.push_back(std::move(m));
    const std::size_t current = *quotient_dimension(buchberger(generators, ideal.order()), limit);
    // m^N = m^(N+1) locally, so by Nakayama m^N vanishes in the local ring.
    if (current == previous) return current;
    previous = current;
  }
  throw StaircaseLimitExceeded("local length did not stabilize");
}

namespace {

std::size_t milnor_from_jacobian(const RationalPolynomial& g, const AnalyzeOptions& options, bool& localized) {
  const GroebnerBasis<Rational> jacobian = buchberger(jacobian_ideal(g), options.order);
  localized = false;
  if (quotient_dimension(jacobian, options.staircase_limit) && supported_only_at_origin(jacobian, options.staircase_limit)) {
    return *quotient_dimension(jacobian, options.staircase_limit);
  }
  localized = true;
  return local_length_at_origin(jacobian, options.staircase_limit);
}

}  // namespace

std::size_t milnor_number(const RationalPolynomial& f, const AnalyzeOptions& options) {
  const RationalPolynomial g = parameter_free(f);
  certified_tjurina_basis(g, options);
  bool localized = false;
  return milnor_from_jacobian(g, options, localized);
}

std::size_t geometric_genus_qh(const RationalPolynomial& f, const WeightSystem& w, const AnalyzeOptions& options) {
  const RationalPolynomial g = parameter_free(f);
  if (g.is_zero() || !euler_identity_check(g, w)) {
    throw NotQuasiHomogeneous(to_string(g) + " is not quasi-homogeneous for weights " + to_string(w));
  }
  const MonomialOrder order = MonomialOrder::weighted_grevlex(w.weights);
  const GroebnerBasis<Rational> jacobian = buchberger(jacobian_ideal(g), order);
  if (!quotient_dimension(jacobian, options.staircase_limit)) {
    throw NotIsolated("the Jacobian ideal of " + to_string(g) + " is not zero-dimensional");
  }
  const std::int64_t cutoff = options.genus_cutoff.value_or(w.degree - w.weight_sum());
  return graded_staircase_count(jacobian, w, cutoff, options.staircase_limit);
}

SingularityProfile analyze(const RationalPolynomial& f, const AnalyzeOptions& options) {
  SingularityProfile profile;
  profile.f = parameter_free(f);
  const RationalPolynomial& g = profile.f;
  if (!g.is_zero() && !g.is_constant()) profile.weights = find_weights(g);

  std::optional<GroebnerBasis<Rational>> tjurina;
  try {
    tjurina = certified_tjurina_basis(g, options);
  } catch (const SmoothPoint&) {
    profile.status = SingularityProfile::Status::Smooth;
    return profile;
  }
  profile.tjurina = *quotient_dimension(*tjurina, options.staircase_limit);
  profile.milnor = milnor_from_jacobian(g, options, profile.milnor_localized);
  profile.torsion_omega2_length = profile.tjurina;
  profile.omega3_length = profile.tjurina;

  if (profile.weights && euler_identity_check(g, *profile.weights)) {
    profile.genus_cutoff = options.genus_cutoff.value_or(profile.weights->degree - profile.weights->weight_sum());
    profile.geometric_genus = geometric_genus_qh(g, *profile.weights, options);
  } else {
    profile.weights.reset();
  }
  return profile;
}

std::string to_string(const WeightSystem& w) {
  std::string s = "(";
  for (Eigen::Index i = 0; i < w.weights.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(w.weights(i));
  }
  return s + ")/" + std::to_string(w.degree);
}

}  // namespace bassinv
