#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "bassinv/groebner.hpp"
#include "bassinv/polynomial.hpp"
#include "bassinv/weights.hpp"

namespace bassinv {

struct AnalyzeOptions {
  MonomialOrder order = MonomialOrder::grevlex();
  std::size_t staircase_limit = kDefaultStaircaseLimit;
  /// Overrides the weighted-degree cutoff d - sum(w) used for p_g.
  std::optional<std::int64_t> genus_cutoff;
};

/// Numerical profile of an isolated hypersurface singularity at the origin.
struct SingularityProfile {
  enum class Status { IsolatedAtOrigin, Smooth };

  RationalPolynomial f;
  Status status = Status::IsolatedAtOrigin;
  std::size_t milnor = 0;
  std::size_t tjurina = 0;
  std::optional<WeightSystem> weights;
  std::optional<std::size_t> geometric_genus;
  std::optional<std::int64_t> genus_cutoff;
  // Lengths of tors(Omega^2_R) and Omega^3_R; both equal tau.
  std::size_t torsion_omega2_length = 0;
  std::size_t omega3_length = 0;
  // The Jacobian ideal has zeros away from the origin, so mu was computed
  // as a local length instead of a global quotient dimension.
  bool milnor_localized = false;

  bool smooth() const { return status == Status::Smooth; }
};

std::vector<RationalPolynomial> jacobian_ideal(const RationalPolynomial& f);

/// Certifies that the singular locus of {f = 0} is exactly the origin.
/// Throws SmoothPoint, NotIsolated or SingularLocusNotAtOrigin.
GroebnerBasis<Rational> certified_tjurina_basis(const RationalPolynomial& f, const AnalyzeOptions& options = {});

std::size_t tjurina_number(const RationalPolynomial& f, const AnalyzeOptions& options = {});

/// Local Milnor number at the origin. Same errors as tjurina_number.
std::size_t milnor_number(const RationalPolynomial& f, const AnalyzeOptions& options = {});

/// Length of the localization at the origin of Q[x]/I, computed as the
/// stable value of dim Q[x]/(I + m^N). Requires the origin to be an
/// isolated point of V(I).
std::size_t local_length_at_origin(const GroebnerBasis<Rational>& ideal, std::size_t limit = kDefaultStaircaseLimit);

/// Number of standard monomials of the Jacobian ideal of weighted degree
/// at most d - sum(w) (or the cutoff override). Throws NotQuasiHomogeneous.
std::size_t geometric_genus_qh(const RationalPolynomial& f, const WeightSystem& w, const AnalyzeOptions& options = {});

SingularityProfile analyze(const RationalPolynomial& f, const AnalyzeOptions& options = {});

}  // namespace bassinv
