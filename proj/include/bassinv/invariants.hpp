#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bassinv/rational.hpp"
#include "bassinv/resgraph.hpp"
#include "bassinv/singularity.hpp"

namespace bassinv {

/// Integer value known exactly, up to an interval, or not at all. A missing
/// endpoint means unbounded on that side.
class Bound {
 public:
  enum class Kind { Exact, Interval, Unknown };

  static Bound exact(std::int64_t v) { return Bound(v, v); }
  static Bound interval(std::int64_t lo, std::int64_t hi);
  static Bound at_least(std::int64_t lo) { return Bound(lo, std::nullopt); }
  static Bound at_most(std::int64_t hi) { return Bound(std::nullopt, hi); }
  static Bound unknown() { return Bound(std::nullopt, std::nullopt); }

  Kind kind() const {
    if (lo_ && hi_ && *lo_ == *hi_) return Kind::Exact;
    if (!lo_ && !hi_) return Kind::Unknown;
    return Kind::Interval;
  }
  bool is_exact() const { return kind() == Kind::Exact; }
  std::int64_t value() const;
  const std::optional<std::int64_t>& lo() const { return lo_; }
  const std::optional<std::int64_t>& hi() const { return hi_; }

  bool contains(std::int64_t v) const { return (!lo_ || *lo_ <= v) && (!hi_ || v <= *hi_); }
  bool subset_of(const Bound& other) const;

  /// Nullopt when the intersection is empty.
  std::optional<Bound> intersect(const Bound& other) const;

  friend bool operator==(const Bound& a, const Bound& b) { return a.lo_ == b.lo_ && a.hi_ == b.hi_; }
  friend bool operator!=(const Bound& a, const Bound& b) { return !(a == b); }

 private:
  Bound(std::optional<std::int64_t> lo, std::optional<std::int64_t> hi) : lo_(lo), hi_(hi) {}

  std::optional<std::int64_t> lo_;
  std::optional<std::int64_t> hi_;
};

std::string to_string(const Bound& b);

struct TableInputs {
  std::int64_t tau = 0;
  std::optional<std::int64_t> p_g;
  std::int64_t g = 0;
  std::int64_t l = 0;
  bool graded = false;
};

/// Generalized du Bois invariants b^{p,q} (p >= 0, q in Z) and chi^p of a
/// 2-dimensional isolated hypersurface singularity. Only b^{0,1}, b^{1,0},
/// b^{1,1}, b^{2,0} are stored; the tau entries b^{1-q,q} = b^{2-q,q} for
/// q < 0 and the vanishing entries follow from fixed rules.
class DuBoisTable {
 public:
  explicit DuBoisTable(TableInputs inputs);

  const TableInputs& inputs() const noexcept { return inputs_; }

  Bound entry(int p, int q) const;

  /// True for entries fixed to 0 by the vanishing rules (not computed).
  bool is_forced_zero(int p, int q) const;

  Bound chi(int p) const;

  /// b^{0,1} - b^{1,1} when both are exact.
  std::optional<std::int64_t> alpha() const;

  /// Intersects the stored bound; returns true if it shrank. Throws
  /// InconsistentDeduction when the result is empty.
  bool refine_entry(int p, int q, const Bound& bound);
  bool refine_chi(int p, const Bound& bound);

  /// True when b^{0,1}, b^{1,0}, b^{1,1}, b^{2,0} and chi^0..chi^2 are exact.
  bool fully_exact() const;

  bool graph_negative_definite = true;

  static constexpr std::pair<int, int> kFreeEntries[] = {{0, 1}, {1, 0}, {1, 1}, {2, 0}};

 private:
  TableInputs inputs_;
  std::map<std::pair<int, int>, Bound> entries_;
  std::map<int, Bound> chi_;
};

/// Fills the table from tau, p_g, g, l. `p_g` may be absent for fibers that
/// are not quasi-homogeneous; then b^{0,1} and chi^0, chi^2 stay unknown.
/// Throws InconsistentInputs unless g + l <= p_g <= tau.
DuBoisTable build_table(std::int64_t tau, std::optional<std::int64_t> p_g, std::int64_t g, std::int64_t l,
                        bool graded);

/// Table for an analyzed singularity; graded iff weights were found.
DuBoisTable table_from_profile(const SingularityProfile& profile, const GraphInvariants& graph);

struct Fiber {
  Rational value;
  SingularityProfile profile;
  std::optional<DuBoisTable> table;
};

struct FamilyReport {
  RationalPolynomial family;
  std::vector<Fiber> fibers;
  std::size_t graded_fiber_index = 0;
  bool chi_assumed_invariant = false;
};

/// Analyzes each fiber (in ascending parameter order, duplicates removed)
/// and, when a graph is given, builds its table. The first quasi-homogeneous
/// fiber becomes the graded fiber. Throws NoGradedFiber.
FamilyReport analyze_family(const RationalPolynomial& family, std::vector<Rational> values,
                            const std::optional<GraphInvariants>& graph, bool chi_assumed_invariant,
                            const AnalyzeOptions& options = {});

/// Transports chi^p from the graded fiber to every fiber and tightens
/// b^{1,0}, b^{1,1}, b^{0,1}, b^{2,0} by
///   chi^0 = -b^{0,1},  chi^1 = b^{1,0} - b^{1,1},  chi^2 = b^{2,0} - tau,
///   0 <= b^{1,0} <= tau
/// until nothing changes. Throws InconsistentDeduction on an empty interval.
FamilyReport deduce_family(FamilyReport report);

enum class TriState { Yes, No, Undetermined };

enum class BassAnswer {
  Negative,           // NK_0 = 0 and NK_{-1} != 0
  NotCounterexample,  // NK_0 = 0 and NK_{-1} = 0
  CriterionNotMet,    // NK_0 != 0
  Undetermined,
};

struct BassVerdict {
  TriState nk0_vanishes = TriState::Undetermined;
  Bound nk_minus1_rank = Bound::unknown();
  BassAnswer answer = BassAnswer::Undetermined;
  std::string k0_polynomial_ring_description;
  std::string summary;
};

/// NK_0 is b^{1,1} copies of tQ[t], NK_{-1} is b^{0,1} copies. Throws
/// VerdictRefused when the table came from a graph that is not negative
/// definite.
BassVerdict bass_verdict(const DuBoisTable& table);

std::string to_string(TriState s);
std::string to_string(BassAnswer a);

}  // namespace bassinv
