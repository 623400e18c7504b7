#pragma once

#include <string>
#include <vector>

#include "probarg/model.hpp"
#include "probarg/rational.hpp"

namespace probarg {

enum class Relation { Le, Ge, Eq };

struct ConstraintTerm {
  int argument;          ///< index into the framework's argument ordering
  Rational coefficient;
};

/// One linear atomic constraint: sum of coefficient * belief(argument)
/// related to a bound. Coefficients and bound are exact rationals; terms
/// are kept sorted by argument index with zero coefficients dropped.
class LinearAtomicConstraint {
public:
  LinearAtomicConstraint(std::vector<ConstraintTerm> terms, Relation relation, Rational bound);

  const std::vector<ConstraintTerm>& terms() const { return terms_; }
  Relation relation() const { return relation_; }
  const Rational& bound() const { return bound_; }

  /// Left-hand side evaluated against labelling values.
  double lhs(const Eigen::VectorXd& values) const;

  bool operator==(const LinearAtomicConstraint& other) const;

private:
  std::vector<ConstraintTerm> terms_;
  Relation relation_;
  Rational bound_;
};

class ConstraintSet {
public:
  explicit ConstraintSet(BafPtr baf, std::vector<LinearAtomicConstraint> constraints = {});

  const BafPtr& baf() const { return baf_; }
  const std::vector<LinearAtomicConstraint>& constraints() const { return constraints_; }
  std::size_t size() const { return constraints_.size(); }
  bool empty() const { return constraints_.empty(); }

  void add(LinearAtomicConstraint c);
  /// Union of two sets over the same framework.
  ConstraintSet merged_with(const ConstraintSet& other) const;

private:
  BafPtr baf_;
  std::vector<LinearAtomicConstraint> constraints_;
};

/// Parses the line-oriented constraint grammar:
///   constraint := sum rel number
///   sum        := term (("+"|"-") term)*
///   term       := [number "*"]? "p(" ident ")"
///   rel        := "<=" | ">=" | "="
///   number     := decimal | integer "/" integer
/// One constraint per line, '#' starts a comment. A leading '-' before the
/// first term or a number is also accepted so rendered normal forms
/// re-parse. Coefficients are exact: decimals become base-10 rationals.
ConstraintSet parse_constraints(const std::string& text, BafPtr baf);

/// Inverse pretty-printer; parse_constraints(render(cs), baf) == cs.
std::string render(const LinearAtomicConstraint& c, const Baf& baf);
std::string render(const ConstraintSet& cs);

/// Rewrites into an equivalent sequence of <= constraints: GE rows are
/// negated, EQ rows split into a LE/GE pair.
std::vector<LinearAtomicConstraint> normalize(const LinearAtomicConstraint& c);

bool satisfied_by_labelling(const LinearAtomicConstraint& c, const ProbabilityLabelling& l,
                            double tol = 1e-9);
bool satisfied_by_labelling(const ConstraintSet& cs, const ProbabilityLabelling& l,
                            double tol = 1e-9);

/// Satisfaction over a distribution is satisfaction of its marginals.
bool satisfied_by_distribution(const LinearAtomicConstraint& c, const ProbabilityFunction& p,
                               double tol = 1e-9);
bool satisfied_by_distribution(const ConstraintSet& cs, const ProbabilityFunction& p,
                               double tol = 1e-9);

/// Per attack (A, B): belief(B) + belief(A) <= 1.
ConstraintSet generate_coherence(BafPtr baf);

/// Per attacked argument X: belief(X) + (1/|Att(X)|) * sum of attacker
/// beliefs = 1, with exact rational weights. Unattacked arguments produce
/// no constraint.
ConstraintSet generate_dual_average(BafPtr baf);

/// Multiplies coefficients and bound by a positive rational; the satisfied
/// set is unchanged. Throws DomainError for factor <= 0.
LinearAtomicConstraint scale(const LinearAtomicConstraint& c, const Rational& factor);

/// True iff every labelling in [0,1]^n satisfying `cs` also satisfies `c`,
/// decided by maximizing c's left-hand side over the feasible polytope.
/// Throws DomainError when `cs` itself is unsatisfiable.
bool implied_by(const ConstraintSet& cs, const LinearAtomicConstraint& c, double tol = 1e-6);

// Forward declaration; conversions to solver geometry live with the set.
struct PolytopeSpec;

/// Feasible labellings of `cs`: the box [0,1]^n cut by its rows.
PolytopeSpec labelling_polytope(const ConstraintSet& cs);

/// Feasible distributions of `cs`: the 2^n simplex cut by world-summed rows.
/// Throws ResourceError beyond `world_cap`.
PolytopeSpec world_polytope(const ConstraintSet& cs, int world_cap = kDefaultWorldCap);

}  // namespace probarg
