#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "probarg/errors.hpp"

namespace probarg {

/// Upper bound on |arguments| for dense distributions over 2^n worlds.
/// Labelling operations are not capped.
constexpr int kDefaultWorldCap = 20;

/// Normalization slack accepted on distribution construction; deviations
/// below it are renormalized, above it rejected.
constexpr double kNormalizationTol = 1e-9;

struct Argument {
  std::string id;     ///< short unique token
  std::string text;   ///< optional human-readable content

  explicit Argument(std::string id_, std::string text_ = "")
      : id(std::move(id_)), text(std::move(text_)) {}
};

/// A world is a subset of arguments, encoded as a bitmask over the
/// framework's argument ordering (bit i set <=> argument i accepted).
using WorldMask = std::uint64_t;

/// Bipolar argumentation framework: ordered arguments plus attack and
/// support relations (stored as index pairs). Immutable after construction.
class Baf {
public:
  Baf(std::vector<Argument> arguments,
      std::vector<std::pair<std::string, std::string>> attacks,
      std::vector<std::pair<std::string, std::string>> supports = {});

  int size() const { return static_cast<int>(arguments_.size()); }
  const std::vector<Argument>& arguments() const { return arguments_; }
  const Argument& argument(int index) const { return arguments_.at(index); }

  /// (attacker, attacked) index pairs.
  const std::vector<std::pair<int, int>>& attacks() const { return attacks_; }
  const std::vector<std::pair<int, int>>& supports() const { return supports_; }

  bool has_argument(const std::string& id) const { return index_.count(id) > 0; }
  /// Throws DomainError for unknown ids.
  int index_of(const std::string& id) const;

  /// Indices of arguments attacking `target`.
  std::vector<int> attackers_of(int target) const;

  std::uint64_t world_count() const { return std::uint64_t{1} << size(); }

private:
  std::vector<Argument> arguments_;
  std::vector<std::pair<int, int>> attacks_;
  std::vector<std::pair<int, int>> supports_;
  std::unordered_map<std::string, int> index_;
};

using BafPtr = std::shared_ptr<const Baf>;

/// Direct belief assignment argument -> [0,1]; the compact epistemic state.
class ProbabilityLabelling {
public:
  ProbabilityLabelling(BafPtr baf, Eigen::VectorXd values);

  const BafPtr& baf() const { return baf_; }
  const Eigen::VectorXd& values() const { return values_; }
  double value(int argument_index) const { return values_(argument_index); }
  double value(const std::string& id) const { return values_(baf_->index_of(id)); }
  int size() const { return static_cast<int>(values_.size()); }

private:
  BafPtr baf_;
  Eigen::VectorXd values_;
};

/// Normalized nonnegative distribution over all 2^n worlds, dense and
/// indexed by world bitmask.
class ProbabilityFunction {
public:
  /// Renormalizes deviations below kNormalizationTol, rejects larger ones.
  /// Throws ResourceError when the framework exceeds `world_cap`.
  ProbabilityFunction(BafPtr baf, Eigen::VectorXd probs, int world_cap = kDefaultWorldCap);

  const BafPtr& baf() const { return baf_; }
  const Eigen::VectorXd& probs() const { return probs_; }
  double prob(WorldMask world) const { return probs_(static_cast<Eigen::Index>(world)); }

private:
  BafPtr baf_;
  Eigen::VectorXd probs_;
};

/// Belief in one argument: total probability of the worlds accepting it.
double marginal(const ProbabilityFunction& p, int argument_index);
double marginal(const ProbabilityFunction& p, const std::string& id);

/// All marginals at once; the representative labelling of [P].
ProbabilityLabelling to_labelling(const ProbabilityFunction& p);

/// True iff every argument's marginal agrees within tol.
/// Throws DomainError if the frameworks differ.
bool atomically_equivalent(const ProbabilityFunction& p1, const ProbabilityFunction& p2,
                           double tol = 1e-9);

/// Deterministic representative of the labelling's equivalence class:
/// the independent product P(w) = prod_{A in w} L(A) * prod_{A not in w} (1 - L(A)).
/// Its labelling equals L exactly.
ProbabilityFunction canonical_lift(const ProbabilityLabelling& labelling,
                                   int world_cap = kDefaultWorldCap);

/// Point mass on a single world.
ProbabilityFunction point_mass(BafPtr baf, WorldMask world, int world_cap = kDefaultWorldCap);

void require_same_baf(const BafPtr& a, const BafPtr& b);

}  // namespace probarg
