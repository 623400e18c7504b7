#include "probarg/model.hpp"

#include <algorithm>
#include <set>

namespace probarg {

Baf::Baf(std::vector<Argument> arguments,
         std::vector<std::pair<std::string, std::string>> attacks,
         std::vector<std::pair<std::string, std::string>> supports)
    : arguments_(std::move(arguments)) {
  for (int i = 0; i < static_cast<int>(arguments_.size()); ++i) {
    if (arguments_[i].id.empty()) {
      throw DomainError("argument id must be nonempty");
    }
    if (!index_.emplace(arguments_[i].id, i).second) {
      throw DomainError("duplicate argument id '" + arguments_[i].id + "'");
    }
  }
  auto resolve_pairs = [&](const std::vector<std::pair<std::string, std::string>>& named,
                           const char* kind) {
    std::vector<std::pair<int, int>> out;
    std::set<std::pair<int, int>> seen;
    out.reserve(named.size());
    for (const auto& [from, to] : named) {
      const std::pair<int, int> pair{index_of(from), index_of(to)};
      if (!seen.insert(pair).second) {
        throw DomainError(std::string("duplicate ") + kind + " pair (" + from + ", " + to + ")");
      }
      out.push_back(pair);
    }
    return out;
  };
  attacks_ = resolve_pairs(attacks, "attack");
  supports_ = resolve_pairs(supports, "support");
}

int Baf::index_of(const std::string& id) const {
  const auto it = index_.find(id);
  if (it == index_.end()) {
    throw DomainError("unknown argument id '" + id + "'");
  }
  return it->second;
}

std::vector<int> Baf::attackers_of(int target) const {
  std::vector<int> out;
  for (const auto& [attacker, attacked] : attacks_) {
    if (attacked == target) {
      out.push_back(attacker);
    }
  }
  return out;
}

void require_same_baf(const BafPtr& a, const BafPtr& b) {
  if (a == b) {
    return;
  }
  // Distinct objects are accepted when structurally identical on arguments.
  if (a && b && a->size() == b->size()) {
    bool same = true;
    for (int i = 0; i < a->size(); ++i) {
      if (a->argument(i).id != b->argument(i).id) {
        same = false;
        break;
      }
    }
    if (same) {
      return;
    }
  }
  throw DomainError("operands belong to different argumentation frameworks");
}

ProbabilityLabelling::ProbabilityLabelling(BafPtr baf, Eigen::VectorXd values)
    : baf_(std::move(baf)), values_(std::move(values)) {
  if (!baf_) {
    throw DomainError("labelling requires a framework");
  }
  if (values_.size() != baf_->size()) {
    throw DomainError("labelling size does not match framework");
  }
  for (Eigen::Index i = 0; i < values_.size(); ++i) {
    if (!(values_(i) >= 0.0 && values_(i) <= 1.0)) {
      throw DomainError("labelling value for '" + baf_->argument(static_cast<int>(i)).id +
                        "' outside [0,1]");
    }
  }
}

ProbabilityFunction::ProbabilityFunction(BafPtr baf, Eigen::VectorXd probs, int world_cap)
    : baf_(std::move(baf)), probs_(std::move(probs)) {
  if (!baf_) {
    throw DomainError("distribution requires a framework");
  }
  if (baf_->size() > world_cap) {
    throw ResourceError("framework with " + std::to_string(baf_->size()) +
                        " arguments exceeds the world cap of " + std::to_string(world_cap));
  }
  if (static_cast<std::uint64_t>(probs_.size()) != baf_->world_count()) {
    throw DomainError("distribution must have one entry per world");
  }
  double sum = 0.0;
  for (Eigen::Index w = 0; w < probs_.size(); ++w) {
    if (!(probs_(w) >= 0.0)) {
      // Tiny negative solver residue is clamped; real negatives are rejected.
      if (probs_(w) > -kNormalizationTol) {
        probs_(w) = 0.0;
      } else {
        throw DomainError("negative world probability");
      }
    }
    sum += probs_(w);
  }
  if (std::abs(sum - 1.0) > kNormalizationTol) {
    throw DomainError("world probabilities sum to " + std::to_string(sum) + ", expected 1");
  }
  if (sum != 1.0 && sum > 0.0) {
    probs_ /= sum;
  }
}

double marginal(const ProbabilityFunction& p, int argument_index) {
  if (argument_index < 0 || argument_index >= p.baf()->size()) {
    throw DomainError("argument index out of range");
  }
  const WorldMask bit = WorldMask{1} << argument_index;
  const auto& probs = p.probs();
  double sum = 0.0;
  for (Eigen::Index w = 0; w < probs.size(); ++w) {
    if (static_cast<WorldMask>(w) & bit) {
      sum += probs(w);
    }
  }
  return sum;
}

double marginal(const ProbabilityFunction& p, const std::string& id) {
  return marginal(p, p.baf()->index_of(id));
}

ProbabilityLabelling to_labelling(const ProbabilityFunction& p) {
  const int n = p.baf()->size();
  Eigen::VectorXd values = Eigen::VectorXd::Zero(n);
  const auto& probs = p.probs();
  for (Eigen::Index w = 0; w < probs.size(); ++w) {
    if (probs(w) == 0.0) {
      continue;
    }
    WorldMask mask = static_cast<WorldMask>(w);
    while (mask) {
      const int i = __builtin_ctzll(mask);
      values(i) += probs(w);
      mask &= mask - 1;
    }
  }
  // Accumulated marginals can overshoot 1 by a few ulps.
  for (int i = 0; i < n; ++i) {
    values(i) = std::min(1.0, std::max(0.0, values(i)));
  }
  return ProbabilityLabelling(p.baf(), std::move(values));
}

bool atomically_equivalent(const ProbabilityFunction& p1, const ProbabilityFunction& p2,
                           double tol) {
  require_same_baf(p1.baf(), p2.baf());
  const ProbabilityLabelling l1 = to_labelling(p1);
  const ProbabilityLabelling l2 = to_labelling(p2);
  return ((l1.values() - l2.values()).cwiseAbs().maxCoeff() <= tol);
}

ProbabilityFunction canonical_lift(const ProbabilityLabelling& labelling, int world_cap) {
  const int n = labelling.size();
  if (n > world_cap) {
    throw ResourceError("framework with " + std::to_string(n) +
                        " arguments exceeds the world cap of " + std::to_string(world_cap));
  }
  const std::uint64_t worlds = std::uint64_t{1} << n;
  Eigen::VectorXd probs(static_cast<Eigen::Index>(worlds));
  probs(0) = 1.0;
  // Extend the product one argument at a time: prefix w of width k splits
  // into (w, w | 1<<k) with weights (1 - L_k, L_k).
  std::uint64_t filled = 1;
  for (int k = 0; k < n; ++k) {
    const double on = labelling.value(k);
    const double off = 1.0 - on;
    for (std::uint64_t w = 0; w < filled; ++w) {
      const double base = probs(static_cast<Eigen::Index>(w));
      probs(static_cast<Eigen::Index>(w)) = base * off;
      probs(static_cast<Eigen::Index>(w | (std::uint64_t{1} << k))) = base * on;
    }
    filled <<= 1;
  }
  return ProbabilityFunction(labelling.baf(), std::move(probs), world_cap);
}

ProbabilityFunction point_mass(BafPtr baf, WorldMask world, int world_cap) {
  if (!baf) {
    throw DomainError("point mass requires a framework");
  }
  if (world >= (WorldMask{1} << baf->size())) {
    throw DomainError("world mask wider than the framework");
  }
  Eigen::VectorXd probs = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(baf->world_count()));
  probs(static_cast<Eigen::Index>(world)) = 1.0;
  return ProbabilityFunction(std::move(baf), std::move(probs), world_cap);
}

}  // namespace probarg
