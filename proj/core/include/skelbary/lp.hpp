#ifndef SKELBARY_LP_HPP
#define SKELBARY_LP_HPP

#include <optional>
#include <vector>

#include "skelbary/vec.hpp"

namespace skelbary {

/// Equality-form feasibility problem: A x = b, x >= 0.
struct StandardLP {
  Mat A;
  Vec b;
};

enum class LPStatus { Feasible, Infeasible };

/// Both branches carry verifiable evidence: a feasible point with exact
/// zero residual, or a Farkas vector y with y'A <= 0 and y'b > 0.
struct LPResult {
  LPStatus status = LPStatus::Infeasible;
  std::optional<Vec> point;
  std::optional<Vec> farkas;

  bool feasible() const { return status == LPStatus::Feasible; }
};

/// Phase-I simplex with Bland's rule; exact rational arithmetic,
/// deterministic for identical input.
LPResult feasible(const StandardLP& lp);

struct MaxSlackResult {
  LPResult lp;
  Rational slack;        // max over feasible x of min_{j in S} x_j
  bool unbounded = false;
};

/// Maximizes the minimum of the designated variables over the feasible
/// region. A positive optimum certifies a point with every designated
/// coordinate strictly positive.
MaxSlackResult max_slack(const StandardLP& lp,
                         const std::vector<int>& slack_columns);

/// Exact residual checks used by callers and tests.
bool verify_feasible_point(const StandardLP& lp, const Vec& x);
bool verify_farkas(const StandardLP& lp, const Vec& y);

}  // namespace skelbary

#endif
