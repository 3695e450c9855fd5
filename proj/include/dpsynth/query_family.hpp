#pragma once

#include <functional>
#include <string>
#include <vector>

#include "dpsynth/domain.hpp"

namespace dpsynth {

/// A named test function Omega -> [-1, 1].
struct QueryFunction {
  std::string name;
  std::function<double(const Point&)> eval;
};

/// Finite family of test functions over one domain.
class QueryFamily {
 public:
  QueryFamily(DomainSpec domain, std::vector<QueryFunction> functions,
              int degree = 0)
      : domain_(domain), functions_(std::move(functions)), degree_(degree) {}

  const DomainSpec& domain() const { return domain_; }
  const std::vector<QueryFunction>& functions() const { return functions_; }
  std::size_t size() const { return functions_.size(); }
  int degree() const { return degree_; }

 private:
  DomainSpec domain_;
  std::vector<QueryFunction> functions_;
  int degree_;
};

/// Marginal-style family of degree d.
///
/// Boolean grid (t = 2): one monomial prod_{i in S} x_i per coordinate subset
/// S with |S| <= d; the empty subset contributes the constant 1.
/// t-ary grid (t > 2): the constant plus one indicator 1{x_S = v} per subset
/// 1 <= |S| <= d and value assignment v in {0..t-1}^|S|.
/// Cube: the constant, the first moments 2*x_i - 1, and axis-aligned box
/// indicators on a per-coordinate grid of `grid` equal cells for subsets of
/// up to d coordinates.
QueryFamily build_marginal_family(const DomainSpec& domain, int degree,
                                  int grid = 4);

/// One 0/1 indicator per enumerated point of a small discrete domain.
QueryFamily build_indicator_family(const DomainSpec& domain,
                                   std::uint64_t cap = kDefaultEnumerationCap);

/// (1/n) sum_i f(x_i) for every f in the family, in family order.
std::vector<double> empirical_average(const QueryFamily& family,
                                      const Dataset& data);

}  // namespace dpsynth
