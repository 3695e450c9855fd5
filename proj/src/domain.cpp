#include "dpsynth/domain.hpp"

#include <cmath>
#include <utility>

namespace dpsynth {

DomainSpec DomainSpec::discrete(int levels, int dimension) {
  if (levels < 2) throw ParameterError("discrete domain needs t >= 2");
  if (dimension < 1) throw ParameterError("domain dimension must be positive");
  return DomainSpec(DomainKind::Discrete, levels, dimension);
}

DomainSpec DomainSpec::continuous(int dimension) {
  if (dimension < 1) throw ParameterError("domain dimension must be positive");
  return DomainSpec(DomainKind::Continuous, 0, dimension);
}

int DomainSpec::levels() const {
  if (kind_ != DomainKind::Discrete)
    throw DomainKindError("levels() is only defined on discrete domains");
  return levels_;
}

double DomainSpec::cardinality() const {
  if (kind_ != DomainKind::Discrete)
    throw DomainKindError("cardinality() is only defined on discrete domains");
  return std::pow(static_cast<double>(levels_), dimension_);
}

bool DomainSpec::contains(const Point& x) const {
  if (static_cast<int>(x.size()) != dimension_) return false;
  if (kind_ == DomainKind::Discrete) {
    for (double v : x) {
      if (v != std::floor(v)) return false;
      if (v < 0.0 || v >= static_cast<double>(levels_)) return false;
    }
  } else {
    for (double v : x) {
      if (!(v >= 0.0 && v <= 1.0)) return false;
    }
  }
  return true;
}

bool DomainSpec::operator==(const DomainSpec& other) const {
  return kind_ == other.kind_ && dimension_ == other.dimension_ &&
         (kind_ == DomainKind::Continuous || levels_ == other.levels_);
}

Dataset::Dataset(DomainSpec domain, std::vector<Point> rows)
    : domain_(domain), rows_(std::move(rows)) {}

Dataset Dataset::create(DomainSpec domain, std::vector<Point> rows) {
  if (rows.empty()) throw ParameterError("dataset needs at least one row");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!domain.contains(rows[i]))
      throw DomainMismatchError("dataset row " + std::to_string(i + 1) +
                                " is outside the domain");
  }
  return Dataset(domain, std::move(rows));
}

std::vector<Point> enumerate_domain(const DomainSpec& domain,
                                    std::uint64_t cap) {
  if (domain.kind() != DomainKind::Discrete)
    throw DomainKindError("cannot enumerate a continuous domain");
  const int p = domain.dimension();
  const int t = domain.levels();
  if (domain.cardinality() > static_cast<double>(cap))
    throw CapExceededError("domain has more than " + std::to_string(cap) +
                           " points");
  const auto total = static_cast<std::uint64_t>(domain.cardinality() + 0.5);

  std::vector<Point> points;
  points.reserve(total);
  Point current(p, 0.0);
  for (std::uint64_t i = 0; i < total; ++i) {
    points.push_back(current);
    for (int j = p - 1; j >= 0; --j) {  // lexicographic: last coordinate fastest
      if (current[j] + 1.0 < static_cast<double>(t)) {
        current[j] += 1.0;
        break;
      }
      current[j] = 0.0;
    }
  }
  return points;
}

std::uint64_t point_index(const DomainSpec& domain, const Point& x) {
  if (domain.kind() != DomainKind::Discrete)
    throw DomainKindError("point_index is only defined on discrete domains");
  if (!domain.contains(x))
    throw DomainMismatchError("point is outside the domain");
  const auto t = static_cast<std::uint64_t>(domain.levels());
  std::uint64_t index = 0;
  for (double v : x) index = index * t + static_cast<std::uint64_t>(v);
  return index;
}

}  // namespace dpsynth
