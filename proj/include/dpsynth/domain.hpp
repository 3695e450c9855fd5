#pragma once

#include <cstdint>
#include <vector>

#include "dpsynth/errors.hpp"

namespace dpsynth {

/// A record: p coordinates. Discrete domains store integer levels 0..t-1 as
/// doubles; continuous domains store values in [0,1].
using Point = std::vector<double>;

enum class DomainKind { Discrete, Continuous };

/// Default cap on the number of points materialized by enumeration or lattice
/// discretization.
inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

/// Sample space description: either the grid {0..t-1}^p or the cube [0,1]^p.
class DomainSpec {
 public:
  static DomainSpec discrete(int levels, int dimension);
  static DomainSpec continuous(int dimension);

  DomainKind kind() const { return kind_; }
  int dimension() const { return dimension_; }

  /// Levels per coordinate; discrete domains only.
  int levels() const;

  /// t^p as a double (may exceed integer range for large p).
  double cardinality() const;

  bool contains(const Point& x) const;
  bool operator==(const DomainSpec& other) const;
  bool operator!=(const DomainSpec& other) const { return !(*this == other); }

 private:
  DomainSpec(DomainKind kind, int levels, int dimension)
      : kind_(kind), levels_(levels), dimension_(dimension) {}

  DomainKind kind_;
  int levels_;
  int dimension_;
};

/// A collection of rows, all inside `domain`. Immutable after construction.
class Dataset {
 public:
  static Dataset create(DomainSpec domain, std::vector<Point> rows);

  const DomainSpec& domain() const { return domain_; }
  const std::vector<Point>& rows() const { return rows_; }
  std::size_t n() const { return rows_.size(); }

 private:
  Dataset(DomainSpec domain, std::vector<Point> rows);

  DomainSpec domain_;
  std::vector<Point> rows_;
};

/// All t^p points of a discrete domain in lexicographic order (last
/// coordinate varies fastest). Throws DomainKindError on continuous domains
/// and CapExceededError when t^p exceeds `cap`.
std::vector<Point> enumerate_domain(const DomainSpec& domain,
                                    std::uint64_t cap = kDefaultEnumerationCap);

/// Lexicographic index of a discrete point, inverse of enumerate_domain order.
std::uint64_t point_index(const DomainSpec& domain, const Point& x);

}  // namespace dpsynth
