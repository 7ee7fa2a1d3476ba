#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "subfit/error.hpp"

namespace subfit {

/// A subset of the naturals that is finite or cofinite, in canonical form:
/// the support is the set itself when finite and the complement when
/// cofinite, always sorted and duplicate-free. Finite/cofinite sets are
/// closed under union, intersection and complement, so the arithmetic is
/// exact.
class FinOrCofin {
 public:
  FinOrCofin() = default;  // the empty set

  static FinOrCofin finite(std::vector<std::uint32_t> support);
  static FinOrCofin cofinite(std::vector<std::uint32_t> missing);

  bool is_finite() const { return finite_; }
  bool is_cofinite() const { return !finite_; }
  const std::vector<std::uint32_t>& support() const { return support_; }

  bool contains(std::uint32_t k) const;
  bool empty() const { return finite_ && support_.empty(); }

  /// Membership bits restricted to {0..n-1}, n <= 64. Oracle view for
  /// truncated-universe cross-checks.
  std::uint64_t truncate_bits(int n) const;

  /// Least member that is >= t, when the set has one.
  std::optional<std::uint32_t> least_geq(std::uint32_t t) const;

  std::string to_string() const;

  bool operator==(const FinOrCofin&) const = default;

 private:
  bool finite_ = true;
  std::vector<std::uint32_t> support_;
};

FinOrCofin set_union(const FinOrCofin& a, const FinOrCofin& b);
FinOrCofin set_inter(const FinOrCofin& a, const FinOrCofin& b);
FinOrCofin set_minus(const FinOrCofin& a, const FinOrCofin& b);
FinOrCofin complement(const FinOrCofin& a);
bool subseteq(const FinOrCofin& a, const FinOrCofin& b);

}  // namespace subfit
