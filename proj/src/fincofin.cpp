#include "subfit/fincofin.hpp"

#include <algorithm>
#include <sstream>

namespace subfit {

namespace {

std::vector<std::uint32_t> canon(std::vector<std::uint32_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<std::uint32_t> vec_union(const std::vector<std::uint32_t>& a,
                                     const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<std::uint32_t> vec_inter(const std::vector<std::uint32_t>& a,
                                     const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<std::uint32_t> vec_minus(const std::vector<std::uint32_t>& a,
                                     const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

FinOrCofin make(bool fin, std::vector<std::uint32_t> sup) {
  return fin ? FinOrCofin::finite(std::move(sup)) : FinOrCofin::cofinite(std::move(sup));
}

}  // namespace

FinOrCofin FinOrCofin::finite(std::vector<std::uint32_t> support) {
  FinOrCofin s;
  s.finite_ = true;
  s.support_ = canon(std::move(support));
  return s;
}

FinOrCofin FinOrCofin::cofinite(std::vector<std::uint32_t> missing) {
  FinOrCofin s;
  s.finite_ = false;
  s.support_ = canon(std::move(missing));
  return s;
}

bool FinOrCofin::contains(std::uint32_t k) const {
  bool in_support = std::binary_search(support_.begin(), support_.end(), k);
  return finite_ ? in_support : !in_support;
}

std::uint64_t FinOrCofin::truncate_bits(int n) const {
  if (n < 0 || n > 64) throw Error(Errc::InvalidInput, "truncation width must be 0..64");
  std::uint64_t out = 0;
  for (int k = 0; k < n; ++k)
    if (contains(static_cast<std::uint32_t>(k))) out |= std::uint64_t{1} << k;
  return out;
}

std::optional<std::uint32_t> FinOrCofin::least_geq(std::uint32_t t) const {
  if (finite_) {
    auto it = std::lower_bound(support_.begin(), support_.end(), t);
    if (it == support_.end()) return std::nullopt;
    return *it;
  }
  for (std::uint32_t k = t;; ++k)  // support is finite, so this terminates
    if (!std::binary_search(support_.begin(), support_.end(), k)) return k;
}

std::string FinOrCofin::to_string() const {
  std::ostringstream os;
  os << (finite_ ? "{" : "N\\{");
  for (size_t i = 0; i < support_.size(); ++i) {
    if (i) os << ",";
    os << support_[i];
  }
  os << "}";
  return os.str();
}

FinOrCofin set_union(const FinOrCofin& a, const FinOrCofin& b) {
  if (a.is_finite() && b.is_finite()) return make(true, vec_union(a.support(), b.support()));
  if (!a.is_finite() && !b.is_finite()) return make(false, vec_inter(a.support(), b.support()));
  const FinOrCofin& cof = a.is_finite() ? b : a;
  const FinOrCofin& fin = a.is_finite() ? a : b;
  return make(false, vec_minus(cof.support(), fin.support()));
}

FinOrCofin set_inter(const FinOrCofin& a, const FinOrCofin& b) {
  if (a.is_finite() && b.is_finite()) return make(true, vec_inter(a.support(), b.support()));
  if (!a.is_finite() && !b.is_finite()) return make(false, vec_union(a.support(), b.support()));
  const FinOrCofin& cof = a.is_finite() ? b : a;
  const FinOrCofin& fin = a.is_finite() ? a : b;
  return make(true, vec_minus(fin.support(), cof.support()));
}

FinOrCofin complement(const FinOrCofin& a) {
  return a.is_finite() ? FinOrCofin::cofinite(a.support()) : FinOrCofin::finite(a.support());
}

FinOrCofin set_minus(const FinOrCofin& a, const FinOrCofin& b) {
  return set_inter(a, complement(b));
}

bool subseteq(const FinOrCofin& a, const FinOrCofin& b) { return set_minus(a, b).empty(); }

}  // namespace subfit
