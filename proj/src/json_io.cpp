#include "subfit/json_io.hpp"

#include <fstream>
#include <sstream>

namespace subfit {

ojson poset_to_json(const FinitePoset& p, const std::optional<std::vector<std::string>>& labels) {
  ojson j;
  j["n"] = p.n;
  ojson covers = ojson::array();
  for (auto [a, b] : cover_pairs(p)) covers.push_back(ojson::array({a, b}));
  j["covers"] = std::move(covers);
  if (labels) {
    if (static_cast<int>(labels->size()) != p.n)
      throw Error(Errc::InvalidInput, "label count must match n");
    j["labels"] = *labels;
  }
  return j;
}

PosetFile poset_from_json(const ojson& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
    throw Error(Errc::InvalidInput, "poset file needs an integer field 'n'");
  int n = j["n"].get<int>();
  std::vector<std::pair<int, int>> covers;
  if (j.contains("covers")) {
    if (!j["covers"].is_array()) throw Error(Errc::InvalidInput, "'covers' must be an array");
    for (const auto& c : j["covers"]) {
      if (!c.is_array() || c.size() != 2 || !c[0].is_number_integer() ||
          !c[1].is_number_integer())
        throw Error(Errc::InvalidInput, "each cover must be a pair of indices");
      covers.emplace_back(c[0].get<int>(), c[1].get<int>());
    }
  }
  PosetFile out;
  out.poset = poset_from_cover_pairs(n, covers);
  if (j.contains("labels")) {
    if (!j["labels"].is_array() || static_cast<int>(j["labels"].size()) != n)
      throw Error(Errc::InvalidInput, "'labels' must list one string per element");
    std::vector<std::string> labels;
    for (const auto& l : j["labels"]) {
      if (!l.is_string()) throw Error(Errc::InvalidInput, "labels must be strings");
      labels.push_back(l.get<std::string>());
    }
    out.labels = std::move(labels);
  }
  return out;
}

PosetFile load_poset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::InvalidInput, "cannot open " + path);
  ojson j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw Error(Errc::InvalidInput, std::string("JSON parse failure: ") + e.what());
  }
  return poset_from_json(j);
}

ojson fincofin_to_json(const FinOrCofin& s) {
  ojson j;
  j["kind"] = s.is_finite() ? "finite" : "cofinite";
  j["support"] = s.support();
  return j;
}

FinOrCofin fincofin_from_json(const ojson& j) {
  if (!j.is_object() || !j.contains("kind") || !j.contains("support"))
    throw Error(Errc::InvalidInput, "expected fields 'kind' and 'support'");
  std::vector<std::uint32_t> support;
  for (const auto& v : j["support"]) {
    if (!v.is_number_unsigned() && !v.is_number_integer())
      throw Error(Errc::InvalidInput, "support entries must be naturals");
    long long x = v.get<long long>();
    if (x < 0) throw Error(Errc::InvalidInput, "support entries must be naturals");
    support.push_back(static_cast<std::uint32_t>(x));
  }
  std::string kind = j["kind"].get<std::string>();
  if (kind == "finite") return FinOrCofin::finite(std::move(support));
  if (kind == "cofinite") return FinOrCofin::cofinite(std::move(support));
  throw Error(Errc::InvalidInput, "'kind' must be finite or cofinite");
}

std::string file_digest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::InvalidInput, "cannot open " + path);
  std::uint64_t h = 1469598103934665603ull;
  char c;
  while (in.get(c)) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << h;
  std::string s = os.str();
  return std::string(16 - s.size(), '0') + s;
}

}  // namespace subfit
