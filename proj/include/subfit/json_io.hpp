#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "subfit/fincofin.hpp"
#include "subfit/poset.hpp"

namespace subfit {

/// Field order is fixed (n, covers, labels) and covers are emitted sorted,
/// so serialization is canonical: dump(load(dump(p))) == dump(p).
using ojson = nlohmann::ordered_json;

struct PosetFile {
  FinitePoset poset;
  std::optional<std::vector<std::string>> labels;
};

ojson poset_to_json(const FinitePoset& p,
                    const std::optional<std::vector<std::string>>& labels = std::nullopt);
PosetFile poset_from_json(const ojson& j);

PosetFile load_poset_file(const std::string& path);

ojson fincofin_to_json(const FinOrCofin& s);
FinOrCofin fincofin_from_json(const ojson& j);

/// FNV-1a of a file's bytes, as fixed-width hex; identifies CLI inputs in
/// reports.
std::string file_digest(const std::string& path);

}  // namespace subfit
