#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "linearr/constructions.hpp"
#include "linearr/geometry.hpp"

namespace linearr {

/// A family plus its "#! key=value" header lines, in file order.
struct FamilyFile {
  std::vector<std::pair<std::string, std::string>> header;
  LineFamily family;

  /// The value of the first header entry with this key.
  std::optional<std::string> get(const std::string& key) const;
  /// The construction recorded in the header, if it names a kind.
  std::optional<ConstructionSpec> spec() const;
};

/// Text format: one "m c" record per line (rational literals p or p/q);
/// '#' starts a comment, "#!" lines are key=value headers. A "name" header
/// becomes the family label. Throws ParseError (with 1-based line),
/// VerticalLineError for slopes like "inf" or "1/0", and DuplicateSlopeError.
FamilyFile parse_family_file(const std::string& text);
LineFamily parse_family(const std::string& text);

/// Canonical text: header lines (a "name" entry is added from the family
/// label if missing), then records in slope order.
std::string serialize_family(const LineFamily& family,
                             const std::vector<std::pair<std::string, std::string>>& header = {});

/// Header entries describing a generated family.
std::vector<std::pair<std::string, std::string>> provenance_header(const ConstructionSpec& spec);

}  // namespace linearr
