#pragma once

#include <string>
#include <vector>

namespace eddeg {

// Published values that are out of reach at desk scale (or, for the average
// degrees, were themselves obtained by large sampling runs).  The CLI serves
// them verbatim, labeled source: reference; nothing in the library computes
// from them.
struct ReferenceTable {
  std::string name;
  std::string description;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;  // cells keep their published formatting
};

const std::vector<ReferenceTable>& reference_tables();

// Throws std::domain_error for an unknown name.
const ReferenceTable& reference_table(const std::string& name);

}  // namespace eddeg
