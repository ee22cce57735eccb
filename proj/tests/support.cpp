#include "support.hpp"

namespace delzant::testing {

std::vector<std::string> catalog_names() { return {"cp2", "square", "hirzebruch1", "cp3"}; }

DelzantPolytope catalog(const std::string& name) {
  return load_polytope(std::string(DELZANT_DATA_DIR) + "/" + name + ".json");
}

}  // namespace delzant::testing
