#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "catg/perm.hpp"

namespace catg {

// Named-generator file:
//   degree <n>
//   <name> = <cycle-notation>
// '#' starts a comment; names are [A-Za-z0-9_]+ and unique.
struct GeneratorFile {
  int degree = 0;
  std::vector<std::pair<std::string, Perm>> entries;

  bool has(std::string_view name) const;
  const Perm& get(std::string_view name) const;  // throws Error if missing
  std::vector<Perm> all_perms() const;
};

GeneratorFile parse_generator_file(std::string_view text);
GeneratorFile load_generator_file(const std::string& path);
std::string write_generator_file(const GeneratorFile& file);

}  // namespace catg
