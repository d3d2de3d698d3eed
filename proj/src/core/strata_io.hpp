#pragma once

#include "zetacore.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace qzeta {

// dimension = INT
// gindex = INT                      (optional; computed when absent)
// symbol NAME [chi = INT]
// stratum { class = EXPR ; N = [Q, ...] ; nu = [Q, ...] ; group = GROUPLIT }
// '#' starts a comment.
struct StrataFile {
  Stratification strata;
  std::map<std::string, std::optional<Int>> symbols;

  ChiEnv chi() const;
  friend bool operator==(const StrataFile &, const StrataFile &) = default;
};

StrataFile parse_strata(std::string_view text);
std::string print_strata(const StrataFile &f);

StrataFile read_strata_file(const std::string &path);
void write_strata_file(const std::string &path, const StrataFile &f);

}  // namespace qzeta
