#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace arithcx {

// A violating entry of a failed matrix identity.
struct Witness {
  long row = -1;
  long col = -1;
  std::string lhs;
  std::string rhs;
};

struct Check {
  std::string claim;
  int degree = 0;
  bool pass = true;
  std::optional<Witness> witness;
};

// Aggregated outcome of one verification; failure is a report outcome, not
// an exception.
struct Report {
  std::string claim;
  std::vector<Check> checks;
  std::map<std::string, std::string> notes;

  bool pass() const {
    for (const Check& c : checks)
      if (!c.pass) return false;
    return true;
  }
  void add(Check c) { checks.push_back(std::move(c)); }
};

} // namespace arithcx
