#pragma once

#include <functional>
#include <string>
#include <vector>

namespace mdt {

// Options shared by the oracle-backed checks. An empty q-list means each
// check uses its built-in default sample points.
struct VerifyOptions {
  std::vector<long> qs;
};

// A named identity check. run returns the empty string on success and a
// human-readable counterexample description on failure; infeasible requests
// (guards, bad q values) propagate as exceptions.
struct Check {
  std::string name;
  std::string title;
  std::function<std::string(const VerifyOptions&)> run;
};

const std::vector<Check>& verify_registry();

// checks whose name equals suite or falls under "suite:"; empty selects all
std::vector<const Check*> select_checks(const std::string& suite);

} // namespace mdt
