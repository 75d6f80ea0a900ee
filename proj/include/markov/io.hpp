#pragma once

#include <string>

#include "markov/kernel.hpp"

namespace markov {

json read_json_file(const std::string& path);  // UsageError on I/O or parse failure

// {"elements": [..], "add": [[..]], "mul": [[..]], "zero": label, "one": label}
// table entries may be labels or indices
SemiringPtr semiring_from_json(const json& j, const std::string& name);
// a builtin name or the path of a semiring file
SemiringPtr load_semiring(const std::string& selector);

// objects: [] is the unit, ["a","b"] one factor, [["x","y"],["e1","e2"]] a tensor
FinSet finset_from_json(const json& j);
json finset_json(const FinSet& X);

// {"semiring": .., "dom": .., "cod": .., "entries": {"a": {"(x,e1)": "1/2"}}}; missing entries are zero.
// The semiring field is ignored when R is given.
Kernel kernel_from_json(const json& j, SemiringPtr R = nullptr);
Kernel load_kernel(const std::string& path, SemiringPtr R = nullptr);

}  // namespace markov
