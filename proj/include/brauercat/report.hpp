#pragma once

#include <string>
#include <vector>

#include "brauercat/config.hpp"

namespace brauercat {

struct Check {
    std::string name;
    bool ok = false;
    std::string detail;  // empty on success unless informative
};

using Report = std::vector<Check>;

inline bool all_ok(const Report& r) {
    for (const auto& c : r)
        if (!c.ok) return false;
    return true;
}

}  // namespace brauercat
