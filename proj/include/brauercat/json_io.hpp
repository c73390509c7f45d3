#pragma once

#include <string>

#include "brauercat/enhanced.hpp"
#include "brauercat/tensor.hpp"

namespace brauercat {

// Stable, byte-deterministic JSON forms. Coefficients are rational strings
// ("p/q" or "p"); polynomial coefficients are lists of such strings in
// ascending power.

std::string to_json(const BrauerMorphism& f);
std::string to_json(const EnhancedMorphism& f);
std::string to_json(const Tensor& t);

BrauerMorphism brauer_from_json(const std::string& text);
// expect_m < 0 accepts any m; otherwise a mismatch is a schema error
EnhancedMorphism enhanced_from_json(const std::string& text, int expect_m = -1);

void save_file(const std::string& path, const std::string& contents);
std::string load_file(const std::string& path);

}  // namespace brauercat
