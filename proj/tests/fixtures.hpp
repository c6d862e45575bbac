#pragma once

#include <string>

#include "shadecalc/curve_io.hpp"

inline std::string data_file(const std::string& name) { return std::string(SHADECALC_DATA_DIR) + "/" + name; }

inline shadecalc::CurveModel fixture(const std::string& name) {
  return shadecalc::load_curve(data_file(name + ".json"));
}
