#pragma once

#include <string>
#include <string_view>

#include "ekcodes/core.hpp"
#include "ekcodes/designs.hpp"

namespace ekc {

class FormatError : public ParameterError {
 public:
  using ParameterError::ParameterError;
};

/// {"n":..,"k":..,"s":..,"q":..,"d":..,"words":[[[..],..],..],"verified_min_distance":int|null}
/// with keys in that order and no whitespace.
std::string code_to_json(const Code& code);
Code code_from_json(std::string_view text);

/// {"v":..,"t":..,"blocks":[[..],..]}
std::string design_to_json(const BlockDesign& design);
BlockDesign design_from_json(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace ekc
