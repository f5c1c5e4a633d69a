#pragma once

#include <vector>

namespace agolomb::detail {

extern const std::vector<std::vector<int>> k_r4_eps0;
extern const std::vector<std::vector<int>> k_r4_eps1;
extern const std::vector<std::vector<int>> k_r4_eps2;
extern const std::vector<std::vector<int>> k_r4_eps3;
extern const std::vector<std::vector<int>> k_r5_U;

}  // namespace agolomb::detail
