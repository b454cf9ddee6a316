#pragma once

#include <array>
#include <cstdint>

namespace eisen {

struct TableRow {
  std::int64_t c;
  std::int64_t a_c;
  double abs_b_c;
};

// Published values of a_c and |b_c| for 1 <= c <= 120.
const std::array<TableRow, 120>& table_one();

}  // namespace eisen
