#ifndef HILBSQ_SWEEP_HPP
#define HILBSQ_SWEEP_HPP

#include <string>
#include <vector>

#include "hilbsq/baselocus.hpp"
#include "hilbsq/cones.hpp"

namespace hilbsq::sweep {

struct Cell {
    long long a;
    long long b;
    bool nef;
    bool big;
    baselocus::Verdict verdict;

    friend bool operator==(const Cell&, const Cell&) = default;
};

// Classifies every integer class with 0 <= a, b <= max_coord on the given
// model, in row-major order (a outer, b inner).  The parallel kernel
// writes each cell independently, so its output equals the serial
// reference cell for cell.
std::vector<Cell> classify_grid(long long max_coord, cones::Model model);
std::vector<Cell> classify_grid_serial(long long max_coord, cones::Model model);

// CSV serialization: header "a,b,nef,big,verdict" then one row per cell.
std::string to_csv(const std::vector<Cell>& cells);

}  // namespace hilbsq::sweep

#endif
