#include "hilbsq/sweep.hpp"

#include <sstream>
#include <stdexcept>

namespace hilbsq::sweep {

namespace {

Cell classify_cell(long long a, long long b, cones::Model model) {
    const lattice::HLClass c{Int(static_cast<long>(a)), Int(static_cast<long>(b))};
    const cones::ConeReport cr = cones::cone_report(c);
    const baselocus::BaseLocusReport report = baselocus::classify(c, model);
    const bool nef = model == cones::Model::X ? cr.in_nef_x : cr.in_nef_xprime;
    return Cell{a, b, nef, cr.is_big, report.verdict};
}

}  // namespace

std::vector<Cell> classify_grid_serial(long long max_coord, cones::Model model) {
    if (max_coord < 0) throw std::invalid_argument("max_coord must be >= 0");
    const long long side = max_coord + 1;
    std::vector<Cell> cells(static_cast<std::size_t>(side * side));
    for (long long a = 0; a <= max_coord; ++a)
        for (long long b = 0; b <= max_coord; ++b)
            cells[static_cast<std::size_t>(a * side + b)] = classify_cell(a, b, model);
    return cells;
}

std::vector<Cell> classify_grid(long long max_coord, cones::Model model) {
#ifdef _OPENMP
    if (max_coord < 0) throw std::invalid_argument("max_coord must be >= 0");
    const long long side = max_coord + 1;
    const long long total = side * side;
    std::vector<Cell> cells(static_cast<std::size_t>(total));
#pragma omp parallel for schedule(static)
    for (long long idx = 0; idx < total; ++idx)
        cells[static_cast<std::size_t>(idx)] =
            classify_cell(idx / side, idx % side, model);
    return cells;
#else
    return classify_grid_serial(max_coord, model);
#endif
}

std::string to_csv(const std::vector<Cell>& cells) {
    std::ostringstream out;
    out << "a,b,nef,big,verdict\n";
    for (const Cell& cell : cells)
        out << cell.a << ',' << cell.b << ',' << (cell.nef ? "true" : "false") << ','
            << (cell.big ? "true" : "false") << ',' << baselocus::to_string(cell.verdict)
            << '\n';
    return out.str();
}

}  // namespace hilbsq::sweep
