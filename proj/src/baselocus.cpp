#include "hilbsq/baselocus.hpp"

#include <algorithm>
#include <stdexcept>

#include "hilbsq/errors.hpp"

namespace hilbsq::baselocus {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Free: return "Free";
        case Verdict::PlaneP2Reduced: return "PlaneP2Reduced";
        case Verdict::NotNef: return "NotNef";
        case Verdict::ZeroClass: return "ZeroClass";
    }
    return "ZeroClass";
}

namespace {

void append_trace_citations(const flop::VanishingTrace& trace,
                            std::vector<citations::Citation>& out) {
    for (const auto& step : trace.steps) {
        citations::Citation c = citations::cite(step.statement);
        if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(std::move(c));
    }
}

}  // namespace

BaseLocusReport classify(const lattice::HLClass& c, cones::Model model) {
    if (c.is_zero()) return BaseLocusReport{Verdict::ZeroClass, false, {}};

    const cones::ConeReport cr = cones::cone_report(c);
    const bool nef = model == cones::Model::X ? cr.in_nef_x : cr.in_nef_xprime;
    if (!nef) return BaseLocusReport{Verdict::NotNef, cr.is_big, {}};

    const flop::VanishingTrace trace = flop::vanishing_argument_applies(c, model);

    if (model == cones::Model::X && c == lattice::HLClass{1, 1}) {
        BaseLocusReport report{Verdict::PlaneP2Reduced, cr.is_big, {}};
        append_trace_citations(trace, report.citations);
        report.citations.push_back(citations::cite("base-locus-h-plus-l"));
        report.citations.push_back(citations::cite("base-locus-reduced"));
        report.citations.push_back(citations::cite("mu-surjective"));
        return report;
    }

    if (!trace.applies)
        throw std::logic_error("free verdict without a supporting trace");

    BaseLocusReport report{Verdict::Free, cr.is_big, {}};
    append_trace_citations(trace, report.citations);
    if (cr.on_flop_wall) report.citations.push_back(citations::cite("wall-pullback-equal"));
    return report;
}

namespace {

void check_mayer_preconditions(const lattice::GramLattice& g, const std::vector<Int>& h,
                               const Int& coeff_bound) {
    if (g.rank() > 2)
        throw RankUnsupported("the decomposition search supports rank <= 2 lattices");
    if (static_cast<int>(h.size()) != g.rank())
        throw std::invalid_argument("class length does not match lattice rank");
    if (g.square(h) <= 0)
        throw NotBig("the decomposition search expects a class with q(h) > 0");
    if (coeff_bound < 1) throw std::invalid_argument("coeff_bound must be >= 1");
}

// All decompositions for one fixed m, E enumerated in ascending
// lexicographic order over the coefficient box.
std::vector<MayerDecomposition> decompositions_for_m(const lattice::GramLattice& g,
                                                     const std::vector<Int>& h,
                                                     const Int& bound, const Int& m) {
    std::vector<MayerDecomposition> out;
    const int rank = g.rank();
    std::vector<Int> e(static_cast<std::size_t>(rank));
    std::vector<Int> c(static_cast<std::size_t>(rank));

    const auto consider = [&]() {
        for (int i = 0; i < rank; ++i)
            c[static_cast<std::size_t>(i)] =
                h[static_cast<std::size_t>(i)] - m * e[static_cast<std::size_t>(i)];
        if (g.square(e) != 0) return;
        if (g.square(c) != -2) return;
        if (g.pair(e, c) != 1) return;
        out.push_back(MayerDecomposition{m, e, c});
    };

    if (rank == 1) {
        for (Int e0 = -bound; e0 <= bound; ++e0) {
            e[0] = e0;
            consider();
        }
    } else {
        for (Int e0 = -bound; e0 <= bound; ++e0)
            for (Int e1 = -bound; e1 <= bound; ++e1) {
                e[0] = e0;
                e[1] = e1;
                consider();
            }
    }
    return out;
}

}  // namespace

std::vector<MayerDecomposition> mayer_search_serial(const lattice::GramLattice& g,
                                                    const std::vector<Int>& h,
                                                    const Int& coeff_bound) {
    check_mayer_preconditions(g, h, coeff_bound);
    std::vector<MayerDecomposition> out;
    for (Int m = 2; m <= coeff_bound; ++m) {
        auto part = decompositions_for_m(g, h, coeff_bound, m);
        out.insert(out.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
    }
    return out;
}

std::vector<MayerDecomposition> mayer_search(const lattice::GramLattice& g,
                                             const std::vector<Int>& h,
                                             const Int& coeff_bound) {
#ifdef _OPENMP
    check_mayer_preconditions(g, h, coeff_bound);
    if (coeff_bound < 2) return {};
    // One bucket per value of m, concatenated in order, so the result is
    // byte-identical to the serial reference.
    if (!coeff_bound.fits_slong_p()) return mayer_search_serial(g, h, coeff_bound);
    const long mmax = coeff_bound.get_si();
    std::vector<std::vector<MayerDecomposition>> buckets(
        static_cast<std::size_t>(mmax - 1));
#pragma omp parallel for schedule(dynamic)
    for (long m = 2; m <= mmax; ++m)
        buckets[static_cast<std::size_t>(m - 2)] =
            decompositions_for_m(g, h, coeff_bound, Int(m));
    std::vector<MayerDecomposition> out;
    for (auto& bucket : buckets)
        out.insert(out.end(), std::make_move_iterator(bucket.begin()),
                   std::make_move_iterator(bucket.end()));
    return out;
#else
    return mayer_search_serial(g, h, coeff_bound);
#endif
}

ModuliVerdict moduli_nonempty(const Int& d, int m) {
    if (d <= 0)
        throw NonPositiveSquare("the moduli space needs q(A) = 2d with d >= 1");
    if (m != 1 && m != 2)
        throw UnsupportedDivisibility(
            "a primitive class has divisibility 1 or 2, the divisors of the "
            "discriminant 2");

    ModuliVerdict verdict{false, std::nullopt, false, {}};
    if (m == 1) {
        verdict.nonempty = true;
        verdict.witness = lattice::GeneralClass{1, 0, d, 2};
        verdict.citations.push_back(citations::cite("moduli-witness-div1"));
        return verdict;
    }

    verdict.citations.push_back(citations::cite("moduli-witness-div2"));
    if (d % 4 == 3) {
        const Int k = (d + 1) / 4;
        verdict.nonempty = true;
        // H + (2k-1)L = 2k*H - (2k-1)*delta.
        verdict.witness = lattice::GeneralClass{2 * k, -(2 * k - 1), 1, 2};
    }
    return verdict;
}

ModuliVerdict generic_bpf(const Int& d, int m) {
    ModuliVerdict verdict = moduli_nonempty(d, m);
    if (!verdict.nonempty) return verdict;
    verdict.generic_bpf = true;
    verdict.citations.push_back(citations::cite(
        d == 3 && m == 2 ? "generic-bpf-exceptional" : "generic-bpf"));
    return verdict;
}

}  // namespace hilbsq::baselocus
