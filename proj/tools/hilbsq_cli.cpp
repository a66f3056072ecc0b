// Command-line front end: query lattice quantities, classify base loci,
// replay the section-space verification, and emit machine-readable reports.
//
// Output contract: one JSON document on stdout (fixed key order, arbitrary
// precision integers rendered as decimal strings), except `sweep` which
// emits CSV.  Exit codes: 0 success, 1 usage error, 2 domain error.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hilbsq/baselocus.hpp"
#include "hilbsq/citations.hpp"
#include "hilbsq/cones.hpp"
#include "hilbsq/digest.hpp"
#include "hilbsq/errors.hpp"
#include "hilbsq/flop.hpp"
#include "hilbsq/lattice.hpp"
#include "hilbsq/numeric.hpp"
#include "hilbsq/riemann_roch.hpp"
#include "hilbsq/sections.hpp"
#include "hilbsq/sweep.hpp"

namespace {

using json = nlohmann::ordered_json;
using hilbsq::Int;
using hilbsq::Rat;

json citation_array(const std::vector<hilbsq::citations::Citation>& cs) {
    json arr = json::array();
    for (const auto& c : cs) arr.push_back(json{{"statement", c.statement}, {"quote", c.quote}});
    return arr;
}

json statement_array(const std::vector<std::string>& ids) {
    std::vector<hilbsq::citations::Citation> cs;
    cs.reserve(ids.size());
    for (const auto& id : ids) cs.push_back(hilbsq::citations::cite(id));
    return citation_array(cs);
}

json general_class_json(const hilbsq::lattice::GeneralClass& c) {
    return json{{"a", hilbsq::to_string(c.a)},
                {"b", hilbsq::to_string(c.b)},
                {"half_lambda_square", hilbsq::to_string(c.half_lambda_square)},
                {"n", c.n}};
}

void emit(const std::string& command, const json& inputs, const json& result,
          const json& citations) {
    json doc;
    doc["command"] = command;
    doc["inputs"] = inputs;
    doc["result"] = result;
    doc["citations"] = citations;
    std::cout << doc.dump(2) << "\n";
}

int emit_domain_error(const std::string& command, const json& inputs,
                      const hilbsq::DomainError& err) {
    json doc;
    doc["command"] = command;
    doc["inputs"] = inputs;
    doc["error"] = json{{"code", err.code()}, {"message", err.what()}};
    std::cout << doc.dump(2) << "\n";
    return 2;
}

hilbsq::cones::Model parse_model(const std::string& name) {
    return name == "x" ? hilbsq::cones::Model::X : hilbsq::cones::Model::Xprime;
}

std::vector<Int> parse_int_list(const std::string& text) {
    std::vector<Int> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string piece =
            text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        out.push_back(hilbsq::parse_int(piece));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

// Shared storage for the lattice-style subcommands.
struct Options {
    std::string a, b, a2, b2;
    std::string d0 = "1";
    long n = 2;
    std::string basis = "hdelta";
    std::string model = "x";
    std::string q;
    std::string gram, h;
    std::string bound;
    std::string d;
    int m = 1;
    long long max = 0;
    bool d0_given = false;
    bool n_given = false;
};

hilbsq::lattice::GeneralClass make_class(const Options& opt, const std::string& a,
                                         const std::string& b) {
    if (opt.basis == "hl") {
        if (opt.d0_given || opt.n_given)
            throw CLI::ValidationError("--basis hl fixes --d0 1 and --n 2");
        return hilbsq::lattice::to_general(
            hilbsq::lattice::HLClass{hilbsq::parse_int(a), hilbsq::parse_int(b)});
    }
    return hilbsq::lattice::GeneralClass{hilbsq::parse_int(a), hilbsq::parse_int(b),
                                         hilbsq::parse_int(opt.d0), opt.n};
}

int run_square(const Options& opt) {
    json inputs{{"a", opt.a}, {"b", opt.b}, {"d0", opt.d0}, {"n", opt.n}, {"basis", opt.basis}};
    try {
        const Int value = hilbsq::lattice::bbf_square(make_class(opt, opt.a, opt.b));
        emit("square", inputs, json{{"square", hilbsq::to_string(value)}},
             statement_array({"bbf-form-decomposition"}));
        return 0;
    } catch (const hilbsq::DomainError& err) {
        return emit_domain_error("square", inputs, err);
    }
}

int run_pair(const Options& opt) {
    json inputs{{"a", opt.a},   {"b", opt.b},   {"a2", opt.a2}, {"b2", opt.b2},
                {"d0", opt.d0}, {"n", opt.n},   {"basis", opt.basis}};
    try {
        const Int value = hilbsq::lattice::bbf_pair(make_class(opt, opt.a, opt.b),
                                                    make_class(opt, opt.a2, opt.b2));
        emit("pair", inputs, json{{"pair", hilbsq::to_string(value)}},
             statement_array({"bbf-form-decomposition"}));
        return 0;
    } catch (const hilbsq::DomainError& err) {
        return emit_domain_error("pair", inputs, err);
    }
}

int run_div(const Options& opt) {
    json inputs{{"a", opt.a}, {"b", opt.b}, {"d0", opt.d0}, {"n", opt.n}, {"basis", opt.basis}};
    try {
        const Int value = hilbsq::lattice::divisibility(make_class(opt, opt.a, opt.b));
        emit("div", inputs, json{{"divisibility", hilbsq::to_string(value)}},
             statement_array({"divisibility-formula", "div-divides-discriminant"}));
        return 0;
    } catch (const hilbsq::DomainError& err) {
        return emit_domain_error("div", inputs, err);
    }
}

int run_chi(const Options& opt) {
    json inputs{{"q", opt.q}, {"n", opt.n}};
    try {
        const Int value =
            hilbsq::riemann_roch::euler_characteristic(hilbsq::parse_int(opt.q), opt.n);
        emit("chi", inputs, json{{"chi", hilbsq::to_string(value)}},
             statement_array({"riemann-roch-k3n"}));
        return 0;
    } catch (const hilbsq::DomainError& err) {
        return emit_domain_error("chi", inputs, err);
    }
}

int run_cone(const Options& opt) {
    json inputs{{"a", opt.a}, {"b", opt.b}, {"basis", "hl"}};
    try {
        const hilbsq::lattice::HLClass c{hilbsq::parse_int(opt.a), hilbsq::parse_int(opt.b)};
        const hilbsq::cones::ConeReport r = hilbsq::cones::cone_report(c);
        json result{{"in_positive_cone_closure", r.in_positive_cone_closure},
                    {"in_birational_kahler_closure", r.in_birational_kahler_closure},
                    {"in_nef_x", r.in_nef_x},
                    {"in_nef_xprime", r.in_nef_xprime},
                    {"on_flop_wall", r.on_flop_wall},
                    {"is_big", r.is_big},
                    {"square", hilbsq::to_string(hilbsq::lattice::hl_square(c))}};
        emit("cone", inputs, result,
             statement_array({"positive-cone", "birational-kahler-cone", "nef-cone-x",
                              "nef-cone-xprime", "flop-wall"}));
        return 0;
    } catch (const hilbsq::DomainError& err) {
        return emit_domain_error("cone", inputs, err);
    }
}

int run_baselocus(const Options& opt) {
    json inputs{{"a", opt.a}, {"b", opt.b}, {"basis", "hl"}, {"model", opt.model}};
    try {
        const hilbsq::lattice::HLClass c{hilbsq::parse_int(opt.a), hilbsq::parse_int(opt.b)};
        const hilbsq::baselocus::BaseLocusReport report =
            hilbsq::baselocus::classify(c, parse_model(opt.model));
        json result{{"verdict", hilbsq::baselocus::to_string(report.verdict)},
                    {"big", report.big}};
        emit("baselocus", inputs, result, citation_array(report.citations));
        return 0;
    } catch (const hilbsq::DomainError& err) {
        return emit_domain_error("baselocus", inputs, err);
    }
}

int run_flop(const Options& opt) {
    json inputs{{"a", opt.a}, {"b", opt.b}, {"basis", "hl"}, {"from", opt.model}};
    try {
        const hilbsq::lattice::HLClass c{hilbsq::parse_int(opt.a), hilbsq::parse_int(opt.b)};
        const hilbsq::flop::BlowupClass bc = opt.model == "x"
                                                 ? hilbsq::flop::pullback_from_x(c)
                                                 : hilbsq::flop::pullback_from_xprime(c);
        const hilbsq::flop::ExceptionalBidegree r = hilbsq::flop::restrict_to_e(bc);
        json result{{"base",
                     json{{"a", hilbsq::to_string(bc.base.a)}, {"b", hilbsq::to_string(bc.base.b)}}},
                    {"e_coeff", hilbsq::to_string(bc.e_coeff)},
                    {"restriction",
                     json{{"s", hilbsq::to_string(r.s)}, {"t", hilbsq::to_string(r.t)}}},
                    {"line_degree", hilbsq::to_string(hilbsq::flop::line_degree(c))}};
        emit("flop", inputs, result,
             statement_array({"pullback-comparison",
                              opt.model == "x" ? "pullback-restriction-x"
                                               : "pullback-restriction-xprime",
                              "line-degree-formula"}));
        return 0;
    } catch (const hilbsq::DomainError& err) {
        return emit_domain_error("flop", inputs, err);
    }
}

int run_mayer(const Options& opt) {
    json inputs{{"gram", opt.gram}, {"h", opt.h}, {"bound", opt.bound}};
    try {
        const std::vector<Int> gram_entries = parse_int_list(opt.gram);
        const std::vector<Int> h = parse_int_list(opt.h);
        std::vector<std::vector<Int>> gram;
        if (gram_entries.size() == 1) {
            gram = {{gram_entries[0]}};
        } else if (gram_entries.size() == 3) {
            gram = {{gram_entries[0], gram_entries[1]}, {gram_entries[1], gram_entries[2]}};
        } else {
            throw CLI::ValidationError("--gram expects g11 or g11,g12,g22");
        }
        const hilbsq::lattice::GramLattice lattice(gram);
        const auto decompositions =
            hilbsq::baselocus::mayer_search(lattice, h, hilbsq::parse_int(opt.bound));
        json list = json::array();
        for (const auto& dec : decompositions) {
            json e = json::array();
            for (const auto& x : dec.e) e.push_back(hilbsq::to_string(x));
            json c = json::array();
            for (const auto& x : dec.c) c.push_back(hilbsq::to_string(x));
            list.push_back(json{{"m", hilbsq::to_string(dec.m)}, {"E", e}, {"C", c}});
        }
        json result{{"count", decompositions.size()},
                    {"decompositions", list},
                    {"effectivity_checked", false}};
        emit("mayer", inputs, result,
             statement_array({"mayer-criterion", "mayer-rank-one"}));
        return 0;
    } catch (const hilbsq::DomainError& err) {
        return emit_domain_error("mayer", inputs, err);
    }
}

int run_moduli(const Options& opt) {
    json inputs{{"d", opt.d}, {"m", opt.m}};
    try {
        const hilbsq::baselocus::ModuliVerdict verdict =
            hilbsq::baselocus::generic_bpf(hilbsq::parse_int(opt.d), opt.m);
        json result{{"nonempty", verdict.nonempty}};
        if (verdict.witness) {
            result["witness"] = general_class_json(*verdict.witness);
            if (verdict.witness->half_lambda_square == 1 && verdict.witness->n == 2) {
                const hilbsq::lattice::HLClass hl = hilbsq::lattice::hdelta_to_hl(
                    verdict.witness->a, verdict.witness->b);
                result["witness_hl"] =
                    json::array({hilbsq::to_string(hl.a), hilbsq::to_string(hl.b)});
            }
        } else {
            result["witness"] = nullptr;
        }
        result["generic_bpf"] = verdict.generic_bpf;
        emit("moduli", inputs, result, citation_array(verdict.citations));
        return 0;
    } catch (const hilbsq::DomainError& err) {
        return emit_domain_error("moduli", inputs, err);
    }
}

int run_verify_mu() {
    json inputs = json::object();
    try {
        const hilbsq::sections::MuVerification report = hilbsq::sections::verify_mu();
        const std::string bytes = hilbsq::sections::matrix_bytes(hilbsq::sections::mu_matrix());
        json kernel = json::array();
        for (const auto& vec : report.kernel_basis) {
            json row = json::array();
            for (const auto& x : vec) row.push_back(hilbsq::to_string(x));
            kernel.push_back(row);
        }
        json annihilated = json::array();
        for (bool flag : report.stated_vectors_annihilated) annihilated.push_back(flag);
        json result{{"matrix_shape", json::array({18, 36})},
                    {"rank", report.rank},
                    {"kernel_dimension", report.kernel_dimension},
                    {"stated_vectors_annihilated", annihilated},
                    {"stated_vectors_independent", report.stated_vectors_independent},
                    {"stated_vectors_span_kernel", report.stated_vectors_span_kernel},
                    {"image_dimension", report.rank},
                    {"h0_h_plus_l", hilbsq::to_string(report.expected_image_dimension)},
                    {"image_matches_h0", report.image_matches_h0},
                    {"cross_product_identity", hilbsq::sections::cross_product_identity_check()},
                    {"kernel_basis", kernel},
                    {"matrix_digest", "sha256:" + hilbsq::sha256_hex(bytes)}};
        emit("verify-mu", inputs, result, citation_array(report.citations));
        return 0;
    } catch (const hilbsq::DomainError& err) {
        return emit_domain_error("verify-mu", inputs, err);
    }
}

int run_sweep(const Options& opt) {
    const auto cells = hilbsq::sweep::classify_grid(opt.max, parse_model(opt.model));
    std::cout << hilbsq::sweep::to_csv(cells);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact lattice, cone, flop and base-locus computations for the "
                 "Hilbert square of a degree-2 K3 surface"};
    app.require_subcommand(1);

    Options opt;

    const auto add_class_options = [&opt](CLI::App* cmd, bool with_ambient) {
        cmd->add_option("-a", opt.a, "first coordinate")->required();
        cmd->add_option("-b", opt.b, "second coordinate")->required();
        if (with_ambient) {
            cmd->add_option("--d0", opt.d0, "q(lambda)/2 (default 1)");
            cmd->add_option("-n,--n", opt.n, "Hilbert-scheme parameter (default 2)");
            cmd->add_option("--basis", opt.basis, "coordinates: hdelta (default) or hl")
                ->check(CLI::IsMember({"hdelta", "hl"}));
        }
    };

    CLI::App* square = app.add_subcommand("square", "Beauville-Bogomolov square of a class");
    add_class_options(square, true);

    CLI::App* pair = app.add_subcommand("pair", "pairing of two classes over one lambda line");
    add_class_options(pair, true);
    pair->add_option("--a2", opt.a2, "first coordinate of the second class")->required();
    pair->add_option("--b2", opt.b2, "second coordinate of the second class")->required();

    CLI::App* div = app.add_subcommand("div", "divisibility of a class");
    add_class_options(div, true);

    CLI::App* chi = app.add_subcommand("chi", "Euler characteristic from the square");
    chi->add_option("-q", opt.q, "square of the class (even)")->required();
    chi->add_option("-n,--n", opt.n, "Hilbert-scheme parameter")->required();

    CLI::App* cone = app.add_subcommand("cone", "cone memberships in (H, L) coordinates");
    add_class_options(cone, false);

    CLI::App* baselocus = app.add_subcommand("baselocus", "base-locus verdict for a class");
    add_class_options(baselocus, false);
    baselocus->add_option("--model", opt.model, "x or xprime")
        ->required()
        ->check(CLI::IsMember({"x", "xprime"}));

    CLI::App* flop = app.add_subcommand("flop", "pullback to the common blow-up");
    add_class_options(flop, false);
    flop->add_option("--from", opt.model, "side the class comes from: x or xprime")
        ->required()
        ->check(CLI::IsMember({"x", "xprime"}));

    CLI::App* mayer = app.add_subcommand("mayer", "numerical decomposition search");
    mayer->set_help_flag("--help", "print help");  // frees -h/--h for the class
    mayer->add_option("--gram", opt.gram, "Gram entries g11 or g11,g12,g22")->required();
    mayer->add_option("--h", opt.h, "class coordinates h1 or h1,h2")->required();
    mayer->add_option("--bound", opt.bound, "coefficient bound (>= 1)")->required();

    CLI::App* moduli = app.add_subcommand("moduli", "moduli verdict for square 2d, divisibility m");
    moduli->add_option("-d", opt.d, "half the square, d >= 1")->required();
    moduli->add_option("-m", opt.m, "divisibility, 1 or 2")->required();

    app.add_subcommand("verify-mu", "verify the multiplication-map rank and kernel");

    CLI::App* sweep = app.add_subcommand("sweep", "CSV classification of a coordinate grid");
    sweep->add_option("--max", opt.max, "largest coordinate")->required();
    sweep->add_option("--model", opt.model, "x or xprime")
        ->required()
        ->check(CLI::IsMember({"x", "xprime"}));

    try {
        app.parse(argc, argv);
        opt.d0_given = square->count("--d0") || pair->count("--d0") || div->count("--d0");
        opt.n_given = square->count("-n") || pair->count("-n") || div->count("-n");

        if (square->parsed()) return run_square(opt);
        if (pair->parsed()) return run_pair(opt);
        if (div->parsed()) return run_div(opt);
        if (chi->parsed()) return run_chi(opt);
        if (cone->parsed()) return run_cone(opt);
        if (baselocus->parsed()) return run_baselocus(opt);
        if (flop->parsed()) return run_flop(opt);
        if (mayer->parsed()) return run_mayer(opt);
        if (moduli->parsed()) return run_moduli(opt);
        if (app.get_subcommand("verify-mu")->parsed()) return run_verify_mu();
        if (sweep->parsed()) return run_sweep(opt);
        std::cerr << "no subcommand given\n";
        return 1;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);  // --help
        }
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    }
}
