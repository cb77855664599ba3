// Command-line frontend: order / decompose / verify / knot over JSON input
// files carrying either a module presentation or a Seifert matrix.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "alexmod/json_io.hpp"

namespace {

using namespace alexmod;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitResourceLimit = 3;

struct Options {
    bool as_json = false;
    std::optional<std::uint64_t> seed;
    std::uint64_t max_minors = 1'000'000;
    std::size_t max_steps = 1000;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path + ": cannot open file");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

io::InputFile load(const std::string& path) { return io::parse_input(read_file(path)); }

present::LambdaPresentation presentation_of(const io::InputFile& in) {
    if (in.presentation) return *in.presentation;
    if (!knot::pairing_ok(*in.seifert))
        std::cerr << "warning: |det(V - V^T)| != 1; not a genuine Seifert pairing\n";
    return knot::seifert_to_presentation(*in.seifert);
}

// Recompute the order on a scrambled copy; a mismatch means the library
// disagrees with itself.
bool self_check(const present::LambdaPresentation& p, const Options& opt) {
    present::OrderOptions oo{opt.max_minors};
    auto direct = present::order(p, oo);
    auto scrambled = present::order(present::unimodular_scramble(p, *opt.seed), oo);
    if (direct == scrambled) return true;
    std::cerr << "self-check failed: order changed under a unimodular scramble (seed "
              << *opt.seed << ")\n";
    return false;
}

std::string invariants_str(const abgrp::CanonicalForm& cf) {
    if (cf.trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (cf.free_rank > 0) {
        os << "Z";
        if (cf.free_rank > 1) os << "^" << cf.free_rank;
        first = false;
    }
    for (const Int& d : cf.torsion) {
        os << (first ? "" : " + ") << "Z/" << d;
        first = false;
    }
    return os.str();
}

void print_order_text(const laurent::LaurentPoly& delta) {
    std::cout << "order: " << delta.str() << "\n";
    if (delta.is_zero())
        std::cout << "degree: -\n";
    else
        std::cout << "degree: " << delta.deg() << "\n";
    std::cout << "coefficients: " << io::canonical_dump(io::poly_to_json(delta)) << "\n";
    std::cout << "content: " << laurent::content(delta) << "\n";
}

void print_checks_text(const decomp::CheckSet& c) {
    auto line = [](const char* name, bool ok) {
        std::cout << "  " << name << ": " << (ok ? "pass" : "fail") << "\n";
    };
    std::cout << "checks:\n";
    line("order_match", c.order_match);
    line("degree_bound", c.degree_bound);
    line("c0_index", c.c0_index);
    line("cd_index", c.cd_index);
    line("palindromic", c.palindromic);
    line("monic", c.monic);
}

void print_report_text(const decomp::DecompositionReport& r) {
    print_order_text(r.order);
    std::cout << "q: " << r.q << "\n";
    std::cout << "reduction_steps: " << r.amalgam.reduction_steps << "\n";
    std::cout << "B: generators " << r.amalgam.B.gens << ", invariants "
              << invariants_str(abgrp::canonical_form(r.amalgam.B)) << "\n";
    std::cout << "U: generators " << r.amalgam.U.gens << ", invariants "
              << invariants_str(abgrp::canonical_form(r.amalgam.U)) << "\n";
    if (r.lattice) {
        std::cout << "lattice: d = " << r.lattice->d << "\n";
        std::cout << "F: " << r.lattice->F.str() << "\n";
        std::cout << "G: " << r.lattice->G.str() << "\n";
        std::cout << "char_poly: " << r.char_poly->str() << "\n";
        std::cout << "index_f: " << *r.index_f << "\n";
        std::cout << "index_g: " << *r.index_g << "\n";
    } else {
        std::cout << "lattice: absent (" << r.lattice_reason << ")\n";
    }
    print_checks_text(r.checks);
}

void emit(io::json j, const Options& opt) {
    if (opt.seed) j["self_check"] = true;
    std::cout << io::canonical_dump(j) << "\n";
}

int cmd_order(const std::string& file, const Options& opt) {
    auto p = presentation_of(load(file));
    if (opt.seed && !self_check(p, opt)) return kExitCheckFailed;
    auto delta = present::order(p, present::OrderOptions{opt.max_minors});
    if (opt.as_json) {
        io::json j;
        j["order"] = io::poly_to_json(delta);
        j["display"] = delta.str();
        j["degree"] = delta.is_zero() ? io::json(nullptr) : io::json(delta.deg());
        j["content"] = io::int_to_json(laurent::content(delta));
        emit(std::move(j), opt);
    } else {
        print_order_text(delta);
    }
    return kExitOk;
}

int cmd_decompose(const std::string& file, const Options& opt, bool verify_mode) {
    auto p = presentation_of(load(file));
    if (opt.seed && !self_check(p, opt)) return kExitCheckFailed;
    auto report = decomp::decompose(p, decomp::DecomposeOptions{opt.max_minors, opt.max_steps});
    if (opt.as_json) {
        emit(io::report_to_json(report), opt);
    } else if (verify_mode) {
        print_checks_text(report.checks);
        std::cout << "verify: " << (report.checks.all() ? "PASS" : "FAIL") << "\n";
    } else {
        print_report_text(report);
    }
    if (verify_mode) return report.checks.all() ? kExitOk : kExitCheckFailed;
    return kExitOk;
}

int cmd_knot(const std::string& file, const Options& opt, bool with_decomposition) {
    auto in = load(file);
    if (!in.seifert) throw ParseError(file + ": the knot command needs a 'seifert' input");
    if (!knot::pairing_ok(*in.seifert))
        std::cerr << "warning: |det(V - V^T)| != 1; not a genuine Seifert pairing\n";
    if (opt.seed && !self_check(knot::seifert_to_presentation(*in.seifert), opt))
        return kExitCheckFailed;
    auto report = knot::analyze_knot(*in.seifert, with_decomposition,
                                     decomp::DecomposeOptions{opt.max_minors, opt.max_steps});
    if (opt.as_json) {
        emit(io::knot_report_to_json(report), opt);
        return kExitOk;
    }
    std::cout << "alexander: " << report.alexander.str() << "\n";
    if (report.alexander.is_zero())
        std::cout << "degree: -\n";
    else
        std::cout << "degree: " << report.alexander.deg() << "\n";
    std::cout << "coefficients: " << io::canonical_dump(io::poly_to_json(report.alexander))
              << "\n";
    std::cout << "content: " << report.content << "\n";
    std::cout << "monic: " << (report.monic ? "yes" : "no") << "\n";
    std::cout << "palindromic: " << (report.palindromic ? "yes" : "no") << "\n";
    if (report.decomposition) {
        std::cout << "decomposition:\n";
        print_report_text(*report.decomposition);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact order, decomposition and fiberedness screening for modules over "
                 "Z[t, t^-1]"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_flag("--json", opt.as_json, "machine-readable output (canonical JSON)");
    app.add_option("--seed", opt.seed,
                   "run a scramble-based order self-check with this seed");
    app.add_option("--max-minors", opt.max_minors,
                   "cap on the number of enumerated maximal minors");
    app.add_option("--max-steps", opt.max_steps, "cap on reduction iterations");

    std::string file;
    bool knot_decompose = false;

    auto* c_order = app.add_subcommand("order", "print the normalized order");
    c_order->add_option("file", file, "input JSON file")->required();
    auto* c_decomp = app.add_subcommand("decompose", "print the full decomposition report");
    c_decomp->add_option("file", file, "input JSON file")->required();
    auto* c_verify =
        app.add_subcommand("verify", "run the decomposition checks; nonzero exit on failure");
    c_verify->add_option("file", file, "input JSON file")->required();
    auto* c_knot = app.add_subcommand("knot", "Alexander polynomial and fiberedness screen");
    c_knot->add_option("file", file, "input JSON file")->required();
    c_knot->add_flag("--decompose", knot_decompose, "attach the decomposition report");

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_order->parsed()) return cmd_order(file, opt);
        if (c_decomp->parsed()) return cmd_decompose(file, opt, false);
        if (c_verify->parsed()) return cmd_decompose(file, opt, true);
        return cmd_knot(file, opt, knot_decompose);
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const ResourceLimitError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitResourceLimit;
    } catch (const StepLimitError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitResourceLimit;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}
