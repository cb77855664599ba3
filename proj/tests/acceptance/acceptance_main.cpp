// Acceptance suite: runs each acceptance criterion end to end and prints
// one pass/fail line per criterion. Exact arithmetic throughout; the only
// tolerances are the wall-clock budgets, which are pinned here.

#include <boost/multiprecision/cpp_int.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "alexmod/json_io.hpp"
#include "../test_util.hpp"

using namespace alexmod;
using boost::multiprecision::abs;
using exactlin::IntMatrix;
using laurent::LaurentPoly;
using present::LambdaPresentation;

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define EXPECT(cond, msg)                                            \
    do {                                                             \
        if (!(cond)) {                                               \
            std::ostringstream os_;                                  \
            os_ << msg;                                              \
            throw Failure(os_.str());                                \
        }                                                            \
    } while (0)

LambdaPresentation load_presentation(const std::string& name) {
    std::ifstream f(std::string(FIXTURES_DIR) + "/" + name);
    EXPECT(f.good(), "cannot open fixture " << name);
    std::ostringstream os;
    os << f.rdbuf();
    auto in = io::parse_input(os.str());
    if (in.presentation) return *in.presentation;
    return knot::seifert_to_presentation(*in.seifert);
}

LaurentPoly lit(std::initializer_list<std::pair<int, long long>> terms) {
    return testutil::poly(terms);
}

// ---- criterion 1: golden one-relator vectors ------------------------------

void golden_vectors() {
    auto ex1 = load_presentation("ex1.json");
    EXPECT(present::order(ex1) == lit({{0, 2}}), "order of [[2]] is not 2");
    auto rep1 = decomp::decompose(ex1);
    auto cfB = abgrp::canonical_form(rep1.amalgam.B);
    EXPECT(cfB.free_rank == 0 && cfB.torsion == std::vector<Int>{2},
           "B of [[2]] is not Z/2");
    EXPECT(abgrp::canonical_form(rep1.amalgam.U).trivial(), "U of [[2]] is not trivial");
    EXPECT(!rep1.lattice.has_value(), "[[2]] must report the lattice absent");
    EXPECT(rep1.checks.order_match, "[[2]] order_match");

    auto ex2 = load_presentation("ex2.json");
    auto delta = present::order(ex2);
    EXPECT(delta == lit({{0, -2}, {1, 2}}), "order of [[2t-2]] is not 2t-2");
    EXPECT(laurent::content(delta) == 2, "content of 2t-2 is not 2");
    auto rep2 = decomp::decompose(ex2);
    EXPECT(rep2.checks.order_match, "[[2t-2]] order_match via the amalgam presentation");
    EXPECT(!rep2.lattice.has_value(), "[[2t-2]] must report the lattice absent");
}

// ---- criterion 2: knot vectors --------------------------------------------

void knot_vectors() {
    using clock = std::chrono::steady_clock;
    struct Case {
        const char* file;
        LaurentPoly delta;
        bool monic;
    };
    const Case cases[] = {
        {"trefoil.json", lit({{0, 1}, {1, -1}, {2, 1}}), true},
        {"figure8.json", lit({{0, 1}, {1, -3}, {2, 1}}), true},
        {"knot52.json", lit({{0, 2}, {1, -3}, {2, 2}}), false},
    };
    for (const auto& c : cases) {
        auto t0 = clock::now();
        auto rep = decomp::decompose(load_presentation(c.file));
        EXPECT(rep.order == c.delta, c.file << ": wrong polynomial");
        EXPECT(rep.checks.monic == c.monic, c.file << ": wrong monic flag");
        EXPECT(rep.checks.palindromic, c.file << ": not palindromic");
        double secs = std::chrono::duration<double>(clock::now() - t0).count();
        EXPECT(secs < 1.0, c.file << ": exceeded the 1 s budget (" << secs << " s)");
    }
    auto trefoil = decomp::decompose(load_presentation("trefoil.json"));
    EXPECT(trefoil.lattice && trefoil.index_f == Int(1) && trefoil.index_g == Int(1),
           "trefoil lattice pair must have index 1 on both sides");
    auto k52 = decomp::decompose(load_presentation("knot52.json"));
    EXPECT(abs(*k52.c0) == 2 && abs(*k52.cd) == 2, "5_2 coefficients are not 2");
}

// ---- criterion 3: lattice-pair round trip ----------------------------------

void lattice_roundtrip() {
    std::mt19937_64 rng(0x0C4A11);
    int closures = 0;
    long draws = 0;
    while (closures < 500) {
        ++draws;
        EXPECT(draws < 200000, "generator starved");
        std::size_t d = 1 + testutil::pick(rng, 4);
        auto f = testutil::random_matrix(rng, d, d, -5, 5);
        auto g = testutil::random_matrix(rng, d, d, -5, 5);
        Int df = exactlin::det(f), dg = exactlin::det(g);
        if (df == 0 || dg == 0) continue;

        auto p = LambdaPresentation::from_matrix(laurent::pencil(f, g));
        auto delta = present::order(p);
        EXPECT(delta == normalize_unit(testutil::leibniz_det_laurent(p.matrix)),
               "order(tG - F) disagrees with the determinant oracle");
        EXPECT(abs(delta.coeff(0)) == abs(df), "|c0| != |det F|");
        EXPECT(abs(delta.leading()) == abs(dg), "|cd| != |det G|");
        EXPECT(exactlin::lattice_index(f) == abs(df), "index(F) != |det F|");
        EXPECT(exactlin::lattice_index(g) == abs(dg), "index(G) != |det G|");

        // non-coprime pairs (such as F = G = [2]) keep torsion in the
        // constructed B and must report the lattice absent; the torsion-free
        // rest must close the loop with matching char_poly and indices
        IntMatrix block(d, 2 * d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                block(i, 2 * j) = -f(i, j);
                block(i, 2 * j + 1) = g(i, j);
            }
        bool torsion_free = true;
        for (const Int& v : exactlin::snf(block).invariant_factors)
            if (v != 1) torsion_free = false;

        auto rep = decomp::decompose(p);
        EXPECT(rep.lattice.has_value() == torsion_free,
               "lattice presence disagrees with the torsion computation");
        if (!torsion_free) continue;
        EXPECT(*rep.char_poly == rep.order, "char_poly does not match the order");
        EXPECT(rep.index_f == abs(df), "recovered index_f != |det F|");
        EXPECT(rep.index_g == abs(dg), "recovered index_g != |det G|");
        EXPECT(rep.lattice->d == d, "recovered rank != d");
        EXPECT(rep.checks.order_match && rep.checks.c0_index && rep.checks.cd_index,
               "closure checks failed");
        ++closures;
    }
}

// ---- criterion 4: reduction and degree-bound properties --------------------

void amalgam_properties() {
    std::vector<LambdaPresentation> inputs;
    for (const char* f :
         {"trefoil.json", "figure8.json", "knot52.json", "ex1.json", "ex2.json"})
        inputs.push_back(load_presentation(f));
    std::mt19937_64 rng(0xA3A16A);
    while (inputs.size() < 305) {
        std::size_t r = 1 + testutil::pick(rng, 5);
        std::size_t s = 1 + testutil::pick(rng, 4);
        laurent::LaurentMatrix m(r, s);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < s; ++j)
                m(i, j) = testutil::random_poly(rng, 0, 3, -3, 3);
        inputs.emplace_back(r, s, std::move(m));
    }
    for (const auto& p : inputs) {
        auto rep = decomp::decompose(p);
        EXPECT(abgrp::is_injective(rep.amalgam.f), "f not injective after reduce");
        EXPECT(abgrp::is_injective(rep.amalgam.g), "g not injective after reduce");
        EXPECT(rep.checks.order_match, "order of the amalgam presentation changed");
        if (!rep.order.is_zero())
            EXPECT(static_cast<std::size_t>(rep.order.deg()) <= rep.q,
                   "degree bound deg <= q violated");
    }
}

// ---- criterion 5: split multiplicativity -----------------------------------

void direct_sum_multiplicativity() {
    std::mt19937_64 rng(0x1E111A);
    for (int iter = 0; iter < 200; ++iter) {
        std::size_t ra = 1 + testutil::pick(rng, 3), sa = 1 + testutil::pick(rng, 2);
        std::size_t rb = 1 + testutil::pick(rng, 3), sb = 1 + testutil::pick(rng, 2);
        laurent::LaurentMatrix a(ra, sa), b(rb, sb);
        for (std::size_t i = 0; i < ra; ++i)
            for (std::size_t j = 0; j < sa; ++j) a(i, j) = testutil::random_poly(rng, 0, 2, -3, 3);
        for (std::size_t i = 0; i < rb; ++i)
            for (std::size_t j = 0; j < sb; ++j) b(i, j) = testutil::random_poly(rng, 0, 2, -3, 3);
        auto pa = LambdaPresentation(ra, sa, a), pb = LambdaPresentation(rb, sb, b);
        EXPECT(present::order(present::direct_sum(pa, pb)) ==
                   normalize_unit(present::order(pa) * present::order(pb)),
               "direct-sum order multiplicativity failed");

        // block-upper-triangular determinant multiplicativity
        std::size_t n1 = 1 + testutil::pick(rng, 2), n2 = 1 + testutil::pick(rng, 2);
        laurent::LaurentMatrix m(n1 + n2, n1 + n2), d1(n1, n1), d2(n2, n2);
        for (std::size_t i = 0; i < n1; ++i)
            for (std::size_t j = 0; j < n1; ++j)
                m(i, j) = d1(i, j) = testutil::random_poly(rng, 0, 2, -3, 3);
        for (std::size_t i = 0; i < n2; ++i)
            for (std::size_t j = 0; j < n2; ++j)
                m(n1 + i, n1 + j) = d2(i, j) = testutil::random_poly(rng, 0, 2, -3, 3);
        for (std::size_t i = 0; i < n1; ++i)
            for (std::size_t j = 0; j < n2; ++j) m(i, n1 + j) = testutil::random_poly(rng, 0, 2, -3, 3);
        auto pm = LambdaPresentation::from_matrix(m);
        EXPECT(present::order(pm) ==
                   normalize_unit(det_laurent(d1) * det_laurent(d2)),
               "block-triangular multiplicativity failed");
    }
}

// ---- criterion 6: scramble invariance ---------------------------------------

void scramble_invariance() {
    for (const char* f : {"trefoil.json", "figure8.json", "knot52.json", "ex1.json",
                          "ex2.json", "empty-relators.json"}) {
        auto p = load_presentation(f);
        auto delta = present::order(p);
        for (std::uint64_t seed = 0; seed < 20; ++seed)
            EXPECT(present::order(present::unimodular_scramble(p, seed)) == delta,
                   f << ": order changed under scramble seed " << seed);
    }
}

// ---- criterion 7: substrate oracles -----------------------------------------

void substrate_oracles() {
    std::mt19937_64 rng(0x5A6F);
    for (int iter = 0; iter < 500; ++iter) {
        std::size_t r = 1 + testutil::pick(rng, 5), c = 1 + testutil::pick(rng, 5);
        auto a = testutil::random_matrix(rng, r, c, -9, 9);
        auto s = exactlin::snf(a);
        EXPECT(s.left * a * s.right == s.diag, "SNF witness identity failed");
        EXPECT(abs(exactlin::det(s.left)) == 1, "left witness not unimodular");
        EXPECT(abs(exactlin::det(s.right)) == 1, "right witness not unimodular");
        for (std::size_t i = 0; i + 1 < s.invariant_factors.size(); ++i)
            EXPECT(s.invariant_factors[i + 1] % s.invariant_factors[i] == 0,
                   "divisibility chain broken");
    }
    int done = 0;
    while (done < 500) {
        auto a = testutil::random_poly(rng, 0, 3, -5, 5);
        auto b = testutil::random_poly(rng, 0, 3, -5, 5);
        auto d = testutil::random_poly(rng, 0, 2, -3, 3);
        auto g = laurent::gcd(a, b);
        if (!g.is_zero()) {
            EXPECT(laurent::divides(g, a), "gcd does not divide a");
            EXPECT(laurent::divides(g, b), "gcd does not divide b");
        }
        if (!d.is_zero() && !(a.is_zero() && b.is_zero())) {
            EXPECT(laurent::divides(d, laurent::gcd(a * d, b * d)),
                   "constructed common divisor escaped the gcd");
        }
        ++done;
    }
}

// ---- criterion 8: CLI contract ----------------------------------------------

struct CliResult {
    int exit_code;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(KNOTCLI_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    EXPECT(pipe != nullptr, "popen failed");
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    return CliResult{WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

void cli_contract() {
    std::string fx(FIXTURES_DIR);
    auto order2 = run_cli("order " + fx + "/ex2.json");
    EXPECT(order2.exit_code == 0, "order ex2.json exit code");
    EXPECT(order2.out.find("order: 2*t - 2") != std::string::npos, "order ex2.json text");
    EXPECT(order2.out.find("degree: 1") != std::string::npos, "order ex2.json degree");
    EXPECT(order2.out.find("content: 2") != std::string::npos, "order ex2.json content");

    auto verify = run_cli("verify " + fx + "/trefoil.json");
    EXPECT(verify.exit_code == 0, "verify trefoil.json exit code");
    EXPECT(verify.out.find("fail") == std::string::npos, "verify trefoil.json all-pass");

    auto zero = run_cli("order " + fx + "/empty-relators.json");
    EXPECT(zero.exit_code == 0, "order empty-relators.json exit code");
    EXPECT(zero.out.find("order: 0") != std::string::npos, "order empty-relators.json text");

    for (const char* sub : {"order", "decompose", "verify", "knot"}) {
        auto a = run_cli(std::string("--json ") + sub + " " + fx + "/trefoil.json");
        auto b = run_cli(std::string("--json ") + sub + " " + fx + "/trefoil.json");
        EXPECT(a.exit_code == 0, sub << " --json exit code");
        EXPECT(!a.out.empty() && a.out == b.out, sub << " --json bytes not stable");
    }
}

struct Criterion {
    std::string name;
    double budget_seconds;  // 0 = no stated budget
    std::function<void()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"golden example vectors", 1.0, golden_vectors},
        {"knot vectors", 0.0, knot_vectors},  // per-knot budget checked inside
        {"lattice-pair round trip (500 seeded pairs)", 60.0, lattice_roundtrip},
        {"reduction & degree-bound properties (305 presentations)", 120.0, amalgam_properties},
        {"split multiplicativity (200 seeded cases)", 0.0, direct_sum_multiplicativity},
        {"scramble invariance (20 seeds per fixture)", 0.0, scramble_invariance},
        {"substrate oracles (500 matrices, 500 polynomial pairs)", 0.0, substrate_oracles},
        {"CLI contract", 0.0, cli_contract},
    };

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& c = criteria[i];
        auto t0 = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = true;
        try {
            c.run();
        } catch (const std::exception& e) {
            ok = false;
            detail = e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (ok && c.budget_seconds > 0 && secs >= c.budget_seconds) {
            ok = false;
            std::ostringstream os;
            os << "exceeded the " << c.budget_seconds << " s budget";
            detail = os.str();
        }
        std::printf("[%s] criterion %zu: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", i + 1,
                    c.name.c_str(), secs, detail.empty() ? "" : " — ", detail.c_str());
        if (!ok) ++failed;
    }
    if (failed) std::printf("%d criterion(s) failed\n", failed);
    return failed == 0 ? 0 : 1;
}
