#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pencils/catalog.hpp"
#include "pencils/dsl.hpp"
#include "pencils/symplectic.hpp"

using namespace pencils;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

struct Resolved {
    Factorization fact;
    std::optional<CatalogEntry> entry;
    std::string label;
};

Resolved resolve(const std::string& target, long long m1, long long m2) {
    Resolved r;
    if (target.rfind("catalog:", 0) == 0) {
        std::string id = target.substr(8);
        CatalogEntry e = build_entry(id, m1, m2);
        r.fact = e.fact;
        r.label = e.id;
        r.entry = std::move(e);
        return r;
    }
    std::ifstream in(target);
    if (!in) throw Error("cannot open '" + target + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    ParseResult pr = parse_factorization(buf.str());
    if (!pr.ok()) {
        std::ostringstream msg;
        msg << "parse failed:";
        for (const auto& d : pr.diagnostics) msg << "\n  " << d.to_string();
        throw Error(msg.str());
    }
    r.fact = *pr.factorization;
    r.label = target;
    return r;
}

long long choose_sigma(const Resolved& r) {
    if (r.entry) return entry_sigma(*r.entry);
    if (sp_product(r.fact).is_identity()) return signature_meyer(r.fact);
    return signature_hyperelliptic(r.fact);
}

int cmd_verify(const Resolved& r) {
    VerifyResult v = verify(r.fact);
    std::cout << r.label << ": " << (v.pass ? "PASS" : "FAIL") << " (" << v.note << ")\n";
    if (!v.pass && v.witness)
        std::cout << "  witness basis vector " << v.witness->to_string() << "\n";
    return v.pass ? kExitPass : kExitFail;
}

int cmd_invariants(const Resolved& r, bool json) {
    int m = r.entry ? r.entry->base_points : r.fact.surface.boundary;
    InvariantReport rep = make_report(r.fact, m, choose_sigma(r), h1_pipeline(r.fact));
    if (json) {
        std::cout << rep.to_json() << "\n";
    } else {
        std::cout << r.label << ": genus " << rep.genus << ", l=" << rep.length
                  << ", e_fib=" << rep.e_fibration << ", e_pencil=" << rep.e_pencil
                  << ", sigma=" << rep.sigma << ", c1sq_fib=" << rep.c1sq_fibration
                  << ", c1sq_pencil=" << rep.c1sq_pencil << ", chi_h=" << rep.chi_h
                  << ", H1=" << rep.h1.to_string() << ", b1=" << rep.b1
                  << ", scy=" << (rep.scy.pass ? "PASS" : "FAIL") << "\n";
    }
    return rep.sp_verified ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dehn-twist factorization calculator"};
    app.require_subcommand(1);

    std::string target;
    long long m1 = -1, m2 = -1;
    bool json = false, all = false;

    auto add_target = [&](CLI::App* sub, bool required = true) {
        auto* opt = sub->add_option("target", target, "factorization file or catalog:<id>");
        if (required) opt->required();
        sub->add_option("--m1", m1, "first conjugation exponent");
        sub->add_option("--m2", m2, "second conjugation exponent");
    };

    auto* verify_cmd = app.add_subcommand("verify", "check the symplectic product against the target");
    verify_cmd->add_option("target", target, "factorization file or catalog:<id>");
    verify_cmd->add_flag("--all", all, "verify every catalog entry");
    verify_cmd->add_option("--m1", m1, "first conjugation exponent");
    verify_cmd->add_option("--m2", m2, "second conjugation exponent");

    auto* inv_cmd = app.add_subcommand("invariants", "invariant report for a pencil/fibration");
    add_target(inv_cmd);
    inv_cmd->add_flag("--json", json, "emit the JSON report document");

    auto* pi1_cmd = app.add_subcommand("pi1", "two-stage fundamental group pipeline");
    add_target(pi1_cmd);

    auto* h1_cmd = app.add_subcommand("h1", "first homology from the vanishing-cycle lattice");
    add_target(h1_cmd);

    auto* breed_cmd = app.add_subcommand("breed", "run a breeding recipe and print the result");
    add_target(breed_cmd);

    auto* catalog_cmd = app.add_subcommand("catalog", "catalog operations");
    std::string catalog_op = "list";
    catalog_cmd->add_option("op", catalog_op, "list");

    auto* oracle_cmd = app.add_subcommand("oracle", "classification oracles");
    std::string oracle_name;
    int og = 3, om = 1;
    long long bound = 50;
    oracle_cmd->add_option("name", oracle_name, "rational-obstruction")->required();
    oracle_cmd->add_option("g", og, "genus");
    oracle_cmd->add_option("m", om, "base points");
    oracle_cmd->add_option("--bound", bound, "search radius");

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify_cmd->parsed()) {
            if (all) {
                bool ok = true;
                for (const auto& id : catalog_ids()) {
                    Resolved r = resolve("catalog:" + id, m1, m2);
                    ok &= cmd_verify(r) == kExitPass;
                }
                return ok ? kExitPass : kExitFail;
            }
            if (target.empty()) {
                std::cerr << "verify: missing target\n";
                return kExitInput;
            }
            return cmd_verify(resolve(target, m1, m2));
        }
        if (inv_cmd->parsed()) return cmd_invariants(resolve(target, m1, m2), json);
        if (pi1_cmd->parsed()) {
            Resolved r = resolve(target, m1, m2);
            int m = r.entry ? r.entry->base_points : r.fact.surface.boundary;
            Pi1Report rep = pi1_report(r.fact, m, budget_from_env());
            std::cout << r.label << ": " << rep.to_string() << "\n";
            return kExitPass;
        }
        if (h1_cmd->parsed()) {
            Resolved r = resolve(target, m1, m2);
            std::cout << r.label << ": " << h1_pipeline(r.fact).to_string() << "\n";
            return kExitPass;
        }
        if (breed_cmd->parsed()) {
            if (target.rfind("catalog:", 0) != 0) target = "catalog:" + target;
            Resolved r = resolve(target, m1, m2);
            if (!r.entry) {
                std::cerr << "breed: not a recipe id\n";
                return kExitInput;
            }
            for (const auto& step : r.entry->recipe_log) std::cout << "  - " << step << "\n";
            std::cout << serialize_factorization(r.fact);
            return kExitPass;
        }
        if (catalog_cmd->parsed()) {
            if (catalog_op != "list") {
                std::cerr << "catalog: unknown op '" << catalog_op << "'\n";
                return kExitInput;
            }
            for (const auto& id : catalog_ids()) {
                CatalogEntry e = build_entry(id);
                std::cout << id << "  g=" << e.fact.surface.genus << " b=" << e.fact.surface.boundary
                          << " l=" << e.fact.length() << "  " << e.title << "\n";
            }
            return kExitPass;
        }
        if (oracle_cmd->parsed()) {
            if (oracle_name != "rational-obstruction") {
                std::cerr << "unknown oracle '" << oracle_name << "'\n";
                return kExitInput;
            }
            ObstructionResult res = rational_obstruction(og, om, bound);
            std::cout << "rational-obstruction g=" << og << " m=" << om << " bound=" << bound
                      << ": " << res.to_string() << "\n";
            return kExitPass;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
