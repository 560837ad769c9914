#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pencils/factorization.hpp"
#include "pencils/groups.hpp"
#include "pencils/invariants.hpp"

namespace pencils {

// Where a stored expectation comes from: quoted from the source construction,
// or derived by this library's own oracles.
enum class Provenance { Stated, Derived };

struct ExpectedResults {
    std::optional<long long> length;
    std::optional<long long> e_fibration;
    std::optional<long long> sigma_fibration;
    std::optional<long long> c1sq_pencil;
    std::optional<long long> chi_h;
    std::optional<long long> b1;
    std::optional<AbelianInvariants> h1;
    std::optional<AbelianInvariants> pi1;  // set when the pipeline should certify it
    std::optional<bool> scy_pass;
    std::map<std::string, Provenance> provenance;  // field name -> source
};

struct CatalogEntry {
    std::string id;
    std::string title;
    Factorization fact;
    int base_points = 0;
    bool hyperelliptic = false;
    std::optional<DecompositionPlan> sigma_plan;
    ExpectedResults expected;
    std::map<std::string, std::string> descent;  // curve name -> capped name
    std::vector<std::string> recipe_log;
};

// The Hamada lifts of the genus-2 pencil word: (B0 B1 B2 C)^2 as a
// factorization of the boundary multi-twist on two, resp. four, boundary
// components.
CatalogEntry build_hamada_g2b2();
CatalogEntry build_hamada_g2b4();

// The seven-twist chain-derived relation t_e t_x1 t_x2 t_x3 t_d t_C t_x4 = t_d1.
CatalogEntry build_genus2_chain();

// Bred genus-3 words over one boundary component: W1 = (P1)^phi P1 P2' C,
// W2 = (P1)^phi P2 P2' C^2, W3 = (P2)^phi P2 P2' C^3, with
// phi = t_b1^{-m1} t_a2^{m2}.
CatalogEntry breed_exotic(int i, long long m1 = 1, long long m2 = 1);

// Bred genus-3 word over four boundary components: W_phi = P~^phi P~' with
// phi = t_b1^{-m1} t_a3^{m2}; (0,0) is the plain W = P P'.
CatalogEntry breed_scy(long long m1 = 0, long long m2 = 0);

// Generalized genus-2h lift ((B0 ... B2h C)^2 = d1 d2) and the bred
// genus-(2h+1) fibration obtained from its two glued embeddings.
CatalogEntry build_ck_lift(int h);
CatalogEntry breed_ck_pencil(int h);

std::vector<std::string> catalog_ids();
// ids: hamada22, hamada24, chain21, W1, W2, W3, W, Wphi, ck-h<h>, ckg-h<h>.
// m1/m2 parametrize the conjugations of W1..W3 and Wphi.
CatalogEntry build_entry(const std::string& id, long long m1 = -1, long long m2 = -1);

// Signature by the entry's preferred route: decomposition plan when present,
// else the hyperelliptic formula.
long long entry_sigma(const CatalogEntry& e);
InvariantReport entry_report(const CatalogEntry& e);
Pi1Report entry_pi1(const CatalogEntry& e, const SearchBudget& budget = budget_from_env());

}  // namespace pencils
