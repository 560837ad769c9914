#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pencils/factorization.hpp"
#include "pencils/groups.hpp"

namespace pencils {

struct EulerNumbers {
    long long fibration = 0;  // 4 - 4g + l(W)
    long long pencil = 0;     // fibration - base points
};

EulerNumbers euler(const Factorization& f, int base_points);

// Signed twist counts: nonseparating total and separating totals per split genus.
struct TwistCounts {
    long long nonseparating = 0;
    std::map<int, long long> separating;  // split genus -> signed count
};

TwistCounts count_twists(const Factorization& f);

// Hyperelliptic signature formula, exact rationals:
//   sigma = -((g+1)/(2g+1)) n + sum_h (4h(g-h)/(2g+1) - 1) s_h.
// Separating twists need a split_genus annotation; capped boundary curves
// enter as split genus 0. Throws unless the result is an integer.
long long signature_hyperelliptic(const Factorization& f);

struct Summand {
    std::string label;
    Factorization model;                    // hyperelliptic genus-2 (or 2h) model
    std::optional<long long> stored_sigma;  // overrides the formula when set
};

struct CancelledPair {
    std::string curve;
    bool separating = false;  // opposite pairs are signature-neutral either way
};

struct DecompositionPlan {
    std::vector<Summand> summands;
    std::vector<CancelledPair> ledger;
};

struct DecompositionResult {
    long long sigma = 0;
    std::vector<std::pair<std::string, long long>> summand_sigmas;
};

DecompositionResult signature_decomposition(const DecompositionPlan& plan);

// Meyer-cocycle route: -sum_k tau(T_1...T_{k-1}, T_k) plus a local term of
// lambda_sep = -1 per separating elementary twist (calibrated once against
// the genus-2 oracle with sigma = -4 and frozen). Requires an identity
// symplectic product.
long long signature_meyer(const Factorization& f);

struct ObstructionResult {
    bool no_solution = true;
    long long a = 0;
    std::array<long long, 9> c{};
    std::string to_string() const;
};

// Exhaustive fiber-class search F = aH - sum c_i E_i with a^2 = m + sum c_i^2
// and 2g-2 = m - 3a + sum c_i, a >= 0, |a|,|c_i| <= bound.
ObstructionResult rational_obstruction(int genus, int base_points, long long bound = 50);

enum class RuledSurface { SxT2, TwistedSxT2 };

struct RuledVerdict {
    bool excluded = true;
    long long a = 0, b = 0;  // witness when not excluded
    std::string reason;
};

RuledVerdict ruled_exclusion(int genus, long long self_int, RuledSurface which);

enum class Kodaira { MinusInfinity, Zero, One, Two };

// The four-case table on (K^2, sign of K.omega) of the minimal model.
Kodaira kodaira_classify(long long k_squared, int k_dot_omega_sign);
std::string kodaira_name(Kodaira k);

struct ScyVerdict {
    bool pass = false;
    int base_points = 0;                     // 2g-2 when the criterion holds
    long long blown_down_e = 0, blown_down_sigma = 0, blown_down_c1sq = 0;
    std::string reason;
};

struct InvariantReport {
    int genus = 0;
    int base_points = 0;
    long long length = 0;
    TwistCounts counts;
    long long e_fibration = 0;
    long long e_pencil = 0;
    long long sigma = 0;  // fibration-level; the pencil value is sigma + base_points
    long long c1sq_fibration = 0;
    long long c1sq_pencil = 0;
    long long chi_h = 0;
    AbelianInvariants h1;
    long long b1 = 0;
    bool positive = false;
    bool sp_verified = false;
    ScyVerdict scy;
    bool b1_bound_ok = false;  // b1 <= 2g - 1

    std::string to_json() const;
};

// Assembles the report; sigma must be supplied by one of the signature routes.
InvariantReport make_report(const Factorization& f, int base_points, long long sigma,
                            const AbelianInvariants& h1);

ScyVerdict scy_criterion(const InvariantReport& r);

}  // namespace pencils
