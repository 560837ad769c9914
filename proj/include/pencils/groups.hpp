#pragma once

#include <string>
#include <vector>

#include "pencils/factorization.hpp"
#include "pencils/surface.hpp"

namespace pencils {

// Abelian group as rank plus invariant factors d1 | d2 | ..., each >= 2.
struct AbelianInvariants {
    long long rank = 0;
    std::vector<Int> torsion;

    bool operator==(const AbelianInvariants& o) const {
        return rank == o.rank && torsion == o.torsion;
    }
    bool operator!=(const AbelianInvariants& o) const { return !(*this == o); }
    bool trivial() const { return rank == 0 && torsion.empty(); }
    std::string to_string() const;
};

// Normal form of Z^rank + Z/m1 + Z/m2 for test expectations (m = 0 adds rank,
// m = 1 drops out).
AbelianInvariants abelian_of(const std::vector<long long>& orders, long long extra_rank = 0);

struct SnfResult {
    std::vector<Int> divisors;  // nonzero invariant factors, divisibility chain
    size_t rank = 0;            // = divisors.size()
};

SnfResult smith_normal_form(std::vector<std::vector<Int>> m);

AbelianInvariants quotient_invariants(const std::vector<HomologyClass>& relators, int generators);

// Finitely presented group on the 2g surface generators; the surface relation
// is always relators[0].
struct FPGroup {
    Surface surface;
    std::vector<FreeWord> relators;
    bool partial = false;

    int generators() const { return surface.dim(); }
};

// Relators: surface relation plus the pi1 word of every twist curve. Flagged
// partial when some curve has no word or when base_points == 0 (no section to
// complete the presentation).
FPGroup presentation(const Factorization& f, int base_points);

AbelianInvariants abelianization(const FPGroup& g);

// H1 from homology classes of all (possibly conjugated) vanishing cycles.
AbelianInvariants h1_pipeline(const Factorization& f);

struct SearchBudget {
    size_t max_word_length = 64;
    size_t max_nodes = 1000000;
};

SearchBudget budget_from_env();  // honors PENCILS_SEARCH_NODES / PENCILS_SEARCH_MAXLEN

struct ProofStep {
    enum Kind { InsertRelator, FreeReduce, CyclicPermute } kind = InsertRelator;
    size_t position = 0;  // insertion point (InsertRelator) or shift (CyclicPermute)
    size_t relator = 0;   // pool index; >= #presentation relators marks a derived commutator
    size_t rotation = 0;
    bool inverted = false;
};

struct PairProof {
    int gen_a = 0;
    int gen_b = 0;
    std::vector<ProofStep> steps;
};

struct ProofVerdict {
    enum Status { Proven, Inconclusive } status = Inconclusive;
    std::vector<PairProof> traces;  // in proof order; later traces may insert earlier commutators
    size_t nodes_used = 0;
    std::string detail;
};

// Bounded search: for every generator pair, drive the commutator to the empty
// word by anchored relator insertions (with free reduction) and cyclic
// permutations. Proven commutators join the relator pool for later pairs.
// Never a false positive; Inconclusive when the budget runs out.
ProofVerdict prove_abelian(const FPGroup& g, const SearchBudget& budget = {});

// Re-executes every trace from its commutator start word; true iff all reach
// the empty word using only the presentation relators and previously replayed
// commutators.
bool replay_proof(const FPGroup& g, const ProofVerdict& v);

std::string serialize_trace(const ProofVerdict& v);
ProofVerdict parse_trace(const std::string& text);

struct Pi1Report {
    enum Status { Certified, H1Only } status = H1Only;
    AbelianInvariants invariants;
    std::string detail;

    std::string to_string() const;
};

// Two-stage pipeline: prove the word-level presentation of the non-conjugated
// factors abelian, then read the group off the full homological relator set.
Pi1Report pi1_report(const Factorization& f, int base_points, const SearchBudget& budget = {});

}  // namespace pencils
