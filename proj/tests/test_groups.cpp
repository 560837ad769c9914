#include <doctest.h>

#include <numeric>
#include <random>

#include "pencils/catalog.hpp"
#include "pencils/groups.hpp"

using namespace pencils;

namespace {

// Invariant factors via gcds of k x k minors, the classical characterization.
std::vector<Int> minor_gcd_invariants(const std::vector<std::vector<long long>>& m) {
    size_t rows = m.size(), cols = m[0].size();
    size_t rmax = std::min(rows, cols);
    auto det = [&](const std::vector<size_t>& ri, const std::vector<size_t>& ci) {
        size_t k = ri.size();
        std::vector<std::vector<long long>> a(k, std::vector<long long>(k));
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j) a[i][j] = m[ri[i]][ci[j]];
        // Bareiss, exact in long long at these sizes
        long long prev = 1, sign = 1;
        for (size_t p = 0; p < k; ++p) {
            if (a[p][p] == 0) {
                size_t q = p + 1;
                while (q < k && a[q][p] == 0) ++q;
                if (q == k) return 0LL;
                std::swap(a[p], a[q]);
                sign = -sign;
            }
            for (size_t i = p + 1; i < k; ++i)
                for (size_t j = p + 1; j < k; ++j)
                    a[i][j] = (a[i][j] * a[p][p] - a[i][p] * a[p][j]) / prev;
            prev = a[p][p];
        }
        return sign * a[k - 1][k - 1];
    };
    std::vector<Int> d(rmax + 1, 0);
    d[0] = 1;
    for (size_t k = 1; k <= rmax; ++k) {
        long long g = 0;
        std::vector<size_t> ri(k), ci(k);
        std::iota(ri.begin(), ri.end(), 0);
        auto next_subset = [](std::vector<size_t>& s, size_t n) {
            size_t k_ = s.size();
            for (size_t i = k_; i-- > 0;) {
                if (s[i] < n - (k_ - i)) {
                    ++s[i];
                    for (size_t j = i + 1; j < k_; ++j) s[j] = s[j - 1] + 1;
                    return true;
                }
            }
            return false;
        };
        bool row_more = true;
        std::iota(ri.begin(), ri.end(), 0);
        while (row_more && g != 1) {
            std::iota(ci.begin(), ci.end(), 0);
            bool col_more = true;
            while (col_more && g != 1) {
                g = std::gcd(g, std::abs(det(ri, ci)));
                col_more = next_subset(ci, cols);
            }
            row_more = next_subset(ri, rows);
        }
        if (g == 0) {
            d.resize(k);
            break;
        }
        d[k] = g;
    }
    std::vector<Int> inv;
    for (size_t k = 1; k < d.size(); ++k) inv.push_back(d[k] / d[k - 1]);
    return inv;
}

}  // namespace

TEST_CASE("smith normal form against the minor-gcd oracle") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<long long> entry(-9, 9);
    for (int it = 0; it < 200; ++it) {
        size_t rows = 1 + rng() % 8, cols = 1 + rng() % 10;
        std::vector<std::vector<long long>> m(rows, std::vector<long long>(cols));
        std::vector<std::vector<Int>> mi(rows, std::vector<Int>(cols));
        for (size_t i = 0; i < rows; ++i)
            for (size_t j = 0; j < cols; ++j) {
                m[i][j] = entry(rng);
                mi[i][j] = m[i][j];
            }
        SnfResult snf = smith_normal_form(mi);
        std::vector<Int> oracle = minor_gcd_invariants(m);
        REQUIRE(snf.divisors.size() == oracle.size());
        for (size_t k = 0; k < oracle.size(); ++k) CHECK(snf.divisors[k] == oracle[k]);
        for (size_t k = 1; k < snf.divisors.size(); ++k)
            CHECK(snf.divisors[k] % snf.divisors[k - 1] == 0);
    }
}

TEST_CASE("abelian invariants normal form") {
    CHECK(abelian_of({2, 3}) == abelian_of({6}));
    CHECK(abelian_of({0, 4}).rank == 1);
    CHECK(abelian_of({1, 1}).trivial());
    CHECK(abelian_of({}, 4).to_string() == "Z^4");
    CHECK(abelian_of({3}).to_string() == "Z/3");

    // diag(1,1) relators on two generators give the trivial group
    std::vector<std::vector<Int>> rows = {{1, 0}, {0, 1}};
    SnfResult s = smith_normal_form(rows);
    CHECK(s.rank == 2);
    CHECK(s.divisors == std::vector<Int>{1, 1});
}

TEST_CASE("presentations from catalog words") {
    CatalogEntry w = build_entry("W");
    FPGroup g = presentation(w.fact, 4);
    CHECK(g.generators() == 6);
    CHECK(g.relators.size() == 13);
    CHECK_FALSE(g.partial);
    CHECK(abelianization(g) == abelian_of({}, 4));

    CatalogEntry w1 = build_entry("W1");
    FPGroup p = presentation(w1.fact, 1);
    CHECK(p.partial);  // conjugated x-twists lost their words, A' has none

    Factorization empty;
    empty.surface = Surface{2, 0};
    FPGroup surf = presentation(empty, 1);
    CHECK(surf.relators.size() == 1);
    CHECK(abelianization(surf) == abelian_of({}, 4));

    FPGroup fib = presentation(w.fact, 0);
    CHECK(fib.partial);  // no base point, no section to complete the presentation
}

TEST_CASE("h1 pipeline on the exotic families") {
    for (int i : {1, 3}) {
        for (long long m1 = 0; m1 <= 3; ++m1)
            for (long long m2 = 0; m2 <= 3; ++m2) {
                CatalogEntry e = breed_exotic(i, m1, m2);
                CHECK(h1_pipeline(e.fact) == abelian_of({m1, m2}));
            }
    }
    for (long long m1 : {0LL, 1LL, 2LL, 6LL})
        for (long long m2 : {0LL, 5LL}) {
            CatalogEntry e = breed_scy(m1, m2);
            CHECK(h1_pipeline(e.fact) == abelian_of({m1, m2}, 2));
        }
    CHECK(h1_pipeline(build_entry("W").fact) == abelian_of({}, 4));
}

TEST_CASE("h1 is invariant under orientation flips") {
    CatalogEntry e = breed_scy(3, 4);
    AbelianInvariants base = h1_pipeline(e.fact);
    std::mt19937_64 rng(5);
    for (int it = 0; it < 10; ++it) {
        Factorization f = e.fact;
        for (auto& t : f.twists)
            if (rng() & 1) t.curve.homology = -t.curve.homology;
        CHECK(h1_pipeline(f) == base);
    }
}

TEST_CASE("h1 does not depend on the order of disjoint conjugating twists") {
    CatalogEntry base = build_entry("W");
    Surface s = base.fact.surface;
    auto mk = [&](const std::string& name, const std::vector<long long>& hom) {
        Curve c;
        c.name = name;
        c.surface = s;
        c.homology = make_class(s, hom);
        return c;
    };
    ConjugationWord ab, ba;
    ab.factors = {{mk("b1", {0, 1, 0, 0, 0, 0}), -2}, {mk("a3", {0, 0, 0, 0, 1, 0}), 3}};
    ba.factors = {{mk("a3", {0, 0, 0, 0, 1, 0}), 3}, {mk("b1", {0, 1, 0, 0, 0, 0}), -2}};
    Factorization f1 = partial_conjugate(base.fact, 0, 5, ab);
    Factorization f2 = partial_conjugate(base.fact, 0, 5, ba);
    CHECK(h1_pipeline(f1) == h1_pipeline(f2));
}

TEST_CASE("prove_abelian certifies the twelve-twist presentation") {
    CatalogEntry w = build_entry("W");
    FPGroup g = presentation(w.fact, 4);
    ProofVerdict v = prove_abelian(g);
    REQUIRE(v.status == ProofVerdict::Proven);
    CHECK(v.traces.size() == 15);
    CHECK(replay_proof(g, v));

    // serialized traces replay after a round-trip
    ProofVerdict back = parse_trace(serialize_trace(v));
    CHECK(back.traces.size() == v.traces.size());
    CHECK(replay_proof(g, back));
}

TEST_CASE("prove_abelian is inconclusive on a free group") {
    FPGroup free2;
    free2.surface = Surface{1, 0};
    // no relators at all: even the surface relation is withheld
    SearchBudget tight;
    tight.max_nodes = 5000;
    ProofVerdict v = prove_abelian(free2, tight);
    CHECK(v.status == ProofVerdict::Inconclusive);
}

TEST_CASE("prove_abelian with a single commutator relator") {
    FPGroup torus;
    torus.surface = Surface{1, 0};
    torus.relators.push_back(surface_relation(torus.surface));  // [a1,b1]
    ProofVerdict v = prove_abelian(torus);
    REQUIRE(v.status == ProofVerdict::Proven);
    CHECK(v.traces.size() == 1);
    CHECK(v.traces[0].steps.size() == 1);
    CHECK(replay_proof(torus, v));
}

TEST_CASE("pi1 pipeline on the catalog") {
    CatalogEntry w1 = build_entry("W1");
    Pi1Report r1 = pi1_report(w1.fact, 1);
    CHECK(r1.status == Pi1Report::Certified);
    CHECK(r1.invariants.trivial());

    CatalogEntry w3 = build_entry("W3");
    Pi1Report r3 = pi1_report(w3.fact, 1);
    CHECK(r3.status == Pi1Report::Certified);
    CHECK(r3.invariants.trivial());

    CatalogEntry w = build_entry("W");
    Pi1Report rw = pi1_report(w.fact, 4);
    CHECK(rw.status == Pi1Report::Certified);
    CHECK(rw.invariants == abelian_of({}, 4));
    CHECK(rw.to_string() == "Certified Z^4");

    // an empty budget can only report the homological answer
    SearchBudget zero;
    zero.max_nodes = 0;
    Pi1Report h1only = pi1_report(w.fact, 4, zero);
    CHECK(h1only.status == Pi1Report::H1Only);
    CHECK(h1only.invariants == abelian_of({}, 4));
}
