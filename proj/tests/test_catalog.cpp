#include <doctest.h>

#include "pencils/catalog.hpp"
#include "pencils/symplectic.hpp"

using namespace pencils;

TEST_CASE("recipe replay reproduces the stored factorization") {
    for (const auto& id : catalog_ids()) {
        CatalogEntry a = build_entry(id);
        CatalogEntry b = build_entry(id);
        CHECK(equivalent(a.fact, b.fact));
    }
    CHECK(equivalent(breed_exotic(2, 3, 4).fact, breed_exotic(2, 3, 4).fact));
}

TEST_CASE("bred word shapes match the constructions") {
    CatalogEntry w1 = build_entry("W1");
    CHECK(w1.fact.length() == 19);
    CHECK(w1.fact.surface == Surface{3, 1});
    CHECK(w1.fact.target.boundary == std::vector<int>{1});
    // (P1)^phi P1 P2' C: conjugated block first, trailing C
    for (size_t k = 0; k < 6; ++k) CHECK(w1.fact.twists[k].conjugated());
    for (size_t k = 6; k < 19; ++k) CHECK_FALSE(w1.fact.twists[k].conjugated());
    CHECK(w1.fact.twists.back().curve.name == "C");

    CatalogEntry w2 = build_entry("W2");
    CHECK(w2.fact.length() == 20);
    CHECK(w2.fact.twists[18].curve.name == "C");
    CHECK(w2.fact.twists[19].curve.name == "C");

    CatalogEntry w3 = build_entry("W3");
    CHECK(w3.fact.length() == 21);

    CatalogEntry w = build_entry("W");
    CHECK(w.fact.length() == 12);
    CHECK(w.fact.surface == Surface{3, 4});
    CHECK(w.fact.target.boundary == std::vector<int>{1, 2, 3, 4});
    std::vector<std::string> order = {"B0_1", "B1_1", "B2_1", "A0_2",  "A1_2",  "A2_2",
                                      "Bp0_1", "Bp1_1", "Bp2_1", "Ap0_2", "Ap1_2", "Ap2_2"};
    for (size_t k = 0; k < order.size(); ++k) CHECK(w.fact.twists[k].curve.name == order[k]);

    for (int h = 1; h <= 4; ++h) {
        CatalogEntry ck = build_entry("ckg-h" + std::to_string(h));
        CHECK(ck.fact.length() == 8 * h + 4);
        CHECK(ck.fact.surface.genus == 2 * h + 1);
        CHECK(ck.fact.target.is_identity());
    }
}

TEST_CASE("every catalog curve passes validation") {
    for (const auto& id : catalog_ids()) {
        CatalogEntry e = build_entry(id);
        for (const auto& t : e.fact.twists) {
            CurveCheck c = validate_curve(t.curve);
            INFO(id, " curve ", t.curve.name);
            CHECK(c.ok());
        }
    }
}

TEST_CASE("chain entry flags its separating curves") {
    CatalogEntry chain = build_entry("chain21");
    int separating = 0;
    for (const auto& t : chain.fact.twists)
        if (t.curve.separating) {
            ++separating;
            CHECK((t.curve.name == "d" || t.curve.name == "e" || t.curve.name == "C"));
        }
    CHECK(separating == 3);
}

TEST_CASE("capping the four-boundary lift yields the two-boundary one") {
    CatalogEntry big = build_entry("hamada24");
    CatalogEntry small = build_entry("hamada22");
    Factorization capped = cap_boundary(big.fact, {3, 4});
    REQUIRE(capped.twists.size() == small.fact.twists.size());
    for (size_t k = 0; k < capped.twists.size(); ++k) {
        const Curve& c = capped.twists[k].curve;
        const Curve& want = small.fact.twists[k].curve;
        CHECK(big.descent.at(c.name) == want.name);
        CHECK(c.homology == want.homology);
        CHECK(c.separating == want.separating);
        CHECK(capped.twists[k].exponent == small.fact.twists[k].exponent);
    }
    CHECK(capped.target == small.fact.target);
    CHECK(sp_product(cap_boundary(capped, {1, 2})).is_identity());
}

TEST_CASE("expected results match recomputation") {
    for (const auto& id : catalog_ids()) {
        CatalogEntry e = build_entry(id);
        INFO("entry ", id);
        InvariantReport r = entry_report(e);
        if (e.expected.length) CHECK(*e.expected.length == r.length);
        if (e.expected.e_fibration) CHECK(*e.expected.e_fibration == r.e_fibration);
        if (e.expected.sigma_fibration) CHECK(*e.expected.sigma_fibration == r.sigma);
        if (e.expected.c1sq_pencil) CHECK(*e.expected.c1sq_pencil == r.c1sq_pencil);
        if (e.expected.chi_h) CHECK(*e.expected.chi_h == r.chi_h);
        if (e.expected.b1) CHECK(*e.expected.b1 == r.b1);
        if (e.expected.h1) CHECK(*e.expected.h1 == r.h1);
        if (e.expected.scy_pass) CHECK(*e.expected.scy_pass == r.scy.pass);
        if (e.expected.pi1) {
            Pi1Report p = entry_pi1(e);
            CHECK(p.status == Pi1Report::Certified);
            CHECK(p.invariants == *e.expected.pi1);
        }
    }
}

TEST_CASE("breeding aborts cleanly when a step precondition fails") {
    CatalogEntry w = build_entry("W");
    ConjugationWord phi;
    Curve bad;
    bad.name = "bad";
    bad.surface = w.fact.surface;
    bad.homology = make_class(w.fact.surface, {0, 0, 0, 0, 0, 1});  // pairs with a3-classes
    phi.factors = {{bad, 1}};
    // a single-twist block has a nontrivial shadow, so this cannot commute
    CHECK_THROWS_AS(partial_conjugate(w.fact, 0, 0, phi), Error);
    // and the stabilized curves are legitimate witnesses against such a phi
    std::vector<Curve> witnesses = {w.fact.twists[0].curve};
    CHECK_THROWS_AS(partial_conjugate(w.fact, 0, 5, phi, witnesses), Error);
}

TEST_CASE("entry reports for the generalized family") {
    for (int h = 1; h <= 4; ++h) {
        CatalogEntry e = build_entry("ckg-h" + std::to_string(h));
        InvariantReport r = entry_report(e);
        CHECK(r.e_fibration == 4);
        CHECK(r.sigma == -4);
        CHECK(r.b1 == 2 * h + 2);
        CHECK(r.b1 == r.genus + 1);
        CHECK(r.h1 == abelian_of({}, 2 * h + 2));
    }
}
