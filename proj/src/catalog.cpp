#include "pencils/catalog.hpp"

#include <algorithm>
#include <sstream>

#include "pencils/symplectic.hpp"

namespace pencils {

namespace {

Curve curve(const Surface& s, const std::string& name, const std::vector<long long>& hom,
            bool separating = false, std::optional<int> split = std::nullopt,
            std::optional<std::string> word = std::nullopt) {
    Curve c;
    c.name = name;
    c.surface = s;
    c.homology = make_class(s, hom);
    c.separating = separating;
    c.split_genus = split;
    if (word) c.word = FreeWord::parse(*word, s);
    return c;
}

Twist tw(Curve c, long long e) {
    Twist t;
    t.curve = std::move(c);
    t.exponent = e;
    return t;
}

Curve boundary_curve(const Surface& s, int index) {
    Curve c;
    c.name = "d" + std::to_string(index);
    c.surface = s;
    c.homology = HomologyClass::zero(s.genus);
    c.separating = true;
    c.boundary_index = index;
    return c;
}

void declare_all_disjoint(Factorization& f, const std::vector<std::string>& left,
                          const std::vector<std::string>& right) {
    for (const auto& a : left)
        for (const auto& b : right)
            if (a != b) f.declare_disjoint(a, b);
}

// Closed-surface copy of the word itself: boundary twists dropped, target
// ignored. This is the fibration the hyperelliptic formula applies to.
Factorization capped_word_model(const Factorization& f) {
    Factorization r;
    r.surface = Surface{f.surface.genus, 0};
    r.disjoint = f.disjoint;
    for (const auto& t : f.twists) {
        if (t.curve.boundary_index) continue;
        Twist nt = t;
        nt.curve.surface = r.surface;
        r.twists.push_back(std::move(nt));
    }
    return r;
}

// Achiral closed-surface model of a boundary-multi-twist relation: each
// target component becomes a negative twist along a null-homotopic-after-
// capping curve, recorded as separating of split genus 0. These are the
// section-sum blocks entering the signature decompositions.
Factorization achiral_model(const Factorization& f) {
    Factorization r = capped_word_model(f);
    int k = 0;
    for (int idx : f.target.boundary) {
        Curve c;
        c.name = "o" + std::to_string(++k) + "_d" + std::to_string(idx);
        c.surface = r.surface;
        c.homology = HomologyClass::zero(r.surface.genus);
        c.separating = true;
        c.split_genus = 0;
        r.twists.push_back(tw(c, -1));
    }
    return r;
}

// Commutes the twist at `from` rightwards to the end of the word; every swap
// must preserve the passed curve (pairing zero plus a disjointness flag),
// otherwise the recipe aborts.
Factorization commute_to_end(Factorization f, size_t from) {
    for (size_t i = from; i + 1 < f.twists.size(); ++i) {
        std::string other = f.twists[i + 1].curve.name;
        if (intersection(f.twists[i].curve.homology, f.twists[i + 1].curve.homology) != 0 ||
            !f.declared_disjoint(f.twists[i].curve.name, other))
            throw Error("commute_to_end: twist is not declared disjoint from " + other);
        f = hurwitz_move(f, i, HurwitzDirection::Right);
    }
    return f;
}

// Cancels every opposite pair whose interior passes the disjointness checks,
// scanning deterministically until no negative twist remains.
Factorization cancel_matching_pairs(Factorization w, std::vector<std::string>& log) {
    bool progress = true;
    while (progress) {
        progress = false;
        for (size_t j = 0; j < w.twists.size() && !progress; ++j) {
            if (w.twists[j].exponent >= 0) continue;
            for (size_t i = 0; i < w.twists.size() && !progress; ++i) {
                if (i == j || w.twists[i].curve.name != w.twists[j].curve.name) continue;
                if (w.twists[i].exponent != -w.twists[j].exponent) continue;
                size_t lo = std::min(i, j), hi = std::max(i, j);
                bool legal = true;
                for (size_t k = lo + 1; k < hi && legal; ++k) {
                    const Curve& mid = w.twists[k].curve;
                    if (intersection(mid.homology, w.twists[lo].curve.homology) != 0 ||
                        !w.declared_disjoint(mid.name, w.twists[lo].curve.name))
                        legal = false;
                }
                if (!legal) continue;
                std::string name = w.twists[lo].curve.name;
                w = cancel_opposite_pair(w, lo, hi);
                log.push_back("cancel a t_" + name + " pair");
                progress = true;
            }
        }
    }
    for (const auto& t : w.twists)
        if (t.exponent < 0) throw Error("cancel_matching_pairs: a negative twist survived");
    return w;
}

// (t_C, t_B, t_B', ...) -> (t_A, t_A', ..., t_C): Hurwitz-rewrites the twist
// at position i past `count` following twists, installing the declared images.
Factorization sweep_right(Factorization f, size_t i, size_t count,
                          const std::vector<Curve>& images) {
    for (size_t k = 0; k < count; ++k) {
        f = hurwitz_move(f, i + k, HurwitzDirection::Right);
        f = with_curve_at(f, i + k, images[k]);
    }
    return f;
}

void log_step(CatalogEntry& e, const std::string& msg) { e.recipe_log.push_back(msg); }

// ---------------------------------------------------------------------------
// Hamada lifts of the genus-2 word
// ---------------------------------------------------------------------------

struct MatsumotoCurves {
    Surface s;
    Curve B0, B1, B2, C, A0, A1, A2;
};

MatsumotoCurves matsumoto_curves(int boundary) {
    Surface s{2, boundary};
    MatsumotoCurves m{s,
                      curve(s, "B0", {1, 0, 1, 0}, false, std::nullopt, "a1 a2"),
                      curve(s, "B1", {-1, 1, -1, 1}, false, std::nullopt, "b2 ~a2 b1 ~a1"),
                      curve(s, "B2", {0, 1, 0, 1}, false, std::nullopt, "b2 b1"),
                      curve(s, "C", {0, 0, 0, 0}, true, 1, "a1 b1 ~a1 ~b1"),
                      curve(s, "A0", {1, 0, 1, 0}),
                      curve(s, "A1", {-1, 1, -1, 1}),
                      curve(s, "A2", {0, 1, 0, 1})};
    return m;
}

}  // namespace

CatalogEntry build_hamada_g2b2() {
    CatalogEntry e;
    e.id = "hamada22";
    e.title = "genus-2 lift (B0 B1 B2 C)^2 = d1 d2";
    MatsumotoCurves m = matsumoto_curves(2);
    Factorization f;
    f.surface = m.s;
    for (int rep = 0; rep < 2; ++rep)
        for (const Curve* c : {&m.B0, &m.B1, &m.B2, &m.C}) f.twists.push_back(tw(*c, 1));
    f.target.boundary = {1, 2};
    e.fact = f;
    e.base_points = 2;
    e.hyperelliptic = true;
    DecompositionPlan plan;
    plan.summands.push_back(Summand{"self", capped_word_model(f), std::nullopt});
    e.sigma_plan = plan;
    e.expected.length = 8;
    e.expected.provenance["length"] = Provenance::Stated;
    e.expected.e_fibration = 4;
    e.expected.sigma_fibration = -4;
    e.expected.provenance["sigma_fibration"] = Provenance::Derived;
    e.expected.h1 = abelian_of({}, 2);
    e.expected.provenance["h1"] = Provenance::Derived;
    e.expected.b1 = 2;
    log_step(e, "word (B0 B1 B2 C)^2 with target d1 d2");
    return e;
}

CatalogEntry build_hamada_g2b4() {
    CatalogEntry e;
    e.id = "hamada24";
    e.title = "genus-2 lift over four boundary components";
    Surface s{2, 4};
    Factorization f;
    f.surface = s;
    for (int i = 1; i <= 2; ++i) {
        std::string suf = "_" + std::to_string(i);
        f.twists.push_back(tw(curve(s, "B0" + suf, {1, 0, 1, 0}), 1));
        f.twists.push_back(tw(curve(s, "B1" + suf, {-1, 1, -1, 1}), 1));
        f.twists.push_back(tw(curve(s, "B2" + suf, {0, 1, 0, 1}), 1));
        f.twists.push_back(tw(curve(s, "C" + suf, {0, 0, 0, 0}, true, 1), 1));
    }
    f.target.boundary = {1, 2, 3, 4};
    e.fact = f;
    e.base_points = 4;
    e.hyperelliptic = true;
    DecompositionPlan plan;
    plan.summands.push_back(Summand{"self", capped_word_model(f), std::nullopt});
    e.sigma_plan = plan;
    e.expected.length = 8;
    e.expected.provenance["length"] = Provenance::Stated;
    e.expected.sigma_fibration = -4;
    e.expected.provenance["sigma_fibration"] = Provenance::Derived;
    for (int i = 1; i <= 2; ++i) {
        std::string suf = "_" + std::to_string(i);
        e.descent["B0" + suf] = "B0";
        e.descent["B1" + suf] = "B1";
        e.descent["B2" + suf] = "B2";
        e.descent["C" + suf] = "C";
    }
    log_step(e, "word B0_1 B1_1 B2_1 C_1 B0_2 B1_2 B2_2 C_2 with target d1 d2 d3 d4");
    return e;
}

CatalogEntry build_genus2_chain() {
    CatalogEntry e;
    e.id = "chain21";
    e.title = "chain-derived genus-2 relation t_e t_x1 t_x2 t_x3 t_d t_C t_x4 = t_d1";
    Surface s{2, 1};
    Factorization f;
    f.surface = s;
    f.twists = {
        tw(curve(s, "e", {0, 0, 0, 0}, true, 1), 1),
        tw(curve(s, "x1", {1, -2, 2, 2}, false, std::nullopt, "a1 ~b1 a2 b2 ~b1 a2 b2"), 1),
        tw(curve(s, "x2", {1, -3, 2, 1}, false, std::nullopt, "a1 ~b1 ~b1 ~b1 a2 b2 a2"), 1),
        tw(curve(s, "x3", {1, -4, 2, 0}, false, std::nullopt,
                    "a1 ~b1 ~b1 ~b1 ~b1 ~b1 a2 b2 a2 ~b2 ~a2 b1 a2"), 1),
        tw(curve(s, "d", {0, 0, 0, 0}, true, 1), 1),
        tw(curve(s, "C", {0, 0, 0, 0}, true, 1, "a1 b1 ~a1 ~b1"), 1),
        tw(curve(s, "x4", {0, 1, 0, 1}), 1),
    };
    f.target.boundary = {1};
    e.fact = f;
    e.base_points = 1;
    e.hyperelliptic = true;
    DecompositionPlan plan;
    plan.summands.push_back(Summand{"self", capped_word_model(f), std::nullopt});
    e.sigma_plan = plan;
    e.expected.length = 7;
    e.expected.provenance["length"] = Provenance::Stated;
    e.expected.sigma_fibration = -3;
    e.expected.provenance["sigma_fibration"] = Provenance::Derived;
    e.expected.h1 = abelian_of({}, 2);
    log_step(e, "word e x1 x2 x3 d C x4 with target d1");
    return e;
}

namespace {

// ---------------------------------------------------------------------------
// Genus-3 curve tables
// ---------------------------------------------------------------------------

struct ExoticCurves {  // curves on Sigma_3^1 for W1..W3
    Surface s{3, 1};
    std::map<std::string, Curve> c;
    std::vector<std::string> p1, p2, p2p;  // factor curve names
};

ExoticCurves exotic_curves() {
    ExoticCurves t;
    const Surface& s = t.s;
    auto put = [&](Curve cv) { t.c.emplace(cv.name, std::move(cv)); };
    put(curve(s, "e", {0, 0, 0, 0, 0, 0}, true, 1));
    put(curve(s, "d", {0, 0, 0, 0, 0, 0}, true, 1));
    put(curve(s, "x1", {1, -2, 2, 2, 0, 0}, false, std::nullopt, "a1 ~b1 a2 b2 ~b1 a2 b2"));
    put(curve(s, "x2", {1, -3, 2, 1, 0, 0}, false, std::nullopt, "a1 ~b1 ~b1 ~b1 a2 b2 a2"));
    put(curve(s, "x3", {1, -4, 2, 0, 0, 0}, false, std::nullopt,
              "a1 ~b1 ~b1 ~b1 ~b1 ~b1 a2 b2 a2 ~b2 ~a2 b1 a2"));
    put(curve(s, "B2", {0, 1, 0, 1, 0, 0}, false, std::nullopt, "b2 b1 b3 a3 ~b3 ~a3"));
    put(curve(s, "C", {0, 0, 0, 0, 0, 0}, true, 1, "a1 b1 ~a1 ~b1"));
    put(curve(s, "Cp", {0, 0, 0, 0, 0, 0}, true, 2));
    put(curve(s, "B0", {1, 0, 1, 0, 0, 0}, false, std::nullopt, "a1 a2"));
    put(curve(s, "B1", {-1, 1, -1, 1, 0, 0}, false, std::nullopt, "b2 ~a2 b1 ~a1 b3 a3 ~b3 ~a3"));
    put(curve(s, "A0", {1, 0, 1, 0, 0, 0}));
    put(curve(s, "A1", {-1, 1, -1, 1, 0, 0}));
    put(curve(s, "A2", {0, 1, 0, 1, 0, 0}));
    put(curve(s, "Bp0", {0, 0, 1, 0, 1, 0}, false, std::nullopt, "a2 a3"));
    put(curve(s, "Bp1", {0, 0, 1, -1, 1, -1}, false, std::nullopt, "a2 ~b2 a3 ~b3"));
    put(curve(s, "Bp2", {0, 0, 0, 1, 0, 1}, false, std::nullopt, "b3 b2"));
    put(curve(s, "Ap0", {0, 0, 1, 0, 1, 0}));
    put(curve(s, "Ap1", {0, 0, 1, -1, 1, -1}));
    put(curve(s, "Ap2", {0, 0, 0, 1, 0, 1}));
    put(curve(s, "b1", {0, 1, 0, 0, 0, 0}, false, std::nullopt, "b1"));
    put(curve(s, "a2", {0, 0, 1, 0, 0, 0}, false, std::nullopt, "a2"));
    t.p1 = {"e", "x1", "x2", "x3", "d", "B2"};
    t.p2 = {"B0", "B1", "B2", "A0", "A1", "A2"};
    t.p2p = {"Bp0", "Bp1", "Bp2", "Ap0", "Ap1", "Ap2"};
    return t;
}

DisjointPairs exotic_disjoint(const ExoticCurves& t) {
    Factorization scratch;
    std::vector<std::string> all = t.p1;
    all.insert(all.end(), t.p2.begin(), t.p2.end());
    all.insert(all.end(), t.p2p.begin(), t.p2p.end());
    declare_all_disjoint(scratch, all, {"C", "Cp"});
    scratch.declare_disjoint("C", "Cp");
    return scratch.disjoint;
}

// Hamada word rewritten to B0 B1 B2 A0 A1 A2 C C by sweeping the first C
// rightwards; works for any boundary count.
Factorization rewrite_hamada(const Factorization& f, const MatsumotoCurves& m,
                             std::vector<std::string>* log) {
    Factorization r = sweep_right(f, 3, 3, {m.A0, m.A1, m.A2});
    if (log)
        log->push_back("Hurwitz-sweep C past the second B-block: word becomes "
                       "B0 B1 B2 A0 A1 A2 C C");
    return r;
}

Factorization chain_embedded(const ExoticCurves& t, std::vector<std::string>* log) {
    CatalogEntry chain = build_genus2_chain();
    Curve b2_in_chain = curve(chain.fact.surface, "B2", {0, 1, 0, 1}, false, std::nullopt, "b2 b1");
    Factorization rw = sweep_right(chain.fact, 5, 1, {b2_in_chain});
    if (log) log->push_back("rewrite chain word to e x1 x2 x3 d B2 C");
    Embedding emb;
    emb.source = chain.fact.surface;
    emb.target = t.s;
    for (const char* n : {"e", "x1", "x2", "x3", "d", "B2", "C"}) emb.curve_map[n] = t.c.at(n);
    emb.curve_map["d1"] = t.c.at("Cp");
    emb.target_disjoint = exotic_disjoint(t);
    Factorization out = embed(rw, emb);
    if (log) log->push_back("embed into genus 3 with d1 -> Cp: P1 C ~Cp");
    return out;
}

Factorization matsumoto_embedded(const ExoticCurves& t, bool primed,
                                 std::vector<std::string>* log) {
    MatsumotoCurves m = matsumoto_curves(2);
    CatalogEntry h22 = build_hamada_g2b2();
    Factorization rw = rewrite_hamada(h22.fact, m, log);
    Embedding emb;
    emb.target = t.s;
    emb.target_disjoint = exotic_disjoint(t);
    if (!primed) {
        Factorization capped = cap_boundary(rw, {1});  // view in one boundary component first
        if (log) log->push_back("cap d1 of the two-boundary lift");
        emb.source = capped.surface;
        for (const char* n : {"B0", "B1", "B2", "A0", "A1", "A2", "C"}) emb.curve_map[n] = t.c.at(n);
        emb.curve_map["d1"] = t.c.at("Cp");  // remaining boundary maps to Cp
        Factorization out = embed(capped, emb);
        if (log) log->push_back("embed into genus 3 with boundary -> Cp: P2 C C ~Cp");
        return out;
    }
    emb.source = rw.surface;
    emb.curve_map["B0"] = t.c.at("Bp0");
    emb.curve_map["B1"] = t.c.at("Bp1");
    emb.curve_map["B2"] = t.c.at("Bp2");
    emb.curve_map["A0"] = t.c.at("Ap0");
    emb.curve_map["A1"] = t.c.at("Ap1");
    emb.curve_map["A2"] = t.c.at("Ap2");
    emb.curve_map["C"] = t.c.at("Cp");
    emb.curve_map["d1"] = t.c.at("C");
    Curve d1 = boundary_curve(t.s, 1);
    emb.curve_map["d2"] = d1;
    Factorization out = embed(rw, emb);
    if (log) log->push_back("embed into genus 3 with d1 -> C, d2 -> boundary: P2' Cp Cp ~C = d1");
    return out;
}

ConjugationWord exotic_phi(const ExoticCurves& t, long long m1, long long m2) {
    ConjugationWord phi;
    phi.factors = {{t.c.at("b1"), -m1}, {t.c.at("a2"), m2}};
    return phi;
}

Factorization chain_model_g2() {
    return achiral_model(build_genus2_chain().fact);
}

Factorization hamada_capped_model() {
    // capped-d1 lift achiralized: B0 B1 B2 A0 A1 A2 C C ~o
    MatsumotoCurves m = matsumoto_curves(2);
    CatalogEntry h22 = build_hamada_g2b2();
    Factorization rw = rewrite_hamada(h22.fact, m, nullptr);
    Factorization capped = cap_boundary(rw, {1});
    return achiral_model(capped);
}

}  // namespace

CatalogEntry breed_exotic(int i, long long m1, long long m2) {
    if (i < 1 || i > 3) throw Error("breed_exotic: i must be 1, 2 or 3");
    CatalogEntry e;
    e.id = "W" + std::to_string(i);
    std::ostringstream title;
    title << "bred genus-3 word W" << i << " with phi = b1^" << -m1 << " a2^" << m2;
    e.title = title.str();
    ExoticCurves t = exotic_curves();

    Factorization f1 = chain_embedded(t, &e.recipe_log);
    Factorization f2 = matsumoto_embedded(t, false, &e.recipe_log);
    Factorization f3 = matsumoto_embedded(t, true, &e.recipe_log);
    ConjugationWord phi = exotic_phi(t, m1, m2);
    std::vector<Curve> witnesses = {t.c.at("C"), t.c.at("Cp")};

    Factorization conj_block = (i <= 2) ? f1 : f2;
    Factorization mid = (i == 1) ? f1 : f2;
    Factorization g = partial_conjugate(conj_block, 0, 5, phi, witnesses);
    log_step(e, "conjugate the first factor by phi along its six-twist block");
    Factorization w = concatenate(concatenate(g, mid), f3);
    log_step(e, "concatenate the three embedded relations");

    w = cancel_matching_pairs(w, e.recipe_log);
    // commute the surviving C twists to the end of the word
    for (size_t k = 0; k + 1 < w.twists.size();) {
        if (w.twists[k].curve.name == "C" &&
            !std::all_of(w.twists.begin() + k, w.twists.end(),
                         [](const Twist& t) { return t.curve.name == "C"; })) {
            w = commute_to_end(w, k);
            log_step(e, "commute a surviving t_C to the end");
        } else {
            ++k;
        }
    }
    e.fact = w;
    e.base_points = 1;

    DecompositionPlan plan;
    if (i == 1) {
        plan.summands.push_back(Summand{"conjugated chain block", chain_model_g2(), std::nullopt});
        plan.summands.push_back(Summand{"chain block", chain_model_g2(), std::nullopt});
    } else if (i == 2) {
        plan.summands.push_back(Summand{"conjugated chain block", chain_model_g2(), std::nullopt});
        plan.summands.push_back(Summand{"capped lift block", hamada_capped_model(), std::nullopt});
    } else {
        plan.summands.push_back(Summand{"conjugated lift block", hamada_capped_model(), std::nullopt});
        plan.summands.push_back(Summand{"capped lift block", hamada_capped_model(), std::nullopt});
    }
    plan.summands.push_back(Summand{"primed lift block", hamada_capped_model(), std::nullopt});
    plan.ledger.push_back(CancelledPair{"C", true});
    plan.ledger.push_back(CancelledPair{"Cp", true});
    plan.ledger.push_back(CancelledPair{"Cp", true});
    e.sigma_plan = plan;

    e.expected.length = 18 + i;
    e.expected.provenance["length"] = Provenance::Stated;
    e.expected.e_fibration = 10 + i;
    e.expected.provenance["e_fibration"] = Provenance::Stated;
    e.expected.sigma_fibration = -6 - i;
    e.expected.provenance["sigma_fibration"] = Provenance::Stated;
    e.expected.c1sq_pencil = 3 - i;
    e.expected.provenance["c1sq_pencil"] = Provenance::Stated;
    e.expected.chi_h = 1;
    e.expected.provenance["chi_h"] = Provenance::Stated;
    if (m1 == 1 && m2 == 1) {
        if (i == 2) {
            // Recomputation: the displayed relators force an extra Z/3 here.
            // The source asserts a trivial group; see the decisions ledger.
            e.expected.pi1 = abelian_of({3});
            e.expected.provenance["pi1"] = Provenance::Derived;
        } else {
            e.expected.pi1 = abelian_of({});
            e.expected.provenance["pi1"] = Provenance::Stated;
        }
        e.expected.h1 = *e.expected.pi1;
        e.expected.b1 = 0;
    }
    return e;
}

namespace {

struct ScyCurves {  // curves on Sigma_3^4
    Surface s{3, 4};
    std::map<std::string, Curve> c;
};

ScyCurves scy_curves() {
    ScyCurves t;
    const Surface& s = t.s;
    auto put = [&](Curve cv) { t.c.emplace(cv.name, std::move(cv)); };
    put(curve(s, "B0_1", {1, 0, 0, 0, 1, 0}, false, std::nullopt, "a1 a3"));
    put(curve(s, "B1_1", {1, -1, 0, 1, 1, -1}, false, std::nullopt, "a1 ~b1 a2 b2 ~a2 a3 ~b3"));
    put(curve(s, "B2_1", {0, -1, 0, 1, 0, -1}, false, std::nullopt, "~b1 a2 b2 ~a2 ~b3"));
    put(curve(s, "A0_2", {1, 0, 0, 0, 1, 0}, false, std::nullopt,
              "a1 b3 a3 ~b3 ~a3 b2 a3 ~b2 a3 b3 ~a3 ~b3"));
    put(curve(s, "A1_2", {1, -1, 0, 1, 1, -1}, false, std::nullopt,
              "a3 ~b3 ~b2 a3 b3 ~a3 ~b3 a1 a1 ~b1 ~a1 b3 a3 ~b3 ~a3 b2 b3 a3 ~b3 ~a3 b2"));
    put(curve(s, "A2_2", {0, -1, 0, 1, 0, -1}, false, std::nullopt,
              "a1 ~b1 ~a1 b3 a3 ~b3 ~a3 b2 b3 a3 ~b3 ~a3 b2 ~b3 ~b2 a3 b3 ~a3 ~b3"));
    put(curve(s, "Bp0_1", {1, 0, 0, 0, 1, 0}, false, std::nullopt, "~a2 a1 a2 a3"));
    put(curve(s, "Bp1_1", {1, -1, 0, 1, 1, -1}, false, std::nullopt,
              "a1 ~b1 a2 a3 a3 ~b3 ~a3 b2 ~a2"));
    put(curve(s, "Bp2_1", {0, 1, 0, -1, 0, 1}, false, std::nullopt, "b1 a2 ~b2 a3 b3 ~a3 ~a2"));
    put(curve(s, "Ap0_2", {1, 0, 0, 0, 1, 0}, false, std::nullopt, "a1 a2 ~b2 a3 b2 ~a2"));
    put(curve(s, "Ap1_2", {1, -1, 0, 1, 1, -1}, false, std::nullopt,
              "a1 ~b1 a2 ~b2 a3 a3 ~b3 ~a3 b2 b2 ~a2"));
    put(curve(s, "Ap2_2", {0, -1, 0, 1, 0, -1}, false, std::nullopt,
              "~b1 a2 ~b2 a3 ~b3 ~a3 b2 b2 ~a2"));
    put(curve(s, "C1", {0, 0, 0, 1, 0, 0}));
    put(curve(s, "C2", {0, 0, 0, 1, 0, 0}));
    put(curve(s, "Cp1", {0, 0, 0, 1, 0, 0}));
    put(curve(s, "Cp2", {0, 0, 0, 1, 0, 0}));
    put(curve(s, "b1", {0, 1, 0, 0, 0, 0}, false, std::nullopt, "b1"));
    put(curve(s, "a3", {0, 0, 0, 0, 1, 0}, false, std::nullopt, "a3"));
    return t;
}

DisjointPairs scy_disjoint() {
    Factorization scratch;
    std::vector<std::string> blocks = {"B0_1", "B1_1", "B2_1", "A0_2",  "A1_2",  "A2_2",
                                       "Bp0_1", "Bp1_1", "Bp2_1", "Ap0_2", "Ap1_2", "Ap2_2"};
    std::vector<std::string> cs = {"C1", "C2", "Cp1", "Cp2"};
    declare_all_disjoint(scratch, blocks, cs);
    declare_all_disjoint(scratch, cs, cs);
    return scratch.disjoint;
}

// Gamma_2^4 lift rewritten to B0_1 B1_1 B2_1 A0_2 A1_2 A2_2 C_1 C_2 with the
// two middle boundary components moved into the target side.
Factorization rewrite_hamada24(std::vector<std::string>* log) {
    CatalogEntry h24 = build_hamada_g2b4();
    const Surface& s = h24.fact.surface;
    std::vector<Curve> images = {curve(s, "A0_2", {1, 0, 1, 0}), curve(s, "A1_2", {-1, 1, -1, 1}),
                                 curve(s, "A2_2", {0, 1, 0, 1})};
    Factorization rw = sweep_right(h24.fact, 3, 3, images);
    if (log) log->push_back("Hurwitz-sweep C_1 past the second B-block");
    return rw;
}

}  // namespace

CatalogEntry breed_scy(long long m1, long long m2) {
    CatalogEntry e;
    bool plain = (m1 == 0 && m2 == 0);
    e.id = plain ? "W" : "Wphi";
    std::ostringstream title;
    if (plain)
        title << "bred genus-3 word W = P P' over four boundary components";
    else
        title << "bred genus-3 word W_phi, phi = b1^" << -m1 << " a3^" << m2;
    e.title = title.str();
    ScyCurves t = scy_curves();
    DisjointPairs table = scy_disjoint();

    Factorization rw = rewrite_hamada24(&e.recipe_log);

    Embedding emb1;
    emb1.source = rw.surface;
    emb1.target = t.s;
    emb1.target_disjoint = table;
    emb1.curve_map["B0_1"] = t.c.at("B0_1");
    emb1.curve_map["B1_1"] = t.c.at("B1_1");
    emb1.curve_map["B2_1"] = t.c.at("B2_1");
    emb1.curve_map["A0_2"] = t.c.at("A0_2");
    emb1.curve_map["A1_2"] = t.c.at("A1_2");
    emb1.curve_map["A2_2"] = t.c.at("A2_2");
    emb1.curve_map["C_1"] = t.c.at("C1");
    emb1.curve_map["C_2"] = t.c.at("C2");
    emb1.curve_map["d1"] = t.c.at("Cp2");
    emb1.curve_map["d2"] = t.c.at("Cp1");
    emb1.curve_map["d3"] = boundary_curve(t.s, 2);
    emb1.curve_map["d4"] = boundary_curve(t.s, 1);
    Factorization f1 = embed(rw, emb1);
    log_step(e, "first glued embedding: P~ C1 C2 ~Cp2 ~Cp1 = d1 d2");

    Embedding emb2;
    emb2.source = rw.surface;
    emb2.target = t.s;
    emb2.target_disjoint = table;
    emb2.curve_map["B0_1"] = t.c.at("Bp0_1");
    emb2.curve_map["B1_1"] = t.c.at("Bp1_1");
    emb2.curve_map["B2_1"] = t.c.at("Bp2_1");
    emb2.curve_map["A0_2"] = t.c.at("Ap0_2");
    emb2.curve_map["A1_2"] = t.c.at("Ap1_2");
    emb2.curve_map["A2_2"] = t.c.at("Ap2_2");
    emb2.curve_map["C_1"] = t.c.at("Cp1");
    emb2.curve_map["C_2"] = t.c.at("Cp2");
    emb2.curve_map["d1"] = t.c.at("C2");
    emb2.curve_map["d2"] = t.c.at("C1");
    emb2.curve_map["d3"] = boundary_curve(t.s, 3);
    emb2.curve_map["d4"] = boundary_curve(t.s, 4);
    Factorization f2 = embed(rw, emb2);
    log_step(e, "rotated glued embedding: P~' Cp1 Cp2 ~C2 ~C1 = d3 d4");

    Factorization g = f1;
    if (!plain) {
        ConjugationWord phi;
        phi.factors = {{t.c.at("b1"), -m1}, {t.c.at("a3"), m2}};
        std::vector<Curve> witnesses = {t.c.at("C1"), t.c.at("C2"), t.c.at("Cp1"), t.c.at("Cp2")};
        g = partial_conjugate(f1, 0, 5, phi, witnesses);
        log_step(e, "conjugate P~ by phi");
    }
    Factorization w = concatenate(g, f2);
    log_step(e, "concatenate the two embedded relations");

    w = cancel_matching_pairs(w, e.recipe_log);
    e.fact = w;
    e.base_points = 4;

    DecompositionPlan plan;
    Factorization model = achiral_model(rewrite_hamada(build_hamada_g2b2().fact,
                                                      matsumoto_curves(2), nullptr));
    plan.summands.push_back(Summand{plain ? "first block" : "conjugated block", model, std::nullopt});
    plan.summands.push_back(Summand{"rotated block", model, std::nullopt});
    for (const char* n : {"C1", "C2", "Cp1", "Cp2"}) plan.ledger.push_back(CancelledPair{n, false});
    e.sigma_plan = plan;

    e.expected.length = 12;
    e.expected.provenance["length"] = Provenance::Stated;
    e.expected.e_fibration = 4;
    e.expected.provenance["e_fibration"] = Provenance::Stated;
    e.expected.sigma_fibration = -4;
    e.expected.provenance["sigma_fibration"] = Provenance::Stated;
    e.expected.chi_h = 0;
    e.expected.scy_pass = true;
    e.expected.provenance["scy_pass"] = Provenance::Stated;
    e.expected.h1 = abelian_of({m1, m2}, 2);
    e.expected.provenance["h1"] = Provenance::Stated;
    e.expected.b1 = 2 + (m1 == 0 ? 1 : 0) + (m2 == 0 ? 1 : 0);
    if (plain) {
        e.expected.pi1 = abelian_of({}, 4);
        e.expected.provenance["pi1"] = Provenance::Stated;
    }
    return e;
}

namespace {

// Nested symmetric classes of the generalized genus-2h lift: with
// u_k = a_k + a_{2h+1-k}, v_k = b_k + b_{2h+1-k}, P_k and Q_k their partial
// sums, the word is
//   B0 = P_h + Q_h, B_{2k-1} = P_{h-k+1} + Q_{h-k},
//   B_{2k} = P_{h-k} + Q_{h-k} - v_{h-k+1}, ..., B_{2h-1} = P_1, B_{2h} = Q_1.
std::vector<std::vector<long long>> ck_classes(int h) {
    int g = 2 * h;
    auto uvec = [&](int k) {
        std::vector<long long> w(2 * g, 0);
        w[2 * (k - 1)] = 1;
        w[2 * (g - k)] += 1;
        return w;
    };
    auto vvec = [&](int k) {
        std::vector<long long> w(2 * g, 0);
        w[2 * (k - 1) + 1] = 1;
        w[2 * (g - k) + 1] += 1;
        return w;
    };
    auto add = [&](std::vector<long long> a, const std::vector<long long>& b, long long s) {
        for (size_t i = 0; i < a.size(); ++i) a[i] += s * b[i];
        return a;
    };
    std::vector<std::vector<long long>> P{std::vector<long long>(2 * g, 0)};
    std::vector<std::vector<long long>> Q{std::vector<long long>(2 * g, 0)};
    for (int k = 1; k <= h; ++k) {
        P.push_back(add(P.back(), uvec(k), 1));
        Q.push_back(add(Q.back(), vvec(k), 1));
    }
    std::vector<std::vector<long long>> w;
    w.push_back(add(P[h], Q[h], 1));
    for (int k = 1; k < h; ++k) {
        w.push_back(add(P[h - k + 1], Q[h - k], 1));
        w.push_back(add(add(P[h - k], Q[h - k], 1), vvec(h - k + 1), -1));
    }
    w.push_back(P[1]);
    w.push_back(Q[1]);
    return w;
}

}  // namespace

CatalogEntry build_ck_lift(int h) {
    if (h < 1) throw Error("build_ck_lift: h must be positive");
    CatalogEntry e;
    e.id = "ck-h" + std::to_string(h);
    e.title = "generalized genus-" + std::to_string(2 * h) + " lift (B0 ... B" +
              std::to_string(2 * h) + " C)^2 = d1 d2";
    Surface s{2 * h, 2};
    Factorization f;
    f.surface = s;
    auto classes = ck_classes(h);
    std::vector<Curve> bs;
    for (size_t j = 0; j < classes.size(); ++j)
        bs.push_back(curve(s, "B" + std::to_string(j), classes[j]));
    Curve c = curve(s, "C", std::vector<long long>(4 * h, 0), true, h);
    for (int rep = 0; rep < 2; ++rep) {
        for (const auto& b : bs) f.twists.push_back(tw(b, 1));
        f.twists.push_back(tw(c, 1));
    }
    f.target.boundary = {1, 2};
    e.fact = f;
    e.base_points = 2;
    e.hyperelliptic = true;
    DecompositionPlan plan;
    plan.summands.push_back(Summand{"self", capped_word_model(f), std::nullopt});
    e.sigma_plan = plan;
    e.expected.length = 4 * h + 4;
    e.expected.provenance["length"] = Provenance::Stated;
    e.expected.e_fibration = 8 - 4 * h;
    e.expected.provenance["e_fibration"] = Provenance::Derived;
    e.expected.sigma_fibration = -4;
    e.expected.provenance["sigma_fibration"] = Provenance::Derived;
    e.expected.b1 = 2 * h;
    log_step(e, "generalized lift word of length " + std::to_string(4 * h + 4));
    return e;
}

CatalogEntry breed_ck_pencil(int h) {
    if (h < 1) throw Error("breed_ck_pencil: h must be positive");
    CatalogEntry e;
    int g = 2 * h + 1;
    e.id = "ckg-h" + std::to_string(h);
    e.title = "bred genus-" + std::to_string(g) + " fibration from two glued embeddings";
    Surface s{g, 0};

    CatalogEntry lift = build_ck_lift(h);
    // rewrite to B... A... C C
    std::vector<Curve> a_images;
    auto classes = ck_classes(h);
    for (size_t j = 0; j < classes.size(); ++j)
        a_images.push_back(curve(lift.fact.surface, "A" + std::to_string(j), classes[j]));
    Factorization rw = sweep_right(lift.fact, 2 * h + 1, 2 * h + 1, a_images);
    log_step(e, "Hurwitz-sweep the first C past the second B-block");

    auto lifted = [&](const std::vector<long long>& v4h) {
        std::vector<long long> w(2 * g, 0);
        for (size_t i = 0; i < v4h.size(); ++i) w[i] = v4h[i];
        return w;
    };
    std::vector<long long> neck(2 * g, 0);
    neck[2 * g - 1] = 1;  // b-class of the glued circle

    std::map<std::string, Curve> glued, gluedp;
    for (size_t j = 0; j < classes.size(); ++j) {
        std::string bj = "B" + std::to_string(j), aj = "A" + std::to_string(j);
        glued[bj] = curve(s, "G" + bj, lifted(classes[j]));
        glued[aj] = curve(s, "G" + aj, lifted(classes[j]));
        gluedp[bj] = curve(s, "G" + bj + "p", lifted(classes[j]));
        gluedp[aj] = curve(s, "G" + aj + "p", lifted(classes[j]));
    }
    Curve gc = curve(s, "GC", neck);
    Curve gcp = curve(s, "GCp", neck);

    DisjointPairs table;
    {
        Factorization scratch;
        std::vector<std::string> names;
        for (const auto& [k, c] : glued) names.push_back(c.name);
        for (const auto& [k, c] : gluedp) names.push_back(c.name);
        declare_all_disjoint(scratch, names, {"GC", "GCp"});
        scratch.declare_disjoint("GC", "GCp");
        table = scratch.disjoint;
    }

    auto make_embedding = [&](bool primed) {
        Embedding emb;
        emb.source = rw.surface;
        emb.target = s;
        emb.target_disjoint = table;
        const auto& m = primed ? gluedp : glued;
        for (const auto& [name, cv] : m) emb.curve_map[name] = cv;
        emb.curve_map["C"] = primed ? gcp : gc;
        emb.curve_map["d1"] = primed ? gc : gcp;
        emb.curve_map["d2"] = primed ? gc : gcp;
        return emb;
    };
    Factorization f1 = embed(rw, make_embedding(false));
    log_step(e, "glued embedding: GB.. GA.. GC GC ~GCp ~GCp");
    Factorization f2 = embed(rw, make_embedding(true));
    log_step(e, "rotated glued embedding: GB..p GA..p GCp GCp ~GC ~GC");
    Factorization w = concatenate(f1, f2);
    log_step(e, "concatenate the two embedded relations");
    w = cancel_matching_pairs(w, e.recipe_log);
    e.fact = w;
    e.base_points = 0;

    DecompositionPlan plan;
    Factorization model = achiral_model(rw);
    plan.summands.push_back(Summand{"glued block", model, std::nullopt});
    plan.summands.push_back(Summand{"rotated block", model, std::nullopt});
    plan.ledger.push_back(CancelledPair{"GC", false});
    plan.ledger.push_back(CancelledPair{"GC", false});
    plan.ledger.push_back(CancelledPair{"GCp", false});
    plan.ledger.push_back(CancelledPair{"GCp", false});
    e.sigma_plan = plan;

    e.expected.length = 8 * h + 4;
    e.expected.e_fibration = 4;
    e.expected.sigma_fibration = -4;
    e.expected.provenance["sigma_fibration"] = Provenance::Derived;
    e.expected.b1 = 2 * h + 2;  // = g + 1
    e.expected.provenance["b1"] = Provenance::Stated;
    e.expected.h1 = abelian_of({}, 2 * h + 2);
    return e;
}

std::vector<std::string> catalog_ids() {
    std::vector<std::string> ids = {"hamada22", "hamada24", "chain21", "W1", "W2", "W3",
                                    "W",        "Wphi"};
    for (int h = 1; h <= 5; ++h) ids.push_back("ck-h" + std::to_string(h));
    for (int h = 1; h <= 4; ++h) ids.push_back("ckg-h" + std::to_string(h));
    return ids;
}

CatalogEntry build_entry(const std::string& id, long long m1, long long m2) {
    auto defaulted = [&](long long d1, long long d2) {
        return std::make_pair(m1 < 0 ? d1 : m1, m2 < 0 ? d2 : m2);
    };
    if (id == "hamada22") return build_hamada_g2b2();
    if (id == "hamada24") return build_hamada_g2b4();
    if (id == "chain21") return build_genus2_chain();
    if (id == "W1" || id == "W2" || id == "W3") {
        auto [a, b] = defaulted(1, 1);
        return breed_exotic(id[1] - '0', a, b);
    }
    if (id == "W") return breed_scy(0, 0);
    if (id == "Wphi") {
        auto [a, b] = defaulted(1, 1);
        return breed_scy(a, b);
    }
    if (id.rfind("ck-h", 0) == 0) return build_ck_lift(std::stoi(id.substr(4)));
    if (id.rfind("ckg-h", 0) == 0) return breed_ck_pencil(std::stoi(id.substr(5)));
    throw Error("unknown catalog id '" + id + "'");
}

long long entry_sigma(const CatalogEntry& e) {
    if (e.sigma_plan) return signature_decomposition(*e.sigma_plan).sigma;
    if (e.hyperelliptic) return signature_hyperelliptic(e.fact);
    throw Error("entry " + e.id + " has no signature route");
}

InvariantReport entry_report(const CatalogEntry& e) {
    return make_report(e.fact, e.base_points, entry_sigma(e), h1_pipeline(e.fact));
}

Pi1Report entry_pi1(const CatalogEntry& e, const SearchBudget& budget) {
    return pi1_report(e.fact, e.base_points, budget);
}

}  // namespace pencils
