#include "pencils/groups.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <queue>
#include <sstream>
#include <unordered_map>

namespace pencils {

std::string AbelianInvariants::to_string() const {
    std::ostringstream out;
    bool first = true;
    if (rank > 0) {
        out << "Z";
        if (rank > 1) out << "^" << rank;
        first = false;
    }
    for (const auto& d : torsion) {
        if (!first) out << " + ";
        out << "Z/" << d;
        first = false;
    }
    if (first) out << "1";
    return out.str();
}

AbelianInvariants abelian_of(const std::vector<long long>& orders, long long extra_rank) {
    std::vector<std::vector<Int>> rows;
    size_t n = orders.size();
    for (size_t i = 0; i < n; ++i) {
        std::vector<Int> row(n, 0);
        row[i] = orders[i];
        rows.push_back(std::move(row));
    }
    SnfResult s = smith_normal_form(std::move(rows));
    AbelianInvariants a;
    a.rank = extra_rank + static_cast<long long>(n - s.rank);
    for (const auto& d : s.divisors)
        if (d > 1) a.torsion.push_back(d);
    return a;
}

namespace {

Int int_abs(const Int& v) { return v < 0 ? Int(-v) : v; }

}  // namespace

SnfResult smith_normal_form(std::vector<std::vector<Int>> m) {
    SnfResult out;
    if (m.empty()) return out;
    size_t rows = m.size(), cols = m[0].size();
    size_t t = 0;
    while (t < rows && t < cols) {
        // smallest nonzero entry of the remaining block becomes the pivot
        size_t pi = t, pj = t;
        bool found = false;
        Int best = 0;
        for (size_t i = t; i < rows; ++i)
            for (size_t j = t; j < cols; ++j)
                if (m[i][j] != 0 && (!found || int_abs(m[i][j]) < best)) {
                    best = int_abs(m[i][j]);
                    pi = i;
                    pj = j;
                    found = true;
                }
        if (!found) break;
        std::swap(m[t], m[pi]);
        for (size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pj]);

        const Int& pivot = m[t][t];
        bool dirty = false;
        for (size_t i = t + 1; i < rows; ++i) {
            if (m[i][t] == 0) continue;
            Int q = m[i][t] / pivot;
            if (q != 0)
                for (size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
            if (m[i][t] != 0) dirty = true;  // remainder, strictly smaller than the pivot
        }
        for (size_t j = t + 1; j < cols; ++j) {
            if (m[t][j] == 0) continue;
            Int q = m[t][j] / pivot;
            if (q != 0)
                for (size_t i = 0; i < rows; ++i) m[i][j] -= q * m[i][t];
            if (m[t][j] != 0) dirty = true;
        }
        if (dirty) continue;  // re-pick the now smaller minimum
        bool divides = true;
        for (size_t i = t + 1; i < rows && divides; ++i)
            for (size_t j = t + 1; j < cols && divides; ++j)
                if (m[i][j] % pivot != 0) {
                    // fold the offending row in; the next pass leaves a smaller remainder
                    for (size_t jj = t; jj < cols; ++jj) m[t][jj] += m[i][jj];
                    divides = false;
                }
        if (!divides) continue;
        ++t;
    }
    for (size_t i = 0; i < t; ++i) out.divisors.push_back(int_abs(m[i][i]));
    out.rank = t;
    return out;
}

AbelianInvariants quotient_invariants(const std::vector<HomologyClass>& relators, int generators) {
    std::vector<std::vector<Int>> rows;
    for (const auto& r : relators) {
        if (static_cast<int>(r.coeff.size()) != generators)
            throw Error("relator length does not match generator count");
        rows.push_back(r.coeff);
    }
    AbelianInvariants a;
    if (rows.empty()) {
        a.rank = generators;
        return a;
    }
    SnfResult s = smith_normal_form(std::move(rows));
    a.rank = generators - static_cast<long long>(s.rank);
    for (const auto& d : s.divisors)
        if (d > 1) a.torsion.push_back(d);
    std::sort(a.torsion.begin(), a.torsion.end());
    return a;
}

FPGroup presentation(const Factorization& f, int base_points) {
    FPGroup g;
    g.surface = Surface{f.surface.genus, 0};
    g.relators.push_back(surface_relation(g.surface));
    g.partial = base_points <= 0;
    for (const auto& t : f.twists) {
        if (t.curve.boundary_index) continue;
        if (t.curve.word)
            g.relators.push_back(*t.curve.word);
        else
            g.partial = true;
    }
    return g;
}

AbelianInvariants abelianization(const FPGroup& g) {
    std::vector<HomologyClass> rows;
    for (const auto& r : g.relators) rows.push_back(r.abelianize(g.surface));
    return quotient_invariants(rows, g.generators());
}

AbelianInvariants h1_pipeline(const Factorization& f) {
    std::vector<HomologyClass> rows;
    rows.reserve(f.twists.size());
    for (const auto& t : f.twists) rows.push_back(t.curve.homology);
    return quotient_invariants(rows, f.surface.dim());
}

SearchBudget budget_from_env() {
    SearchBudget b;
    if (const char* nodes = std::getenv("PENCILS_SEARCH_NODES")) b.max_nodes = std::strtoull(nodes, nullptr, 10);
    if (const char* len = std::getenv("PENCILS_SEARCH_MAXLEN")) b.max_word_length = std::strtoull(len, nullptr, 10);
    return b;
}

namespace {

// Letters packed as signed ints: +(g+1) / -(g+1).
using Packed = std::vector<int>;

Packed pack(const FreeWord& w) {
    Packed p;
    p.reserve(w.size());
    for (const auto& l : w.letters()) p.push_back(l.sign * (l.gen + 1));
    return p;
}

Packed reduce(const Packed& w) {
    Packed out;
    out.reserve(w.size());
    for (int x : w) {
        if (!out.empty() && out.back() == -x)
            out.pop_back();
        else
            out.push_back(x);
    }
    return out;
}

Packed invert(const Packed& w) {
    Packed out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
    return out;
}

Packed rotate(const Packed& w, size_t k) {
    if (w.empty()) return w;
    k %= w.size();
    Packed out;
    out.reserve(w.size());
    for (size_t i = 0; i < w.size(); ++i) out.push_back(w[(i + k) % w.size()]);
    return reduce(out);
}

struct Rotation {
    Packed word;
    size_t relator;
    size_t rotation;
    bool inverted;
};

struct NodeKey {
    size_t operator()(const Packed& w) const {
        size_t h = 1469598103934665603ull;
        for (int x : w) {
            h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

struct SearchState {
    std::vector<Rotation> rotations;
    std::unordered_map<int, std::vector<const Rotation*>> by_first;
    std::unordered_map<int, std::vector<const Rotation*>> by_last;
};

void index_pool(const std::vector<Packed>& pool, SearchState& st) {
    st.rotations.clear();
    for (size_t ri = 0; ri < pool.size(); ++ri) {
        const Packed& r = pool[ri];
        if (r.empty()) continue;
        for (int inv = 0; inv < 2; ++inv) {
            Packed base = inv ? invert(r) : r;
            for (size_t s = 0; s < base.size(); ++s) {
                Packed rot;
                rot.reserve(base.size());
                for (size_t i = 0; i < base.size(); ++i) rot.push_back(base[(i + s) % base.size()]);
                st.rotations.push_back(Rotation{std::move(rot), ri, s, inv == 1});
            }
        }
    }
    st.by_first.clear();
    st.by_last.clear();
    for (const auto& rot : st.rotations) {
        st.by_first[rot.word.front()].push_back(&rot);
        st.by_last[rot.word.back()].push_back(&rot);
    }
}

struct Candidate {
    size_t position;
    const Rotation* rot;
    bool operator<(const Candidate& o) const {
        if (position != o.position) return position < o.position;
        return rot < o.rot;
    }
};

// Best-first search for the empty word. Insertions are anchored (at least one
// letter cancels at a seam) and capped to +grow letters per step.
bool search_trivial(const Packed& goal, const SearchState& st, const SearchBudget& budget,
                    size_t grow, size_t& nodes, std::vector<ProofStep>& steps_out) {
    Packed start = reduce(goal);
    if (start.empty()) {
        steps_out.clear();
        return true;
    }
    struct Entry {
        size_t priority;
        size_t steps;
        Packed word;
        bool operator>(const Entry& o) const { return priority > o.priority; }
    };
    std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> pq;
    std::unordered_map<Packed, std::pair<Packed, ProofStep>, NodeKey> parent;
    std::unordered_map<Packed, size_t, NodeKey> dist;
    pq.push(Entry{start.size(), 0, start});
    dist[start] = 0;
    while (!pq.empty()) {
        Entry e = pq.top();
        pq.pop();
        ++nodes;
        if (nodes > budget.max_nodes) return false;
        const Packed& w = e.word;
        auto dit = dist.find(w);
        if (dit != dist.end() && dit->second < e.steps) continue;
        if (w.empty()) {
            // reconstruct
            std::vector<ProofStep> steps;
            Packed cur = w;
            while (!(cur == start)) {
                auto it = parent.find(cur);
                if (it == parent.end()) break;
                steps.push_back(it->second.second);
                cur = it->second.first;
            }
            std::reverse(steps.begin(), steps.end());
            steps_out = std::move(steps);
            return true;
        }
        size_t n = w.size();
        std::vector<Candidate> cands;
        cands.reserve(4 * n);
        for (size_t p = 0; p <= n; ++p) {
            if (p < n) {
                auto it = st.by_last.find(-w[p]);
                if (it != st.by_last.end())
                    for (const Rotation* r : it->second) cands.push_back(Candidate{p, r});
            }
            if (p > 0) {
                auto it = st.by_first.find(-w[p - 1]);
                if (it != st.by_first.end())
                    for (const Rotation* r : it->second) cands.push_back(Candidate{p, r});
            }
        }
        for (const auto& c : cands) {
            Packed nw;
            nw.reserve(n + c.rot->word.size());
            nw.insert(nw.end(), w.begin(), w.begin() + c.position);
            nw.insert(nw.end(), c.rot->word.begin(), c.rot->word.end());
            nw.insert(nw.end(), w.begin() + c.position, w.end());
            nw = reduce(nw);
            if (nw.size() > budget.max_word_length || nw.size() > n + grow) continue;
            size_t ns = e.steps + 1;
            auto it = dist.find(nw);
            if (it != dist.end() && it->second <= ns) continue;
            dist[nw] = ns;
            ProofStep step;
            step.kind = ProofStep::InsertRelator;
            step.position = c.position;
            step.relator = c.rot->relator;
            step.rotation = c.rot->rotation;
            step.inverted = c.rot->inverted;
            parent[nw] = {w, step};
            pq.push(Entry{nw.size() + ns / 3, ns, nw});
        }
    }
    return false;
}

}  // namespace

ProofVerdict prove_abelian(const FPGroup& g, const SearchBudget& budget) {
    ProofVerdict v;
    std::vector<Packed> pool;
    for (const auto& r : g.relators) pool.push_back(pack(r));

    int n = g.generators();
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    // Pairs of high-index generators tend to have the shortest derivations in
    // these presentations; prove them first so their commutators can feed the
    // earlier handles.
    std::stable_sort(pairs.begin(), pairs.end(), [](const auto& p, const auto& q) {
        return p.first + p.second > q.first + q.second;
    });

    std::vector<bool> done(pairs.size(), false);
    size_t remaining = pairs.size();
    // Several rounds with a growing per-attempt cap: commutators proven in one
    // round help the next, the way a substitution chain builds on earlier
    // identities, so hard pairs should fail fast until the pool matures.
    size_t attempt_cap = 4000;
    for (int round = 0; round < 8 && remaining > 0; ++round, attempt_cap *= 8) {
        bool progress = false;
        SearchState st;
        index_pool(pool, st);
        for (size_t pi = 0; pi < pairs.size(); ++pi) {
            if (done[pi]) continue;
            auto [a, b] = pairs[pi];
            Packed goal = {a + 1, b + 1, -(a + 1), -(b + 1)};
            for (size_t grow : {4u, 8u}) {
                if (v.nodes_used >= budget.max_nodes) break;
                SearchBudget attempt = budget;
                attempt.max_nodes = std::min(attempt_cap, budget.max_nodes - v.nodes_used);
                size_t used = 0;
                std::vector<ProofStep> steps;
                bool ok = search_trivial(goal, st, attempt, grow, used, steps);
                v.nodes_used += used;
                if (ok) {
                    PairProof proof;
                    proof.gen_a = a;
                    proof.gen_b = b;
                    proof.steps = std::move(steps);
                    v.traces.push_back(std::move(proof));
                    pool.push_back(goal);
                    done[pi] = true;
                    --remaining;
                    progress = true;
                    break;
                }
            }
            if (done[pi]) index_pool(pool, st);
            if (v.nodes_used >= budget.max_nodes) break;
        }
        if (!progress && attempt_cap >= budget.max_nodes) break;
        if (v.nodes_used >= budget.max_nodes) break;
    }
    if (remaining == 0) {
        v.status = ProofVerdict::Proven;
        v.detail = "all generator pairs commute";
    } else {
        v.status = ProofVerdict::Inconclusive;
        std::ostringstream out;
        out << remaining << " pair(s) unresolved within budget";
        v.detail = out.str();
    }
    return v;
}

bool replay_proof(const FPGroup& g, const ProofVerdict& v) {
    if (v.status != ProofVerdict::Proven) return false;
    std::vector<Packed> pool;
    for (const auto& r : g.relators) pool.push_back(pack(r));
    for (const auto& proof : v.traces) {
        Packed w = reduce({proof.gen_a + 1, proof.gen_b + 1, -(proof.gen_a + 1), -(proof.gen_b + 1)});
        for (const auto& step : proof.steps) {
            switch (step.kind) {
                case ProofStep::FreeReduce:
                    w = reduce(w);
                    break;
                case ProofStep::CyclicPermute:
                    w = rotate(w, step.position);
                    break;
                case ProofStep::InsertRelator: {
                    if (step.relator >= pool.size()) return false;
                    Packed r = pool[step.relator];
                    if (step.inverted) r = invert(r);
                    if (r.empty() || step.rotation >= r.size()) return false;
                    Packed rot;
                    for (size_t i = 0; i < r.size(); ++i) rot.push_back(r[(i + step.rotation) % r.size()]);
                    if (step.position > w.size()) return false;
                    Packed nw(w.begin(), w.begin() + step.position);
                    nw.insert(nw.end(), rot.begin(), rot.end());
                    nw.insert(nw.end(), w.begin() + step.position, w.end());
                    w = reduce(nw);
                    break;
                }
            }
        }
        if (!w.empty()) return false;
        pool.push_back(reduce({proof.gen_a + 1, proof.gen_b + 1, -(proof.gen_a + 1), -(proof.gen_b + 1)}));
    }
    return true;
}

std::string serialize_trace(const ProofVerdict& v) {
    std::ostringstream out;
    out << (v.status == ProofVerdict::Proven ? "proven" : "inconclusive") << " " << v.traces.size()
        << "\n";
    for (const auto& t : v.traces) {
        out << "pair " << t.gen_a << " " << t.gen_b << " " << t.steps.size() << "\n";
        for (const auto& s : t.steps) {
            const char* kind = s.kind == ProofStep::InsertRelator   ? "insert"
                               : s.kind == ProofStep::CyclicPermute ? "cycle"
                                                                    : "reduce";
            out << kind << " " << s.position << " " << s.relator << " " << s.rotation << " "
                << (s.inverted ? 1 : 0) << "\n";
        }
    }
    return out.str();
}

ProofVerdict parse_trace(const std::string& text) {
    std::istringstream in(text);
    ProofVerdict v;
    std::string status;
    size_t count = 0;
    if (!(in >> status >> count)) throw Error("trace: missing header");
    v.status = status == "proven" ? ProofVerdict::Proven : ProofVerdict::Inconclusive;
    for (size_t i = 0; i < count; ++i) {
        std::string kw;
        PairProof p;
        size_t steps = 0;
        if (!(in >> kw >> p.gen_a >> p.gen_b >> steps) || kw != "pair")
            throw Error("trace: bad pair header");
        for (size_t s = 0; s < steps; ++s) {
            std::string kind;
            ProofStep step;
            int inv = 0;
            if (!(in >> kind >> step.position >> step.relator >> step.rotation >> inv))
                throw Error("trace: bad step");
            step.kind = kind == "insert"   ? ProofStep::InsertRelator
                        : kind == "cycle"  ? ProofStep::CyclicPermute
                                           : ProofStep::FreeReduce;
            step.inverted = inv != 0;
            p.steps.push_back(step);
        }
        v.traces.push_back(std::move(p));
    }
    return v;
}

std::string Pi1Report::to_string() const {
    return std::string(status == Certified ? "Certified " : "H1-only ") + invariants.to_string();
}

Pi1Report pi1_report(const Factorization& f, int base_points, const SearchBudget& budget) {
    Pi1Report r;
    // Stage 1: word-level presentation of the non-conjugated factors.
    Factorization plain = f;
    plain.twists.clear();
    for (const auto& t : f.twists)
        if (!t.conjugated()) plain.twists.push_back(t);
    FPGroup g = presentation(plain, base_points);
    ProofVerdict verdict = prove_abelian(g, budget);
    // Stage 2: the full homological relator set.
    r.invariants = h1_pipeline(f);
    if (verdict.status == ProofVerdict::Proven) {
        r.status = Pi1Report::Certified;
        r.detail = "abelian certificate for the plain factors; group read off H1";
    } else {
        r.status = Pi1Report::H1Only;
        r.detail = verdict.detail;
    }
    return r;
}

}  // namespace pencils
