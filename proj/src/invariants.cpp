#include "pencils/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pencils/symplectic.hpp"
#include <nlohmann/json.hpp>

namespace pencils {

EulerNumbers euler(const Factorization& f, int base_points) {
    EulerNumbers e;
    e.fibration = 4 - 4LL * f.surface.genus + f.length();
    e.pencil = e.fibration - base_points;
    return e;
}

TwistCounts count_twists(const Factorization& f) {
    TwistCounts c;
    for (const auto& t : f.twists) {
        if (t.curve.separating) {
            int h = t.curve.split_genus.value_or(1);
            c.separating[h] += t.exponent;
        } else {
            c.nonseparating += t.exponent;
        }
    }
    return c;
}

long long signature_hyperelliptic(const Factorization& f) {
    long long g = f.surface.genus;
    Rat sigma = 0;
    Rat denom = 2 * g + 1;
    for (const auto& t : f.twists) {
        Rat contrib;
        if (!t.curve.separating) {
            contrib = -Rat(g + 1) / denom;
        } else {
            if (!t.curve.split_genus)
                throw Error("signature_hyperelliptic: separating curve " + t.curve.name +
                            " lacks a split-genus annotation");
            long long h = *t.curve.split_genus;
            contrib = Rat(4 * h * (g - h)) / denom - 1;
        }
        sigma += contrib * t.exponent;
    }
    if (boost::multiprecision::denominator(sigma) != 1)
        throw Error("signature_hyperelliptic: non-integer result, data error");
    return to_ll(boost::multiprecision::numerator(sigma));
}

DecompositionResult signature_decomposition(const DecompositionPlan& plan) {
    DecompositionResult r;
    for (const auto& s : plan.summands) {
        long long sigma = s.stored_sigma ? *s.stored_sigma : signature_hyperelliptic(s.model);
        r.summand_sigmas.emplace_back(s.label, sigma);
        r.sigma += sigma;
    }
    // Every ledger entry is an opposite pair, net zero by construction; the
    // list is reported, not summed.
    return r;
}

long long signature_meyer(const Factorization& f) {
    SpMatrix total = sp_product(f);
    if (!total.is_identity())
        throw Error("signature_meyer: factorization product is not the identity (cap first)");
    Factorization ex = f.expanded();
    long long sigma = 0;
    SpMatrix prefix = SpMatrix::identity(f.surface.genus);
    for (size_t k = 0; k < ex.twists.size(); ++k) {
        SpMatrix t = transvection(ex.twists[k].curve.homology, ex.twists[k].exponent);
        if (k > 0) sigma -= meyer_tau(prefix, t);
        prefix = prefix * t;
        if (ex.twists[k].curve.separating) sigma += ex.twists[k].exponent < 0 ? 1 : -1;
    }
    return sigma;
}

std::string ObstructionResult::to_string() const {
    if (no_solution) return "NoSolution";
    std::ostringstream out;
    out << "Witness a=" << a << " c=[";
    for (size_t i = 0; i < c.size(); ++i) out << (i ? "," : "") << c[i];
    out << "]";
    return out.str();
}

namespace {

long long isqrt_ll(long long v) {
    if (v <= 0) return 0;
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(v)));
    while (r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

// Nine integers, non-increasing, with prescribed sum and sum of squares.
bool find_square_sum_rec(int idx, long long rem_sum, long long rem_sq, long long hi,
                         long long bound, std::array<long long, 9>& cur) {
    int left = 9 - idx;
    if (left == 1) {
        if (rem_sum <= hi && rem_sum >= -bound && rem_sum * rem_sum == rem_sq) {
            cur[idx] = rem_sum;
            return true;
        }
        return false;
    }
    long long root = isqrt_ll(rem_sq);
    long long vmax = std::min({hi, bound, root});
    for (long long v = vmax; v >= -bound && v >= -root; --v) {
        if (static_cast<long long>(left) * v < rem_sum) break;  // all remaining entries are <= v
        long long rs = rem_sum - v;
        if (rs < -(static_cast<long long>(left) - 1) * bound) continue;
        long long rq = rem_sq - v * v;
        if (rs * rs > (left - 1) * rq) continue;  // Cauchy-Schwarz on the tail
        cur[idx] = v;
        if (find_square_sum_rec(idx + 1, rs, rq, v, bound, cur)) return true;
    }
    return false;
}

bool find_square_sum(long long sum, long long square_sum, long long bound,
                     std::array<long long, 9>& out) {
    std::array<long long, 9> cur{};
    if (find_square_sum_rec(0, sum, square_sum, bound, bound, cur)) {
        out = cur;
        return true;
    }
    return false;
}

}  // namespace

ObstructionResult rational_obstruction(int genus, int base_points, long long bound) {
    if (genus < 2) throw Error("rational_obstruction: needs genus >= 2");
    if (base_points < 0) throw Error("rational_obstruction: negative base point count");
    ObstructionResult r;
    long long m = base_points;
    for (long long a = 0; a <= bound; ++a) {
        long long square_sum = a * a - m;  // sum c_i^2
        if (square_sum < 0) continue;
        long long sum = 2LL * genus - 2 - m + 3 * a;  // sum c_i (adjunction)
        if ((sum & 1LL) != (square_sum & 1LL)) continue;
        if (sum * sum > 9 * square_sum) continue;  // Cauchy-Schwarz
        std::array<long long, 9> c{};
        if (find_square_sum(sum, square_sum, bound, c)) {
            r.no_solution = false;
            r.a = a;
            r.c = c;
            return r;
        }
    }
    return r;
}

RuledVerdict ruled_exclusion(int genus, long long self_int, RuledSurface which) {
    RuledVerdict v;
    long long chi = 2LL * genus - 2;
    if (which == RuledSurface::SxT2) {
        // F = aS + bT, F^2 = 2ab, K = -2T: chi = self_int - 2a.
        long long twice_a = self_int - chi;
        if (twice_a % 2 != 0) {
            v.reason = "adjunction forces a non-integer class";
            return v;
        }
        long long a = twice_a / 2;
        if (2 * a == 0) {
            if (self_int == 0) {
                v.excluded = false;
                v.a = 0;
                v.b = 0;  // any b
                v.reason = "a=0 solves both equations";
                return v;
            }
            v.reason = "adjunction forces a=0, contradicting 2ab=" + std::to_string(self_int);
            return v;
        }
        if (self_int % (2 * a) == 0) {
            v.excluded = false;
            v.a = a;
            v.b = self_int / (2 * a);
            v.reason = "class found";
            return v;
        }
        v.reason = "2ab=" + std::to_string(self_int) + " has no integer solution with a=" +
                   std::to_string(a);
        return v;
    }
    // Twisted bundle: F = aS + bT with S^2=0, T^2=1, S.T=1; F^2 = b(2a+b),
    // K = S - 2T: chi = self_int - 2a - b.
    long long s = self_int - chi;  // 2a + b
    if (s == 0) {
        if (self_int == 0) {
            v.excluded = false;
            v.reason = "b(2a+b)=0 with 2a+b=0";
            return v;
        }
        v.reason = "adjunction forces 2a+b=0, contradicting b(2a+b)=" + std::to_string(self_int);
        return v;
    }
    if (self_int % s == 0) {
        long long b = self_int / s;
        if ((s - b) % 2 == 0) {
            v.excluded = false;
            v.a = (s - b) / 2;
            v.b = b;
            v.reason = "class found";
            return v;
        }
    }
    v.reason = "no integer class satisfies both equations";
    return v;
}

Kodaira kodaira_classify(long long k_squared, int k_dot_omega_sign) {
    if (k_dot_omega_sign < -1 || k_dot_omega_sign > 1)
        throw Error("kodaira_classify: sign must be -1, 0 or +1");
    if (k_squared < 0 || k_dot_omega_sign < 0) return Kodaira::MinusInfinity;
    if (k_dot_omega_sign == 0) {
        if (k_squared == 0) return Kodaira::Zero;
        throw Error("kodaira_classify: K.omega = 0 with K^2 > 0 is outside the table");
    }
    return k_squared == 0 ? Kodaira::One : Kodaira::Two;
}

std::string kodaira_name(Kodaira k) {
    switch (k) {
        case Kodaira::MinusInfinity: return "-inf";
        case Kodaira::Zero: return "0";
        case Kodaira::One: return "1";
        case Kodaira::Two: return "2";
    }
    return "?";
}

ScyVerdict scy_criterion(const InvariantReport& r) {
    ScyVerdict v;
    long long want = 2 - 2LL * r.genus;
    if (r.genus < 2) {
        v.reason = "criterion needs genus >= 2";
        return v;
    }
    if (r.c1sq_fibration != want) {
        std::ostringstream out;
        out << "c1^2 = " << r.c1sq_fibration << " != " << want;
        v.reason = out.str();
        return v;
    }
    int m = 2 * r.genus - 2;
    // b^+ = 1 would force b1 = 2 and a ruled total space; both ruled
    // candidates must fail to carry such a pencil.
    RuledVerdict r1 = ruled_exclusion(r.genus, m, RuledSurface::SxT2);
    RuledVerdict r2 = ruled_exclusion(r.genus, m, RuledSurface::TwistedSxT2);
    if (!r1.excluded || !r2.excluded) {
        v.reason = "a ruled surface admits the pencil";
        return v;
    }
    v.pass = true;
    v.base_points = m;
    v.blown_down_e = r.e_fibration - m;
    v.blown_down_sigma = r.sigma + m;
    v.blown_down_c1sq = r.c1sq_fibration + m;
    v.reason = "minimal symplectic Calabi-Yau after blowing down " + std::to_string(m) +
               " exceptional spheres";
    return v;
}

InvariantReport make_report(const Factorization& f, int base_points, long long sigma,
                            const AbelianInvariants& h1) {
    InvariantReport r;
    r.genus = f.surface.genus;
    r.base_points = base_points;
    r.length = f.length();
    r.counts = count_twists(f);
    EulerNumbers e = euler(f, base_points);
    r.e_fibration = e.fibration;
    r.e_pencil = e.pencil;
    r.sigma = sigma;
    r.c1sq_fibration = 2 * r.e_fibration + 3 * sigma;
    r.c1sq_pencil = r.c1sq_fibration + base_points;
    long long esum = r.e_fibration + sigma;
    if (esum % 4 != 0)
        throw Error("invariant report: e + sigma not divisible by 4, data error");
    r.chi_h = esum / 4;
    r.h1 = h1;
    r.b1 = h1.rank;
    r.positive = f.positive();
    r.sp_verified = verify(f).pass;
    r.b1_bound_ok = r.b1 <= 2LL * r.genus - 1;
    if (!r.b1_bound_ok)
        throw Error("invariant report: b1 exceeds 2g-1, data error");
    r.scy = scy_criterion(r);
    return r;
}

std::string InvariantReport::to_json() const {
    nlohmann::json j;
    j["genus"] = genus;
    j["base_points"] = base_points;
    j["length"] = length;
    j["n"] = counts.nonseparating;
    nlohmann::json s = nlohmann::json::object();
    for (const auto& [h, c] : counts.separating) s[std::to_string(h)] = c;
    j["s"] = s;
    j["e_fib"] = e_fibration;
    j["e_pencil"] = e_pencil;
    j["sigma"] = sigma;
    j["c1sq_fib"] = c1sq_fibration;
    j["c1sq_pencil"] = c1sq_pencil;
    j["chi_h"] = chi_h;
    j["b1"] = b1;
    j["h1_rank"] = h1.rank;
    nlohmann::json tors = nlohmann::json::array();
    for (const auto& d : h1.torsion) tors.push_back(to_ll(d));
    j["h1_torsion"] = tors;
    nlohmann::json p;
    p["positive"] = positive;
    p["sp_verified"] = sp_verified;
    p["scy"] = scy.pass ? "PASS" : "FAIL";
    p["scy_reason"] = scy.reason;
    if (scy.pass) {
        p["scy_base_points"] = scy.base_points;
        p["scy_blown_down"] = {scy.blown_down_e, scy.blown_down_sigma, scy.blown_down_c1sq};
    }
    p["b1_bound"] = b1_bound_ok;
    j["predicates"] = p;
    return j.dump(2);
}

}  // namespace pencils
