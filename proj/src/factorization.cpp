#include "pencils/factorization.hpp"

#include <algorithm>
#include <sstream>

#include "pencils/symplectic.hpp"

namespace pencils {

namespace {

Twist make_twist(Curve c, long long e, std::shared_ptr<const ConjugationWord> conj) {
    Twist t;
    t.curve = std::move(c);
    t.exponent = e;
    t.conj = std::move(conj);
    return t;
}

}  // namespace

bool ConjugationWord::trivial() const {
    for (const auto& [c, e] : factors)
        if (e != 0) return false;
    return true;
}

HomologyClass ConjugationWord::apply(const HomologyClass& x) const {
    // rightmost factor acts first
    HomologyClass r = x;
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
        const auto& [c, e] = *it;
        r = r + c.homology * (Int(e) * intersection(c.homology, r));
    }
    return r;
}

SpMatrix ConjugationWord::matrix(int genus) const {
    SpMatrix m = SpMatrix::identity(genus);
    for (const auto& [c, e] : factors) m = m * transvection(c.homology, e);
    return m;
}

std::string ConjugationWord::tag() const {
    std::ostringstream out;
    for (size_t i = 0; i < factors.size(); ++i) {
        if (i) out << " ";
        out << factors[i].first.name << "^" << factors[i].second;
    }
    return out.str();
}

long long Factorization::length() const {
    long long n = 0;
    for (const auto& t : twists) n += t.exponent < 0 ? -t.exponent : t.exponent;
    return n;
}

bool Factorization::positive() const {
    for (const auto& t : twists) {
        if (t.exponent <= 0) return false;
        if (t.curve.homology.is_zero() && !t.curve.separating) return false;
        if (t.curve.split_genus && *t.curve.split_genus == 0) return false;  // capped boundary
    }
    return true;
}

Factorization Factorization::expanded() const {
    Factorization r = *this;
    r.twists.clear();
    for (const auto& t : twists) {
        if (t.exponent == 0) throw Error("twist with zero exponent");
        long long n = t.exponent < 0 ? -t.exponent : t.exponent;
        long long s = t.exponent < 0 ? -1 : 1;
        for (long long i = 0; i < n; ++i) r.twists.push_back(make_twist(t.curve, s, t.conj));
    }
    return r;
}

void Factorization::declare_disjoint(const std::string& a, const std::string& b) {
    disjoint.insert(a < b ? std::make_pair(a, b) : std::make_pair(b, a));
}

bool Factorization::declared_disjoint(const std::string& a, const std::string& b) const {
    if (a == b) return true;  // parallel copies of one curve
    auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
    return disjoint.count(key) > 0;
}

const Curve* Factorization::find_curve(const std::string& name) const {
    for (const auto& t : twists)
        if (t.curve.name == name) return &t.curve;
    return nullptr;
}

HomologyClass apply_twist_homology(const Twist& t, const HomologyClass& x) {
    if (t.curve.homology.coeff.size() != x.coeff.size())
        throw Error("apply_twist_homology: surface mismatch");
    // x + e <c,x> c; iterating the elementary twist gives the same closed
    // form because <c,c> = 0.
    return x + t.curve.homology * (Int(t.exponent) * intersection(t.curve.homology, x));
}

namespace {

Curve transvected_curve(const Curve& base, const Curve& by, long long exponent,
                        bool declared_disjoint_pair) {
    Int pairing = intersection(by.homology, base.homology);
    if (pairing == 0 && declared_disjoint_pair) return base;  // genuinely unmoved
    if (base.image_of && base.image_of->by_name == by.name && base.image_of->exponent == -exponent &&
        base.image_of->by == by.homology)
        return *base.image_of->base;  // the inverse move restores the original curve
    Curve c = base;
    c.homology = base.homology + by.homology * (Int(exponent) * pairing);
    if (pairing != 0) {
        std::ostringstream name;
        name << by.name << (exponent < 0 ? "^-1" : "") << "(" << base.name << ")";
        c.name = name.str();
        c.word.reset();  // word transport needs geometric data we do not carry
        c.boundary_index.reset();
        TwistImage img;
        img.base = std::make_shared<const Curve>(base);
        img.by = by.homology;
        img.by_name = by.name;
        img.exponent = exponent;
        c.image_of = std::make_shared<const TwistImage>(std::move(img));
    }
    return c;
}

}  // namespace

Factorization hurwitz_move(const Factorization& f, size_t i, HurwitzDirection dir) {
    if (i + 1 >= f.twists.size()) throw Error("hurwitz_move: index out of range");
    const Twist& left = f.twists[i];
    const Twist& right = f.twists[i + 1];
    if (std::abs(left.exponent) != 1 || std::abs(right.exponent) != 1)
        throw Error("hurwitz_move: both twists must be elementary");
    Factorization r = f;
    bool flagged = f.declared_disjoint(left.curve.name, right.curve.name);
    if (dir == HurwitzDirection::Right) {
        // (t_a, t_b) -> (t_{a(b)}, t_a)
        Curve moved = transvected_curve(right.curve, left.curve, left.exponent, flagged);
        r.twists[i] = make_twist(moved, right.exponent, right.conj);
        r.twists[i + 1] = left;
    } else {
        // (t_x, t_y) -> (t_y, t_{y^{-1}(x)})
        Curve moved = transvected_curve(left.curve, right.curve, -right.exponent, flagged);
        r.twists[i] = right;
        r.twists[i + 1] = make_twist(moved, left.exponent, left.conj);
    }
    return r;
}

Factorization with_curve_at(const Factorization& f, size_t i, const Curve& c) {
    if (i >= f.twists.size()) throw Error("with_curve_at: index out of range");
    const Curve& old = f.twists[i].curve;
    if (old.homology != c.homology)
        throw Error("with_curve_at: declared curve disagrees in homology with " + old.name);
    if (old.separating != c.separating)
        throw Error("with_curve_at: separating flag mismatch for " + old.name);
    Factorization r = f;
    r.twists[i].curve = c;
    return r;
}

Factorization partial_conjugate(const Factorization& f, size_t lo, size_t hi,
                                const ConjugationWord& phi, const std::vector<Curve>& witnesses) {
    if (lo > hi || hi >= f.twists.size()) throw Error("partial_conjugate: bad range");
    if (phi.trivial()) return f;

    for (const auto& [c, e] : phi.factors)
        if (c.surface != f.surface)
            throw Error("partial_conjugate: conjugating curve " + c.name + " on a different surface");
    for (const auto& w : witnesses)
        for (const auto& [c, e] : phi.factors)
            if (intersection(c.homology, w.homology) != 0)
                throw Error("partial_conjugate: curve " + c.name + " pairs with witness " + w.name);

    SpMatrix block = SpMatrix::identity(f.surface.genus);
    for (size_t k = lo; k <= hi; ++k)
        block = block * transvection(f.twists[k].curve.homology, f.twists[k].exponent);
    SpMatrix s = phi.matrix(f.surface.genus);
    SpMatrix conj = s * block * s.inverse();
    if (conj != block)
        throw Error("partial_conjugate: block does not commute with phi at the symplectic level;\n"
                    "block =\n" + block.to_string() + "\nconjugated =\n" + conj.to_string());

    auto shared = std::make_shared<const ConjugationWord>(phi);
    Factorization r = f;
    for (size_t k = lo; k <= hi; ++k) {
        Twist& t = r.twists[k];
        t.base = std::make_shared<const Curve>(t.curve);
        Curve c = t.curve;
        c.homology = phi.apply(c.homology);
        bool keep_word = true;
        for (const auto& [pc, e] : phi.factors)
            if (intersection(pc.homology, t.curve.homology) != 0) keep_word = false;
        if (!keep_word) c.word.reset();
        t.curve = c;
        t.conj = shared;
    }
    return r;
}

Factorization cancel_opposite_pair(const Factorization& f, size_t i, size_t j) {
    if (i >= f.twists.size() || j >= f.twists.size() || i == j)
        throw Error("cancel_opposite_pair: bad indices");
    if (i > j) std::swap(i, j);
    const Twist& a = f.twists[i];
    const Twist& b = f.twists[j];
    if (a.curve.name != b.curve.name || a.curve.homology != b.curve.homology)
        throw Error("cancel_opposite_pair: twists are along different curves");
    if (a.exponent != -b.exponent)
        throw Error("cancel_opposite_pair: exponents are not opposite");
    for (size_t k = i + 1; k < j; ++k) {
        const Curve& mid = f.twists[k].curve;
        if (intersection(mid.homology, a.curve.homology) != 0)
            throw Error("cancel_opposite_pair: interior twist " + mid.name +
                        " has nonzero pairing with " + a.curve.name);
        if (!f.declared_disjoint(mid.name, a.curve.name))
            throw Error("cancel_opposite_pair: interior twist " + mid.name +
                        " is not declared disjoint from " + a.curve.name);
    }
    Factorization r = f;
    r.twists.erase(r.twists.begin() + j);
    r.twists.erase(r.twists.begin() + i);
    return r;
}

Factorization embed(const Factorization& f, const Embedding& e) {
    if (f.surface != e.source) throw Error("embed: factorization is not on the embedding source");
    Factorization r;
    r.surface = e.target;
    r.disjoint = e.target_disjoint;
    for (const auto& t : f.twists) {
        auto it = e.curve_map.find(t.curve.name);
        if (it == e.curve_map.end()) throw Error("embed: unmapped curve " + t.curve.name);
        r.twists.push_back(make_twist(it->second, t.exponent, nullptr));
    }
    // Boundary components of the target multi-twist: boundary-parallel images
    // stay in the target, ordinary images become trailing inverse twists.
    std::vector<int> new_target;
    for (int idx : f.target.boundary) {
        auto it = e.curve_map.find("d" + std::to_string(idx));
        if (it == e.curve_map.end())
            throw Error("embed: unmapped boundary symbol d" + std::to_string(idx));
        const Curve& image = it->second;
        if (image.boundary_index)
            new_target.push_back(*image.boundary_index);
        else
            r.twists.push_back(make_twist(image, -1, nullptr));
    }
    std::sort(new_target.begin(), new_target.end());
    r.target.boundary = std::move(new_target);
    return r;
}

Factorization concatenate(const Factorization& f, const Factorization& g) {
    if (f.surface != g.surface) throw Error("concatenate: surface mismatch");
    Factorization r = f;
    r.twists.insert(r.twists.end(), g.twists.begin(), g.twists.end());
    r.target.boundary.insert(r.target.boundary.end(), g.target.boundary.begin(),
                             g.target.boundary.end());
    std::sort(r.target.boundary.begin(), r.target.boundary.end());
    r.disjoint.insert(g.disjoint.begin(), g.disjoint.end());
    return r;
}

Factorization cap_boundary(const Factorization& f, const std::set<int>& caps) {
    for (int c : caps)
        if (c < 1 || c > f.surface.boundary) throw Error("cap_boundary: no boundary component " + std::to_string(c));
    auto remap = [&](int idx) {
        int shift = 0;
        for (int c : caps)
            if (c < idx) ++shift;
        return idx - shift;
    };
    Factorization r;
    r.surface = Surface{f.surface.genus, f.surface.boundary - static_cast<int>(caps.size())};
    r.disjoint = f.disjoint;
    for (const auto& t : f.twists) {
        if (t.curve.boundary_index && caps.count(*t.curve.boundary_index)) continue;
        Twist nt = t;
        nt.curve.surface = r.surface;
        if (nt.curve.boundary_index) nt.curve.boundary_index = remap(*nt.curve.boundary_index);
        r.twists.push_back(std::move(nt));
    }
    for (int idx : f.target.boundary) {
        if (caps.count(idx)) continue;
        r.target.boundary.push_back(remap(idx));
    }
    std::sort(r.target.boundary.begin(), r.target.boundary.end());
    return r;
}

namespace {

bool same_conj(const std::shared_ptr<const ConjugationWord>& a,
               const std::shared_ptr<const ConjugationWord>& b) {
    if (!a && !b) return true;
    if (!a || !b) return false;
    if (a->factors.size() != b->factors.size()) return false;
    for (size_t i = 0; i < a->factors.size(); ++i) {
        if (!(a->factors[i].first == b->factors[i].first)) return false;
        if (a->factors[i].second != b->factors[i].second) return false;
    }
    return true;
}

}  // namespace

bool equivalent(const Factorization& a, const Factorization& b) {
    if (a.surface != b.surface || !(a.target == b.target)) return false;
    if (a.twists.size() != b.twists.size()) return false;
    if (a.disjoint != b.disjoint) return false;
    for (size_t i = 0; i < a.twists.size(); ++i) {
        if (!(a.twists[i].curve == b.twists[i].curve)) return false;
        if (a.twists[i].exponent != b.twists[i].exponent) return false;
        if (!same_conj(a.twists[i].conj, b.twists[i].conj)) return false;
    }
    return true;
}

}  // namespace pencils
