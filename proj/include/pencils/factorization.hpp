#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "pencils/surface.hpp"

namespace pencils {

class SpMatrix;

// Product of Dehn-twist powers used for partial conjugation,
// e.g. phi = t_{b1}^{-m1} t_{a2}^{m2}. Factors are listed in word order;
// the rightmost factor acts first.
struct ConjugationWord {
    std::vector<std::pair<Curve, long long>> factors;

    bool trivial() const;
    HomologyClass apply(const HomologyClass& x) const;
    SpMatrix matrix(int genus) const;
    std::string tag() const;
};

struct Twist {
    Curve curve;
    long long exponent = 1;  // sign = handedness; must be nonzero
    std::shared_ptr<const ConjugationWord> conj;  // set when this twist came from a conjugated block
    std::shared_ptr<const Curve> base;            // pre-conjugation curve, kept for serialization

    bool conjugated() const { return conj != nullptr && !conj->trivial(); }
};

// Boundary multi-twist target as a sorted multiset of boundary indices.
// Empty = identity target.
struct Target {
    std::vector<int> boundary;

    bool is_identity() const { return boundary.empty(); }
    bool operator==(const Target& o) const { return boundary == o.boundary; }
};

using DisjointPairs = std::set<std::pair<std::string, std::string>>;

// Ordered Dehn-twist word. Twists are stored in display order: the word
// t_{c_1} t_{c_2} ... t_{c_n} keeps c_1 at index 0; as a mapping class the
// rightmost twist acts first. Disjointness flags are catalog metadata
// consumed by cancellation and conjugation preconditions.
struct Factorization {
    Surface surface;
    std::vector<Twist> twists;
    Target target;
    DisjointPairs disjoint;

    long long length() const;  // number of elementary twists, sum of |exponent|
    bool positive() const;     // every exponent > 0 and no capped-null-homotopic curve
    Factorization expanded() const;  // multi-exponent twists split into elementary runs

    void declare_disjoint(const std::string& a, const std::string& b);
    bool declared_disjoint(const std::string& a, const std::string& b) const;

    const Curve* find_curve(const std::string& name) const;
};

// Picard-Lefschetz transvection on homology: x + e <c,x> c, iterated closed
// form for any exponent since <c,c> = 0.
HomologyClass apply_twist_homology(const Twist& t, const HomologyClass& x);

enum class HurwitzDirection { Right, Left };

// Elementary Hurwitz move at positions (i, i+1). Rightward:
// (t_a, t_b) -> (t_{a(b)}, t_a); leftward is its inverse. Curves with zero
// pairing keep their identity; interacting curves get a synthesized name and
// lose their word.
Factorization hurwitz_move(const Factorization& f, size_t i, HurwitzDirection dir);

// Relabels the twist at position i with a declared curve carrying the same
// homology and flags; used by recipes to restore names after Hurwitz moves.
Factorization with_curve_at(const Factorization& f, size_t i, const Curve& c);

// Conjugates the contiguous block [lo, hi] by phi. Precondition: the
// symplectic shadow of the block commutes with phi; additionally each phi
// curve must have zero pairing with every declared witness curve.
Factorization partial_conjugate(const Factorization& f, size_t lo, size_t hi,
                                const ConjugationWord& phi,
                                const std::vector<Curve>& witnesses = {});

// Removes twists i and j along the same curve with opposite exponents.
// Every twist strictly between them must have zero pairing with that curve
// and be flagged disjoint from it.
Factorization cancel_opposite_pair(const Factorization& f, size_t i, size_t j);

struct Embedding {
    Surface source;
    Surface target;
    // Keys: source curve names plus boundary symbols "d1".."dm".
    std::map<std::string, Curve> curve_map;
    DisjointPairs target_disjoint;
};

// Relabels a factorization through an embedding of its surface. Target
// boundary components whose images are ordinary curves become trailing
// negative twists; images that stay boundary-parallel form the new target.
Factorization embed(const Factorization& f, const Embedding& e);

// Fiber-sum at the level of words: concatenated twists, summed targets.
Factorization concatenate(const Factorization& f, const Factorization& g);

// Caps the listed boundary components (1-based indices): their boundary
// twists disappear from word and target, remaining components are renumbered.
Factorization cap_boundary(const Factorization& f, const std::set<int>& caps);

// Structural equality up to shared-pointer identity of conjugation data.
bool equivalent(const Factorization& a, const Factorization& b);

}  // namespace pencils
