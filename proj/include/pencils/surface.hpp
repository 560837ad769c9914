#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pencils/numbers.hpp"

namespace pencils {

// Compact oriented surface of genus g with m boundary components.
// The homology lattice is the capped one: dimension 2g, basis ordered
// (a1, b1, a2, b2, ..., ag, bg). Boundary components carry symbols
// d1..dm but no homology coordinates.
struct Surface {
    int genus = 0;
    int boundary = 0;

    int dim() const { return 2 * genus; }
    std::string generator_name(int index) const;       // 0 -> "a1", 1 -> "b1", ...
    int generator_index(const std::string& name) const; // throws Error on unknown symbol

    bool operator==(const Surface& o) const { return genus == o.genus && boundary == o.boundary; }
    bool operator!=(const Surface& o) const { return !(*this == o); }
};

// Integer vector in the basis (a1, b1, ..., ag, bg).
struct HomologyClass {
    std::vector<Int> coeff;

    HomologyClass() = default;
    explicit HomologyClass(int genus) : coeff(2 * genus) {}
    static HomologyClass zero(int genus) { return HomologyClass(genus); }

    int genus() const { return static_cast<int>(coeff.size()) / 2; }
    bool is_zero() const;

    HomologyClass operator+(const HomologyClass& o) const;
    HomologyClass operator-(const HomologyClass& o) const;
    HomologyClass operator-() const;
    HomologyClass operator*(const Int& k) const;
    bool operator==(const HomologyClass& o) const { return coeff == o.coeff; }
    bool operator!=(const HomologyClass& o) const { return !(*this == o); }

    std::string to_string() const;
};

HomologyClass make_class(const Surface& s, const std::vector<long long>& coeffs);
HomologyClass basis_class(const Surface& s, const std::string& generator);

// <x,y> under the standard symplectic form: <a_i,b_i> = 1, <b_i,a_i> = -1.
Int intersection(const HomologyClass& x, const HomologyClass& y);

struct Letter {
    int gen = 0;   // generator index into the surface alphabet
    int sign = 1;  // +1 or -1
    bool operator==(const Letter& o) const { return gen == o.gen && sign == o.sign; }
};

// Freely reduced word in the surface generators a_j, b_j.
class FreeWord {
public:
    FreeWord() = default;
    explicit FreeWord(std::vector<Letter> letters);

    // Tokens separated by whitespace, '~' prefix for inverse: "~b1 a2 b2 ~a2 ~b3".
    static FreeWord parse(const std::string& text, const Surface& s);

    const std::vector<Letter>& letters() const { return letters_; }
    size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    FreeWord inverse() const;
    FreeWord operator*(const FreeWord& o) const;  // concatenation + free reduction
    FreeWord rotated(size_t k) const;             // cyclic permutation by k letters
    bool operator==(const FreeWord& o) const { return letters_ == o.letters_; }

    HomologyClass abelianize(const Surface& s) const;
    std::string to_string(const Surface& s) const;

private:
    std::vector<Letter> letters_;  // invariant: freely reduced
};

FreeWord commutator_word(int gen_a, int gen_b);
FreeWord surface_relation(const Surface& s);  // [a1,b1][a2,b2]...[ag,bg]

struct Curve;

// Provenance of a Hurwitz-transported curve: the original together with the
// twist applied to it, so that the inverse move can restore it exactly.
struct TwistImage {
    std::shared_ptr<const Curve> base;
    HomologyClass by;
    std::string by_name;
    long long exponent = 1;
};

// Named simple closed curve with its homological shadow and optional pi1 word.
struct Curve {
    std::string name;
    Surface surface;
    HomologyClass homology;
    bool separating = false;
    std::optional<FreeWord> word;
    std::optional<int> boundary_index;  // 1-based; set for boundary-parallel curves
    std::optional<int> split_genus;     // for separating curves; 0 marks a capped boundary
    std::shared_ptr<const TwistImage> image_of;  // not part of equality

    bool operator==(const Curve& o) const;
};

struct CurveCheck {
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

// Diagnostic check of the Curve invariants; never throws.
CurveCheck validate_curve(const Curve& c);

}  // namespace pencils
