#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pencils/surface.hpp"

namespace pencils {

struct Factorization;

// Integer 2g x 2g matrix acting on the homology lattice, column convention.
class SpMatrix {
public:
    SpMatrix() = default;
    explicit SpMatrix(int genus) : g_(genus), a_(4 * genus * genus) {}
    static SpMatrix identity(int genus);

    int genus() const { return g_; }
    int dim() const { return 2 * g_; }

    Int& at(int i, int j) { return a_[static_cast<size_t>(i) * dim() + j]; }
    const Int& at(int i, int j) const { return a_[static_cast<size_t>(i) * dim() + j]; }

    SpMatrix operator*(const SpMatrix& o) const;
    bool operator==(const SpMatrix& o) const { return g_ == o.g_ && a_ == o.a_; }
    bool operator!=(const SpMatrix& o) const { return !(*this == o); }

    SpMatrix transpose() const;
    SpMatrix inverse() const;  // J^{-1} A^T J; valid for symplectic matrices only
    bool is_identity() const;
    bool is_symplectic() const;  // exact check of M^T J M = J

    HomologyClass apply(const HomologyClass& x) const;
    std::string to_string() const;

private:
    int g_ = 0;
    std::vector<Int> a_;
};

// Matrix of x -> x + e <c,x> c.
SpMatrix transvection(const HomologyClass& c, const Int& exponent);

// Ordered product of the transvections of a factorization, leftmost twist
// contributing the leftmost matrix factor.
SpMatrix sp_product(const Factorization& f);

struct VerifyResult {
    bool pass = false;
    std::optional<HomologyClass> witness;  // basis vector moved by the product, on failure
    std::string note;                      // always "necessary condition only"
};

// PASS iff the product equals the symplectic shadow of the target (the
// identity, boundary classes being trivial in the capped lattice).
VerifyResult verify(const Factorization& f);

// Meyer signature cocycle: signature of the symmetrized form
// q((x1,y1),(x2,y2)) = <x1+y1, (I-B) y2> on
// V_{A,B} = {(x,y) : (A^{-1}-I)x + (B-I)y = 0}, over the rationals.
int meyer_tau(const SpMatrix& A, const SpMatrix& B);

}  // namespace pencils
