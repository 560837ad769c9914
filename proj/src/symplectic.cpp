#include "pencils/symplectic.hpp"

#include <sstream>

#include "pencils/factorization.hpp"

namespace pencils {

namespace {

// J in the basis (a1, b1, ..., ag, bg): 2x2 blocks [[0,1],[-1,0]].
Int form_entry(int i, int j) {
    if (i / 2 != j / 2) return 0;
    if (i % 2 == 0 && j % 2 == 1) return 1;
    if (i % 2 == 1 && j % 2 == 0) return -1;
    return 0;
}

}  // namespace

SpMatrix SpMatrix::identity(int genus) {
    SpMatrix m(genus);
    for (int i = 0; i < m.dim(); ++i) m.at(i, i) = 1;
    return m;
}

SpMatrix SpMatrix::operator*(const SpMatrix& o) const {
    if (g_ != o.g_) throw Error("matrix genus mismatch");
    SpMatrix r(g_);
    int n = dim();
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const Int& aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < n; ++j) r.at(i, j) += aik * o.at(k, j);
        }
    return r;
}

SpMatrix SpMatrix::transpose() const {
    SpMatrix r(g_);
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j) r.at(j, i) = at(i, j);
    return r;
}

SpMatrix SpMatrix::inverse() const {
    // For M symplectic, M^{-1} = J^{-1} M^T J.
    int n = dim();
    SpMatrix t = transpose();
    SpMatrix r(g_);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            // r = Jinv * t * J with Jinv = -J
            Int acc = 0;
            for (int k = 0; k < n; ++k) {
                Int jik = -form_entry(i, k);
                if (jik == 0) continue;
                for (int l = 0; l < n; ++l) {
                    Int lj = form_entry(l, j);
                    if (lj == 0) continue;
                    acc += jik * t.at(k, l) * lj;
                }
            }
            r.at(i, j) = acc;
        }
    return r;
}

bool SpMatrix::is_identity() const {
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

bool SpMatrix::is_symplectic() const {
    int n = dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Int acc = 0;
            for (int k = 0; k < n; ++k) {
                if (at(k, i) == 0) continue;
                for (int l = 0; l < n; ++l) {
                    Int f = form_entry(k, l);
                    if (f == 0) continue;
                    acc += at(k, i) * f * at(l, j);
                }
            }
            if (acc != form_entry(i, j)) return false;
        }
    return true;
}

HomologyClass SpMatrix::apply(const HomologyClass& x) const {
    if (static_cast<int>(x.coeff.size()) != dim()) throw Error("matrix/vector dimension mismatch");
    HomologyClass r(g_);
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j) r.coeff[i] += at(i, j) * x.coeff[j];
    return r;
}

std::string SpMatrix::to_string() const {
    std::ostringstream out;
    for (int i = 0; i < dim(); ++i) {
        out << (i ? "\n" : "") << "[";
        for (int j = 0; j < dim(); ++j) out << (j ? " " : "") << at(i, j);
        out << "]";
    }
    return out.str();
}

SpMatrix transvection(const HomologyClass& c, const Int& exponent) {
    int g = c.genus();
    int n = 2 * g;
    // row vector c^T J
    std::vector<Int> ctj(n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) ctj[j] += c.coeff[k] * form_entry(k, j);
    SpMatrix m = SpMatrix::identity(g);
    for (int i = 0; i < n; ++i) {
        if (c.coeff[i] == 0) continue;
        for (int j = 0; j < n; ++j) m.at(i, j) += exponent * c.coeff[i] * ctj[j];
    }
    return m;
}

SpMatrix sp_product(const Factorization& f) {
    SpMatrix m = SpMatrix::identity(f.surface.genus);
    for (const auto& t : f.twists) m = m * transvection(t.curve.homology, t.exponent);
    return m;
}

VerifyResult verify(const Factorization& f) {
    VerifyResult r;
    r.note = "necessary condition only";
    SpMatrix m = sp_product(f);
    if (m.is_identity()) {
        r.pass = true;
        return r;
    }
    r.pass = false;
    int n = m.dim();
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            if (m.at(i, j) != (i == j ? 1 : 0)) {
                HomologyClass e(f.surface.genus);
                e.coeff[j] = 1;
                r.witness = e;
                return r;
            }
        }
    }
    return r;
}

namespace {

using RatRow = std::vector<Rat>;

// Signature of a symmetric rational matrix by congruence diagonalization.
int symmetric_signature(std::vector<RatRow> q) {
    int sig = 0;
    while (!q.empty()) {
        size_t n = q.size();
        size_t d = n;
        for (size_t i = 0; i < n; ++i)
            if (q[i][i] != 0) {
                d = i;
                break;
            }
        if (d < n) {
            Rat piv = q[d][d];
            sig += piv > 0 ? 1 : -1;
            std::vector<RatRow> next;
            next.reserve(n - 1);
            for (size_t i = 0; i < n; ++i) {
                if (i == d) continue;
                RatRow row;
                row.reserve(n - 1);
                for (size_t j = 0; j < n; ++j) {
                    if (j == d) continue;
                    row.push_back(q[i][j] - q[i][d] * q[d][j] / piv);
                }
                next.push_back(std::move(row));
            }
            q = std::move(next);
            continue;
        }
        // zero diagonal everywhere: hunt a hyperbolic pair (contributes 0)
        size_t pi = n, pj = n;
        for (size_t i = 0; i < n && pi == n; ++i)
            for (size_t j = i + 1; j < n; ++j)
                if (q[i][j] != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi == n) return sig;  // zero form
        Rat a = q[pi][pj];
        std::vector<RatRow> next;
        for (size_t i = 0; i < n; ++i) {
            if (i == pi || i == pj) continue;
            RatRow row;
            for (size_t j = 0; j < n; ++j) {
                if (j == pi || j == pj) continue;
                row.push_back(q[i][j] - q[i][pj] * q[pi][j] / a - q[i][pi] * q[pj][j] / a);
            }
            next.push_back(std::move(row));
        }
        q = std::move(next);
    }
    return sig;
}

}  // namespace

int meyer_tau(const SpMatrix& A, const SpMatrix& B) {
    if (A.genus() != B.genus()) throw Error("meyer_tau: genus mismatch");
    int n = A.dim();
    SpMatrix Ai = A.inverse();

    // Kernel of the n x 2n system [A^{-1}-I | B-I] over Q.
    std::vector<RatRow> m(n, RatRow(2 * n, Rat(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            m[i][j] = Rat(Ai.at(i, j) - (i == j ? 1 : 0));
            m[i][n + j] = Rat(B.at(i, j) - (i == j ? 1 : 0));
        }
    std::vector<int> pivots;
    int rank = 0;
    for (int c = 0; c < 2 * n && rank < n; ++c) {
        int piv = -1;
        for (int i = rank; i < n; ++i)
            if (m[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[rank], m[piv]);
        Rat pv = m[rank][c];
        for (auto& x : m[rank]) x /= pv;
        for (int i = 0; i < n; ++i) {
            if (i == rank || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (int j = 0; j < 2 * n; ++j) m[i][j] -= f * m[rank][j];
        }
        pivots.push_back(c);
        ++rank;
    }
    std::vector<RatRow> basis;
    for (int c = 0; c < 2 * n; ++c) {
        bool is_pivot = false;
        for (int p : pivots)
            if (p == c) is_pivot = true;
        if (is_pivot) continue;
        RatRow v(2 * n, Rat(0));
        v[c] = 1;
        for (int i = 0; i < rank; ++i) v[pivots[i]] = -m[i][c];
        basis.push_back(std::move(v));
    }

    // q(u,w) = <x_u + y_u, (I-B) y_w>
    auto q_form = [&](const RatRow& u, const RatRow& w) {
        RatRow iby(n, Rat(0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Int ib = (i == j ? 1 : 0) - B.at(i, j);
                if (ib != 0) iby[i] += Rat(ib) * w[n + j];
            }
        Rat acc = 0;
        for (int i = 0; i < n; ++i) {
            Rat s = u[i] + u[n + i];
            if (s == 0) continue;
            for (int j = 0; j < n; ++j) {
                Int fe = form_entry(i, j);
                if (fe != 0) acc += s * Rat(fe) * iby[j];
            }
        }
        return acc;
    };

    size_t k = basis.size();
    std::vector<RatRow> q(k, RatRow(k, Rat(0)));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = i; j < k; ++j) {
            Rat v = (q_form(basis[i], basis[j]) + q_form(basis[j], basis[i])) / 2;
            q[i][j] = v;
            q[j][i] = v;
        }
    return symmetric_signature(std::move(q));
}

}  // namespace pencils
