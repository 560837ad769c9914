#include "pencils/surface.hpp"

#include <sstream>

namespace pencils {

std::string Surface::generator_name(int index) const {
    if (index < 0 || index >= dim()) throw Error("generator index out of range");
    int handle = index / 2 + 1;
    return (index % 2 == 0 ? "a" : "b") + std::to_string(handle);
}

int Surface::generator_index(const std::string& name) const {
    if (name.size() < 2 || (name[0] != 'a' && name[0] != 'b'))
        throw Error("unknown generator symbol '" + name + "'");
    int handle = 0;
    for (size_t i = 1; i < name.size(); ++i) {
        if (!isdigit(static_cast<unsigned char>(name[i])))
            throw Error("unknown generator symbol '" + name + "'");
        handle = handle * 10 + (name[i] - '0');
    }
    if (handle < 1 || handle > genus)
        throw Error("generator symbol '" + name + "' not on a genus-" + std::to_string(genus) +
                    " surface");
    return 2 * (handle - 1) + (name[0] == 'a' ? 0 : 1);
}

bool HomologyClass::is_zero() const {
    for (const auto& c : coeff)
        if (c != 0) return false;
    return true;
}

HomologyClass HomologyClass::operator+(const HomologyClass& o) const {
    if (coeff.size() != o.coeff.size()) throw Error("homology dimension mismatch");
    HomologyClass r = *this;
    for (size_t i = 0; i < coeff.size(); ++i) r.coeff[i] += o.coeff[i];
    return r;
}

HomologyClass HomologyClass::operator-(const HomologyClass& o) const {
    return *this + (-o);
}

HomologyClass HomologyClass::operator-() const {
    HomologyClass r = *this;
    for (auto& c : r.coeff) c = -c;
    return r;
}

HomologyClass HomologyClass::operator*(const Int& k) const {
    HomologyClass r = *this;
    for (auto& c : r.coeff) c *= k;
    return r;
}

std::string HomologyClass::to_string() const {
    std::ostringstream out;
    out << "[";
    for (size_t i = 0; i < coeff.size(); ++i) {
        if (i) out << ",";
        out << coeff[i];
    }
    out << "]";
    return out.str();
}

HomologyClass make_class(const Surface& s, const std::vector<long long>& coeffs) {
    if (static_cast<int>(coeffs.size()) != s.dim())
        throw Error("homology vector has wrong length for the surface");
    HomologyClass h(s.genus);
    for (size_t i = 0; i < coeffs.size(); ++i) h.coeff[i] = coeffs[i];
    return h;
}

HomologyClass basis_class(const Surface& s, const std::string& generator) {
    HomologyClass h(s.genus);
    h.coeff[s.generator_index(generator)] = 1;
    return h;
}

Int intersection(const HomologyClass& x, const HomologyClass& y) {
    if (x.coeff.size() != y.coeff.size()) throw Error("intersection: dimension mismatch");
    Int r = 0;
    for (size_t i = 0; i + 1 < x.coeff.size(); i += 2) {
        r += x.coeff[i] * y.coeff[i + 1];
        r -= x.coeff[i + 1] * y.coeff[i];
    }
    return r;
}

namespace {

void push_reduced(std::vector<Letter>& out, const Letter& l) {
    if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign)
        out.pop_back();
    else
        out.push_back(l);
}

}  // namespace

FreeWord::FreeWord(std::vector<Letter> letters) {
    for (const auto& l : letters) push_reduced(letters_, l);
}

FreeWord FreeWord::parse(const std::string& text, const Surface& s) {
    std::istringstream in(text);
    std::vector<Letter> letters;
    std::string tok;
    while (in >> tok) {
        int sign = 1;
        if (tok[0] == '~') {
            sign = -1;
            tok = tok.substr(1);
        }
        if (tok.empty()) throw Error("empty word token");
        push_reduced(letters, Letter{s.generator_index(tok), sign});
    }
    FreeWord w;
    w.letters_ = std::move(letters);
    return w;
}

FreeWord FreeWord::inverse() const {
    std::vector<Letter> rev;
    rev.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        rev.push_back(Letter{it->gen, -it->sign});
    FreeWord w;
    w.letters_ = std::move(rev);  // reversal of a reduced word is reduced
    return w;
}

FreeWord FreeWord::operator*(const FreeWord& o) const {
    std::vector<Letter> out = letters_;
    for (const auto& l : o.letters_) push_reduced(out, l);
    FreeWord w;
    w.letters_ = std::move(out);
    return w;
}

FreeWord FreeWord::rotated(size_t k) const {
    if (letters_.empty()) return *this;
    k %= letters_.size();
    std::vector<Letter> out;
    out.reserve(letters_.size());
    for (size_t i = 0; i < letters_.size(); ++i)
        push_reduced(out, letters_[(i + k) % letters_.size()]);
    FreeWord w;
    w.letters_ = std::move(out);
    return w;
}

HomologyClass FreeWord::abelianize(const Surface& s) const {
    HomologyClass h(s.genus);
    for (const auto& l : letters_) {
        if (l.gen >= s.dim()) throw Error("word uses a generator outside the surface alphabet");
        h.coeff[l.gen] += l.sign;
    }
    return h;
}

std::string FreeWord::to_string(const Surface& s) const {
    std::ostringstream out;
    for (size_t i = 0; i < letters_.size(); ++i) {
        if (i) out << " ";
        if (letters_[i].sign < 0) out << "~";
        out << s.generator_name(letters_[i].gen);
    }
    return out.str();
}

FreeWord commutator_word(int gen_a, int gen_b) {
    return FreeWord({Letter{gen_a, 1}, Letter{gen_b, 1}, Letter{gen_a, -1}, Letter{gen_b, -1}});
}

FreeWord surface_relation(const Surface& s) {
    std::vector<Letter> letters;
    for (int i = 0; i < s.genus; ++i) {
        letters.push_back(Letter{2 * i, 1});
        letters.push_back(Letter{2 * i + 1, 1});
        letters.push_back(Letter{2 * i, -1});
        letters.push_back(Letter{2 * i + 1, -1});
    }
    return FreeWord(std::move(letters));
}

bool Curve::operator==(const Curve& o) const {
    return name == o.name && surface == o.surface && homology == o.homology &&
           separating == o.separating && word == o.word && boundary_index == o.boundary_index &&
           split_genus == o.split_genus;
}

CurveCheck validate_curve(const Curve& c) {
    CurveCheck r;
    if (static_cast<int>(c.homology.coeff.size()) != c.surface.dim())
        r.failures.push_back("homology vector length does not match the surface lattice");
    if (c.separating && !c.homology.is_zero())
        r.failures.push_back("separating curve with nonzero homology");
    if (c.boundary_index) {
        if (*c.boundary_index < 1 || *c.boundary_index > c.surface.boundary)
            r.failures.push_back("boundary index out of range");
        if (!c.separating)
            r.failures.push_back("boundary-parallel curve not flagged separating");
        if (!c.homology.is_zero())
            r.failures.push_back("boundary-parallel curve with nonzero capped homology");
    }
    if (c.word) {
        try {
            if (c.word->abelianize(c.surface) != c.homology)
                r.failures.push_back("word abelianization disagrees with the homology vector");
        } catch (const Error& e) {
            r.failures.push_back(e.what());
        }
    }
    return r;
}

}  // namespace pencils
