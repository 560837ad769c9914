#include "pencils/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace pencils {

std::string ParseDiagnostic::to_string() const {
    std::ostringstream out;
    out << (severity == Error ? "error" : "warning") << " at " << line << ":" << col << ": "
        << message;
    return out.str();
}

namespace {

struct Cursor {
    const std::string& text;
    int line;
    size_t pos = 0;

    void skip_space() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }
    bool done() {
        skip_space();
        return pos >= text.size() || text[pos] == '#';
    }
    int col() const { return static_cast<int>(pos) + 1; }
};

bool name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '.';
}

std::string read_name(Cursor& c) {
    c.skip_space();
    size_t start = c.pos;
    while (c.pos < c.text.size() && name_char(c.text[c.pos])) ++c.pos;
    return c.text.substr(start, c.pos - start);
}

bool read_int(Cursor& c, long long& out) {
    c.skip_space();
    size_t start = c.pos;
    if (c.pos < c.text.size() && (c.text[c.pos] == '-' || c.text[c.pos] == '+')) ++c.pos;
    while (c.pos < c.text.size() && std::isdigit(static_cast<unsigned char>(c.text[c.pos]))) ++c.pos;
    if (c.pos == start || (c.pos == start + 1 && !std::isdigit(static_cast<unsigned char>(c.text[start]))))
        return false;
    out = std::stoll(c.text.substr(start, c.pos - start));
    return true;
}

struct WordToken {
    std::string curve;
    long long exponent = 1;
    int line = 0, col = 0;
};

struct Segment {
    std::optional<std::vector<std::pair<std::string, long long>>> conj;  // twistword
    std::vector<WordToken> tokens;
    int line = 0, col = 0;
};

struct FileState {
    std::optional<Surface> surface;
    std::vector<std::pair<std::string, Curve>> curves;  // declaration order
    DisjointPairs disjoint;
    std::vector<Segment> segments;
    std::optional<std::vector<int>> target;
    int word_line = 0;
};

const Curve* lookup(const FileState& st, const std::string& name) {
    for (const auto& [n, c] : st.curves)
        if (n == name) return &c;
    return nullptr;
}

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    ParseResult run() {
        std::istringstream in(text_);
        std::string raw;
        int lineno = 0;
        while (std::getline(in, raw)) {
            ++lineno;
            Cursor c{raw, lineno};
            if (c.done()) continue;
            std::string head = read_name(c);
            if (head == "surface")
                parse_surface(c);
            else if (head == "curve")
                parse_curve(c);
            else if (head == "disjoint")
                parse_disjoint(c);
            else if (head == "word" || head == "target") {
                c.skip_space();
                if (c.pos >= c.text.size() || c.text[c.pos] != ':') {
                    diag(c, "expected ':' after '" + head + "'");
                    continue;
                }
                ++c.pos;
                if (head == "word")
                    parse_word(c);
                else
                    parse_target(c);
            } else {
                diag(c, "unknown directive '" + head + "'");
            }
        }
        return assemble();
    }

private:
    const std::string& text_;
    FileState st_;
    std::vector<ParseDiagnostic> diags_;

    void diag(const Cursor& c, const std::string& msg) {
        diags_.push_back(ParseDiagnostic{ParseDiagnostic::Error, c.line, c.col(), msg});
    }

    void parse_surface(Cursor& c) {
        long long g = -1, b = -1;
        while (!c.done()) {
            std::string key = read_name(c);
            if (c.pos >= c.text.size() || c.text[c.pos] != '=') {
                diag(c, "expected '=' after '" + key + "'");
                return;
            }
            ++c.pos;
            long long v;
            if (!read_int(c, v)) {
                diag(c, "malformed integer");
                return;
            }
            if (key == "g")
                g = v;
            else if (key == "b")
                b = v;
            else {
                diag(c, "unknown surface field '" + key + "'");
                return;
            }
        }
        if (g < 0 || b < 0) {
            diag(c, "surface needs g= and b=");
            return;
        }
        st_.surface = Surface{static_cast<int>(g), static_cast<int>(b)};
    }

    void parse_curve(Cursor& c) {
        if (!st_.surface) {
            diag(c, "curve before surface declaration");
            return;
        }
        std::string name = read_name(c);
        if (name.empty()) {
            diag(c, "curve needs a name");
            return;
        }
        Curve cv;
        cv.name = name;
        cv.surface = *st_.surface;
        cv.homology = HomologyClass::zero(st_.surface->genus);
        bool have_hom = false;
        while (!c.done()) {
            std::string key = read_name(c);
            if (c.pos >= c.text.size() || c.text[c.pos] != '=') {
                diag(c, "expected '=' after '" + key + "'");
                return;
            }
            ++c.pos;
            if (key == "hom") {
                if (c.pos >= c.text.size() || c.text[c.pos] != '[') {
                    diag(c, "hom expects a bracketed list");
                    return;
                }
                ++c.pos;
                std::vector<long long> vals;
                while (true) {
                    long long v;
                    if (!read_int(c, v)) {
                        diag(c, "malformed integer in hom list");
                        return;
                    }
                    vals.push_back(v);
                    c.skip_space();
                    if (c.pos < c.text.size() && c.text[c.pos] == ',') {
                        ++c.pos;
                        continue;
                    }
                    break;
                }
                c.skip_space();
                if (c.pos >= c.text.size() || c.text[c.pos] != ']') {
                    diag(c, "unterminated hom list");
                    return;
                }
                ++c.pos;
                if (static_cast<int>(vals.size()) != st_.surface->dim()) {
                    diag(c, "hom list has wrong length");
                    return;
                }
                cv.homology = make_class(*st_.surface, vals);
                have_hom = true;
            } else if (key == "sep") {
                std::string v = read_name(c);
                if (v != "true" && v != "false") {
                    diag(c, "sep expects true or false");
                    return;
                }
                cv.separating = v == "true";
            } else if (key == "word") {
                c.skip_space();
                if (c.pos >= c.text.size() || c.text[c.pos] != '"') {
                    diag(c, "word expects a quoted string");
                    return;
                }
                size_t end = c.text.find('"', c.pos + 1);
                if (end == std::string::npos) {
                    diag(c, "unterminated word string");
                    return;
                }
                std::string body = c.text.substr(c.pos + 1, end - c.pos - 1);
                try {
                    cv.word = FreeWord::parse(body, *st_.surface);
                } catch (const pencils::Error& err) {
                    diag(c, err.what());
                    return;
                }
                c.pos = end + 1;
            } else if (key == "splitgenus") {
                long long v;
                if (!read_int(c, v)) {
                    diag(c, "malformed splitgenus");
                    return;
                }
                cv.split_genus = static_cast<int>(v);
            } else if (key == "boundary") {
                long long v;
                if (!read_int(c, v)) {
                    diag(c, "malformed boundary index");
                    return;
                }
                cv.boundary_index = static_cast<int>(v);
                cv.separating = true;
            } else {
                diag(c, "unknown curve field '" + key + "'");
                return;
            }
        }
        (void)have_hom;
        st_.curves.emplace_back(name, std::move(cv));
    }

    void parse_disjoint(Cursor& c) {
        std::string a = read_name(c);
        std::string b = read_name(c);
        if (a.empty() || b.empty()) {
            diag(c, "disjoint expects two curve names");
            return;
        }
        st_.disjoint.insert(a < b ? std::make_pair(a, b) : std::make_pair(b, a));
    }

    bool read_word_token(Cursor& c, WordToken& tok) {
        c.skip_space();
        tok.line = c.line;
        tok.col = c.col();
        long long sign = 1;
        if (c.pos < c.text.size() && c.text[c.pos] == '~') {
            sign = -1;
            ++c.pos;
        }
        std::string name = read_name(c);
        if (name.empty()) {
            diag(c, "expected a curve name");
            return false;
        }
        long long exp = 1;
        if (c.pos < c.text.size() && c.text[c.pos] == '^') {
            ++c.pos;
            if (!read_int(c, exp) || exp == 0) {
                diag(c, "malformed exponent");
                return false;
            }
        }
        tok.curve = name;
        tok.exponent = sign * exp;
        return true;
    }

    void parse_word(Cursor& c) {
        st_.word_line = c.line;
        Segment plain;
        plain.line = c.line;
        auto flush = [&]() {
            if (!plain.tokens.empty()) st_.segments.push_back(plain);
            plain.tokens.clear();
        };
        while (!c.done()) {
            c.skip_space();
            if (c.text[c.pos] == '|') {
                ++c.pos;
                continue;
            }
            if (c.text.compare(c.pos, 5, "conj(") == 0) {
                flush();
                Segment seg;
                seg.line = c.line;
                seg.col = c.col();
                c.pos += 5;
                std::vector<std::pair<std::string, long long>> tw;
                while (true) {
                    c.skip_space();
                    if (c.pos >= c.text.size()) {
                        diag(c, "unterminated conj twist word");
                        return;
                    }
                    if (c.text[c.pos] == ')') {
                        ++c.pos;
                        break;
                    }
                    WordToken t;
                    if (!read_word_token(c, t)) return;
                    tw.emplace_back(t.curve, t.exponent);
                }
                c.skip_space();
                if (c.pos >= c.text.size() || c.text[c.pos] != '{') {
                    diag(c, "expected '{' after conj(...)");
                    return;
                }
                ++c.pos;
                bool closed = false;
                while (!c.done()) {
                    c.skip_space();
                    if (c.pos < c.text.size() && c.text[c.pos] == '}') {
                        ++c.pos;
                        closed = true;
                        break;
                    }
                    WordToken t;
                    if (!read_word_token(c, t)) return;
                    seg.tokens.push_back(t);
                }
                if (!closed) {
                    diag(c, "unbalanced conj block");
                    return;
                }
                seg.conj = std::move(tw);
                st_.segments.push_back(std::move(seg));
                continue;
            }
            WordToken t;
            if (!read_word_token(c, t)) return;
            plain.tokens.push_back(t);
        }
        flush();
    }

    void parse_target(Cursor& c) {
        std::vector<int> tgt;
        while (!c.done()) {
            std::string tok = read_name(c);
            if (tok == "identity") continue;
            if (tok.size() < 2 || tok[0] != 'd') {
                diag(c, "target expects 'identity' or boundary symbols d<i>");
                return;
            }
            tgt.push_back(std::stoi(tok.substr(1)));
        }
        std::sort(tgt.begin(), tgt.end());
        st_.target = std::move(tgt);
    }

    ParseResult assemble() {
        ParseResult out;
        if (!st_.surface) {
            diags_.push_back(ParseDiagnostic{ParseDiagnostic::Error, 1, 1, "missing surface line"});
            out.diagnostics = std::move(diags_);
            return out;
        }
        if (!diags_.empty()) {
            out.diagnostics = std::move(diags_);
            return out;
        }
        Factorization f;
        f.surface = *st_.surface;
        f.disjoint = st_.disjoint;
        if (st_.target) f.target.boundary = *st_.target;
        struct Range {
            size_t lo, hi;
            ConjugationWord phi;
            int line, col;
        };
        std::vector<Range> ranges;
        for (const auto& seg : st_.segments) {
            size_t lo = f.twists.size();
            for (const auto& tok : seg.tokens) {
                const Curve* cv = lookup(st_, tok.curve);
                if (!cv) {
                    diags_.push_back(ParseDiagnostic{ParseDiagnostic::Error, tok.line, tok.col,
                                                     "unknown curve '" + tok.curve + "'"});
                    continue;
                }
                Twist t;
                t.curve = *cv;
                t.exponent = tok.exponent;
                f.twists.push_back(std::move(t));
            }
            if (seg.conj && !seg.conj->empty()) {
                ConjugationWord phi;
                for (const auto& [name, exp] : *seg.conj) {
                    const Curve* cv = lookup(st_, name);
                    if (!cv) {
                        diags_.push_back(ParseDiagnostic{ParseDiagnostic::Error, seg.line, seg.col,
                                                         "unknown curve '" + name + "' in conj"});
                        continue;
                    }
                    phi.factors.emplace_back(*cv, exp);
                }
                if (f.twists.size() > lo)
                    ranges.push_back(Range{lo, f.twists.size() - 1, phi, seg.line, seg.col});
            }
        }
        if (!diags_.empty()) {
            out.diagnostics = std::move(diags_);
            return out;
        }
        for (const auto& r : ranges) {
            try {
                f = partial_conjugate(f, r.lo, r.hi, r.phi);
            } catch (const pencils::Error& err) {
                diags_.push_back(ParseDiagnostic{ParseDiagnostic::Error, r.line, r.col, err.what()});
                out.diagnostics = std::move(diags_);
                return out;
            }
        }
        out.factorization = std::move(f);
        out.diagnostics = std::move(diags_);
        return out;
    }
};

std::string exponent_suffix(long long e) {
    if (e == 1 || e == -1) return "";
    return "^" + std::to_string(e < 0 ? -e : e);
}

}  // namespace

ParseResult parse_factorization(const std::string& text) { return Parser(text).run(); }

std::string serialize_factorization(const Factorization& f) {
    std::ostringstream out;
    out << "surface g=" << f.surface.genus << " b=" << f.surface.boundary << "\n";

    // Collect curves in first-use order: base curves for conjugated twists,
    // then conjugation factors.
    std::vector<const Curve*> order;
    auto add = [&](const Curve& c) {
        for (const Curve* p : order)
            if (p->name == c.name) return;
        order.push_back(&c);
    };
    for (const auto& t : f.twists) {
        if (t.base)
            add(*t.base);
        else
            add(t.curve);
        if (t.conj)
            for (const auto& [c, e] : t.conj->factors) add(c);
    }
    for (const Curve* c : order) {
        out << "curve " << c->name;
        if (c->boundary_index) {
            out << " boundary=" << *c->boundary_index << "\n";
            continue;
        }
        out << " hom=[";
        for (size_t i = 0; i < c->homology.coeff.size(); ++i)
            out << (i ? "," : "") << c->homology.coeff[i];
        out << "] sep=" << (c->separating ? "true" : "false");
        if (c->split_genus) out << " splitgenus=" << *c->split_genus;
        if (c->word) out << " word=\"" << c->word->to_string(c->surface) << "\"";
        out << "\n";
    }
    for (const auto& [a, b] : f.disjoint) out << "disjoint " << a << " " << b << "\n";

    out << "word:";
    const ConjugationWord* open = nullptr;
    for (const auto& t : f.twists) {
        const ConjugationWord* cj = t.conj ? t.conj.get() : nullptr;
        if (cj != open) {
            if (open) out << " }";
            if (cj) {
                out << " conj(";
                for (size_t i = 0; i < cj->factors.size(); ++i) {
                    if (i) out << " ";
                    out << cj->factors[i].first.name << "^" << cj->factors[i].second;
                }
                out << "){";
            }
            open = cj;
        }
        const Curve& shown = t.base ? *t.base : t.curve;
        out << " " << (t.exponent < 0 ? "~" : "") << shown.name << exponent_suffix(t.exponent);
    }
    if (open) out << " }";
    out << "\n";

    out << "target:";
    if (f.target.is_identity())
        out << " identity";
    else
        for (int idx : f.target.boundary) out << " d" << idx;
    out << "\n";
    return out.str();
}

}  // namespace pencils
