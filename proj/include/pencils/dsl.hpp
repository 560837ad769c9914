#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pencils/factorization.hpp"

namespace pencils {

struct ParseDiagnostic {
    enum Severity { Error, Warning } severity = Error;
    int line = 0;
    int col = 0;
    std::string message;

    std::string to_string() const;
};

struct ParseResult {
    std::optional<Factorization> factorization;
    std::vector<ParseDiagnostic> diagnostics;

    bool ok() const { return factorization.has_value(); }
};

// Factorization file grammar:
//   surface g=<int> b=<int>
//   curve <name> hom=[..] sep=<bool> [word="..."] [splitgenus=<int>]
//   curve <name> boundary=<int>
//   disjoint <name> <name>
//   word: <tok>+ with tokens <name>, ~<name>, <name>^<int>,
//         conj(<name>^<int> ...){ <tok>+ }, and '|' as a cosmetic separator
//   target: identity | d<i> ...
// '#' starts a comment. Rejected input always carries located diagnostics.
ParseResult parse_factorization(const std::string& text);

std::string serialize_factorization(const Factorization& f);

}  // namespace pencils
