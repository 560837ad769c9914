#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace pencils {

// All homology/lattice arithmetic is exact. cpp_int keeps transvection
// products and Smith normal forms overflow-free without any care at call
// sites; the matrices involved are tiny.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline long long to_ll(const Int& v) { return static_cast<long long>(v); }

}  // namespace pencils
