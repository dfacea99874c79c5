#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <string>

#include "toric/errors.hpp"

namespace toric {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline double to_double(const Rat& r) { return r.convert_to<double>(); }
inline long to_long(const Int& n) { return n.convert_to<long>(); }

/// Largest integer <= r.
inline Int rat_floor(const Rat& r) {
    Int q = rat_num(r) / rat_den(r);
    if (rat_num(r) < 0 && q * rat_den(r) != rat_num(r)) --q;
    return q;
}

/// Smallest integer >= r.
inline Int rat_ceil(const Rat& r) { return -rat_floor(-r); }

/// r^e for integer e of either sign; requires r != 0 when e < 0.
inline Rat rat_pow(const Rat& base, const Int& expo) {
    if (expo == 0) return Rat(1);  // includes 0^0 = 1
    Int e = expo < 0 ? Int(-expo) : expo;
    Rat b = base, acc(1);
    while (e > 0) {
        if ((e & 1) != 0) acc *= b;
        b *= b;
        e >>= 1;
    }
    if (expo < 0) {
        if (acc == 0) throw ZeroCoordinate();
        return Rat(1) / acc;
    }
    return acc;
}

inline std::complex<double> cplx_pow(const std::complex<double>& base, long expo) {
    if (expo == 0) return {1.0, 0.0};
    long e = expo < 0 ? -expo : expo;
    std::complex<double> b = base, acc{1.0, 0.0};
    while (e > 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return expo < 0 ? std::complex<double>{1.0, 0.0} / acc : acc;
}

// Scalar concept used by the monomial maps: exact rationals for the
// certified paths, complex doubles for generic sampling. Integer powers
// only, computed by repeated multiplication so no branch cuts arise.
inline bool scalar_is_zero(const Rat& x) { return x == 0; }
inline bool scalar_is_zero(const std::complex<double>& x) { return x.real() == 0.0 && x.imag() == 0.0; }

inline Rat scalar_pow(const Rat& base, const Int& e) { return rat_pow(base, e); }
inline std::complex<double> scalar_pow(const std::complex<double>& base, const Int& e) {
    return cplx_pow(base, to_long(e));
}

template <class Scalar>
Scalar scalar_one() { return Scalar(1); }

/// Parses "p", "-p" or "p/q" with nonzero q; canonical form is automatic.
inline Rat parse_rational(const std::string& text) {
    auto bad = [&] { return SemanticError("cannot parse rational literal '" + text + "'"); };
    if (text.empty()) throw bad();
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(text));
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (den == 0) throw bad();
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        throw bad();
    }
}

inline std::string rat_to_string(const Rat& r) {
    if (rat_den(r) == 1) return rat_num(r).str();
    return rat_num(r).str() + "/" + rat_den(r).str();
}

}  // namespace toric
