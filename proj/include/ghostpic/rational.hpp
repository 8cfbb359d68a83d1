#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace ghostpic {

using Rat = mpq_class;
using RatVec = std::vector<Rat>;
using IntVec = std::vector<long>;

inline Rat dot(const RatVec& a, const IntVec& b) {
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline long dot(const IntVec& a, const IntVec& b) {
    long s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline IntVec add(const IntVec& a, const IntVec& b) {
    IntVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline IntVec sub(const IntVec& a, const IntVec& b) {
    IntVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline IntVec neg(const IntVec& a) {
    IntVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

inline bool is_zero(const IntVec& a) {
    for (long v : a)
        if (v != 0) return false;
    return true;
}

// p/q form with q omitted when 1
inline std::string rat_str(const Rat& r) {
    Rat c = r;
    c.canonicalize();
    return c.get_str();
}

Rat parse_rat(const std::string& s);
RatVec parse_ratvec(const std::string& csv);
std::string ratvec_str(const RatVec& v);

// scale to the primitive integer vector on the same ray
RatVec primitive(const RatVec& v);

inline RatVec eta(size_t n, int sign = 1) { return RatVec(n, Rat(sign)); }

}  // namespace ghostpic
