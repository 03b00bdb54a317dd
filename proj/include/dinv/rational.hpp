#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace dinv {

// Exact scalars. Rat is kept canonical (positive denominator, reduced);
// GMP preserves canonical form under arithmetic, so only inputs need care.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat_parse(const std::string& s)
{
    if (s.empty())
        throw std::invalid_argument("empty rational literal");
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: '" + s + "'");
    if (r.get_den() == 0)
        throw std::invalid_argument("zero denominator: '" + s + "'");
    r.canonicalize();
    return r;
}

// "p/q", or just "p" when the denominator is 1.
inline std::string rat_str(const Rat& r)
{
    return r.get_str();
}

inline Rat rat_frac(long num, long den)
{
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Int int_parse(const std::string& s)
{
    Int v;
    if (s.empty() || v.set_str(s, 10) != 0)
        throw std::invalid_argument("bad integer literal: '" + s + "'");
    return v;
}

} // namespace dinv
