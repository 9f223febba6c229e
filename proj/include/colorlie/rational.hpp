#pragma once

#include <Eigen/Core>
#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace Eigen {

// Exact rational scalar for Eigen dense types (see Eigen's custom-scalar docs).
template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
    typedef mpq_class Real;
    typedef mpq_class NonInteger;
    typedef mpq_class Nested;

    static inline Real epsilon() { return 0; }
    static inline Real dummy_precision() { return 0; }
    static inline int digits10() { return 0; }

    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 150,
        MulCost = 100,
    };
};

}  // namespace Eigen

namespace colorlie {

using Rat = mpq_class;
using Int = mpz_class;

using Mat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

inline bool is_zero(const Vec& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i)
        if (v[i] != 0) return false;
    return true;
}

// mpq_class(num, den) does not canonicalize on its own; route fraction
// construction through here.
inline Rat rat_frac(const Int& num, const Int& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// "num" or "num/den", den > 0 after canonicalization.
inline Rat rat_from_string(std::string_view s) {
    mpq_class q;
    if (q.set_str(std::string(s), 10) != 0)
        throw std::invalid_argument("bad rational literal: " + std::string(s));
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator: " + std::string(s));
    q.canonicalize();
    return q;
}

inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

}  // namespace colorlie
