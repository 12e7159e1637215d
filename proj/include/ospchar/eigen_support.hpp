#pragma once

#include <Eigen/Core>

#include "ospchar/ext_scalar.hpp"
#include "ospchar/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<ospchar::Rat> {
    using Real = ospchar::Rat;
    using NonInteger = ospchar::Rat;
    using Nested = ospchar::Rat;
    using Literal = ospchar::Rat;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 40,
        MulCost = 40,
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

template <>
struct NumTraits<ospchar::Ext> {
    using Real = ospchar::Ext;
    using NonInteger = ospchar::Ext;
    using Nested = ospchar::Ext;
    using Literal = ospchar::Ext;
    enum {
        IsComplex = 0, // treated formally; adjoints are taken explicitly
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 32,
        AddCost = 160,
        MulCost = 640,
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

} // namespace Eigen

namespace ospchar {

using RatMat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using RatVec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using ExtMat = Eigen::Matrix<Ext, Eigen::Dynamic, Eigen::Dynamic>;

inline bool is_zero_matrix(const RatMat& m) {
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            if (!m(i, j).is_zero()) return false;
    return true;
}

inline bool is_zero_matrix(const ExtMat& m) {
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            if (!m(i, j).is_zero()) return false;
    return true;
}

inline RatMat rat_zero(Eigen::Index r, Eigen::Index c) {
    RatMat m(r, c);
    m.setZero();
    return m;
}

inline RatMat rat_identity(Eigen::Index n) {
    RatMat m = rat_zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) m(i, i) = Rat(1);
    return m;
}

inline ExtMat ext_zero(Eigen::Index r, Eigen::Index c) {
    ExtMat m(r, c);
    m.setZero();
    return m;
}

inline ExtMat ext_identity(Eigen::Index n) {
    ExtMat m = ext_zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) m(i, i) = Ext(1);
    return m;
}

inline ExtMat to_ext(const RatMat& m) {
    ExtMat out = ext_zero(m.rows(), m.cols());
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i) out(i, j) = Ext(m(i, j));
    return out;
}

} // namespace ospchar
