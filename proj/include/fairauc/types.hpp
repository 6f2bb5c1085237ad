#ifndef FAIRAUC_TYPES_HPP
#define FAIRAUC_TYPES_HPP

#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fairauc {

using Scalar = double;
using Vec = Eigen::VectorX<Scalar>;
using Mat = Eigen::MatrixX<Scalar>;
using Index = Eigen::Index;

// Protected-group label. Two groups only; "a" is the tie-break default
// wherever a disadvantaged group must be designated deterministically.
enum class Group : int { a = 0, b = 1 };

inline const char* group_name(Group g) { return g == Group::a ? "a" : "b"; }

// Matrix (or ridged matrix) failed the positive-definiteness check during
// factorization; carries the pivot index at which the factorization broke.
class SingularMatrix : public std::runtime_error {
public:
    SingularMatrix(Index pivot_, const std::string& what_)
        : std::runtime_error(what_), pivot(pivot_) {}
    Index pivot;
};

// A (group, class) cell holds fewer than 2 rows, so the unbiased covariance
// is undefined.
class InsufficientSamples : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Every unacquired candidate failed evaluation.
class NoViableCandidate : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Requested target lies outside the achievable interval [lo, hi].
class RangeError : public std::runtime_error {
public:
    RangeError(Scalar lo_, Scalar hi_, const std::string& what_)
        : std::runtime_error(what_), lo(lo_), hi(hi_) {}
    Scalar lo;
    Scalar hi;
};

// Ingestion-level problems (bad group/class columns, unusable cells).
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace fairauc

#endif
