#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace cc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Asks the caller to redo the computation at higher working precision.
struct PrecisionEscalate : Error {
    explicit PrecisionEscalate(const std::string& what) : Error(what) {}
};

// The equation order is not maximal at q; Kummer-Dedekind factorization
// would be wrong there.
struct NonMaximalOrder : Error {
    mpz_class q;
    explicit NonMaximalOrder(mpz_class q_)
        : Error("equation order not maximal at q = " + q_.get_str()), q(std::move(q_)) {}
};

// A norm could not be fully factored within the time budget. Carries the
// composite cofactor so the driver can decide to perturb and retry.
struct RetryFactorization : Error {
    mpz_class cofactor;
    explicit RetryFactorization(mpz_class c)
        : Error("factorization budget exhausted, composite cofactor left"),
          cofactor(std::move(c)) {}
};

// No order-f lift of Frobenius exists in the decomposition group.
struct NonSplitSequence : Error {
    using Error::Error;
};

struct InvalidInput : Error {
    using Error::Error;
};

} // namespace cc
