// errors.hpp -- exception hierarchy shared by all weylcoh modules.
#ifndef WEYLCOH_ERRORS_HPP
#define WEYLCOH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace weylcoh {

// Base class so callers can catch all library-defined failures at once.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Rank outside the legal range for the requested family.
struct InvalidRank : Error {
  using Error::Error;
};

// Operation defined only for some type families (e.g. epsilon coordinates).
struct UnsupportedType : Error {
  using Error::Error;
};

// Materializing a Weyl group larger than the configured element budget.
struct BudgetExceeded : Error {
  using Error::Error;
};

// Partition-count memo table grew past the configured state cap.
struct MemoBudgetExceeded : Error {
  using Error::Error;
};

// Brute-force partition oracle asked for a query outside its guard rails.
struct OracleTooLarge : Error {
  using Error::Error;
};

// Block decomposition requires p > h.
struct PrimeTooSmall : Error {
  using Error::Error;
};

// Degree bounds require a nonzero mu.
struct ZeroMu : Error {
  using Error::Error;
};

// theorem_bound called outside every curated theorem's hypotheses.
struct OutOfTheoremScope : Error {
  using Error::Error;
};

// reproduce_table called with an unknown table id.
struct UnknownTable : Error {
  using Error::Error;
};

// Malformed CLI input (bad weight vector, unknown root coordinates, ...).
struct UsageError : Error {
  using Error::Error;
};

}  // namespace weylcoh

#endif  // WEYLCOH_ERRORS_HPP
