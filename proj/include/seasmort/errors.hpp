#pragma once

#include <stdexcept>
#include <string>

namespace seasmort {

// Input or precondition failures. The CLI maps these to exit code 2.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Numerical failures inside the fitting machinery. Exit code 3.
class SolverError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class MalformedRowError : public ValidationError { public: using ValidationError::ValidationError; };
class MissingMonthError : public ValidationError { public: using ValidationError::ValidationError; };
class DuplicateMonthError : public ValidationError { public: using ValidationError::ValidationError; };
class NegativeDeathsError : public ValidationError { public: using ValidationError::ValidationError; };
class MissingPopulationYearError : public ValidationError { public: using ValidationError::ValidationError; };
class NonPositivePopulationError : public ValidationError { public: using ValidationError::ValidationError; };
class OutOfRangeError : public ValidationError { public: using ValidationError::ValidationError; };
class DegenerateDomainError : public ValidationError { public: using ValidationError::ValidationError; };
class OrderTooLargeError : public ValidationError { public: using ValidationError::ValidationError; };
class ShortSeriesError : public ValidationError { public: using ValidationError::ValidationError; };
class ExposureLengthMismatchError : public ValidationError { public: using ValidationError::ValidationError; };
class InvalidWeightsError : public ValidationError { public: using ValidationError::ValidationError; };
class NonPositiveMuError : public ValidationError { public: using ValidationError::ValidationError; };
class ZeroObservedError : public ValidationError { public: using ValidationError::ValidationError; };
class WrongModelKindError : public ValidationError { public: using ValidationError::ValidationError; };
class MonthNotInHorizonError : public ValidationError { public: using ValidationError::ValidationError; };
class OverlappingPeriodsError : public ValidationError { public: using ValidationError::ValidationError; };

class SingularSystemError : public SolverError { public: using SolverError::SolverError; };

} // namespace seasmort
