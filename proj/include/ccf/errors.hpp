#pragma once

#include <stdexcept>
#include <string>

namespace ccf {

/// Intermediate denominator of a backward fold became (numerically) zero.
class numerical_breakdown : public std::runtime_error {
public:
    numerical_breakdown(int term, const std::string& what)
        : std::runtime_error(what), term_(term) {}
    int term() const { return term_; }

private:
    int term_;
};

/// Forward-recurrence convergent has a zero denominator.
class degenerate_convergent : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// LLL input rows are linearly dependent.
class degenerate_basis : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// No built-in or persisted parameters for the requested kappa.
class missing_params : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Not enough data points for the requested solve.
class insufficient_data : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent data file.
class datafile_error : public std::runtime_error {
public:
    datafile_error(const std::string& what, long line = 0)
        : std::runtime_error(line ? what + " (line " + std::to_string(line) + ")" : what),
          line_(line) {}
    long line() const { return line_; }

private:
    long line_;
};

} // namespace ccf
