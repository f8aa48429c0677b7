#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace seedcomm {

/// A precondition on an argument was violated (bad node id, empty graph, out-of-range Δ, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Edge-list text could not be parsed.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string &message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// An iterative solver hit its iteration cap. Carries the last iterate so callers can inspect it.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string &what, std::vector<double> last_iterate, double residual,
                     std::size_t iterations)
        : std::runtime_error(what), last_iterate_(std::move(last_iterate)), residual_(residual),
          iterations_(iterations) {}

    const std::vector<double> &last_iterate() const noexcept { return last_iterate_; }
    double residual() const noexcept { return residual_; }
    std::size_t iterations() const noexcept { return iterations_; }

private:
    std::vector<double> last_iterate_;
    double residual_;
    std::size_t iterations_;
};

/// A built-in or on-disk dataset is missing or does not match its published node/edge counts.
class DatasetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The seed intersection came out empty, so no communities can be grown.
class EmptySeedSetError : public std::runtime_error {
public:
    EmptySeedSetError(std::size_t delta, std::size_t tau)
        : std::runtime_error("empty superior seed set for delta=" + std::to_string(delta) +
                             " (tau=" + std::to_string(tau) +
                             "); use a smaller delta to widen the per-measure prefixes"),
          delta_(delta), tau_(tau) {}

    std::size_t delta() const noexcept { return delta_; }
    std::size_t tau() const noexcept { return tau_; }

private:
    std::size_t delta_;
    std::size_t tau_;
};

} // namespace seedcomm
