#pragma once

#include <stdexcept>
#include <string>

namespace abp {

// Precondition / configuration violations. The CLI maps these to exit code 2.
class domain_error : public std::invalid_argument {
public:
    explicit domain_error(const std::string& what) : std::invalid_argument(what) {}
};

// Failures of the numerics at runtime (singular matrices at spectral points,
// tolerance certification failures, overflow). The CLI maps these to exit
// code 3 and prints the operation name carried here.
class numerical_error : public std::runtime_error {
public:
    numerical_error(const std::string& op, const std::string& what)
        : std::runtime_error(op + ": " + what), op_(op) {}

    const std::string& operation() const noexcept { return op_; }

private:
    std::string op_;
};

}  // namespace abp
