#ifndef IFEM_ERRORS_HPP
#define IFEM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ifem {

// Invalid user-facing input or configuration. CLI maps this to exit code 2.
class config_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Data-dependent failure at run time: Newton stall, mesh tangling, pole of a
// fractional-linear map, degenerate moving frame, positivity violation.
// CLI maps this to exit code 3.  `index` carries the offending node/step
// where one exists, -1 otherwise.
class numerical_error : public std::runtime_error {
public:
    explicit numerical_error(const std::string& what, long index = -1)
        : std::runtime_error(what), index_(index) {}
    long index() const noexcept { return index_; }

private:
    long index_;
};

} // namespace ifem

#endif
