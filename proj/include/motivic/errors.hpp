#ifndef MOTIVIC_ERRORS_HPP
#define MOTIVIC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace motivic {

/* Broad failure classes. The CLI maps these onto exit codes:
 * validation/precondition -> 1, resource -> 2, numeric -> 3. */
enum class ErrorKind {
    validation,
    precondition,
    resource,
    numeric,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string code, const std::string& message)
        : std::runtime_error(message), kind_(kind), code_(std::move(code)) {}

    ErrorKind kind() const noexcept { return kind_; }
    /* short machine-readable reason, e.g. "dimension", "not_invertible" */
    const std::string& code() const noexcept { return code_; }

private:
    ErrorKind kind_;
    std::string code_;
};

struct ValidationError : Error {
    explicit ValidationError(const std::string& msg, std::string code = "validation")
        : Error(ErrorKind::validation, std::move(code), msg) {}
};

struct DimensionError : Error {
    explicit DimensionError(const std::string& msg)
        : Error(ErrorKind::validation, "dimension", msg) {}
};

struct PreconditionError : Error {
    explicit PreconditionError(const std::string& msg, std::string code = "precondition")
        : Error(ErrorKind::precondition, std::move(code), msg) {}
};

struct NotInvertibleError : Error {
    explicit NotInvertibleError(const std::string& msg)
        : Error(ErrorKind::precondition, "not_invertible", msg) {}
};

struct PrecisionError : Error {
    explicit PrecisionError(const std::string& msg)
        : Error(ErrorKind::precondition, "precision", msg) {}
};

struct PoleError : Error {
    PoleError(const std::string& msg, double nearest_re, double nearest_im)
        : Error(ErrorKind::precondition, "pole", msg), re(nearest_re), im(nearest_im) {}
    double re;
    double im;
};

struct ResourceError : Error {
    ResourceError(const std::string& msg, long double required_size)
        : Error(ErrorKind::resource, "budget", msg), required(required_size) {}
    long double required;
};

struct NumericError : Error {
    explicit NumericError(const std::string& msg)
        : Error(ErrorKind::numeric, "numeric", msg) {}
};

}  // namespace motivic

#endif
