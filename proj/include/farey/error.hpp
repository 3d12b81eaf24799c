#ifndef FAREY_ERROR_HPP
#define FAREY_ERROR_HPP

#include <stdexcept>
#include <string>

namespace farey {

enum class ErrorKind {
    invalid_argument,  // bad input: out-of-range vertex, self-loop, malformed spec
    limit,             // configured resource cap exceeded
    parse,             // malformed serialized input
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace farey

#endif  // FAREY_ERROR_HPP
