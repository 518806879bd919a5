#pragma once

#include <stdexcept>
#include <string>

namespace lpreps {

// Malformed wire data (bad bin/pair/step-function encodings, bad literals).
struct codec_error : std::runtime_error {
    explicit codec_error(const std::string& what) : std::runtime_error(what) {}
};

// A representation/name/modulus contract does not hold.
struct contract_error : std::runtime_error {
    explicit contract_error(const std::string& what) : std::runtime_error(what) {}
};

// An operation would exceed its configured resource budget.
struct budget_error : std::runtime_error {
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

// Input outside the supported class (dimension, p-range, missing derivative, ...).
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace lpreps
