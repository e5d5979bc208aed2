#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace conflie {

// Bad or inadmissible input; maps to exit code 2 in the CLI.
class precondition_error : public std::runtime_error {
public:
    explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

// A structural identity that is supposed to hold failed; maps to exit code 3.
// Either a bug or a falsifying instance, so it is always loud.
class invariant_violation : public std::logic_error {
public:
    explicit invariant_violation(const std::string& what) : std::logic_error(what) {}
};

class dimension_mismatch : public precondition_error {
public:
    explicit dimension_mismatch(const std::string& what) : precondition_error(what) {}
};

class config_mismatch : public precondition_error {
public:
    explicit config_mismatch(const std::string& what) : precondition_error(what) {}
};

class not_nilpotent : public precondition_error {
public:
    explicit not_nilpotent(const std::string& what) : precondition_error(what) {}
};

class sigma_vanishes : public precondition_error {
public:
    std::size_t point;
    explicit sigma_vanishes(std::size_t pt)
        : precondition_error("designated section vanishes at point " + std::to_string(pt)),
          point(pt) {}
};

class unit_vanishes : public precondition_error {
public:
    std::size_t point;
    explicit unit_vanishes(std::size_t pt)
        : precondition_error("1+s vanishes at point " + std::to_string(pt)), point(pt) {}
};

// The symmetric form degenerates on a filtration step.
class degenerate_restriction : public precondition_error {
public:
    std::size_t step;
    explicit degenerate_restriction(std::size_t i)
        : precondition_error("form degenerates on filtration step " + std::to_string(i)),
          step(i) {}
};

class not_general_position : public precondition_error {
public:
    explicit not_general_position(const std::string& what) : precondition_error(what) {}
};

class hypothesis_fails : public precondition_error {
public:
    std::size_t index;
    explicit hypothesis_fails(std::size_t i)
        : precondition_error("degree-raising operator of coordinate " + std::to_string(i) +
                             " is not an isomorphism onto the first summand"),
          index(i) {}
};

class degree_gap : public invariant_violation {
public:
    explicit degree_gap(const std::string& what) : invariant_violation(what) {}
};

}  // namespace conflie
