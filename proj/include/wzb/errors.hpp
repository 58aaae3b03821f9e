#pragma once

#include <stdexcept>
#include <string>

namespace wzb {

enum class errc {
  division_by_zero,
  pole_at_point,
  not_hypergeometric,
  not_proportional,
  missing_sign_factor,
  rule_not_applicable,
  gamma_pole,
  pole_at_nonpositive_integer,
  no_straight_separating_line,
  not_converged,
  domain_error,
  colliding_poles,
  divergent,
  syntax_error,
  undefined_name,
  unknown_id,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
public:
  Error(errc c, const std::string& msg)
      : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code_(c) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& msg) { throw Error(c, msg); }

}  // namespace wzb
