#pragma once

#include <stdexcept>
#include <string>

namespace quasinv {

/// Base for every error raised by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class parse_error : public error {
 public:
  explicit parse_error(const std::string& what) : error("parse error: " + what) {}
};

class invalid_map : public error {
 public:
  explicit invalid_map(const std::string& what) : error("invalid map: " + what) {}
};

class out_of_domain : public error {
 public:
  explicit out_of_domain(const std::string& what) : error("out of domain: " + what) {}
};

class domain_too_small : public error {
 public:
  explicit domain_too_small(const std::string& what) : error("domain too small: " + what) {}
};

class not_nat_domain : public error {
 public:
  explicit not_nat_domain(const std::string& what) : error("domain is not N: " + what) {}
};

class infinite_orbit : public error {
 public:
  infinite_orbit(long long point, const std::string& what)
      : error("infinite orbit: " + what), point_(point) {}
  long long point() const noexcept { return point_; }

 private:
  long long point_;
};

class profile_invalid : public error {
 public:
  explicit profile_invalid(const std::string& what) : error("profile invalid: " + what) {}
};

class structure_violation : public error {
 public:
  explicit structure_violation(const std::string& what)
      : error("structure violation: " + what) {}
};

class not_a_p2_solution : public error {
 public:
  explicit not_a_p2_solution(const std::string& what)
      : error("not a P2 solution: " + what) {}
};

class bound_too_large : public error {
 public:
  explicit bound_too_large(const std::string& what) : error("bound too large: " + what) {}
};

class config_error : public error {
 public:
  explicit config_error(const std::string& what) : error("config error: " + what) {}
};

/// Violated caller precondition (argument outside the documented range).
class precondition_error : public error {
 public:
  explicit precondition_error(const std::string& what) : error("precondition: " + what) {}
};

}  // namespace quasinv
