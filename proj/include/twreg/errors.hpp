#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace twreg {

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class domain_error : public error {
 public:
  using error::error;
};

// Argument within tolerance of a pole of Gamma; nearest() is the pole index (<= 0).
class pole_error : public domain_error {
 public:
  pole_error(const std::string& what, long nearest)
      : domain_error(what), nearest_(nearest) {}
  long nearest() const noexcept { return nearest_; }

 private:
  long nearest_;
};

class accuracy_error : public error {
 public:
  using error::error;
};

class sector_error : public error {
 public:
  using error::error;
};

class frame_error : public error {
 public:
  using error::error;
};

class order_error : public error {
 public:
  using error::error;
};

class shift_required_error : public error {
 public:
  using error::error;
};

class case_error : public error {
 public:
  using error::error;
};

class ambiguity_error : public error {
 public:
  ambiguity_error(const std::string& what, std::vector<std::string> candidates)
      : error(what), candidates_(std::move(candidates)) {}
  const std::vector<std::string>& candidates() const noexcept { return candidates_; }

 private:
  std::vector<std::string> candidates_;
};

class stiffness_error : public error {
 public:
  using error::error;
};

}  // namespace twreg
