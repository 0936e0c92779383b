#ifndef L2B_ERRORS_HPP
#define L2B_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace l2b {

// Base for every failure raised by the library. The category string is
// stable and is what the command line surfaces to callers.
class Error : public std::runtime_error {
 public:
  Error(std::string category, const std::string& what)
      : std::runtime_error(what), category_(std::move(category)) {}
  const std::string& category() const noexcept { return category_; }

 private:
  std::string category_;
};

#define L2B_DECLARE_ERROR(Name, tag)                                  \
  class Name : public Error {                                         \
   public:                                                            \
    explicit Name(const std::string& what) : Error(tag, what) {}      \
  };

L2B_DECLARE_ERROR(ShapeError, "shape")
L2B_DECLARE_ERROR(InvalidInput, "invalid-input")
L2B_DECLARE_ERROR(NotChainMap, "not-chain-map")
L2B_DECLARE_ERROR(CheckFailed, "check-failed")
L2B_DECLARE_ERROR(Underdetermined, "underdetermined")
L2B_DECLARE_ERROR(Inconsistent, "inconsistent")
L2B_DECLARE_ERROR(NotCommutative, "not-commutative")
L2B_DECLARE_ERROR(NotSymmetric, "not-symmetric")

#undef L2B_DECLARE_ERROR

}  // namespace l2b

#endif
