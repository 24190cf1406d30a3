#pragma once

#include <stdexcept>
#include <string>

namespace rbg {

struct MalformedPd : std::runtime_error {
  explicit MalformedPd(const std::string& m) : std::runtime_error("MalformedPd: " + m) {}
};
struct InconsistentEdges : std::runtime_error {
  explicit InconsistentEdges(const std::string& m) : std::runtime_error("InconsistentEdges: " + m) {}
};
struct OrientationClash : std::runtime_error {
  explicit OrientationClash(const std::string& m) : std::runtime_error("OrientationClash: " + m) {}
};
struct MalformedDt : std::runtime_error {
  explicit MalformedDt(const std::string& m) : std::runtime_error("MalformedDt: " + m) {}
};
struct NonRealizable : std::runtime_error {
  explicit NonRealizable(const std::string& m) : std::runtime_error("NonRealizable: " + m) {}
};
struct NotAKnot : std::runtime_error {
  explicit NotAKnot(const std::string& m) : std::runtime_error("NotAKnot: " + m) {}
};
struct SameComponent : std::runtime_error {
  explicit SameComponent(const std::string& m) : std::runtime_error("SameComponent: " + m) {}
};
struct InvalidSlot : std::runtime_error {
  explicit InvalidSlot(const std::string& m) : std::runtime_error("InvalidSlot: " + m) {}
};
struct RationalFramingOutsideR : std::runtime_error {
  explicit RationalFramingOutsideR(const std::string& m)
      : std::runtime_error("RationalFramingOutsideR: " + m) {}
};
struct ResourceLimit : std::runtime_error {
  explicit ResourceLimit(const std::string& m) : std::runtime_error("ResourceLimit: " + m) {}
};
struct ZeroK : std::runtime_error {
  explicit ZeroK(const std::string& m) : std::runtime_error("ZeroK: " + m) {}
};
struct BadBranch : std::runtime_error {
  explicit BadBranch(const std::string& m) : std::runtime_error("BadBranch: " + m) {}
};
struct TemplateMissing : std::runtime_error {
  explicit TemplateMissing(const std::string& m) : std::runtime_error("TemplateMissing: " + m) {}
};
struct TwistArityMismatch : std::runtime_error {
  explicit TwistArityMismatch(const std::string& m)
      : std::runtime_error("TwistArityMismatch: " + m) {}
};

}  // namespace rbg
