#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace shadecalc {

/// Input outside the mathematical domain of an operation (zero polynomial,
/// (0,0) parameter, projection center as argument, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A projection center, a chord system or a sign evaluation failed one of the
/// transversality tests. Callers usually react by drawing another center.
class GenericityFailure : public std::runtime_error {
 public:
  GenericityFailure(std::string flag, const std::string& what)
      : std::runtime_error(what), flag_(std::move(flag)) {}
  const std::string& flag() const { return flag_; }

 private:
  std::string flag_;
};

/// Root isolation did not converge to pairwise disjoint inclusion disks.
class UncertifiedRoots : public GenericityFailure {
 public:
  UncertifiedRoots(const std::string& what, std::vector<double> cluster_radii)
      : GenericityFailure("roots-certified", what), radii_(std::move(cluster_radii)) {}
  const std::vector<double>& cluster_radii() const { return radii_; }

 private:
  std::vector<double> radii_;
};

/// Every candidate center was rejected.
class GenericityExhausted : public std::runtime_error {
 public:
  GenericityExhausted(const std::string& what, std::vector<std::string> reasons)
      : std::runtime_error(what), reasons_(std::move(reasons)) {}
  const std::vector<std::string>& reasons() const { return reasons_; }

 private:
  std::vector<std::string> reasons_;
};

/// Accepted centers produced different invariants.
class InstabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The curve does not satisfy the hypotheses of the requested computation
/// (singular, has real points, non-real coefficients, ...).
class PreconditionViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed curve file or command line value.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace shadecalc
