#ifndef SLW_ERRORS_HPP
#define SLW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace slw {

struct error : std::runtime_error {
  explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Rank parameter outside the supported range (n >= 2).
struct invalid_rank_error : error {
  using error::error;
};

/// An operation restricted to non-negative exponents received a localized
/// element; the caller should use the localized variant instead.
struct wrong_module_error : error {
  using error::error;
};

/// Conjugation by a singular matrix.
struct invalid_automorphism_error : error {
  using error::error;
};

/// A symbolic identity that must hold failed; carries a witness string.
struct verification_failure : error {
  using error::error;
};

/// A truncated space is not closed under the requested action.
struct invalid_truncation_error : error {
  using error::error;
};

/// A stated non-integrality (or similar) condition on parameters failed.
struct precondition_violation : error {
  using error::error;
};

/// Malformed input file or value outside its schema.
struct schema_error : error {
  using error::error;
};

struct invalid_index_error : error {
  using error::error;
};

/// A bound that should be unreachable was hit.
struct internal_consistency_error : error {
  using error::error;
};

struct no_twist_error : error {
  using error::error;
};

/// The queried vector is not an eigenvector of the operator.
struct not_eigenvector_error : error {
  using error::error;
};

}  // namespace slw

#endif
