#pragma once

#include <stdexcept>
#include <string>

namespace sct {

enum class errc {
  malformed_simplex,
  not_closed,
  unknown_vertex,
  non_bijective_relabel,
  subset_violation,
  dimension_unsupported,
  interior_violation,
  certificate_unavailable,
  not_a_failure,
  cover_violation,
  size_guard,
  parse_error,
  unknown_gallery_name,
  invalid_argument,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::malformed_simplex: return "malformed_simplex";
    case errc::not_closed: return "not_closed";
    case errc::unknown_vertex: return "unknown_vertex";
    case errc::non_bijective_relabel: return "non_bijective_relabel";
    case errc::subset_violation: return "subset_violation";
    case errc::dimension_unsupported: return "dimension_unsupported";
    case errc::interior_violation: return "interior_violation";
    case errc::certificate_unavailable: return "certificate_unavailable";
    case errc::not_a_failure: return "not_a_failure";
    case errc::cover_violation: return "cover_violation";
    case errc::size_guard: return "size_guard";
    case errc::parse_error: return "parse_error";
    case errc::unknown_gallery_name: return "unknown_gallery_name";
    case errc::invalid_argument: return "invalid_argument";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

}  // namespace sct
