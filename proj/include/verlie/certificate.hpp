#ifndef VERLIE_CERTIFICATE_HPP
#define VERLIE_CERTIFICATE_HPP

#include <string>

#include "json.hpp"

#include "verlie/gf.hpp"
#include "verlie/liealg.hpp"

namespace verlie {

using Json = nlohmann::json;

inline constexpr const char* kLibraryVersion = "1.0.0";
inline constexpr const char* kCertificateSchema = "verlie-certificate/1";

/// Skeleton with the fields every certificate carries; keys are emitted in
/// sorted order, so byte-identical inputs give byte-identical output.
Json certificate_base(const std::string& command, const Json& parameters, const Field& f);

Json mat_to_json(const Mat& m);
Json vec_to_json(const Vec& v);
Json structure_to_json(const BracketStructure& l);

/// Serializes with a trailing newline; the only printer used by the CLI.
std::string certificate_to_string(const Json& c);

}  // namespace verlie

#endif
