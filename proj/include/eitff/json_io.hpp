#pragma once

#include <json.hpp>
#include <string>

#include "eitff/conference.hpp"
#include "eitff/drackn.hpp"
#include "eitff/finite_field.hpp"
#include "eitff/frame.hpp"
#include "eitff/numerics.hpp"
#include "eitff/signature.hpp"

namespace eitff::io {

using Json = nlohmann::json;

/// Sorted keys, no whitespace, numbers printed with %.17g (integers as
/// integers). Identical documents always produce identical bytes.
std::string canonical_dump(const Json& doc);

Json to_json(const Complex& z);
Complex complex_from_json(const Json& j);

Json to_json(const FieldSpec& f);
Json to_json(const DracknParams& p);
Json to_json(const EitffParams& p);
Json to_json(const Spectrum& s);
Json to_json(const ConferenceReport& r);
Json to_json(const EitffCertificate& c);

/// {"n", "m", "blocks": n×n with null on the diagonal}.
Json to_json(const DracknAdjacency& a);
DracknAdjacency drackn_from_json(const Json& j);

/// Exact: {"n", "modulus", "exponents"}; numeric: {"n", "entries"}.
Json to_json(const ConferenceMatrix& c);
ConferenceMatrix conference_from_json(const Json& j);

/// {"n", "r", "blocks": n×n grid of r×r arrays of [re, im]}.
Json to_json(const SignatureMatrix& s);
SignatureMatrix signature_from_json(const Json& j);

/// {"d", "n", "r", "alpha", "beta", "M": row-major [re, im] list}.
Json to_json(const FusionFrame& f);
FusionFrame frame_from_json(const Json& j);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace eitff::io
