#pragma once

#include <json.hpp>
#include <string>
#include <utility>
#include <vector>

namespace burau_forge {

using Json = nlohmann::ordered_json;

enum class ClaimStatus { Pass, Fail, Flagged };

std::string to_string(ClaimStatus s);

/// One checked statement. `anchor` names the result being mechanized;
/// `note` explains a flagged status.
struct Claim {
  Claim() = default;
  Claim(std::string id_, std::string anchor_, ClaimStatus status_ = ClaimStatus::Pass, Json params_ = Json::object())
      : id(std::move(id_)), anchor(std::move(anchor_)), status(status_), params(std::move(params_)) {}

  std::string id;
  std::string anchor;
  ClaimStatus status = ClaimStatus::Pass;
  Json params = Json::object();
  Json witnesses = Json::array();
  std::string note;

  bool passed() const { return status == ClaimStatus::Pass; }
};

/// Pass when every condition holds, Fail otherwise.
inline ClaimStatus status_of(bool ok) { return ok ? ClaimStatus::Pass : ClaimStatus::Fail; }

Json to_json(const Claim& c);

struct Report {
  std::string command;
  Json params = Json::object();
  /// Computed values, emitted as top-level keys after params.
  Json results = Json::object();
  std::vector<Claim> claims;

  /// Flagged claims count as failures only under `strict`.
  bool failed(bool strict) const;
  Json to_json(bool strict) const;
};

}  // namespace burau_forge
