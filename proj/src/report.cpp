#include "burau_forge/report.hpp"

namespace burau_forge {

std::string to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Pass:
      return "pass";
    case ClaimStatus::Fail:
      return "fail";
    case ClaimStatus::Flagged:
      return "flagged";
  }
  return "fail";
}

Json to_json(const Claim& c) {
  Json j;
  j["claim"] = c.id;
  j["anchor"] = c.anchor;
  j["status"] = to_string(c.status);
  j["pass"] = c.status != ClaimStatus::Fail;
  j["params"] = c.params;
  j["witnesses"] = c.witnesses;
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

bool Report::failed(bool strict) const {
  for (const auto& c : claims) {
    if (c.status == ClaimStatus::Fail || (strict && c.status == ClaimStatus::Flagged)) return true;
  }
  return false;
}

Json Report::to_json(bool strict) const {
  Json j;
  j["command"] = command;
  j["params"] = params;
  for (const auto& [k, v] : results.items()) j[k] = v;
  Json list = Json::array();
  for (const auto& c : claims) list.push_back(burau_forge::to_json(c));
  j["claims"] = std::move(list);
  j["status"] = failed(strict) ? "fail" : "pass";
  return j;
}

}  // namespace burau_forge
